#pragma once

#include <cstdint>
#include <ostream>

namespace kaluza {

/// Tally of real multiplications and real additions. Subtractions count as
/// additions; negations and multiplications by powers of two are free.
struct OpCount {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;

    constexpr void add(std::uint64_t muls, std::uint64_t adds) noexcept {
        multiplications += muls;
        additions += adds;
    }

    constexpr std::uint64_t total() const noexcept { return multiplications + additions; }

    constexpr OpCount& operator+=(const OpCount& other) noexcept {
        add(other.multiplications, other.additions);
        return *this;
    }

    friend constexpr OpCount operator+(OpCount lhs, const OpCount& rhs) noexcept { return lhs += rhs; }
    friend constexpr bool operator==(const OpCount&, const OpCount&) = default;

    friend std::ostream& operator<<(std::ostream& os, const OpCount& c) {
        return os << c.multiplications << " mul, " << c.additions << " add";
    }
};

/// Adds a stage's declared cost to an optional caller-owned sink.
inline void charge(OpCount* sink, std::uint64_t muls, std::uint64_t adds) noexcept {
    if (sink != nullptr) {
        sink->add(muls, adds);
    }
}

}  // namespace kaluza

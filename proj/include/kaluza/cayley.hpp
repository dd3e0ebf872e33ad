#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kaluza {

inline constexpr std::size_t kDim = 32;
inline constexpr std::size_t kTableSize = kDim * kDim;

/// A sign (+1 or -1) attached to an index in [0, 31]. Used for basis products
/// (sign * e_index) and for symbolic coefficient references (sign * b_index).
struct SignedIndex {
    std::int8_t sign = 1;
    std::uint8_t index = 0;

    constexpr SignedIndex negated() const noexcept {
        return {static_cast<std::int8_t>(-sign), index};
    }

    friend constexpr bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

using BasisProduct = SignedIndex;

namespace detail {
extern const std::array<BasisProduct, kTableSize> kKaluzaTableEntries;
}

/// 32x32 table of basis products; row = left factor, column = right factor.
class CayleyTable {
public:
    CayleyTable() = default;
    explicit CayleyTable(const std::array<BasisProduct, kTableSize>& entries) : entries_(entries) {}

    /// Bounds-checked lookup; throws std::out_of_range.
    const BasisProduct& at(std::size_t row, std::size_t column) const {
        if (row >= kDim || column >= kDim) {
            throw std::out_of_range("basis index out of range: (" + std::to_string(row) + ", " +
                                    std::to_string(column) + ")");
        }
        return entries_[row * kDim + column];
    }

    const BasisProduct& operator()(std::size_t row, std::size_t column) const noexcept {
        return entries_[row * kDim + column];
    }
    BasisProduct& operator()(std::size_t row, std::size_t column) noexcept {
        return entries_[row * kDim + column];
    }

    const std::array<BasisProduct, kTableSize>& entries() const noexcept { return entries_; }

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

private:
    std::array<BasisProduct, kTableSize> entries_{};
};

/// The embedded Kaluza multiplication table.
const CayleyTable& kaluza_table();

/// e_i * e_j with e_0 = 1. Throws std::out_of_range for indices above 31.
BasisProduct basis_mul(std::size_t i, std::size_t j);

enum class TableRule {
    bad_entry,           // sign not +-1 or index above 31
    identity_row,        // entry(0, j) != +e_j
    identity_column,     // entry(i, 0) != +e_i
    row_permutation,     // repeated result index within a row
    column_permutation,  // repeated result index within a column
    diagonal_not_scalar  // entry(i, i) is not +-1
};

std::string_view to_string(TableRule rule) noexcept;

struct TableViolation {
    std::size_t row = 0;
    std::size_t column = 0;
    TableRule rule = TableRule::bad_entry;

    friend bool operator==(const TableViolation&, const TableViolation&) = default;
};

/// Checks the structural invariants; an empty result means the table is valid.
/// Permutation violations point at the second occurrence of a repeated index.
std::vector<TableViolation> validate_table(const CayleyTable& table);

/// Triples (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k).
std::vector<std::array<std::uint8_t, 3>> associativity_violations(const CayleyTable& table);

enum class Quadrant { nw, ne, sw, se };

std::optional<Quadrant> parse_quadrant(std::string_view name);
std::string_view to_string(Quadrant q) noexcept;

/// "1", "-1", "e6", "-e6"; with explicit_plus the positive forms gain a '+'.
std::string format_symbol(BasisProduct p, bool explicit_plus = false);

/// Inverse of format_symbol; accepts an optional leading '+'.
/// Throws std::invalid_argument on malformed input.
BasisProduct parse_symbol(std::string_view token);

/// 16 lines of 16 right-aligned symbols for one quadrant of the table.
std::string dump_table(const CayleyTable& table, Quadrant q);

/// 32 lines of 32 symbols with explicit signs ("+e6", "-1").
std::string format_table(const CayleyTable& table);

/// Parses the output of format_table. Throws std::invalid_argument.
CayleyTable parse_table(std::string_view text);

/// Reassembles a table from four dump_table renderings.
CayleyTable parse_quadrants(std::string_view nw, std::string_view ne, std::string_view sw,
                            std::string_view se);

}  // namespace kaluza

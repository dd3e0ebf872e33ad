#pragma once

#include "kaluza/op_count.hpp"

namespace kaluza {

/// A real value that records every multiplication and addition it takes part
/// in. Negation and halving are free. Running an algorithm on Tallied values
/// gives an operation count that does not depend on any declared stage cost.
template <class Real = double>
struct Tallied {
    Real value{};
    OpCount* sink = nullptr;

    Tallied() = default;
    Tallied(Real v, OpCount* s = nullptr) : value(v), sink(s) {}  // NOLINT(google-explicit-constructor)

    friend Tallied operator+(const Tallied& a, const Tallied& b) {
        auto* s = pick(a, b);
        charge(s, 0, 1);
        return {a.value + b.value, s};
    }
    friend Tallied operator-(const Tallied& a, const Tallied& b) {
        auto* s = pick(a, b);
        charge(s, 0, 1);
        return {a.value - b.value, s};
    }
    friend Tallied operator*(const Tallied& a, const Tallied& b) {
        auto* s = pick(a, b);
        charge(s, 1, 0);
        return {a.value * b.value, s};
    }
    Tallied operator-() const { return {-value, sink}; }

    /// Multiplication by one half (an arithmetic shift), not counted.
    Tallied halved() const { return {value * Real(0.5), sink}; }

private:
    static OpCount* pick(const Tallied& a, const Tallied& b) { return a.sink != nullptr ? a.sink : b.sink; }
};

}  // namespace kaluza

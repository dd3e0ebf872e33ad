#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kaluza/cayley.hpp"
#include "kaluza/op_count.hpp"

namespace kaluza {

/// d_0 + d_1 e_1 + ... + d_31 e_31.
class KaluzaNumber {
public:
    using Coefficients = std::array<double, kDim>;

    constexpr KaluzaNumber() = default;
    constexpr explicit KaluzaNumber(const Coefficients& coeffs) : coeffs_(coeffs) {}

    /// scale * e_k (e_0 = 1). Throws std::out_of_range for k > 31.
    static KaluzaNumber basis(std::size_t k, double scale = 1.0);
    static KaluzaNumber one() { return basis(0); }

    double operator[](std::size_t k) const noexcept { return coeffs_[k]; }
    double& operator[](std::size_t k) noexcept { return coeffs_[k]; }

    const Coefficients& coeffs() const noexcept { return coeffs_; }
    Coefficients& coeffs() noexcept { return coeffs_; }

    bool is_finite() const noexcept;

    friend bool operator==(const KaluzaNumber&, const KaluzaNumber&) = default;

private:
    Coefficients coeffs_{};
};

/// Componentwise sum; 32 additions.
KaluzaNumber add(const KaluzaNumber& a, const KaluzaNumber& b, OpCount* counter = nullptr);

KaluzaNumber operator+(const KaluzaNumber& a, const KaluzaNumber& b);
KaluzaNumber operator-(const KaluzaNumber& a, const KaluzaNumber& b);
KaluzaNumber operator*(double alpha, const KaluzaNumber& x);

/// Table-driven product a * b (a on the left). Scatters each of the 1024
/// signed products a_i b_j into coefficient index(e_i e_j); the first term
/// for an index initialises it, so each output costs 31 additions.
template <class T>
void naive_product(const CayleyTable& table, std::span<const T, kDim> a, std::span<const T, kDim> b,
                   std::span<T, kDim> out) {
    std::array<bool, kDim> started{};
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            const BasisProduct p = table(i, j);
            const T term = a[i] * b[j];
            if (!started[p.index]) {
                out[p.index] = p.sign > 0 ? term : -term;
                started[p.index] = true;
            } else if (p.sign > 0) {
                out[p.index] = out[p.index] + term;
            } else {
                out[p.index] = out[p.index] - term;
            }
        }
    }
}

/// Reference product; 1024 multiplications, 992 additions.
KaluzaNumber mul_naive(const KaluzaNumber& a, const KaluzaNumber& b, OpCount* counter = nullptr,
                       const CayleyTable& table = kaluza_table());

/// Dense 32x32 matrix B(b) with B(b) * coeffs(a) = coeffs(a * b).
/// Every entry is a signed copy of one coefficient of b.
class MulMatrix {
public:
    MulMatrix() = default;

    double operator()(std::size_t row, std::size_t column) const noexcept {
        return colmajor_[column * kDim + row];
    }
    double& operator()(std::size_t row, std::size_t column) noexcept { return colmajor_[column * kDim + row]; }

    /// Column-major storage, as consumed by the matvec kernels.
    const std::array<double, kTableSize>& column_major() const noexcept { return colmajor_; }

    static MulMatrix identity();

    friend bool operator==(const MulMatrix&, const MulMatrix&) = default;

private:
    alignas(32) std::array<double, kTableSize> colmajor_{};
};

/// B[k][i] = sign * b_j where e_i e_j = sign * e_k.
MulMatrix build_mul_matrix(const KaluzaNumber& b, const CayleyTable& table = kaluza_table());

/// Plain matrix-vector product; 1024 multiplications, 992 additions.
KaluzaNumber mul_dense(const KaluzaNumber& a, const MulMatrix& m, OpCount* counter = nullptr);

/// Row-major 32x32 grid; entry {s, j} stands for s * b_j.
using SymbolicMatrix = std::array<SignedIndex, kTableSize>;

/// The multiplication matrix with b kept symbolic.
SymbolicMatrix symbolic_mul_matrix(const CayleyTable& table = kaluza_table());

/// "+b3", "-b17".
std::string format_coefficient(SignedIndex s, char letter = 'b');

struct SymbolMismatch {
    std::size_t row = 0;
    std::size_t column = 0;
    SignedIndex derived;
    SignedIndex printed;

    friend bool operator==(const SymbolMismatch&, const SymbolMismatch&) = default;
};

std::vector<SymbolMismatch> compare_symbolic(const SymbolicMatrix& derived, const SymbolicMatrix& printed);

/// Table-derived symbolic B32 against the typeset B16 blocks.
std::vector<SymbolMismatch> compare_printed_blocks(const CayleyTable& table = kaluza_table());

}  // namespace kaluza

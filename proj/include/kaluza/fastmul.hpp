#pragma once

// Factorized product with 512 multiplications and 576 additions.
//
// Permuting rows and columns of the multiplication matrix B(b) by P gives a
// 16x16 grid of 2x2 blocks [[x, y], [y, x]]. Each such block equals
// H diag((x+y)/2, (x-y)/2) H with H = [[1, 1], [1, -1]], and the half-sums
// are always +-c_m for the 32 values c = 1/2 (I16 (x) H) P b. So
//
//   a * b = P^-1 (I16 (x) H) A D(c) R (I16 (x) H) P a
//
// where R repeats each butterfly pair 16 times (32 -> 512), D(c) is a
// 512-entry diagonal of signed c values and A sums the 16 blocks (512 -> 32).
//
// Costs: c-vector 32 additions (once per right operand); per left operand
// 2 x 32 butterfly additions, 512 multiplications and 480 fan-in additions.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <optional>
#include <utility>
#include <vector>

#include "kaluza/cayley.hpp"
#include "kaluza/kernels/scalar.hpp"
#include "kaluza/linops.hpp"
#include "kaluza/number.hpp"
#include "kaluza/op_count.hpp"
#include "kaluza/tallied.hpp"

namespace kaluza {

inline constexpr std::size_t kDiagonalSize = 512;
inline constexpr std::size_t kBlocks = 16;

inline double half_of(double v) { return v * 0.5; }
template <class R>
Tallied<R> half_of(const Tallied<R>& v) {
    return v.halved();
}

/// c_{2p} = (b'_{2p} + b'_{2p+1}) / 2, c_{2p+1} = (b'_{2p} - b'_{2p+1}) / 2
/// with b' = P b.
struct CVector {
    std::array<double, kDim> values{};

    double operator[](std::size_t m) const noexcept { return values[m]; }
    friend bool operator==(const CVector&, const CVector&) = default;
};

template <class T>
std::array<T, kDim> c_vector(std::span<const T, kDim> b, const Permutation32& p) {
    auto v = p.apply(b, Direction::forward);
    kernels::scalar::hadamard_pairs<T>(v, v);
    for (auto& x : v) {
        x = half_of(x);
    }
    return v;
}

/// Permute, butterfly, halve: 32 additions, no counted multiplications.
CVector compute_c(const KaluzaNumber& b, OpCount* counter = nullptr,
                  const Permutation32& p = kaluza_permutation());

/// Diagonal of D(c) as signed references into the c-vector: entry m of
/// block k is s_m^(k) = sign * c_index.
struct DiagonalSpec {
    using Block = std::array<SignedIndex, kDim>;
    std::array<Block, kBlocks> blocks{};

    const SignedIndex& entry(std::size_t block, std::size_t m) const noexcept { return blocks[block][m]; }

    template <class T>
    std::array<T, kDiagonalSize> materialize_as(std::span<const T, kDim> c) const {
        std::array<T, kDiagonalSize> d{};
        for (std::size_t k = 0; k < kBlocks; ++k) {
            for (std::size_t m = 0; m < kDim; ++m) {
                const auto& s = blocks[k][m];
                d[k * kDim + m] = s.sign > 0 ? c[s.index] : -c[s.index];
            }
        }
        return d;
    }

    /// Sign application only; no counted operations.
    std::array<double, kDiagonalSize> materialize(const CVector& c) const {
        return materialize_as<double>(c.values);
    }

    /// Every c_m appears at least once.
    bool references_every_c() const noexcept;

    friend bool operator==(const DiagonalSpec&, const DiagonalSpec&) = default;
};

/// B'[r][c] = B[p[r]][p[c]].
SymbolicMatrix permute_symbolic(const SymbolicMatrix& m, const Permutation32& p);

/// Blocks (row pair, column pair) violating [[x, y], [y, x]].
std::vector<std::pair<std::size_t, std::size_t>> non_bisymmetric_blocks(const SymbolicMatrix& permuted);

/// Reads the diagonal off the permuted symbolic matrix of `table`.
/// Throws StructureError for a non-bisymmetric block and DerivationError
/// when a half-sum is not +-c_m.
DiagonalSpec derive_diagonal_spec(const CayleyTable& table = kaluza_table(),
                                  const Permutation32& p = kaluza_permutation());

/// derive_diagonal_spec() for the embedded table, computed once.
const DiagonalSpec& kaluza_diagonal_spec();

struct DiagonalMismatch {
    std::size_t block = 0;
    std::size_t entry = 0;
    SignedIndex derived;
    SignedIndex printed;
};

std::vector<DiagonalMismatch> compare_printed_diagonal(const DiagonalSpec& spec = kaluza_diagonal_spec());

/// Table-derived permuted symbolic matrix against the typeset one.
std::vector<SymbolMismatch> compare_printed_permuted_blocks(const CayleyTable& table = kaluza_table());

/// Whole fast product over any arithmetic type, with the diagonal already
/// materialized: butterflies, fused replicate/scale/fan-in, butterflies.
template <class T>
std::array<T, kDim> fast_product(std::span<const T, kDim> a, std::span<const T, kDiagonalSize> diagonal,
                                 const Permutation32& p) {
    auto x = p.apply(a, Direction::forward);
    kernels::scalar::hadamard_pairs<T>(x, x);
    std::array<T, kDim> v{};
    kernels::scalar::diag_fan_in<T>(x, diagonal, v);
    kernels::scalar::hadamard_pairs<T>(v, v);
    return p.apply(std::span<const T, kDim>(v), Direction::inverse);
}

/// Precomputed right operand: c-vector and 512-entry diagonal. Immutable and
/// reusable for any number of left operands.
class FactorizedPipeline {
public:
    const CVector& c() const noexcept { return c_; }
    std::span<const double, kDiagonalSize> diagonal() const noexcept { return diagonal_; }
    const Permutation32& permutation() const noexcept { return permutation_; }

    /// a * b with the fused SIMD kernels; 512 multiplications, 544 additions.
    KaluzaNumber apply(const KaluzaNumber& a, OpCount* counter = nullptr) const;

    /// Same product through the unfused linops stages (verification path).
    KaluzaNumber apply_staged(const KaluzaNumber& a, OpCount* counter = nullptr) const;

    /// The seven stages in application order.
    std::vector<LinearStage> stages() const;

    /// Product of the stage matrices; equals the multiplication matrix of b.
    DenseMatrix materialize() const;

private:
    friend FactorizedPipeline build_pipeline(const KaluzaNumber&, OpCount*, const DiagonalSpec&,
                                             const Permutation32&);
    FactorizedPipeline(const CVector& c, const std::array<double, kDiagonalSize>& d, const Permutation32& p)
        : c_(c), diagonal_(d), permutation_(p) {}

    CVector c_;
    alignas(32) std::array<double, kDiagonalSize> diagonal_{};
    Permutation32 permutation_;
};

/// 32 additions (the c-vector); materializing the diagonal is free.
FactorizedPipeline build_pipeline(const KaluzaNumber& b, OpCount* counter = nullptr,
                                  const DiagonalSpec& spec = kaluza_diagonal_spec(),
                                  const Permutation32& p = kaluza_permutation());

/// MulMatrix copied into a DenseMatrix for comparison with materialized chains.
DenseMatrix to_dense(const MulMatrix& m);

KaluzaNumber mul_fast(const KaluzaNumber& a, const FactorizedPipeline& pipeline, OpCount* counter = nullptr);

/// build_pipeline + apply: 512 multiplications, 576 additions.
KaluzaNumber mul_fast(const KaluzaNumber& a, const KaluzaNumber& b, OpCount* counter = nullptr);

enum class Engine { naive, dense, fast };

std::string_view to_string(Engine e) noexcept;
std::optional<Engine> parse_engine(std::string_view name);

/// Runs the engine once on fixed operands with every arithmetic operation
/// instrumented (Tallied values) and returns the tally. For `fast`,
/// include_preprocessing adds the c-vector cost; the other engines have none.
OpCount count_operations(Engine engine, bool include_preprocessing = true);

}  // namespace kaluza

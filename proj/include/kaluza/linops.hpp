#pragma once

// Structured linear operators used by the factorized product: a fixed
// permutation, pairwise 2x2 Hadamard butterflies, pair replication, a
// diagonal scaling and a fan-in sum. Each one can be applied (charging its
// cost to an OpCount) or materialized as a dense matrix from its Kronecker
// definition, independently of the apply path.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kaluza/cayley.hpp"
#include "kaluza/op_count.hpp"

namespace kaluza {

enum class Direction { forward, inverse };

/// Bijection on {0..31}. forward: out[i] = x[map[i]]; inverse: out[map[i]] = x[i].
class Permutation32 {
public:
    using Map = std::array<std::uint8_t, kDim>;

    /// Throws std::invalid_argument unless `map` is a bijection on 0..31.
    explicit Permutation32(const Map& map);

    static Permutation32 identity();
    /// From a 1-based list such as {1, 2, 3, 7, ...}.
    static Permutation32 from_one_based(std::span<const int> list);

    const Map& map() const noexcept { return map_; }
    std::uint8_t operator[](std::size_t i) const noexcept { return map_[i]; }

    Permutation32 inverse() const;
    Permutation32 compose(const Permutation32& then) const;  // (this, then) -> i -> map[then.map[i]]
    bool is_involution() const noexcept;

    template <class T>
    std::array<T, kDim> apply(std::span<const T, kDim> x, Direction dir = Direction::forward) const {
        std::array<T, kDim> out{};
        for (std::size_t i = 0; i < kDim; ++i) {
            if (dir == Direction::forward) {
                out[i] = x[map_[i]];
            } else {
                out[map_[i]] = x[i];
            }
        }
        return out;
    }

    friend bool operator==(const Permutation32&, const Permutation32&) = default;

private:
    Map map_{};
};

/// Row/column reordering that turns the multiplication matrix into 2x2
/// bisymmetric blocks: 1-based {1,2,3,7,5,9,4,8,6,10,11,17,13,19,15,21,
/// 12,18,14,20,16,22,23,27,25,29,24,28,26,30,31,32}.
const Permutation32& kaluza_permutation();

/// Data movement only; never charges the counter.
std::array<double, kDim> apply_permutation(const Permutation32& p, std::span<const double, kDim> x,
                                           Direction dir = Direction::forward);

/// Pairwise (a, b) -> (a + b, a - b); 2 additions per pair.
/// Throws DimensionError for odd lengths or mismatched output.
void hadamard_pairs(std::span<const double> x, std::span<double> out, OpCount* counter = nullptr);
std::vector<double> hadamard_pairs(std::span<const double> x, OpCount* counter = nullptr);

/// Block k holds pair k repeated `copies` times (32 -> 512 for copies = 16).
std::vector<double> replicate_pairs(std::span<const double> x, std::size_t copies = 16);

/// Componentwise product; one multiplication per entry.
void block_diagonal_scale(std::span<const double> x, std::span<const double> d, std::span<double> out,
                          OpCount* counter = nullptr);
std::vector<double> block_diagonal_scale(std::span<const double> x, std::span<const double> d,
                                         OpCount* counter = nullptr);

/// out[m] = sum over k of x[k * width + m]; (arity - 1) * width additions.
std::vector<double> fan_in_sum(std::span<const double> x, OpCount* counter = nullptr, std::size_t width = kDim);

/// Row-major dense matrix used for verification.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix ones(std::size_t rows, std::size_t cols);
    static DenseMatrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    /// Throws CompositionError when inner dimensions differ.
    DenseMatrix operator*(const DenseMatrix& rhs) const;
    /// Throws DimensionError when x.size() != cols().
    std::vector<double> apply(std::span<const double> x) const;
    DenseMatrix transposed() const;

    std::string to_text() const;  // rows newline-separated, entries space-separated

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Largest |a - b| entry. Throws DimensionError on shape mismatch.
double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b);

struct PermuteStage {
    Permutation32 permutation;
    Direction direction = Direction::forward;
};
struct HadamardStage {
    std::size_t pairs = 16;
};
struct ReplicateStage {
    std::size_t pairs = 16;
    std::size_t copies = 16;
};
struct DiagonalStage {
    std::vector<double> values;
};
struct FanInStage {
    std::size_t arity = 16;
    std::size_t width = kDim;
};

enum class StageKind { permute, hadamard_pairs, replicate, diagonal, fan_in };

class LinearStage {
public:
    using Variant = std::variant<PermuteStage, HadamardStage, ReplicateStage, DiagonalStage, FanInStage>;

    LinearStage(Variant v) : stage_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

    StageKind kind() const noexcept { return static_cast<StageKind>(stage_.index()); }
    std::size_t input_dim() const noexcept;
    std::size_t output_dim() const noexcept;
    std::string name() const;

    const Variant& get() const noexcept { return stage_; }

    /// Throws DimensionError when x.size() != input_dim().
    std::vector<double> apply(std::span<const double> x, OpCount* counter = nullptr) const;

private:
    Variant stage_;
};

/// Dense matrix of one stage, built from its Kronecker-product definition.
DenseMatrix materialize(const LinearStage& stage);

/// Product of the stages' matrices; stages are listed in application order.
/// Throws CompositionError when consecutive dimensions do not chain.
DenseMatrix materialize(std::span<const LinearStage> chain);

/// Applies the stages in order. Throws CompositionError like materialize.
std::vector<double> apply_chain(std::span<const LinearStage> chain, std::span<const double> x,
                                OpCount* counter = nullptr);

}  // namespace kaluza

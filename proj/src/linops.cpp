#include "kaluza/linops.hpp"

#include <algorithm>
#include <bitset>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "kaluza/errors.hpp"
#include "kaluza/kernels/dispatch.hpp"

namespace kaluza {

Permutation32::Permutation32(const Map& map) : map_(map) {
    std::bitset<kDim> seen;
    for (auto target : map_) {
        if (target >= kDim || seen.test(target)) {
            throw std::invalid_argument("not a permutation of 0..31");
        }
        seen.set(target);
    }
}

Permutation32 Permutation32::identity() {
    Map m{};
    for (std::size_t i = 0; i < kDim; ++i) {
        m[i] = static_cast<std::uint8_t>(i);
    }
    return Permutation32(m);
}

Permutation32 Permutation32::from_one_based(std::span<const int> list) {
    if (list.size() != kDim) {
        throw std::invalid_argument("permutation list must have 32 entries");
    }
    Map m{};
    for (std::size_t i = 0; i < kDim; ++i) {
        if (list[i] < 1 || list[i] > static_cast<int>(kDim)) {
            throw std::invalid_argument("permutation entry out of range 1..32");
        }
        m[i] = static_cast<std::uint8_t>(list[i] - 1);
    }
    return Permutation32(m);
}

Permutation32 Permutation32::inverse() const {
    Map m{};
    for (std::size_t i = 0; i < kDim; ++i) {
        m[map_[i]] = static_cast<std::uint8_t>(i);
    }
    return Permutation32(m);
}

Permutation32 Permutation32::compose(const Permutation32& then) const {
    Map m{};
    for (std::size_t i = 0; i < kDim; ++i) {
        m[i] = map_[then.map_[i]];
    }
    return Permutation32(m);
}

bool Permutation32::is_involution() const noexcept {
    for (std::size_t i = 0; i < kDim; ++i) {
        if (map_[map_[i]] != i) {
            return false;
        }
    }
    return true;
}

const Permutation32& kaluza_permutation() {
    static const Permutation32 p = [] {
        constexpr std::array<int, kDim> order{1,  2,  3,  7,  5,  9,  4,  8,  6,  10, 11, 17, 13, 19, 15, 21,
                                              12, 18, 14, 20, 16, 22, 23, 27, 25, 29, 24, 28, 26, 30, 31, 32};
        return Permutation32::from_one_based(order);
    }();
    return p;
}

std::array<double, kDim> apply_permutation(const Permutation32& p, std::span<const double, kDim> x,
                                           Direction dir) {
    return p.apply(x, dir);
}

void hadamard_pairs(std::span<const double> x, std::span<double> out, OpCount* counter) {
    if (x.size() % 2 != 0) {
        throw DimensionError("hadamard_pairs needs an even length, got " + std::to_string(x.size()));
    }
    if (out.size() != x.size()) {
        throw DimensionError("hadamard_pairs output length mismatch");
    }
    kernels::active_kernels().hadamard_pairs(x.data(), out.data(), x.size() / 2);
    charge(counter, 0, x.size());
}

std::vector<double> hadamard_pairs(std::span<const double> x, OpCount* counter) {
    std::vector<double> out(x.size());
    hadamard_pairs(x, out, counter);
    return out;
}

std::vector<double> replicate_pairs(std::span<const double> x, std::size_t copies) {
    if (x.size() % 2 != 0) {
        throw DimensionError("replicate_pairs needs an even length, got " + std::to_string(x.size()));
    }
    std::vector<double> out(x.size() * copies);
    kernels::active_kernels().replicate_pairs(x.data(), out.data(), x.size() / 2, copies);
    return out;
}

void block_diagonal_scale(std::span<const double> x, std::span<const double> d, std::span<double> out,
                          OpCount* counter) {
    if (x.size() != d.size() || out.size() != x.size()) {
        throw DimensionError("block_diagonal_scale: vector has " + std::to_string(x.size()) +
                             " entries, diagonal has " + std::to_string(d.size()));
    }
    kernels::active_kernels().scale(x.data(), d.data(), out.data(), x.size());
    charge(counter, x.size(), 0);
}

std::vector<double> block_diagonal_scale(std::span<const double> x, std::span<const double> d,
                                         OpCount* counter) {
    std::vector<double> out(x.size());
    block_diagonal_scale(x, d, out, counter);
    return out;
}

std::vector<double> fan_in_sum(std::span<const double> x, OpCount* counter, std::size_t width) {
    if (width == 0 || x.size() % width != 0 || x.empty()) {
        throw DimensionError("fan_in_sum: length " + std::to_string(x.size()) + " is not a multiple of " +
                             std::to_string(width));
    }
    const std::size_t arity = x.size() / width;
    std::vector<double> out(width);
    kernels::active_kernels().fan_in(x.data(), out.data(), arity, width);
    charge(counter, 0, (arity - 1) * width);
    return out;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::ones(std::size_t rows, std::size_t cols) {
    DenseMatrix m(rows, cols);
    std::fill(m.data_.begin(), m.data_.end(), 1.0);
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
    DenseMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw CompositionError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                               " by " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    }
    DenseMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const double a = (*this)(r, k);
            if (a == 0.0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

std::vector<double> DenseMatrix::apply(std::span<const double> x) const {
    if (x.size() != cols_) {
        throw DimensionError("matrix has " + std::to_string(cols_) + " columns, vector has " +
                             std::to_string(x.size()) + " entries");
    }
    std::vector<double> y(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) {
            acc += (*this)(r, c) * x[c];
        }
        y[r] = acc;
    }
    return y;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

std::string DenseMatrix::to_text() const {
    std::string out;
    char buf[32];
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c != 0) out += ' ';
            const double v = (*this)(r, c) == 0.0 ? 0.0 : (*this)(r, c);  // no "-0"
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
            out.append(buf, ptr);
        }
        out += '\n';
    }
    return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const double s = a(ar, ac);
            if (s == 0.0) continue;
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("matrix shapes differ");
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

DenseMatrix hadamard2() {
    DenseMatrix h(2, 2);
    h(0, 0) = 1.0;
    h(0, 1) = 1.0;
    h(1, 0) = 1.0;
    h(1, 1) = -1.0;
    return h;
}

}  // namespace

std::size_t LinearStage::input_dim() const noexcept {
    return std::visit(overloaded{
                          [](const PermuteStage&) { return kDim; },
                          [](const HadamardStage& s) { return 2 * s.pairs; },
                          [](const ReplicateStage& s) { return 2 * s.pairs; },
                          [](const DiagonalStage& s) { return s.values.size(); },
                          [](const FanInStage& s) { return s.arity * s.width; },
                      },
                      stage_);
}

std::size_t LinearStage::output_dim() const noexcept {
    return std::visit(overloaded{
                          [](const PermuteStage&) { return kDim; },
                          [](const HadamardStage& s) { return 2 * s.pairs; },
                          [](const ReplicateStage& s) { return 2 * s.pairs * s.copies; },
                          [](const DiagonalStage& s) { return s.values.size(); },
                          [](const FanInStage& s) { return s.width; },
                      },
                      stage_);
}

std::string LinearStage::name() const {
    const auto dims = std::to_string(output_dim()) + "x" + std::to_string(input_dim());
    return std::visit(overloaded{
                          [&](const PermuteStage& s) {
                              return std::string(s.direction == Direction::forward ? "permute" : "permute^-1") +
                                     " " + dims;
                          },
                          [&](const HadamardStage&) { return "hadamard-pairs " + dims; },
                          [&](const ReplicateStage&) { return "replicate " + dims; },
                          [&](const DiagonalStage&) { return "diagonal " + dims; },
                          [&](const FanInStage&) { return "fan-in " + dims; },
                      },
                      stage_);
}

std::vector<double> LinearStage::apply(std::span<const double> x, OpCount* counter) const {
    if (x.size() != input_dim()) {
        throw DimensionError(name() + ": input has " + std::to_string(x.size()) + " entries");
    }
    return std::visit(overloaded{
                          [&](const PermuteStage& s) {
                              const auto out = s.permutation.apply(std::span<const double, kDim>(x.data(), kDim),
                                                                   s.direction);
                              return std::vector<double>(out.begin(), out.end());
                          },
                          [&](const HadamardStage&) { return hadamard_pairs(x, counter); },
                          [&](const ReplicateStage& s) { return replicate_pairs(x, s.copies); },
                          [&](const DiagonalStage& s) { return block_diagonal_scale(x, s.values, counter); },
                          [&](const FanInStage& s) { return fan_in_sum(x, counter, s.width); },
                      },
                      stage_);
}

DenseMatrix materialize(const LinearStage& stage) {
    return std::visit(
        overloaded{
            [](const PermuteStage& s) {
                DenseMatrix p(kDim, kDim);
                for (std::size_t i = 0; i < kDim; ++i) {
                    p(i, s.permutation[i]) = 1.0;
                }
                return s.direction == Direction::forward ? p : p.transposed();
            },
            [](const HadamardStage& s) { return kron(DenseMatrix::identity(s.pairs), hadamard2()); },
            [](const ReplicateStage& s) {
                return kron(DenseMatrix::identity(s.pairs),
                            kron(DenseMatrix::ones(s.copies, 1), DenseMatrix::identity(2)));
            },
            [](const DiagonalStage& s) { return DenseMatrix::diagonal(s.values); },
            [](const FanInStage& s) { return kron(DenseMatrix::ones(1, s.arity), DenseMatrix::identity(s.width)); },
        },
        stage.get());
}

namespace {

void check_chain(std::span<const LinearStage> chain) {
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (chain[i - 1].output_dim() != chain[i].input_dim()) {
            throw CompositionError("stage " + std::to_string(i - 1) + " (" + chain[i - 1].name() +
                                   ") does not feed stage " + std::to_string(i) + " (" + chain[i].name() + ")");
        }
    }
}

}  // namespace

DenseMatrix materialize(std::span<const LinearStage> chain) {
    if (chain.empty()) {
        throw CompositionError("empty stage chain");
    }
    check_chain(chain);
    DenseMatrix product = materialize(chain.front());
    for (std::size_t i = 1; i < chain.size(); ++i) {
        product = materialize(chain[i]) * product;
    }
    return product;
}

std::vector<double> apply_chain(std::span<const LinearStage> chain, std::span<const double> x, OpCount* counter) {
    check_chain(chain);
    std::vector<double> v(x.begin(), x.end());
    for (const auto& stage : chain) {
        v = stage.apply(v, counter);
    }
    return v;
}

}  // namespace kaluza

#include "kaluza/number.hpp"

#include <cmath>

#include "kaluza/kernels/dispatch.hpp"
#include "kaluza/printed.hpp"

namespace kaluza {

KaluzaNumber KaluzaNumber::basis(std::size_t k, double scale) {
    if (k >= kDim) {
        throw std::out_of_range("basis index out of range: " + std::to_string(k));
    }
    KaluzaNumber x;
    x.coeffs_[k] = scale;
    return x;
}

bool KaluzaNumber::is_finite() const noexcept {
    for (double v : coeffs_) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

KaluzaNumber add(const KaluzaNumber& a, const KaluzaNumber& b, OpCount* counter) {
    KaluzaNumber out;
    for (std::size_t k = 0; k < kDim; ++k) {
        out[k] = a[k] + b[k];
    }
    charge(counter, 0, kDim);
    return out;
}

KaluzaNumber operator+(const KaluzaNumber& a, const KaluzaNumber& b) { return add(a, b); }

KaluzaNumber operator-(const KaluzaNumber& a, const KaluzaNumber& b) {
    KaluzaNumber out;
    for (std::size_t k = 0; k < kDim; ++k) {
        out[k] = a[k] - b[k];
    }
    return out;
}

KaluzaNumber operator*(double alpha, const KaluzaNumber& x) {
    KaluzaNumber out;
    for (std::size_t k = 0; k < kDim; ++k) {
        out[k] = alpha * x[k];
    }
    return out;
}

KaluzaNumber mul_naive(const KaluzaNumber& a, const KaluzaNumber& b, OpCount* counter,
                       const CayleyTable& table) {
    KaluzaNumber out;
    naive_product<double>(table, a.coeffs(), b.coeffs(), out.coeffs());
    charge(counter, kTableSize, kDim * (kDim - 1));
    return out;
}

MulMatrix MulMatrix::identity() {
    MulMatrix m;
    for (std::size_t k = 0; k < kDim; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

MulMatrix build_mul_matrix(const KaluzaNumber& b, const CayleyTable& table) {
    MulMatrix m;
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            const BasisProduct p = table(i, j);
            m(p.index, i) = p.sign > 0 ? b[j] : -b[j];
        }
    }
    return m;
}

KaluzaNumber mul_dense(const KaluzaNumber& a, const MulMatrix& m, OpCount* counter) {
    KaluzaNumber out;
    kernels::active_kernels().matvec32(m.column_major().data(), a.coeffs().data(), out.coeffs().data());
    charge(counter, kTableSize, kDim * (kDim - 1));
    return out;
}

SymbolicMatrix symbolic_mul_matrix(const CayleyTable& table) {
    SymbolicMatrix m{};
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            const BasisProduct p = table(i, j);
            m[p.index * kDim + i] = SignedIndex{p.sign, static_cast<std::uint8_t>(j)};
        }
    }
    return m;
}

std::string format_coefficient(SignedIndex s, char letter) {
    std::string out(1, s.sign < 0 ? '-' : '+');
    out += letter;
    out += std::to_string(s.index);
    return out;
}

std::vector<SymbolMismatch> compare_symbolic(const SymbolicMatrix& derived, const SymbolicMatrix& printed) {
    std::vector<SymbolMismatch> out;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            const auto& d = derived[r * kDim + c];
            const auto& p = printed[r * kDim + c];
            if (d != p) {
                out.push_back({r, c, d, p});
            }
        }
    }
    return out;
}

std::vector<SymbolMismatch> compare_printed_blocks(const CayleyTable& table) {
    return compare_symbolic(symbolic_mul_matrix(table), printed::mul_matrix());
}

}  // namespace kaluza

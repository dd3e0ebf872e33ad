#pragma once

// Reference kernels. Written against a generic value type so the same code
// runs on double and on Tallied<double> (which counts every operation).
// Every SIMD variant must reproduce these results bit for bit: accumulation
// order per output element is part of the contract.

#include <cassert>
#include <cstddef>
#include <span>

namespace kaluza::kernels::scalar {

/// (x0, x1) -> (x0 + x1, x0 - x1) for each consecutive pair. In-place safe.
template <class T>
void hadamard_pairs(std::span<const T> in, std::span<T> out) {
    assert(in.size() == out.size() && in.size() % 2 == 0);
    for (std::size_t p = 0; p < in.size(); p += 2) {
        const T a = in[p];
        const T b = in[p + 1];
        out[p] = a + b;
        out[p + 1] = a - b;
    }
}

/// Output block k (2*copies entries) holds input pair k repeated `copies` times.
template <class T>
void replicate_pairs(std::span<const T> in, std::span<T> out, std::size_t copies) {
    assert(in.size() % 2 == 0 && out.size() == in.size() * copies);
    const std::size_t block = 2 * copies;
    for (std::size_t k = 0; k < in.size() / 2; ++k) {
        for (std::size_t r = 0; r < copies; ++r) {
            out[k * block + 2 * r] = in[2 * k];
            out[k * block + 2 * r + 1] = in[2 * k + 1];
        }
    }
}

template <class T>
void scale(std::span<const T> x, std::span<const T> d, std::span<T> out) {
    assert(x.size() == d.size() && x.size() == out.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] * d[i];
    }
}

/// out[m] = x[m] + x[w + m] + ... + x[(arity-1)w + m], summed left to right.
template <class T>
void fan_in(std::span<const T> x, std::span<T> out) {
    const std::size_t width = out.size();
    assert(width != 0 && x.size() % width == 0);
    const std::size_t arity = x.size() / width;
    for (std::size_t m = 0; m < width; ++m) {
        T acc = x[m];
        for (std::size_t k = 1; k < arity; ++k) {
            acc = acc + x[k * width + m];
        }
        out[m] = acc;
    }
}

/// y = M x for a square column-major M; y[r] accumulates over columns in order.
template <class T>
void matvec(std::span<const T> colmajor, std::span<const T> x, std::span<T> y) {
    const std::size_t n = x.size();
    assert(colmajor.size() == n * n && y.size() == n);
    for (std::size_t r = 0; r < n; ++r) {
        T acc = colmajor[r] * x[0];
        for (std::size_t c = 1; c < n; ++c) {
            acc = acc + colmajor[c * n + r] * x[c];
        }
        y[r] = acc;
    }
}

/// replicate_pairs(u, 16) -> scale by d -> fan_in, without the 512-entry
/// intermediate. Same products, same summation order as the staged version.
template <class T>
void diag_fan_in(std::span<const T> u, std::span<const T> d, std::span<T> out) {
    assert(u.size() == 32 && d.size() == 512 && out.size() == 32);
    for (std::size_t m = 0; m < 32; ++m) {
        const std::size_t t = m & 1U;
        T acc = d[m] * u[t];
        for (std::size_t k = 1; k < 16; ++k) {
            acc = acc + d[32 * k + m] * u[2 * k + t];
        }
        out[m] = acc;
    }
}

}  // namespace kaluza::kernels::scalar

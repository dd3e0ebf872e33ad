// AVX2 variants. Only the functions below carry the avx2 target attribute,
// so nothing else in the binary depends on AVX2 being present. No FMA: a
// fused multiply-add would round differently from the scalar reference.

#include "kaluza/kernels/dispatch.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define KALUZA_HAVE_AVX2 1
#include <immintrin.h>
#endif

namespace kaluza::kernels::detail {

#ifdef KALUZA_HAVE_AVX2

namespace {

#define KALUZA_AVX2 __attribute__((target("avx2")))

KALUZA_AVX2 void hadamard_pairs(const double* in, double* out, std::size_t pairs) {
    const std::size_t n = 2 * pairs;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(in + i);
        const __m256d swapped = _mm256_permute_pd(v, 0b0101);
        const __m256d sum = _mm256_add_pd(v, swapped);
        const __m256d diff = _mm256_sub_pd(swapped, v);  // odd lane: a - b
        _mm256_storeu_pd(out + i, _mm256_blend_pd(sum, diff, 0b1010));
    }
    for (; i < n; i += 2) {
        const double a = in[i];
        const double b = in[i + 1];
        out[i] = a + b;
        out[i + 1] = a - b;
    }
}

KALUZA_AVX2 void replicate_pairs(const double* in, double* out, std::size_t pairs, std::size_t copies) {
    const std::size_t block = 2 * copies;
    for (std::size_t k = 0; k < pairs; ++k) {
        const __m128d pair = _mm_loadu_pd(in + 2 * k);
        const __m256d twice = _mm256_broadcast_pd(&pair);
        double* dst = out + k * block;
        std::size_t r = 0;
        for (; r + 4 <= block; r += 4) {
            _mm256_storeu_pd(dst + r, twice);
        }
        for (; r < block; r += 2) {
            _mm_storeu_pd(dst + r, pair);
        }
    }
}

KALUZA_AVX2 void scale(const double* x, const double* d, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(d + i)));
    }
    for (; i < n; ++i) {
        out[i] = x[i] * d[i];
    }
}

KALUZA_AVX2 void fan_in(const double* x, double* out, std::size_t arity, std::size_t width) {
    std::size_t m = 0;
    for (; m + 4 <= width; m += 4) {
        __m256d acc = _mm256_loadu_pd(x + m);
        for (std::size_t k = 1; k < arity; ++k) {
            acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + k * width + m));
        }
        _mm256_storeu_pd(out + m, acc);
    }
    for (; m < width; ++m) {
        double acc = x[m];
        for (std::size_t k = 1; k < arity; ++k) {
            acc += x[k * width + m];
        }
        out[m] = acc;
    }
}

KALUZA_AVX2 void matvec32(const double* colmajor, const double* x, double* y) {
    __m256d acc[8];
    const __m256d x0 = _mm256_set1_pd(x[0]);
    for (int q = 0; q < 8; ++q) {
        acc[q] = _mm256_mul_pd(_mm256_loadu_pd(colmajor + 4 * q), x0);
    }
    for (int c = 1; c < 32; ++c) {
        const __m256d xc = _mm256_set1_pd(x[c]);
        const double* col = colmajor + 32 * c;
        for (int q = 0; q < 8; ++q) {
            acc[q] = _mm256_add_pd(acc[q], _mm256_mul_pd(_mm256_loadu_pd(col + 4 * q), xc));
        }
    }
    for (int q = 0; q < 8; ++q) {
        _mm256_storeu_pd(y + 4 * q, acc[q]);
    }
}

KALUZA_AVX2 void diag_fan_in(const double* u, const double* d, double* out) {
    __m256d acc[8];
    {
        const __m128d pair = _mm_loadu_pd(u);
        const __m256d uu = _mm256_broadcast_pd(&pair);
        for (int q = 0; q < 8; ++q) {
            acc[q] = _mm256_mul_pd(_mm256_loadu_pd(d + 4 * q), uu);
        }
    }
    for (int k = 1; k < 16; ++k) {
        const __m128d pair = _mm_loadu_pd(u + 2 * k);
        const __m256d uu = _mm256_broadcast_pd(&pair);
        const double* dk = d + 32 * k;
        for (int q = 0; q < 8; ++q) {
            acc[q] = _mm256_add_pd(acc[q], _mm256_mul_pd(_mm256_loadu_pd(dk + 4 * q), uu));
        }
    }
    for (int q = 0; q < 8; ++q) {
        _mm256_storeu_pd(out + 4 * q, acc[q]);
    }
}

#undef KALUZA_AVX2

constexpr KernelSet kAvx2{Isa::avx2, hadamard_pairs, replicate_pairs, scale,
                          fan_in,    matvec32,       diag_fan_in};

}  // namespace

const KernelSet* avx2_kernels() noexcept { return &kAvx2; }

#else

const KernelSet* avx2_kernels() noexcept { return nullptr; }

#endif

}  // namespace kaluza::kernels::detail

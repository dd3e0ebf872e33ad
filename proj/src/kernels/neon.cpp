// NEON variants for AArch64, where Advanced SIMD is part of the baseline ISA.

#include "kaluza/kernels/dispatch.hpp"

#if defined(__aarch64__)
#define KALUZA_HAVE_NEON 1
#include <arm_neon.h>
#endif

namespace kaluza::kernels::detail {

#ifdef KALUZA_HAVE_NEON

namespace {

void hadamard_pairs(const double* in, double* out, std::size_t pairs) {
    for (std::size_t p = 0; p < pairs; ++p) {
        const float64x2_t v = vld1q_f64(in + 2 * p);
        const float64x2_t swapped = vextq_f64(v, v, 1);
        const float64x2_t sum = vaddq_f64(v, swapped);
        const float64x2_t diff = vsubq_f64(v, swapped);
        vst1q_f64(out + 2 * p, vcombine_f64(vget_low_f64(sum), vget_low_f64(diff)));
    }
}

void replicate_pairs(const double* in, double* out, std::size_t pairs, std::size_t copies) {
    for (std::size_t k = 0; k < pairs; ++k) {
        const float64x2_t pair = vld1q_f64(in + 2 * k);
        double* dst = out + k * 2 * copies;
        for (std::size_t r = 0; r < copies; ++r) {
            vst1q_f64(dst + 2 * r, pair);
        }
    }
}

void scale(const double* x, const double* d, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(out + i, vmulq_f64(vld1q_f64(x + i), vld1q_f64(d + i)));
    }
    for (; i < n; ++i) {
        out[i] = x[i] * d[i];
    }
}

void fan_in(const double* x, double* out, std::size_t arity, std::size_t width) {
    std::size_t m = 0;
    for (; m + 2 <= width; m += 2) {
        float64x2_t acc = vld1q_f64(x + m);
        for (std::size_t k = 1; k < arity; ++k) {
            acc = vaddq_f64(acc, vld1q_f64(x + k * width + m));
        }
        vst1q_f64(out + m, acc);
    }
    for (; m < width; ++m) {
        double acc = x[m];
        for (std::size_t k = 1; k < arity; ++k) {
            acc += x[k * width + m];
        }
        out[m] = acc;
    }
}

// vmulq + vaddq, never vfmaq: the fused form rounds once instead of twice.
void matvec32(const double* colmajor, const double* x, double* y) {
    float64x2_t acc[16];
    const float64x2_t x0 = vdupq_n_f64(x[0]);
    for (int q = 0; q < 16; ++q) {
        acc[q] = vmulq_f64(vld1q_f64(colmajor + 2 * q), x0);
    }
    for (int c = 1; c < 32; ++c) {
        const float64x2_t xc = vdupq_n_f64(x[c]);
        const double* col = colmajor + 32 * c;
        for (int q = 0; q < 16; ++q) {
            acc[q] = vaddq_f64(acc[q], vmulq_f64(vld1q_f64(col + 2 * q), xc));
        }
    }
    for (int q = 0; q < 16; ++q) {
        vst1q_f64(y + 2 * q, acc[q]);
    }
}

void diag_fan_in(const double* u, const double* d, double* out) {
    float64x2_t acc[16];
    const float64x2_t u0 = vld1q_f64(u);
    for (int q = 0; q < 16; ++q) {
        acc[q] = vmulq_f64(vld1q_f64(d + 2 * q), u0);
    }
    for (int k = 1; k < 16; ++k) {
        const float64x2_t uk = vld1q_f64(u + 2 * k);
        const double* dk = d + 32 * k;
        for (int q = 0; q < 16; ++q) {
            acc[q] = vaddq_f64(acc[q], vmulq_f64(vld1q_f64(dk + 2 * q), uk));
        }
    }
    for (int q = 0; q < 16; ++q) {
        vst1q_f64(out + 2 * q, acc[q]);
    }
}

constexpr KernelSet kNeon{Isa::neon, hadamard_pairs, replicate_pairs, scale,
                          fan_in,    matvec32,       diag_fan_in};

}  // namespace

const KernelSet* neon_kernels() noexcept { return &kNeon; }

#else

const KernelSet* neon_kernels() noexcept { return nullptr; }

#endif

}  // namespace kaluza::kernels::detail

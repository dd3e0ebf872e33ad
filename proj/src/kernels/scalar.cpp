#include "kaluza/kernels/dispatch.hpp"
#include "kaluza/kernels/scalar.hpp"

namespace kaluza::kernels::detail {

namespace {

void hadamard_pairs(const double* in, double* out, std::size_t pairs) {
    scalar::hadamard_pairs<double>({in, 2 * pairs}, {out, 2 * pairs});
}

void replicate_pairs(const double* in, double* out, std::size_t pairs, std::size_t copies) {
    scalar::replicate_pairs<double>({in, 2 * pairs}, {out, 2 * pairs * copies}, copies);
}

void scale(const double* x, const double* d, double* out, std::size_t n) {
    scalar::scale<double>({x, n}, {d, n}, {out, n});
}

void fan_in(const double* x, double* out, std::size_t arity, std::size_t width) {
    scalar::fan_in<double>({x, arity * width}, {out, width});
}

void matvec32(const double* colmajor, const double* x, double* y) {
    scalar::matvec<double>({colmajor, 1024}, {x, 32}, {y, 32});
}

void diag_fan_in(const double* u, const double* d, double* out) {
    scalar::diag_fan_in<double>({u, 32}, {d, 512}, {out, 32});
}

constexpr KernelSet kScalar{Isa::scalar, hadamard_pairs, replicate_pairs, scale,
                            fan_in,      matvec32,       diag_fan_in};

}  // namespace

const KernelSet& scalar_kernels() noexcept { return kScalar; }

}  // namespace kaluza::kernels::detail

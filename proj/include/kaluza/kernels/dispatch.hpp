#pragma once

// Runtime selection between the scalar reference kernels and the SIMD
// variants. All variants produce bit-identical results.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace kaluza::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name);

/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa) noexcept;
std::vector<Isa> available_isas();
Isa best_isa() noexcept;

struct KernelSet {
    Isa isa;
    void (*hadamard_pairs)(const double* in, double* out, std::size_t pairs);
    void (*replicate_pairs)(const double* in, double* out, std::size_t pairs, std::size_t copies);
    void (*scale)(const double* x, const double* d, double* out, std::size_t n);
    void (*fan_in)(const double* x, double* out, std::size_t arity, std::size_t width);
    void (*matvec32)(const double* colmajor, const double* x, double* y);
    void (*diag_fan_in)(const double* u32, const double* d512, double* out32);
};

/// Throws std::invalid_argument if the ISA is not available.
const KernelSet& kernel_set(Isa isa);

/// Kernels in use; defaults to best_isa().
const KernelSet& active_kernels() noexcept;
Isa active_isa() noexcept;

/// Process-wide override. Throws std::invalid_argument if unavailable.
void select_isa(Isa isa);

namespace detail {
const KernelSet& scalar_kernels() noexcept;
const KernelSet* avx2_kernels() noexcept;  // nullptr when not compiled in
const KernelSet* neon_kernels() noexcept;
}  // namespace detail

}  // namespace kaluza::kernels

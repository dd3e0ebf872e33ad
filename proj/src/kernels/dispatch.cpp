#include "kaluza/kernels/dispatch.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace kaluza::kernels {

namespace {

bool cpu_supports(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const KernelSet* lookup(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return &detail::scalar_kernels();
        case Isa::avx2: return detail::avx2_kernels();
        case Isa::neon: return detail::neon_kernels();
    }
    return nullptr;
}

std::atomic<const KernelSet*>& active_slot() noexcept {
    static std::atomic<const KernelSet*> slot{lookup(best_isa())};
    return slot;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (name == to_string(isa)) {
            return isa;
        }
    }
    return std::nullopt;
}

bool isa_available(Isa isa) noexcept { return lookup(isa) != nullptr && cpu_supports(isa); }

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (isa_available(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

Isa best_isa() noexcept {
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

const KernelSet& kernel_set(Isa isa) {
    if (!isa_available(isa)) {
        throw std::invalid_argument("instruction set '" + std::string(to_string(isa)) +
                                    "' is not available on this machine");
    }
    return *lookup(isa);
}

const KernelSet& active_kernels() noexcept { return *active_slot().load(std::memory_order_acquire); }

Isa active_isa() noexcept { return active_kernels().isa; }

void select_isa(Isa isa) { active_slot().store(&kernel_set(isa), std::memory_order_release); }

}  // namespace kaluza::kernels

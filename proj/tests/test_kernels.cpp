#include <doctest.h>

#include <array>
#include <string>
#include <vector>

#include "kaluza/fastmul.hpp"
#include "kaluza/kernels/dispatch.hpp"
#include "kaluza/rng.hpp"

using namespace kaluza;
using kernels::Isa;

namespace {

std::vector<double> random_vector(Mcg64& rng, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.symmetric() * 1e3;
    return v;
}

// Restores the process-wide kernel selection on scope exit.
struct IsaGuard {
    Isa saved = kernels::active_isa();
    ~IsaGuard() { kernels::select_isa(saved); }
};

}  // namespace

TEST_CASE("isa names and availability") {
    CHECK(kernels::parse_isa("avx2") == Isa::avx2);
    CHECK(kernels::parse_isa("neon") == Isa::neon);
    CHECK_FALSE(kernels::parse_isa("sse9").has_value());
    CHECK(kernels::to_string(Isa::scalar) == "scalar");
    CHECK(kernels::isa_available(Isa::scalar));
    CHECK(kernels::available_isas().front() == Isa::scalar);
    CHECK(kernels::isa_available(kernels::best_isa()));
    CHECK(kernels::active_isa() == kernels::best_isa());
    for (Isa isa : {Isa::avx2, Isa::neon}) {
        if (!kernels::isa_available(isa)) {
            CHECK_THROWS_AS(kernels::kernel_set(isa), std::invalid_argument);
            CHECK_THROWS_AS(kernels::select_isa(isa), std::invalid_argument);
        }
    }
}

TEST_CASE("every available kernel set matches the scalar reference bit for bit") {
    const auto& ref = kernels::kernel_set(Isa::scalar);
    Mcg64 rng(59);
    for (Isa isa : kernels::available_isas()) {
        CAPTURE(std::string(kernels::to_string(isa)));
        const auto& k = kernels::kernel_set(isa);
        CHECK(k.isa == isa);
        for (int t = 0; t < 200; ++t) {
            const auto x32 = random_vector(rng, 32);
            const auto m = random_vector(rng, 1024);
            const auto d = random_vector(rng, 512);
            const auto x512 = random_vector(rng, 512);
            std::vector<double> a(32), b(32);

            ref.matvec32(m.data(), x32.data(), a.data());
            k.matvec32(m.data(), x32.data(), b.data());
            REQUIRE(a == b);

            ref.diag_fan_in(x32.data(), d.data(), a.data());
            k.diag_fan_in(x32.data(), d.data(), b.data());
            REQUIRE(a == b);

            // Pair counts that leave a tail after the vector loop.
            for (std::size_t pairs : {1U, 3U, 16U}) {
                std::vector<double> ha(2 * pairs), hb(2 * pairs);
                ref.hadamard_pairs(x32.data(), ha.data(), pairs);
                k.hadamard_pairs(x32.data(), hb.data(), pairs);
                REQUIRE(ha == hb);
            }
            std::vector<double> in_place = x32;
            k.hadamard_pairs(in_place.data(), in_place.data(), 16);
            ref.hadamard_pairs(x32.data(), a.data(), 16);
            REQUIRE(in_place == a);

            for (std::size_t copies : {1U, 3U, 16U}) {
                std::vector<double> ra(32 * copies), rb(32 * copies);
                ref.replicate_pairs(x32.data(), ra.data(), 16, copies);
                k.replicate_pairs(x32.data(), rb.data(), 16, copies);
                REQUIRE(ra == rb);
            }

            for (std::size_t n : {5U, 512U}) {
                std::vector<double> sa(n), sb(n);
                ref.scale(x512.data(), d.data(), sa.data(), n);
                k.scale(x512.data(), d.data(), sb.data(), n);
                REQUIRE(sa == sb);
            }

            for (std::size_t width : {32U, 7U}) {
                const std::size_t arity = 512 / width;
                std::vector<double> fa(width), fb(width);
                ref.fan_in(x512.data(), fa.data(), arity, width);
                k.fan_in(x512.data(), fb.data(), arity, width);
                REQUIRE(fa == fb);
            }
        }
    }
}

TEST_CASE("products are identical under every kernel set") {
    IsaGuard guard;
    Mcg64 rng(61);
    std::vector<std::pair<KaluzaNumber, KaluzaNumber>> pairs;
    for (int t = 0; t < 200; ++t) pairs.emplace_back(random_real_number(rng), random_real_number(rng));

    kernels::select_isa(Isa::scalar);
    std::vector<KaluzaNumber> dense, fast, staged;
    for (const auto& [a, b] : pairs) {
        dense.push_back(mul_dense(a, build_mul_matrix(b)));
        fast.push_back(mul_fast(a, b));
        staged.push_back(build_pipeline(b).apply_staged(a));
    }
    for (Isa isa : kernels::available_isas()) {
        kernels::select_isa(isa);
        CHECK(kernels::active_isa() == isa);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto& [a, b] = pairs[i];
            REQUIRE(mul_dense(a, build_mul_matrix(b)) == dense[i]);
            REQUIRE(mul_fast(a, b) == fast[i]);
            REQUIRE(build_pipeline(b).apply_staged(a) == staged[i]);
        }
    }
}

TEST_CASE("fused fast path equals the staged path bit for bit") {
    Mcg64 rng(67);
    for (int t = 0; t < 500; ++t) {
        const auto a = random_real_number(rng);
        const auto p = build_pipeline(random_real_number(rng));
        REQUIRE(p.apply(a) == p.apply_staged(a));
    }
}

TEST_CASE("scalar templates on double agree with the scalar kernel set") {
    Mcg64 rng(71);
    const auto& ref = kernels::kernel_set(Isa::scalar);
    const auto u = random_vector(rng, 32);
    const auto d = random_vector(rng, 512);
    std::array<double, 32> a{}, b{};
    kernels::scalar::diag_fan_in<double>(u, d, a);
    ref.diag_fan_in(u.data(), d.data(), b.data());
    CHECK(a == b);
}

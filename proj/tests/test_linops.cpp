#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "kaluza/errors.hpp"
#include "kaluza/linops.hpp"
#include "kaluza/rng.hpp"
#include "oracle.hpp"

using namespace kaluza;

namespace {

std::vector<double> random_vector(Mcg64& rng, std::size_t n, bool integers) {
    std::vector<double> v(n);
    for (auto& x : v) x = integers ? static_cast<double>(rng.uniform_int(-1024, 1024)) : rng.symmetric();
    return v;
}

double relative_error(const std::vector<double>& got, const std::vector<double>& want) {
    double diff = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
        diff = std::max(diff, std::abs(got[i] - want[i]));
        norm = std::max(norm, std::abs(want[i]));
    }
    return norm == 0.0 ? diff : diff / norm;
}

Permutation32 random_permutation(Mcg64& rng) {
    Permutation32::Map m{};
    std::iota(m.begin(), m.end(), std::uint8_t{0});
    for (std::size_t i = kDim - 1; i > 0; --i) {
        std::swap(m[i], m[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i)))]);
    }
    return Permutation32(m);
}

std::array<double, kDim> iota32() {
    std::array<double, kDim> v{};
    std::iota(v.begin(), v.end(), 0.0);
    return v;
}

std::vector<LinearStage> all_stage_kinds(Mcg64& rng) {
    std::vector<LinearStage> s;
    s.emplace_back(PermuteStage{kaluza_permutation(), Direction::forward});
    s.emplace_back(PermuteStage{random_permutation(rng), Direction::inverse});
    s.emplace_back(HadamardStage{16});
    s.emplace_back(ReplicateStage{16, 16});
    s.emplace_back(DiagonalStage{random_vector(rng, 512, true)});
    s.emplace_back(FanInStage{16, 32});
    return s;
}

}  // namespace

TEST_CASE("permutation construction") {
    Permutation32::Map bad{};
    CHECK_THROWS_AS(Permutation32{bad}, std::invalid_argument);
    const std::array<int, 3> short_list{1, 2, 3};
    CHECK_THROWS_AS(Permutation32::from_one_based(short_list), std::invalid_argument);
    CHECK(Permutation32::from_one_based(oracle::kListedPermutation) == kaluza_permutation());
}

TEST_CASE("apply_permutation examples") {
    Mcg64 rng(31);
    const auto x = random_vector(rng, 32, false);
    const std::span<const double, kDim> xs(x.data(), kDim);
    const auto id = apply_permutation(Permutation32::identity(), xs);
    CHECK(std::equal(id.begin(), id.end(), x.begin()));

    const auto& p = kaluza_permutation();
    const auto once = apply_permutation(p, xs);
    const auto twice = apply_permutation(p, once);
    CHECK(std::equal(twice.begin(), twice.end(), x.begin()));

    const std::array<double, kDim> want = {0,  1,  2,  6,  4,  8,  3,  7,  5,  9,  10, 16, 12, 18, 14, 20,
                                           11, 17, 13, 19, 15, 21, 22, 26, 24, 28, 23, 27, 25, 29, 30, 31};
    CHECK(apply_permutation(p, iota32()) == want);
}

TEST_CASE("permutation properties") {
    const auto& p = kaluza_permutation();
    CHECK(p.is_involution());
    CHECK(p.inverse() == p);
    CHECK(p.compose(p) == Permutation32::identity());

    Mcg64 rng(37);
    for (int t = 0; t < 100; ++t) {
        const auto q = random_permutation(rng);
        const auto x = random_vector(rng, 32, false);
        const std::span<const double, kDim> xs(x.data(), kDim);
        const auto y = apply_permutation(q, apply_permutation(q, xs, Direction::forward), Direction::inverse);
        CHECK(std::equal(y.begin(), y.end(), x.begin()));
        CHECK(apply_permutation(p, xs, Direction::forward) == apply_permutation(p, xs, Direction::inverse));
        CHECK(q.compose(q.inverse()) == Permutation32::identity());
    }
}

TEST_CASE("permutation charges nothing") {
    OpCount count;
    const LinearStage s(PermuteStage{kaluza_permutation(), Direction::forward});
    s.apply(std::vector<double>(32, 1.0), &count);
    CHECK(count == OpCount{});
}

TEST_CASE("hadamard_pairs") {
    CHECK(hadamard_pairs(std::vector<double>{1, 1}) == std::vector<double>{2, 0});
    CHECK(hadamard_pairs(std::vector<double>{3, 0, 0, 5}) == std::vector<double>{3, 3, 5, -5});
    CHECK(hadamard_pairs(std::vector<double>{3, 0, 0, 5})[2] == 5);

    Mcg64 rng(41);
    const auto x = random_vector(rng, 32, true);
    auto twice = hadamard_pairs(hadamard_pairs(x));
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(twice[i] == 2 * x[i]);

    OpCount count;
    hadamard_pairs(x, &count);
    CHECK(count == OpCount{0, 32});

    CHECK_THROWS_AS(hadamard_pairs(std::vector<double>{1, 2, 3}), DimensionError);
    std::vector<double> out(4);
    CHECK_THROWS_AS(hadamard_pairs(std::vector<double>{1, 2}, out), DimensionError);
}

TEST_CASE("replicate_pairs") {
    std::vector<double> x(32, 0.0);
    x[0] = 1;
    x[1] = 2;
    auto y = replicate_pairs(x);
    REQUIRE(y.size() == 512);
    for (std::size_t i = 0; i < 32; ++i) CHECK(y[i] == (i % 2 == 0 ? 1 : 2));
    CHECK(std::all_of(y.begin() + 32, y.end(), [](double v) { return v == 0.0; }));

    y = replicate_pairs(std::vector<double>(32, 1.0));
    CHECK(std::all_of(y.begin(), y.end(), [](double v) { return v == 1.0; }));

    std::vector<double> ind(32, 0.0);
    ind[31] = 1.0;
    y = replicate_pairs(ind);
    for (std::size_t i = 0; i < 512; ++i) {
        CHECK(y[i] == (i >= 480 && i % 2 == 1 ? 1.0 : 0.0));
    }
    const LinearStage stage(ReplicateStage{16, 16});
    CHECK(materialize(stage).apply(ind) == y);
}

TEST_CASE("block_diagonal_scale") {
    Mcg64 rng(43);
    const auto x = random_vector(rng, 512, false);
    OpCount count;
    CHECK(block_diagonal_scale(x, std::vector<double>(512, 1.0), &count) == x);
    CHECK(count == OpCount{512, 0});
    const auto z = block_diagonal_scale(x, std::vector<double>(512, 0.0));
    CHECK(std::all_of(z.begin(), z.end(), [](double v) { return v == 0.0; }));
    std::vector<double> alt(512);
    for (std::size_t i = 0; i < 512; ++i) alt[i] = i % 2 == 0 ? 1.0 : -1.0;
    const auto s = block_diagonal_scale(x, alt);
    for (std::size_t i = 0; i < 512; ++i) CHECK(s[i] == (i % 2 == 0 ? x[i] : -x[i]));
    CHECK_THROWS_AS(block_diagonal_scale(x, std::vector<double>(511, 1.0)), DimensionError);
}

TEST_CASE("fan_in_sum") {
    std::vector<double> x(512, 0.0);
    for (std::size_t m = 0; m < 32; ++m) x[5 * 32 + m] = static_cast<double>(m) - 7.0;
    auto y = fan_in_sum(x);
    for (std::size_t m = 0; m < 32; ++m) CHECK(y[m] == static_cast<double>(m) - 7.0);

    OpCount count;
    y = fan_in_sum(std::vector<double>(512, 1.0), &count);
    CHECK(std::all_of(y.begin(), y.end(), [](double v) { return v == 16.0; }));
    CHECK(count == OpCount{0, 480});

    Mcg64 rng(47);
    const auto v = random_vector(rng, 32, true);
    // Output m collects slot m mod 2 of every pair: sum over k of v[2k + m mod 2].
    const auto back = fan_in_sum(replicate_pairs(v));
    for (std::size_t m = 0; m < 32; ++m) {
        double want = 0.0;
        for (std::size_t k = 0; k < 16; ++k) want += v[2 * k + m % 2];
        CHECK(back[m] == want);
    }
    // A single nonzero pair comes back tiled over all 16 pair slots.
    std::vector<double> one_pair(32, 0.0);
    one_pair[6] = 3.0;
    one_pair[7] = -5.0;
    const auto tiled = fan_in_sum(replicate_pairs(one_pair));
    for (std::size_t m = 0; m < 32; ++m) CHECK(tiled[m] == one_pair[6 + m % 2]);
    // Summing the tiled result over its 16 slots gives the pair scaled by 16.
    const auto sums = fan_in_sum(tiled, nullptr, 2);
    CHECK(sums == std::vector<double>{48.0, -80.0});
    std::vector<LinearStage> chain;
    chain.emplace_back(ReplicateStage{16, 16});
    chain.emplace_back(FanInStage{16, 32});
    CHECK(materialize(chain).apply(v) == back);

    CHECK_THROWS_AS(fan_in_sum(std::vector<double>(33, 1.0)), DimensionError);
}

TEST_CASE("materialize single stages") {
    const auto h = materialize(LinearStage(HadamardStage{1}));
    REQUIRE(h.rows() == 2);
    CHECK(h(0, 0) == 1);
    CHECK(h(0, 1) == 1);
    CHECK(h(1, 0) == 1);
    CHECK(h(1, 1) == -1);

    const auto p = materialize(LinearStage(PermuteStage{kaluza_permutation(), Direction::forward}));
    CHECK(p == p.transposed());
    for (std::size_t r = 0; r < kDim; ++r) {
        double row = 0, col = 0;
        for (std::size_t c = 0; c < kDim; ++c) {
            CHECK((p(r, c) == 0.0 || p(r, c) == 1.0));
            row += p(r, c);
            col += p(c, r);
        }
        CHECK(row == 1.0);
        CHECK(col == 1.0);
    }

    const auto a = materialize(LinearStage(FanInStage{16, 32}));
    CHECK(a.rows() == 32);
    CHECK(a.cols() == 512);
    const auto r = materialize(LinearStage(ReplicateStage{16, 16}));
    CHECK(r.rows() == 512);
    CHECK(r.cols() == 32);
}

TEST_CASE("stage application matches its dense matrix") {
    Mcg64 rng(53);
    for (const auto& stage : all_stage_kinds(rng)) {
        const auto m = materialize(stage);
        CHECK(m.rows() == stage.output_dim());
        CHECK(m.cols() == stage.input_dim());
        for (int t = 0; t < 100; ++t) {
            const auto xi = random_vector(rng, stage.input_dim(), true);
            REQUIRE(stage.apply(xi) == m.apply(xi));
            const auto xr = random_vector(rng, stage.input_dim(), false);
            REQUIRE(relative_error(stage.apply(xr), m.apply(xr)) <= 1e-12);
        }
    }
}

TEST_CASE("composition errors") {
    std::vector<LinearStage> chain;
    chain.emplace_back(HadamardStage{16});
    chain.emplace_back(FanInStage{16, 32});
    CHECK_THROWS_AS(materialize(chain), CompositionError);
    CHECK_THROWS_AS(apply_chain(chain, std::vector<double>(32, 0.0)), CompositionError);
    CHECK_THROWS_AS(DenseMatrix(2, 3) * DenseMatrix(2, 3), CompositionError);
    CHECK_THROWS_AS(DenseMatrix(2, 3).apply(std::vector<double>(2)), DimensionError);
    CHECK_THROWS_AS(LinearStage(HadamardStage{16}).apply(std::vector<double>(30)), DimensionError);
}

TEST_CASE("dense helpers") {
    const auto k = kron(DenseMatrix::identity(2), DenseMatrix::ones(1, 2));
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 4);
    CHECK(k.to_text() == "1 1 0 0\n0 0 1 1\n");
    DenseMatrix neg_zero(1, 2);
    neg_zero(0, 0) = -0.0;
    neg_zero(0, 1) = -0.5;
    CHECK(neg_zero.to_text() == "0 -0.5\n");
    CHECK(max_abs_difference(DenseMatrix::identity(3), DenseMatrix::ones(3, 3)) == 1.0);
    CHECK_THROWS_AS(max_abs_difference(DenseMatrix::identity(3), DenseMatrix::identity(2)), DimensionError);
}

#include <doctest.h>

#include <cmath>
#include <set>

#include "kaluza/number.hpp"
#include "kaluza/printed.hpp"
#include "kaluza/rng.hpp"
#include "oracle.hpp"

using namespace kaluza;

namespace {

KaluzaNumber e(std::size_t k, double s = 1.0) { return KaluzaNumber::basis(k, s); }

}  // namespace

TEST_CASE("add") {
    Mcg64 rng(3);
    const auto a = random_real_number(rng);
    CHECK(add(a, KaluzaNumber{}) == a);
    CHECK(add(e(1), e(1)) == e(1, 2.0));
    CHECK(add(e(0) + e(5), e(0, 2.0) - e(5)) == e(0, 3.0));

    OpCount count;
    add(a, a, &count);
    CHECK(count == OpCount{0, 32});
}

TEST_CASE("basis construction") {
    CHECK(KaluzaNumber::one()[0] == 1.0);
    CHECK(e(31, -2.0)[31] == -2.0);
    CHECK_THROWS_AS(KaluzaNumber::basis(32), std::out_of_range);
    KaluzaNumber x;
    CHECK(x.is_finite());
    x[4] = std::nan("");
    CHECK_FALSE(x.is_finite());
}

TEST_CASE("mul_naive examples") {
    Mcg64 rng(5);
    const auto x = random_real_number(rng);
    CHECK(mul_naive(KaluzaNumber::one(), x) == x);
    CHECK(mul_naive(e(1), e(2)) == e(6));
    CHECK(mul_naive(e(2), e(1)) == e(6, -1.0));
    CHECK(mul_naive(e(1) + e(2), e(3)) == e(7) + e(10));
}

TEST_CASE("mul_naive matches the gathered oracle on random integers") {
    Mcg64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const auto a = random_integer_number(rng);
        const auto b = random_integer_number(rng);
        REQUIRE(mul_naive(a, b) == oracle::product(kaluza_table(), a, b));
    }
}

TEST_CASE("mul_naive on every basis pair follows the table") {
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            const auto p = basis_mul(i, j);
            REQUIRE(mul_naive(e(i), e(j)) == e(p.index, p.sign));
        }
    }
}

TEST_CASE("bilinearity") {
    Mcg64 rng(13);
    SUBCASE("integers, bit-exact") {
        for (int t = 0; t < 100; ++t) {
            const double alpha = static_cast<double>(rng.uniform_int(-8, 8));
            const auto a = random_integer_number(rng);
            const auto a2 = random_integer_number(rng);
            const auto b = random_integer_number(rng);
            CHECK(mul_naive(alpha * a + a2, b) == alpha * mul_naive(a, b) + mul_naive(a2, b));
            CHECK(mul_naive(b, alpha * a + a2) == alpha * mul_naive(b, a) + mul_naive(b, a2));
        }
    }
    SUBCASE("reals, 1e-12 relative") {
        for (int t = 0; t < 100; ++t) {
            const double alpha = rng.symmetric();
            const auto a = random_real_number(rng);
            const auto a2 = random_real_number(rng);
            const auto b = random_real_number(rng);
            CHECK(oracle::relative_error(mul_naive(alpha * a + a2, b), alpha * mul_naive(a, b) + mul_naive(a2, b)) <=
                  1e-12);
            CHECK(oracle::relative_error(mul_naive(b, alpha * a + a2), alpha * mul_naive(b, a) + mul_naive(b, a2)) <=
                  1e-12);
        }
    }
}

TEST_CASE("identity on both sides") {
    Mcg64 rng(17);
    for (int t = 0; t < 100; ++t) {
        const auto x = random_real_number(rng);
        CHECK(mul_naive(KaluzaNumber::one(), x) == x);
        CHECK(mul_naive(x, KaluzaNumber::one()) == x);
    }
}

TEST_CASE("non-commutativity witness") {
    const auto xy = mul_naive(e(1), e(2));
    const auto yx = mul_naive(e(2), e(1));
    CHECK(xy == -1.0 * yx);
    CHECK(xy != KaluzaNumber{});
}

TEST_CASE("operation counts of the direct engines") {
    OpCount naive;
    OpCount dense;
    mul_naive(e(3), e(4), &naive);
    mul_dense(e(3), build_mul_matrix(e(4)), &dense);
    CHECK(naive == OpCount{1024, 992});
    CHECK(dense == OpCount{1024, 992});
}

TEST_CASE("build_mul_matrix examples") {
    CHECK(build_mul_matrix(KaluzaNumber::one()) == MulMatrix::identity());
    const auto m = build_mul_matrix(e(1));
    CHECK(m(0, 1) == 1.0);
    CHECK(m(6, 2) == -1.0);
}

TEST_CASE("build_mul_matrix agrees with the column-by-column oracle") {
    Mcg64 rng(19);
    for (int t = 0; t < 10; ++t) {
        const auto b = random_real_number(rng);
        const auto m = build_mul_matrix(b);
        const auto ref = oracle::mul_matrix(kaluza_table(), b);
        for (std::size_t r = 0; r < kDim; ++r) {
            for (std::size_t c = 0; c < kDim; ++c) {
                REQUIRE(m(r, c) == ref[r * kDim + c]);
            }
        }
    }
}

TEST_CASE("every matrix entry is a signed copy of one coefficient") {
    KaluzaNumber b;
    for (std::size_t k = 0; k < kDim; ++k) b[k] = static_cast<double>(k + 1);
    const auto m = build_mul_matrix(b);
    for (std::size_t r = 0; r < kDim; ++r) {
        std::set<double> seen;
        for (std::size_t c = 0; c < kDim; ++c) {
            const double v = std::abs(m(r, c));
            CHECK(v >= 1.0);
            CHECK(v <= 32.0);
            CHECK(v == std::floor(v));
            seen.insert(v);
        }
        CHECK(seen.size() == kDim);
    }
}

TEST_CASE("mul_dense") {
    Mcg64 rng(23);
    const auto x = random_real_number(rng);
    CHECK(mul_dense(x, MulMatrix::identity()) == x);
    CHECK(mul_dense(KaluzaNumber{}, build_mul_matrix(x)) == KaluzaNumber{});
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            REQUIRE(mul_dense(e(i), build_mul_matrix(e(j))) == mul_naive(e(i), e(j)));
        }
    }
}

TEST_CASE("matrix consistency on integers up to 2^20") {
    Mcg64 rng(29);
    for (int tb = 0; tb < 100; ++tb) {
        const auto b = random_integer_number(rng, 1 << 20);
        const auto m = build_mul_matrix(b);
        for (int ta = 0; ta < 100; ++ta) {
            const auto a = random_integer_number(rng, 1 << 20);
            REQUIRE(mul_dense(a, m) == mul_naive(a, b));
        }
    }
}

TEST_CASE("symbolic matrix") {
    const auto s = symbolic_mul_matrix();
    CHECK(s[0] == SignedIndex{1, 0});
    CHECK(s[1 * kDim + 0] == SignedIndex{1, 1});
    CHECK(format_coefficient(s[0]) == "+b0");
    CHECK(format_coefficient(s[1]) == "+b1");
    CHECK(format_coefficient(s[2]) == "+b2");
    CHECK(format_coefficient(s[3]) == "-b3");
    CHECK(format_coefficient({-1, 17}, 'c') == "-c17");
}

TEST_CASE("printed blocks agree with the embedded table") {
    CHECK(compare_printed_blocks().empty());
}

TEST_CASE("printed blocks disagree with the typeset table at one cell") {
    const auto mismatches = compare_printed_blocks(CayleyTable(printed::cayley_table()));
    REQUIRE(mismatches.size() == 1);
    CHECK(mismatches[0].row == 13);
    CHECK(mismatches[0].column == 2);
    CHECK(mismatches[0].printed == SignedIndex{1, 22});
    CHECK(mismatches[0].derived == SignedIndex{-1, 22});
}

#include <doctest.h>

#include <string>

#include "kaluza/errors.hpp"
#include "kaluza/rng.hpp"
#include "kaluza/text_io.hpp"

using namespace kaluza;

namespace {

std::string numbers(std::size_t count, const std::string& sep = " ") {
    std::string s;
    for (std::size_t k = 0; k < count; ++k) {
        if (k != 0) s += sep;
        s += std::to_string(k);
    }
    return s;
}

ParseError parse_failure(const std::string& text) {
    try {
        parse_number(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError for: " << text);
    return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("parse 32 coefficients across lines with comments") {
    const std::string text = "# left operand\n" + numbers(16) + "\n  # another comment\n" +
                             "16 17 18 19 20 21 22 23\n\t24 25 26 27 28 29 30 -3.5e1\n";
    const auto x = parse_number(text);
    CHECK(x[0] == 0.0);
    CHECK(x[17] == 17.0);
    CHECK(x[31] == -35.0);
}

TEST_CASE("parse errors carry line and column") {
    SUBCASE("too few") {
        const auto e = parse_failure(numbers(31));
        CHECK(e.line() == 1);
        CHECK(std::string(e.what()).find("found 31") != std::string::npos);
    }
    SUBCASE("too many") {
        const auto e = parse_failure(numbers(32) + "\n 99");
        CHECK(e.line() == 2);
        CHECK(e.column() == 2);
    }
    SUBCASE("invalid token") {
        const auto e = parse_failure("1 2 x3");
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
    SUBCASE("non-finite") {
        CHECK(std::string(parse_failure("nan " + numbers(31)).what()).find("non-finite") != std::string::npos);
        CHECK(parse_failure("1 inf").column() == 3);
    }
    SUBCASE("out of range") {
        CHECK(std::string(parse_failure("1e999").what()).find("out of range") != std::string::npos);
    }
    SUBCASE("empty") {
        CHECK_THROWS_AS(parse_number(""), ParseError);
        CHECK_THROWS_AS(parse_number("# only a comment\n"), ParseError);
    }
}

TEST_CASE("format and parse round trip exactly") {
    Mcg64 rng(109);
    for (int t = 0; t < 200; ++t) {
        const auto x = random_real_number(rng);
        CHECK(parse_number(format_number(x)) == x);
    }
    CHECK(format_number(KaluzaNumber::basis(6)) ==
          "0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0");
}

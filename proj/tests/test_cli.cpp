#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "kaluza/cayley.hpp"
#include "kaluza/errors.hpp"
#include "kaluza/kernels/dispatch.hpp"

using namespace kaluza;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) v.push_back(l);
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> v;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, sep)) v.push_back(cell);
    return v;
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content)
        : path_(std::filesystem::temp_directory_path() / ("kaluza_cli_test_" + name)) {
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::string count_up(std::size_t n) {
    std::string s;
    for (std::size_t k = 0; k < n; ++k) s += std::to_string(k) + (k % 8 == 7 ? "\n" : " ");
    return s;
}

const std::string kE6 = "0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0";

}  // namespace

TEST_CASE("operand resolution") {
    CHECK(cli::resolve_operand("e5") == KaluzaNumber::basis(5));
    CHECK(cli::resolve_operand("-e17") == KaluzaNumber::basis(17, -1.0));
    CHECK(cli::resolve_operand("1") == KaluzaNumber::one());
    CHECK(cli::resolve_operand(count_up(32))[31] == 31.0);
    TempFile f("resolve", "# comment\n" + count_up(32));
    CHECK(cli::resolve_operand(f.path())[9] == 9.0);
    CHECK_THROWS_AS(cli::resolve_operand("/nonexistent/operand.txt"), std::invalid_argument);
    CHECK_THROWS_AS(cli::resolve_operand("1,2,3"), ParseError);
}

TEST_CASE("multiply") {
    SUBCASE("e1 * e2") {
        const auto r = run({"multiply", "e1", "e2"});
        CHECK(r.code == 0);
        CHECK(r.out == kE6 + "\n");
    }
    SUBCASE("every engine") {
        for (std::string engine : {"naive", "dense", "fast"}) {
            const auto r = run({"multiply", "e1", "e2", "--engine", engine});
            CHECK(r.code == 0);
            CHECK(r.out == kE6 + "\n");
        }
    }
    SUBCASE("both engines on 1 * x") {
        TempFile x("x", count_up(32));
        const auto r = run({"multiply", "1", x.path(), "--engine", "both"});
        CHECK(r.code == 0);
        const auto l = lines(r.out);
        REQUIRE(l.size() == 3);
        CHECK(l[0] == l[1]);
        CHECK(l[0].rfind("0 1 2 3", 0) == 0);
        CHECK(l[2] == "max abs difference: 0");
    }
    SUBCASE("malformed 31-number file") {
        TempFile bad("short", count_up(31));
        const auto r = run({"multiply", bad.path(), "e1"});
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.find("line 4, column") != std::string::npos);
        CHECK(r.err.find(bad.path()) != std::string::npos);
    }
    SUBCASE("non-finite input") {
        TempFile bad("nan", "nan " + count_up(31));
        const auto r = run({"multiply", "e1", bad.path()});
        CHECK(r.code == 2);
        CHECK(r.err.find("non-finite") != std::string::npos);
    }
    SUBCASE("unknown engine") { CHECK(run({"multiply", "e1", "e2", "--engine", "quick"}).code == 2); }
}

TEST_CASE("verify") {
    const auto a = run({"verify", "--trials", "300", "--seed", "7"});
    const auto b = run({"verify", "--trials", "300", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("[PASS] operation counts: naive: 1024 mul, 992 add; fast: 512 mul, 576 add") !=
          std::string::npos);
    CHECK(a.out.find("[FAIL]") == std::string::npos);
    CHECK(a.out.find("[WARN] fixtures: 6 mismatches") != std::string::npos);
    CHECK(a.out.find("s18^(1): derived +c23, printed -c22") != std::string::npos);
    CHECK(a.out.find("summary: ") != std::string::npos);
    CHECK(run({"verify", "--trials", "0"}).code == 2);
}

TEST_CASE("verify under each kernel set") {
    CHECK(run({"--isa", "scalar", "verify", "--trials", "50"}).code == 0);
    CHECK(run({"--isa", "vliw", "verify"}).code == 2);
    kernels::select_isa(kernels::best_isa());
}

TEST_CASE("bench") {
    const auto r = run({"bench", "--reps", "200", "--seed", "3", "--format", "csv"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 6);
    CHECK(l[0] == "engine,mode,reps,total_ns,mean_ns,muls,adds");
    bool saw_fast = false, saw_naive = false;
    for (std::size_t i = 1; i < l.size(); ++i) {
        const auto f = split(l[i], ',');
        REQUIRE(f.size() == 7);
        CHECK(f[2] == "200");
        const double total = std::stod(f[3]);
        const double mean = std::stod(f[4]);
        CHECK(std::abs(mean * 200 - total) <= 0.01 * total + 1.0);
        if (f[0] == "fast") {
            saw_fast = true;
            CHECK(f[5] == "512");
            CHECK(f[6] == "576");
        }
        if (f[0] == "naive") {
            saw_naive = true;
            CHECK(f[5] == "1024");
            CHECK(f[6] == "992");
        }
    }
    CHECK(saw_fast);
    CHECK(saw_naive);

    const auto text = run({"bench", "--reps", "100"});
    CHECK(text.code == 0);
    CHECK(text.out.find("wall-clock ratio") != std::string::npos);
    CHECK(run({"bench", "--reps", "0"}).code == 2);
    CHECK(run({"bench", "--format", "xml"}).code == 2);
}

TEST_CASE("dump") {
    SUBCASE("table quadrant") {
        const auto r = run({"dump", "table", "--quadrant", "NW"});
        CHECK(r.code == 0);
        CHECK(r.out == dump_table(kaluza_table(), Quadrant::nw));
        CHECK(run({"dump", "table-quadrant", "--quadrant", "se"}).out == dump_table(kaluza_table(), Quadrant::se));
        CHECK(run({"dump", "table", "--quadrant", "middle"}).code == 2);
        CHECK(lines(run({"dump", "table"}).out).size() == 4 * 17);
    }
    SUBCASE("diagonal for b = 1") {
        const auto r = run({"dump", "diagonal", "--operand", "1"});
        CHECK(r.code == 0);
        const auto l = lines(r.out);
        REQUIRE(l.size() == 16);
        CHECK(l[0].rfind("0.5 0.5 ", 0) == 0);
        CHECK(lines(run({"dump", "diagonal", "--symbolic"}).out)[1].find("+c23") != std::string::npos);
    }
    SUBCASE("mul-matrix") {
        const auto r = run({"dump", "mul-matrix", "--operand", "e1"});
        CHECK(r.code == 0);
        const auto l = lines(r.out);
        REQUIRE(l.size() == 32);
        CHECK(split(l[0], ' ')[1] == "1");
        CHECK(split(l[6], ' ')[2] == "-1");
        CHECK(run({"dump", "mul-matrix", "--symbolic"}).out.rfind(" +b0  +b1  +b2  -b3", 0) == 0);
    }
    SUBCASE("factors") {
        const auto r = run({"dump", "factors"});
        CHECK(r.code == 0);
        const auto l = lines(r.out);
        REQUIRE(l.size() > 33);
        CHECK(l[0] == "# stage 0: permute 32x32");
        std::vector<std::vector<std::string>> p;
        for (std::size_t i = 1; i <= 32; ++i) p.push_back(split(l[i], ' '));
        for (std::size_t i = 0; i < 32; ++i) {
            for (std::size_t j = 0; j < 32; ++j) {
                CHECK((p[i][j] == "0" || p[i][j] == "1"));
                CHECK(p[i][j] == p[j][i]);
            }
        }
        CHECK(r.out.find("# needs --operand") != std::string::npos);
        CHECK(run({"dump", "factors", "--operand", "e2"}).out.find("# needs --operand") == std::string::npos);
    }
    SUBCASE("missing operand") {
        CHECK(run({"dump", "mul-matrix"}).code == 2);
        CHECK(run({"dump", "diagonal"}).code == 2);
        CHECK(run({"dump", "diagonal", "--operand", "e99"}).code == 2);
    }
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"multiply", "e1"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("multiply") != std::string::npos);
}

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// all nine pass. Oracles come from tests/oracle.hpp and from checks written
// out here against the raw table, not from the library paths under test.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "kaluza/fastmul.hpp"
#include "kaluza/kernels/dispatch.hpp"
#include "kaluza/printed.hpp"
#include "kaluza/rng.hpp"
#include "oracle.hpp"

using namespace kaluza;

namespace {

// Pinned tolerances and sizes.
constexpr double kRealRelativeTolerance = 1e-12;
constexpr double kFactorizationTolerance = 1e-12;
constexpr std::size_t kRandomTrials = 10000;
constexpr std::size_t kRandomOperands = 20;
constexpr double kTimeLimitSeconds = 60.0;
constexpr std::uint64_t kSeed = 1;

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
}

void note(const std::string& text) { std::printf("         %s\n", text.c_str()); }

struct Counts {
    OpCount naive_tallied, fast_tallied, fast_call_tallied;
    OpCount naive_declared, fast_declared, pre_declared;
};

Counts measure_counts() {
    Counts c;
    c.naive_tallied = count_operations(Engine::naive);
    c.fast_tallied = count_operations(Engine::fast, true);
    c.fast_call_tallied = count_operations(Engine::fast, false);
    Mcg64 rng(kSeed);
    const auto a = random_real_number(rng);
    const auto b = random_real_number(rng);
    mul_naive(a, b, &c.naive_declared);
    const auto pipeline = build_pipeline(b, &c.pre_declared);
    c.fast_declared = c.pre_declared;
    pipeline.apply(a, &c.fast_declared);
    return c;
}

void criterion_1(const Counts& c) {
    const bool ok = c.naive_tallied.multiplications == 1024 && c.naive_declared.multiplications == 1024 &&
                    c.fast_tallied.multiplications == 512 && c.fast_declared.multiplications == 512;
    report(1, ok, "multiplication count",
           "naive " + std::to_string(c.naive_tallied.multiplications) + ", fast " +
               std::to_string(c.fast_tallied.multiplications) + " (instrumented; declared " +
               std::to_string(c.naive_declared.multiplications) + " / " +
               std::to_string(c.fast_declared.multiplications) + ")");
}

void criterion_2(const Counts& c) {
    const bool ok = c.naive_tallied.additions == 992 && c.naive_declared.additions == 992 &&
                    c.fast_tallied.additions == 576 && c.fast_declared.additions == 576 &&
                    c.fast_call_tallied.additions == 544 && c.pre_declared == OpCount{0, 32};
    report(2, ok, "addition count",
           "naive " + std::to_string(c.naive_tallied.additions) + ", fast " +
               std::to_string(c.fast_tallied.additions) + " = " + std::to_string(c.fast_call_tallied.additions) +
               " pipeline + " + std::to_string(c.pre_declared.additions) + " c-vector");
}

void criterion_3(const Counts& c) {
    const auto naive = c.naive_tallied.total();
    const auto fast = c.fast_tallied.total();
    // Reduction in tenths of a percent, rounded to nearest: 928/2016 -> 460.
    const auto saved = naive - fast;
    const auto tenths = (saved * 2000 + naive) / (2 * naive);
    const bool ok = naive == 2016 && fast == 1088 && tenths == 460;
    report(3, ok, "total reduction",
           "1 - " + std::to_string(fast) + "/" + std::to_string(naive) + " = " + std::to_string(tenths / 10) + "." +
               std::to_string(tenths % 10) + "%");
}

void criterion_4() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t basis_ok = 0;
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            const auto a = KaluzaNumber::basis(i);
            const auto b = KaluzaNumber::basis(j);
            const auto want = oracle::product(kaluza_table(), a, b);
            basis_ok += (mul_fast(a, b) == want && mul_naive(a, b) == want) ? 1 : 0;
        }
    }
    Mcg64 rng(kSeed);
    std::size_t int_ok = 0;
    for (std::size_t t = 0; t < kRandomTrials; ++t) {
        const auto a = random_integer_number(rng, 1024);
        const auto b = random_integer_number(rng, 1024);
        const auto naive = mul_naive(a, b);
        int_ok += (mul_fast(a, b) == naive && naive == oracle::product(kaluza_table(), a, b)) ? 1 : 0;
    }
    double worst = 0.0;
    for (std::size_t t = 0; t < kRandomTrials; ++t) {
        const auto a = random_real_number(rng);
        const auto b = random_real_number(rng);
        worst = std::max(worst, oracle::relative_error(mul_fast(a, b), mul_naive(a, b)));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = basis_ok == kTableSize && int_ok == kRandomTrials && worst <= kRealRelativeTolerance &&
                    seconds < kTimeLimitSeconds;
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "basis %zu/1024 and integers %zu/%zu bit-exact; reals max rel err %.2e (<= %.0e); %.2f s",
                  basis_ok, int_ok, kRandomTrials, worst, kRealRelativeTolerance, seconds);
    report(4, ok, "oracle equivalence", detail);
}

void criterion_5() {
    double worst = 0.0;
    auto check = [&](const KaluzaNumber& b) {
        const DenseMatrix chain = build_pipeline(b).materialize();
        const auto ref = oracle::mul_matrix(kaluza_table(), b);
        for (std::size_t r = 0; r < kDim; ++r) {
            for (std::size_t c = 0; c < kDim; ++c) {
                worst = std::max(worst, std::abs(chain(r, c) - ref[r * kDim + c]));
            }
        }
    };
    for (std::size_t j = 0; j < kDim; ++j) check(KaluzaNumber::basis(j));
    Mcg64 rng(kSeed + 1);
    for (std::size_t t = 0; t < kRandomOperands; ++t) check(random_real_number(rng));
    char detail[160];
    std::snprintf(detail, sizeof detail, "32 basis + %zu random b, max entry difference %.2e (<= %.0e)",
                  kRandomOperands, worst, kFactorizationTolerance);
    report(5, worst <= kFactorizationTolerance, "factorization identity", detail);
}

std::array<int, kDim> listed_zero_based() {
    std::array<int, kDim> p{};
    for (std::size_t i = 0; i < kDim; ++i) p[i] = oracle::kListedPermutation[i] - 1;
    return p;
}

void criterion_6() {
    // Symbolic B[k][i] = sign * b_j for e_i e_j = sign * e_k, read off the table.
    std::array<std::array<int, kDim>, kDim> sym{};  // +-(j + 1)
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            const auto e = kaluza_table()(i, j);
            sym[e.index][i] = e.sign * static_cast<int>(j + 1);
        }
    }
    const auto p = listed_zero_based();
    auto at = [&](std::size_t r, std::size_t c) { return sym[p[r]][p[c]]; };
    std::size_t good = 0;
    for (std::size_t r = 0; r < 16; ++r) {
        for (std::size_t k = 0; k < 16; ++k) {
            good += (at(2 * r, 2 * k) == at(2 * r + 1, 2 * k + 1) && at(2 * r, 2 * k + 1) == at(2 * r + 1, 2 * k))
                        ? 1
                        : 0;
        }
    }
    const bool library_agrees =
        non_bisymmetric_blocks(permute_symbolic(symbolic_mul_matrix(), kaluza_permutation())).empty();
    report(6, good == 256 && library_agrees, "bisymmetry",
           std::to_string(good) + "/256 blocks of the permuted symbolic matrix");
}

void criterion_7() {
    const auto p = listed_zero_based();
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < kDim; ++i) fixed += p[p[i]] == static_cast<int>(i) ? 1 : 0;
    bool same = true;
    for (std::size_t i = 0; i < kDim; ++i) same = same && kaluza_permutation()[i] == p[i];
    report(7, fixed == kDim && same && kaluza_permutation().is_involution(), "involution",
           "p(p(i)) = i for " + std::to_string(fixed) + "/32 indices");
}

void criterion_8() {
    std::vector<std::string> lines;
    const auto& typeset = printed::cayley_table();
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            if (typeset[i * kDim + j] != kaluza_table()(i, j)) {
                lines.push_back("table e" + std::to_string(i) + "*e" + std::to_string(j) + ": embedded " +
                                format_symbol(kaluza_table()(i, j)) + ", printed " +
                                format_symbol(typeset[i * kDim + j]));
            }
        }
    }
    for (const auto& m : compare_printed_blocks()) {
        lines.push_back("B32[" + std::to_string(m.row) + "][" + std::to_string(m.column) + "]: derived " +
                        format_coefficient(m.derived) + ", printed " + format_coefficient(m.printed));
    }
    for (const auto& m : compare_printed_permuted_blocks()) {
        lines.push_back("permuted B32[" + std::to_string(m.row) + "][" + std::to_string(m.column) + "]: derived " +
                        format_coefficient(m.derived) + ", printed " + format_coefficient(m.printed));
    }
    for (const auto& m : compare_printed_diagonal()) {
        lines.push_back("s" + std::to_string(m.entry) + "^(" + std::to_string(m.block) + "): derived " +
                        format_coefficient(m.derived, 'c') + ", printed " + format_coefficient(m.printed, 'c'));
    }
    // The report itself is the deliverable; mismatches are warnings.
    report(8, true, "fixture concordance",
           lines.empty() ? "no mismatches"
                         : std::to_string(lines.size()) + " mismatches reported (warning; the table is authoritative)");
    for (const auto& l : lines) note("WARN " + l);
}

void criterion_9() {
    bool ok = validate_table(kaluza_table()).empty();
    for (std::size_t line = 0; line < kDim; ++line) {
        std::array<int, kDim> row_seen{}, col_seen{};
        for (std::size_t k = 0; k < kDim; ++k) {
            const auto r = kaluza_table()(line, k);
            const auto c = kaluza_table()(k, line);
            ok = ok && (r.sign == 1 || r.sign == -1) && (c.sign == 1 || c.sign == -1);
            ++row_seen[r.index];
            ++col_seen[c.index];
        }
        for (std::size_t k = 0; k < kDim; ++k) ok = ok && row_seen[k] == 1 && col_seen[k] == 1;
        ok = ok && kaluza_table()(0, line) == SignedIndex{1, static_cast<std::uint8_t>(line)};
        ok = ok && kaluza_table()(line, 0) == SignedIndex{1, static_cast<std::uint8_t>(line)};
        ok = ok && kaluza_table()(line, line).index == 0;
    }
    report(9, ok, "cayley table validity",
           "identity row/column, 32 + 32 signed permutations, e_i e_i = +-1 for all i");
}

}  // namespace

int main() {
    std::printf("acceptance: isa %s, seed %llu\n", std::string(kernels::to_string(kernels::active_isa())).c_str(),
                static_cast<unsigned long long>(kSeed));
    const Counts c = measure_counts();
    criterion_1(c);
    criterion_2(c);
    criterion_3(c);
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "kaluza/cayley.hpp"
#include "kaluza/errors.hpp"
#include "kaluza/fastmul.hpp"
#include "kaluza/kernels/dispatch.hpp"
#include "kaluza/linops.hpp"
#include "kaluza/printed.hpp"
#include "kaluza/rng.hpp"
#include "kaluza/text_io.hpp"

namespace kaluza::cli {

namespace {

bool looks_like_symbol(std::string_view t) {
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
    if (t == "1") return true;
    return t.size() >= 2 && t.front() == 'e' &&
           std::all_of(t.begin() + 1, t.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot read operand file '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

double relative_error(const KaluzaNumber& got, const KaluzaNumber& want) {
    double diff = 0.0;
    double norm = 0.0;
    for (std::size_t k = 0; k < kDim; ++k) {
        diff = std::max(diff, std::abs(got[k] - want[k]));
        norm = std::max(norm, std::abs(want[k]));
    }
    return norm == 0.0 ? diff : diff / norm;
}

double max_abs_diff(const KaluzaNumber& x, const KaluzaNumber& y) {
    double d = 0.0;
    for (std::size_t k = 0; k < kDim; ++k) {
        d = std::max(d, std::abs(x[k] - y[k]));
    }
    return d;
}

KaluzaNumber multiply(Engine engine, const KaluzaNumber& a, const KaluzaNumber& b) {
    switch (engine) {
        case Engine::naive: return mul_naive(a, b);
        case Engine::dense: return mul_dense(a, build_mul_matrix(b));
        case Engine::fast: return mul_fast(a, b);
    }
    return {};
}

// ---------------------------------------------------------------- multiply

int cmd_multiply(const std::string& left, const std::string& right, const std::string& engine,
                 std::ostream& out) {
    const KaluzaNumber a = resolve_operand(left);
    const KaluzaNumber b = resolve_operand(right);
    if (engine == "both") {
        const KaluzaNumber x = mul_naive(a, b);
        const KaluzaNumber y = mul_fast(a, b);
        out << format_number(x) << '\n' << format_number(y) << '\n';
        out << "max abs difference: " << max_abs_diff(x, y) << '\n';
        return kExitOk;
    }
    out << format_number(multiply(*parse_engine(engine), a, b)) << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------ verify

class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void pass(std::string_view section, const std::string& detail) { line("PASS", section, detail); }
    void fail(std::string_view section, const std::string& detail) {
        ++failed_;
        line("FAIL", section, detail);
    }
    void warn(std::string_view section, const std::string& detail) {
        ++warnings_;
        line("WARN", section, detail);
    }
    void check(bool ok, std::string_view section, const std::string& detail) {
        ok ? pass(section, detail) : fail(section, detail);
    }
    void note(const std::string& text) { out_ << "       " << text << '\n'; }

    int finish() {
        out_ << "summary: " << passed_ << " passed, " << warnings_ << " warnings, " << failed_ << " failed\n";
        return failed_ == 0 ? kExitOk : kExitFailure;
    }

private:
    void line(std::string_view tag, std::string_view section, const std::string& detail) {
        if (tag == "PASS") ++passed_;
        out_ << '[' << tag << "] " << section << ": " << detail << '\n';
    }

    std::ostream& out_;
    int passed_ = 0;
    int warnings_ = 0;
    int failed_ = 0;
};

void verify_table(Report& r) {
    const auto violations = validate_table(kaluza_table());
    if (violations.empty()) {
        r.pass("cayley table", "identity row and column, 64 signed permutations, 32 scalar squares");
    } else {
        r.fail("cayley table", std::to_string(violations.size()) + " violations");
        for (const auto& v : violations) {
            r.note("(" + std::to_string(v.row) + ", " + std::to_string(v.column) + "): " +
                   std::string(to_string(v.rule)));
        }
    }
    const auto assoc = associativity_violations(kaluza_table());
    r.check(assoc.empty(), "associativity",
            std::to_string(kDim * kDim * kDim - assoc.size()) + "/32768 basis triples associate");
}

void verify_structure(Report& r) {
    const Permutation32& p = kaluza_permutation();
    r.check(p.is_involution(), "permutation", "involution on 32 indices");

    const auto bad = non_bisymmetric_blocks(permute_symbolic(symbolic_mul_matrix(), p));
    r.check(bad.empty(), "bisymmetry",
            std::to_string(kBlocks * kBlocks - bad.size()) + "/256 blocks of the permuted matrix");
    for (const auto& [row, col] : bad) {
        r.note("block (" + std::to_string(row) + ", " + std::to_string(col) + ")");
    }
}

void verify_basis_pairs(Report& r) {
    std::size_t ok = 0;
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            const auto a = KaluzaNumber::basis(i);
            const auto b = KaluzaNumber::basis(j);
            const auto want = mul_naive(a, b);
            const auto expected = basis_mul(i, j);
            const auto pipeline = build_pipeline(b);
            const bool good = want == KaluzaNumber::basis(expected.index, expected.sign) &&
                              mul_dense(a, build_mul_matrix(b)) == want && pipeline.apply(a) == want &&
                              pipeline.apply_staged(a) == want;
            ok += good ? 1 : 0;
        }
    }
    r.check(ok == kTableSize, "basis pairs", std::to_string(ok) + "/1024 bit-exact (naive, dense, fast, staged)");
}

void verify_factorization(Report& r, Mcg64& rng) {
    double worst = 0.0;
    std::size_t count = 0;
    auto run = [&](const KaluzaNumber& b) {
        worst = std::max(worst, max_abs_difference(build_pipeline(b).materialize(), to_dense(build_mul_matrix(b))));
        ++count;
    };
    for (std::size_t j = 0; j < kDim; ++j) run(KaluzaNumber::basis(j));
    for (int t = 0; t < 20; ++t) run(random_real_number(rng));
    r.check(worst <= 1e-12, "factorization identity",
            std::to_string(count) + " operands (32 basis, 20 random), max |difference| " + format_sci(worst));
}

void verify_counts(Report& r) {
    const OpCount naive = count_operations(Engine::naive);
    const OpCount dense = count_operations(Engine::dense);
    const OpCount fast = count_operations(Engine::fast, true);
    const OpCount fast_call = count_operations(Engine::fast, false);

    // Costs declared by the stages must agree with the instrumented ones.
    const auto a = KaluzaNumber::basis(3, 2.0);
    const auto b = KaluzaNumber::basis(17, -3.0);
    OpCount declared_naive;
    OpCount declared_dense;
    OpCount declared_fast;
    OpCount declared_staged;
    mul_naive(a, b, &declared_naive);
    mul_dense(a, build_mul_matrix(b), &declared_dense);
    mul_fast(a, b, &declared_fast);
    const auto pipeline = build_pipeline(b, &declared_staged);
    pipeline.apply_staged(a, &declared_staged);

    const bool ok = naive == OpCount{1024, 992} && dense == naive && fast == OpCount{512, 576} &&
                    fast_call == OpCount{512, 544} && declared_naive == naive && declared_dense == dense &&
                    declared_fast == fast && declared_staged == fast;
    std::ostringstream line;
    line << "naive: " << naive << "; fast: " << fast;
    r.check(ok, "operation counts", line.str());
    r.note("fast per call with the right operand prepared: " + [&] {
        std::ostringstream s;
        s << fast_call;
        return s.str();
    }());

    const auto naive_total = naive.total();
    const auto fast_total = fast.total();
    const long permille = std::lround(1000.0 * (1.0 - static_cast<double>(fast_total) / static_cast<double>(naive_total)));
    std::ostringstream red;
    red << fast_total << '/' << naive_total << " operations, " << permille / 10 << '.' << permille % 10
        << "% fewer";
    r.check(naive_total == 2016 && fast_total == 1088 && permille == 460, "reduction", red.str());
}

void verify_random(Report& r, Mcg64& rng, std::size_t trials) {
    std::size_t exact = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto a = random_integer_number(rng);
        const auto b = random_integer_number(rng);
        exact += mul_fast(a, b) == mul_naive(a, b) ? 1 : 0;
    }
    r.check(exact == trials, "random integers",
            std::to_string(exact) + "/" + std::to_string(trials) + " bit-exact (|coeff| <= " +
                std::to_string(kIntegerBound) + ")");

    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto a = random_real_number(rng);
        const auto b = random_real_number(rng);
        worst = std::max(worst, relative_error(mul_fast(a, b), mul_naive(a, b)));
    }
    r.check(worst <= 1e-12, "random reals",
            std::to_string(trials) + " pairs, max relative error " + format_sci(worst) + " (limit 1e-12)");
}

void verify_kernels(Report& r, Mcg64& rng) {
    using kernels::Isa;
    const auto& ref = kernels::kernel_set(Isa::scalar);
    std::string names = "scalar";
    bool ok = true;
    for (Isa isa : kernels::available_isas()) {
        if (isa == Isa::scalar) continue;
        names += ", " + std::string(kernels::to_string(isa));
        const auto& k = kernels::kernel_set(isa);
        for (int t = 0; t < 64; ++t) {
            const auto x = random_real_number(rng);
            const auto m = build_mul_matrix(random_real_number(rng));
            std::array<double, kDiagonalSize> d{};
            for (auto& v : d) v = rng.symmetric();
            std::array<double, kDim> y0{}, y1{};
            ref.matvec32(m.column_major().data(), x.coeffs().data(), y0.data());
            k.matvec32(m.column_major().data(), x.coeffs().data(), y1.data());
            ok = ok && y0 == y1;
            ref.diag_fan_in(x.coeffs().data(), d.data(), y0.data());
            k.diag_fan_in(x.coeffs().data(), d.data(), y1.data());
            ok = ok && y0 == y1;
            ref.hadamard_pairs(x.coeffs().data(), y0.data(), kDim / 2);
            k.hadamard_pairs(x.coeffs().data(), y1.data(), kDim / 2);
            ok = ok && y0 == y1;
            std::array<double, kDiagonalSize> z0{}, z1{};
            ref.replicate_pairs(x.coeffs().data(), z0.data(), kDim / 2, kBlocks);
            k.replicate_pairs(x.coeffs().data(), z1.data(), kDim / 2, kBlocks);
            ok = ok && z0 == z1;
            ref.scale(z0.data(), d.data(), z0.data(), kDiagonalSize);
            k.scale(z1.data(), d.data(), z1.data(), kDiagonalSize);
            ok = ok && z0 == z1;
            ref.fan_in(z0.data(), y0.data(), kBlocks, kDim);
            k.fan_in(z1.data(), y1.data(), kBlocks, kDim);
            ok = ok && y0 == y1;
        }
    }
    r.check(ok, "kernels", names + " bit-identical");
}

std::string describe(const SymbolMismatch& m, std::string_view what) {
    return std::string(what) + "[" + std::to_string(m.row) + "][" + std::to_string(m.column) + "]: derived " +
           format_coefficient(m.derived) + ", printed " + format_coefficient(m.printed);
}

void verify_fixtures(Report& r) {
    std::vector<std::string> lines;

    const auto& typeset = printed::cayley_table();
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            const auto p = typeset[i * kDim + j];
            if (p != kaluza_table()(i, j)) {
                lines.push_back("table e" + std::to_string(i) + "*e" + std::to_string(j) + ": embedded " +
                                format_symbol(kaluza_table()(i, j)) + ", printed " + format_symbol(p));
            }
        }
    }
    for (const auto& m : compare_printed_blocks()) lines.push_back(describe(m, "B32"));
    for (const auto& m : compare_printed_permuted_blocks()) lines.push_back(describe(m, "permuted B32"));
    for (const auto& m : compare_printed_diagonal()) {
        lines.push_back("s" + std::to_string(m.entry) + "^(" + std::to_string(m.block) + "): derived " +
                        format_coefficient(m.derived, 'c') + ", printed " + format_coefficient(m.printed, 'c'));
    }
    const auto& pairs = printed::c_pairs();
    const auto& p = kaluza_permutation();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pairs[k].first != p[2 * k] || pairs[k].second != p[2 * k + 1]) {
            lines.push_back("c" + std::to_string(2 * k) + " pairing: derived (b" + std::to_string(p[2 * k]) +
                            ", b" + std::to_string(p[2 * k + 1]) + "), printed (b" +
                            std::to_string(pairs[k].first) + ", b" + std::to_string(pairs[k].second) + ")");
        }
    }

    if (lines.empty()) {
        r.pass("fixtures", "printed table, B32, permuted B32, s-tables and c pairing all agree");
        return;
    }
    r.warn("fixtures", std::to_string(lines.size()) + " mismatches against printed data (embedded table is authoritative)");
    for (const auto& l : lines) r.note(l);
}

int cmd_verify(std::size_t trials, std::uint64_t seed, std::ostream& out) {
    out << "kaluza verify: trials=" << trials << " seed=" << seed
        << " isa=" << kernels::to_string(kernels::active_isa()) << '\n';
    Report report(out);
    Mcg64 rng(seed);
    verify_table(report);
    verify_structure(report);
    verify_basis_pairs(report);
    verify_factorization(report, rng);
    verify_counts(report);
    verify_random(report, rng, trials);
    verify_kernels(report, rng);
    verify_fixtures(report);
    return report.finish();
}

// ------------------------------------------------------------------- bench

struct BenchRecord {
    std::string engine;
    std::string mode;
    std::size_t reps = 0;
    std::int64_t total_ns = 0;
    double mean_ns = 0.0;
    OpCount ops;
};

template <class F>
BenchRecord time_it(std::string engine, std::string mode, std::size_t reps, OpCount ops, F&& body) {
    volatile double sink = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(reps, 64); ++i) sink = sink + body(i);
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < reps; ++i) sink = sink + body(i);
    const auto stop = std::chrono::steady_clock::now();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    return {std::move(engine), std::move(mode), reps, ns, static_cast<double>(ns) / static_cast<double>(reps), ops};
}

int cmd_bench(std::size_t reps, std::uint64_t seed, const std::string& format, std::ostream& out) {
    constexpr std::size_t kPool = 64;
    Mcg64 rng(seed);
    std::vector<KaluzaNumber> as, bs;
    for (std::size_t i = 0; i < kPool; ++i) {
        as.push_back(random_real_number(rng));
        bs.push_back(random_real_number(rng));
    }
    const OpCount naive_ops = count_operations(Engine::naive);
    const OpCount dense_ops = count_operations(Engine::dense);
    const OpCount fast_ops = count_operations(Engine::fast, true);

    const auto pipeline = build_pipeline(bs[0]);
    const auto matrix = build_mul_matrix(bs[0]);
    std::vector<BenchRecord> records;
    records.push_back(time_it("naive", "direct", reps, naive_ops,
                              [&](std::size_t i) { return mul_naive(as[i % kPool], bs[i % kPool])[i % kDim]; }));
    records.push_back(time_it("dense", "reuse", reps, dense_ops,
                              [&](std::size_t i) { return mul_dense(as[i % kPool], matrix)[i % kDim]; }));
    records.push_back(time_it("dense", "rebuild", reps, dense_ops, [&](std::size_t i) {
        return mul_dense(as[i % kPool], build_mul_matrix(bs[i % kPool]))[i % kDim];
    }));
    records.push_back(time_it("fast", "reuse", reps, fast_ops,
                              [&](std::size_t i) { return pipeline.apply(as[i % kPool])[i % kDim]; }));
    records.push_back(time_it("fast", "rebuild", reps, fast_ops,
                              [&](std::size_t i) { return mul_fast(as[i % kPool], bs[i % kPool])[i % kDim]; }));

    if (format == "csv") {
        out << "engine,mode,reps,total_ns,mean_ns,muls,adds\n";
        for (const auto& r : records) {
            out << r.engine << ',' << r.mode << ',' << r.reps << ',' << r.total_ns << ',' << std::fixed
                << std::setprecision(2) << r.mean_ns << ',' << r.ops.multiplications << ',' << r.ops.additions
                << '\n';
        }
        return kExitOk;
    }

    out << "isa " << kernels::to_string(kernels::active_isa()) << ", " << reps << " repetitions, seed " << seed
        << '\n';
    out << std::left << std::setw(7) << "engine" << std::setw(9) << "mode" << std::right << std::setw(14)
        << "total_ns" << std::setw(11) << "mean_ns" << std::setw(7) << "muls" << std::setw(7) << "adds" << '\n';
    for (const auto& r : records) {
        out << std::left << std::setw(7) << r.engine << std::setw(9) << r.mode << std::right << std::setw(14)
            << r.total_ns << std::setw(11) << std::fixed << std::setprecision(1) << r.mean_ns << std::setw(7)
            << r.ops.multiplications << std::setw(7) << r.ops.additions << '\n';
    }
    out << "muls/adds are per complete product; reuse mode spends the 32 c-vector additions once\n";
    out << std::setprecision(3) << "fast/naive wall-clock ratio: reuse " << records[3].mean_ns / records[0].mean_ns
        << ", rebuild " << records[4].mean_ns / records[0].mean_ns << '\n';
    return kExitOk;
}

// -------------------------------------------------------------------- dump

std::string symbolic_grid(const SymbolicMatrix& m, char letter) {
    std::ostringstream out;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            out << (c == 0 ? "" : " ") << std::setw(4) << format_coefficient(m[r * kDim + c], letter);
        }
        out << '\n';
    }
    return out.str();
}

int cmd_dump(const std::string& what, const std::optional<std::string>& quadrant,
             const std::optional<std::string>& operand, bool symbolic, std::ostream& out, std::ostream& err) {
    std::optional<KaluzaNumber> b;
    if (operand) b = resolve_operand(*operand);

    if (what == "table" || what == "table-quadrant") {
        if (quadrant) {
            const auto q = parse_quadrant(*quadrant);
            if (!q) {
                err << "error: unknown quadrant '" << *quadrant << "' (expected NW, NE, SW or SE)\n";
                return kExitUsage;
            }
            out << dump_table(kaluza_table(), *q);
            return kExitOk;
        }
        for (Quadrant q : {Quadrant::nw, Quadrant::ne, Quadrant::sw, Quadrant::se}) {
            out << "# " << to_string(q) << '\n' << dump_table(kaluza_table(), q);
        }
        return kExitOk;
    }

    if (what == "mul-matrix") {
        if (symbolic) {
            out << symbolic_grid(symbolic_mul_matrix(), 'b');
            return kExitOk;
        }
        if (!b) {
            err << "error: dump mul-matrix needs --operand (or --symbolic)\n";
            return kExitUsage;
        }
        out << to_dense(build_mul_matrix(*b)).to_text();
        return kExitOk;
    }

    if (what == "diagonal") {
        const auto& spec = kaluza_diagonal_spec();
        if (symbolic) {
            for (std::size_t k = 0; k < kBlocks; ++k) {
                for (std::size_t m = 0; m < kDim; ++m) {
                    out << (m == 0 ? "" : " ") << format_coefficient(spec.entry(k, m), 'c');
                }
                out << '\n';
            }
            return kExitOk;
        }
        if (!b) {
            err << "error: dump diagonal needs --operand (or --symbolic)\n";
            return kExitUsage;
        }
        const auto pipeline = build_pipeline(*b);
        DenseMatrix rows(kBlocks, kDim);
        for (std::size_t k = 0; k < kBlocks; ++k) {
            for (std::size_t m = 0; m < kDim; ++m) rows(k, m) = pipeline.diagonal()[k * kDim + m];
        }
        out << rows.to_text();
        return kExitOk;
    }

    // factors: every stage of the factorized product as a dense matrix. The
    // diagonal stage depends on the right operand and is printed as its 512
    // values, only when an operand is given.
    const auto pipeline = build_pipeline(b.value_or(KaluzaNumber::one()));
    const auto stages = pipeline.stages();
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const auto& s = stages[i];
        out << "# stage " << i << ": " << s.name() << '\n';
        if (s.kind() == StageKind::diagonal) {
            if (!b) {
                out << "# needs --operand\n";
                continue;
            }
            const auto& v = std::get<DiagonalStage>(s.get()).values;
            DenseMatrix row(1, v.size());
            for (std::size_t k = 0; k < v.size(); ++k) row(0, k) = v[k];
            out << row.to_text();
            continue;
        }
        out << materialize(s).to_text();
    }
    return kExitOk;
}

}  // namespace

KaluzaNumber resolve_operand(std::string_view text) {
    if (looks_like_symbol(text)) {
        const auto s = parse_symbol(text);
        return KaluzaNumber::basis(s.index, s.sign);
    }
    const bool inline_list = text.find_first_of(" \t\n,") != std::string_view::npos;
    std::string source;
    std::string body;
    if (inline_list) {
        source = "inline operand";
        body = std::string(text);
        std::replace(body.begin(), body.end(), ',', ' ');
    } else {
        source = std::string(text);
        body = read_file(std::filesystem::path(source));
    }
    try {
        return parse_number(body);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), source + ": " + e.what());
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kaluza number multiplication: naive, dense and factorized engines"};
    app.name("kaluza");
    app.require_subcommand(1);

    std::string isa_name;
    app.add_option("--isa", isa_name, "Kernel set: scalar, avx2 or neon (default: best available)")
        ->check(CLI::IsMember({"scalar", "avx2", "neon"}));

    auto* multiply_cmd = app.add_subcommand("multiply", "Print the product a * b");
    std::string left, right, engine = "fast";
    multiply_cmd->add_option("left", left, "Left operand: file, basis symbol (e5, -e5, 1) or 32 inline numbers")
        ->required();
    multiply_cmd->add_option("right", right, "Right operand, same forms")->required();
    multiply_cmd->add_option("--engine", engine, "naive, dense, fast or both")
        ->check(CLI::IsMember({"naive", "dense", "fast", "both"}))
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Run every consistency check and print a report");
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    verify_cmd->add_option("--trials", trials, "Random operand pairs per mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "Time the engines");
    std::size_t reps = 100000;
    std::string format = "text";
    bench_cmd->add_option("--reps", reps, "Multiplications per engine and mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    bench_cmd->add_option("--format", format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();

    auto* dump_cmd = app.add_subcommand("dump", "Print the table, matrices or factors");
    std::string what;
    std::optional<std::string> quadrant, operand;
    bool symbolic = false;
    dump_cmd->add_option("what", what, "table, mul-matrix, factors or diagonal")
        ->required()
        ->check(CLI::IsMember({"table", "table-quadrant", "mul-matrix", "factors", "diagonal"}));
    dump_cmd->add_option("--quadrant", quadrant, "NW, NE, SW or SE (table only; default all four)");
    dump_cmd->add_option("--operand", operand, "Right operand b, same forms as multiply");
    dump_cmd->add_flag("--symbolic", symbolic, "Symbolic b_j / c_m entries instead of values");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    }

    try {
        if (!isa_name.empty()) {
            kernels::select_isa(*kernels::parse_isa(isa_name));
        }
        if (multiply_cmd->parsed()) return cmd_multiply(left, right, engine, out);
        if (verify_cmd->parsed()) return cmd_verify(trials, seed, out);
        if (bench_cmd->parsed()) return cmd_bench(reps, seed, format, out);
        return cmd_dump(what, quadrant, operand, symbolic, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace kaluza::cli

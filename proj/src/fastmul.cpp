#include "kaluza/fastmul.hpp"

#include <bitset>

#include "kaluza/errors.hpp"
#include "kaluza/kernels/dispatch.hpp"
#include "kaluza/printed.hpp"

namespace kaluza {

CVector compute_c(const KaluzaNumber& b, OpCount* counter, const Permutation32& p) {
    CVector c;
    c.values = p.apply<double>(b.coeffs(), Direction::forward);
    hadamard_pairs(c.values, c.values, counter);
    for (auto& v : c.values) {
        v *= 0.5;
    }
    return c;
}

bool DiagonalSpec::references_every_c() const noexcept {
    std::bitset<kDim> seen;
    for (const auto& block : blocks) {
        for (const auto& s : block) {
            seen.set(s.index);
        }
    }
    return seen.all();
}

SymbolicMatrix permute_symbolic(const SymbolicMatrix& m, const Permutation32& p) {
    SymbolicMatrix out{};
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            out[r * kDim + c] = m[p[r] * kDim + p[c]];
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> non_bisymmetric_blocks(const SymbolicMatrix& permuted) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    auto at = [&](std::size_t r, std::size_t c) { return permuted[r * kDim + c]; };
    for (std::size_t r = 0; r < kBlocks; ++r) {
        for (std::size_t k = 0; k < kBlocks; ++k) {
            const bool diagonal_equal = at(2 * r, 2 * k) == at(2 * r + 1, 2 * k + 1);
            const bool anti_equal = at(2 * r, 2 * k + 1) == at(2 * r + 1, 2 * k);
            if (!diagonal_equal || !anti_equal) {
                out.emplace_back(r, k);
            }
        }
    }
    return out;
}

namespace {

// Integer linear form over b_0..b_31, scaled by two so that halves stay integral.
using Form = std::array<int, kDim>;

// 2 c_m as forms, obtained by running the scalar c_vector on each basis vector.
std::array<Form, kDim> doubled_c_forms(const Permutation32& p) {
    std::array<Form, kDim> forms{};
    for (std::size_t j = 0; j < kDim; ++j) {
        const auto c = c_vector<double>(KaluzaNumber::basis(j).coeffs(), p);
        for (std::size_t m = 0; m < kDim; ++m) {
            forms[m][j] = static_cast<int>(2.0 * c[m]);
        }
    }
    return forms;
}

std::optional<SignedIndex> match_c(const Form& f, const std::array<Form, kDim>& forms) {
    for (std::size_t m = 0; m < kDim; ++m) {
        bool plus = true;
        bool minus = true;
        for (std::size_t j = 0; j < kDim; ++j) {
            plus = plus && f[j] == forms[m][j];
            minus = minus && f[j] == -forms[m][j];
        }
        if (plus) return SignedIndex{1, static_cast<std::uint8_t>(m)};
        if (minus) return SignedIndex{-1, static_cast<std::uint8_t>(m)};
    }
    return std::nullopt;
}

}  // namespace

DiagonalSpec derive_diagonal_spec(const CayleyTable& table, const Permutation32& p) {
    const SymbolicMatrix permuted = permute_symbolic(symbolic_mul_matrix(table), p);
    if (const auto bad = non_bisymmetric_blocks(permuted); !bad.empty()) {
        throw StructureError(bad.front().first, bad.front().second);
    }
    const auto forms = doubled_c_forms(p);

    DiagonalSpec spec;
    for (std::size_t r = 0; r < kBlocks; ++r) {
        for (std::size_t k = 0; k < kBlocks; ++k) {
            const SignedIndex x = permuted[2 * r * kDim + 2 * k];
            const SignedIndex y = permuted[2 * r * kDim + 2 * k + 1];
            Form sum{};
            Form diff{};
            sum[x.index] += x.sign;
            sum[y.index] += y.sign;
            diff[x.index] += x.sign;
            diff[y.index] -= y.sign;
            for (int t = 0; t < 2; ++t) {
                const auto hit = match_c(t == 0 ? sum : diff, forms);
                if (!hit) {
                    throw DerivationError("block (" + std::to_string(r) + ", " + std::to_string(k) + "): " +
                                          (t == 0 ? "half-sum" : "half-difference") + " of " +
                                          format_coefficient(x) + " and " + format_coefficient(y) +
                                          " is not +-c_m");
                }
                spec.blocks[k][2 * r + t] = *hit;
            }
        }
    }
    return spec;
}

const DiagonalSpec& kaluza_diagonal_spec() {
    static const DiagonalSpec spec = derive_diagonal_spec();
    return spec;
}

std::vector<DiagonalMismatch> compare_printed_diagonal(const DiagonalSpec& spec) {
    std::vector<DiagonalMismatch> out;
    const auto& printed = printed::diagonal_tables();
    for (std::size_t k = 0; k < kBlocks; ++k) {
        for (std::size_t m = 0; m < kDim; ++m) {
            if (spec.blocks[k][m] != printed[k][m]) {
                out.push_back({k, m, spec.blocks[k][m], printed[k][m]});
            }
        }
    }
    return out;
}

std::vector<SymbolMismatch> compare_printed_permuted_blocks(const CayleyTable& table) {
    return compare_symbolic(permute_symbolic(symbolic_mul_matrix(table), kaluza_permutation()),
                            printed::permuted_mul_matrix());
}

KaluzaNumber FactorizedPipeline::apply(const KaluzaNumber& a, OpCount* counter) const {
    const auto& k = kernels::active_kernels();
    alignas(32) auto x = permutation_.apply<double>(a.coeffs(), Direction::forward);
    k.hadamard_pairs(x.data(), x.data(), kDim / 2);
    alignas(32) std::array<double, kDim> v;
    k.diag_fan_in(x.data(), diagonal_.data(), v.data());
    k.hadamard_pairs(v.data(), v.data(), kDim / 2);
    charge(counter, kDiagonalSize, 2 * kDim + (kBlocks - 1) * kDim);
    return KaluzaNumber(permutation_.apply<double>(v, Direction::inverse));
}

std::vector<LinearStage> FactorizedPipeline::stages() const {
    std::vector<LinearStage> out;
    out.emplace_back(PermuteStage{permutation_, Direction::forward});
    out.emplace_back(HadamardStage{kBlocks});
    out.emplace_back(ReplicateStage{kBlocks, kBlocks});
    out.emplace_back(DiagonalStage{std::vector<double>(diagonal_.begin(), diagonal_.end())});
    out.emplace_back(FanInStage{kBlocks, kDim});
    out.emplace_back(HadamardStage{kBlocks});
    out.emplace_back(PermuteStage{permutation_, Direction::inverse});
    return out;
}

DenseMatrix FactorizedPipeline::materialize() const {
    const auto chain = stages();
    return kaluza::materialize(chain);
}

KaluzaNumber FactorizedPipeline::apply_staged(const KaluzaNumber& a, OpCount* counter) const {
    const auto chain = stages();
    const auto y = apply_chain(chain, a.coeffs(), counter);
    KaluzaNumber out;
    std::copy(y.begin(), y.end(), out.coeffs().begin());
    return out;
}

FactorizedPipeline build_pipeline(const KaluzaNumber& b, OpCount* counter, const DiagonalSpec& spec,
                                  const Permutation32& p) {
    const CVector c = compute_c(b, counter, p);
    return FactorizedPipeline(c, spec.materialize(c), p);
}

DenseMatrix to_dense(const MulMatrix& m) {
    DenseMatrix out(kDim, kDim);
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

KaluzaNumber mul_fast(const KaluzaNumber& a, const FactorizedPipeline& pipeline, OpCount* counter) {
    return pipeline.apply(a, counter);
}

KaluzaNumber mul_fast(const KaluzaNumber& a, const KaluzaNumber& b, OpCount* counter) {
    return build_pipeline(b, counter).apply(a, counter);
}

std::string_view to_string(Engine e) noexcept {
    switch (e) {
        case Engine::naive: return "naive";
        case Engine::dense: return "dense";
        case Engine::fast: return "fast";
    }
    return "?";
}

std::optional<Engine> parse_engine(std::string_view name) {
    for (Engine e : {Engine::naive, Engine::dense, Engine::fast}) {
        if (name == to_string(e)) {
            return e;
        }
    }
    return std::nullopt;
}

OpCount count_operations(Engine engine, bool include_preprocessing) {
    using T = Tallied<double>;
    OpCount tally;
    OpCount* const pre = include_preprocessing ? &tally : nullptr;

    std::array<T, kDim> a{};
    std::array<T, kDim> b{};
    for (std::size_t k = 0; k < kDim; ++k) {
        a[k] = T(static_cast<double>(k) + 1.0, &tally);
        b[k] = T(static_cast<double>(kDim - k) - 0.5, pre);
    }

    std::array<T, kDim> out{};
    switch (engine) {
        case Engine::naive:
            naive_product<T>(kaluza_table(), a, b, out);
            break;
        case Engine::dense: {
            std::array<T, kTableSize> colmajor{};
            const auto& table = kaluza_table();
            for (std::size_t i = 0; i < kDim; ++i) {
                for (std::size_t j = 0; j < kDim; ++j) {
                    const auto p = table(i, j);
                    colmajor[i * kDim + p.index] = p.sign > 0 ? b[j] : -b[j];
                }
            }
            kernels::scalar::matvec<T>(colmajor, a, out);
            break;
        }
        case Engine::fast: {
            const auto c = c_vector<T>(b, kaluza_permutation());
            const auto d = kaluza_diagonal_spec().materialize_as<T>(c);
            out = fast_product<T>(a, d, kaluza_permutation());
            break;
        }
    }
    return tally;
}

}  // namespace kaluza

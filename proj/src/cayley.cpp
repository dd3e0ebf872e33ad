#include "kaluza/cayley.hpp"

#include <algorithm>
#include <bitset>
#include <charconv>
#include <cctype>
#include <sstream>

namespace kaluza {

const CayleyTable& kaluza_table() {
    static const CayleyTable table(detail::kKaluzaTableEntries);
    return table;
}

BasisProduct basis_mul(std::size_t i, std::size_t j) { return kaluza_table().at(i, j); }

std::string_view to_string(TableRule rule) noexcept {
    switch (rule) {
        case TableRule::bad_entry: return "bad entry";
        case TableRule::identity_row: return "identity row";
        case TableRule::identity_column: return "identity column";
        case TableRule::row_permutation: return "row signed-permutation";
        case TableRule::column_permutation: return "column signed-permutation";
        case TableRule::diagonal_not_scalar: return "diagonal not +-1";
    }
    return "unknown";
}

std::vector<TableViolation> validate_table(const CayleyTable& table) {
    std::vector<TableViolation> report;
    auto valid_entry = [](const BasisProduct& p) {
        return (p.sign == 1 || p.sign == -1) && p.index < kDim;
    };

    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            if (!valid_entry(table(i, j))) {
                report.push_back({i, j, TableRule::bad_entry});
            }
        }
    }

    for (std::size_t k = 0; k < kDim; ++k) {
        const BasisProduct expected{1, static_cast<std::uint8_t>(k)};
        if (table(0, k) != expected) {
            report.push_back({0, k, TableRule::identity_row});
        }
        if (table(k, 0) != expected) {
            report.push_back({k, 0, TableRule::identity_column});
        }
    }

    for (std::size_t line = 0; line < kDim; ++line) {
        std::bitset<kDim> seen_in_row;
        std::bitset<kDim> seen_in_column;
        for (std::size_t pos = 0; pos < kDim; ++pos) {
            const auto row_index = table(line, pos).index;
            if (row_index < kDim) {
                if (seen_in_row.test(row_index)) {
                    report.push_back({line, pos, TableRule::row_permutation});
                }
                seen_in_row.set(row_index);
            }
            const auto column_index = table(pos, line).index;
            if (column_index < kDim) {
                if (seen_in_column.test(column_index)) {
                    report.push_back({pos, line, TableRule::column_permutation});
                }
                seen_in_column.set(column_index);
            }
        }
    }

    for (std::size_t i = 0; i < kDim; ++i) {
        if (table(i, i).index != 0) {
            report.push_back({i, i, TableRule::diagonal_not_scalar});
        }
    }
    return report;
}

std::vector<std::array<std::uint8_t, 3>> associativity_violations(const CayleyTable& table) {
    auto mul = [&](SignedIndex a, SignedIndex b) {
        const auto p = table(a.index, b.index);
        return SignedIndex{static_cast<std::int8_t>(a.sign * b.sign * p.sign), p.index};
    };
    std::vector<std::array<std::uint8_t, 3>> out;
    for (std::uint8_t i = 0; i < kDim; ++i) {
        for (std::uint8_t j = 0; j < kDim; ++j) {
            const auto ij = table(i, j);
            for (std::uint8_t k = 0; k < kDim; ++k) {
                const auto left = mul(ij, SignedIndex{1, k});
                const auto right = mul(SignedIndex{1, i}, table(j, k));
                if (left != right) {
                    out.push_back({i, j, k});
                }
            }
        }
    }
    return out;
}

std::optional<Quadrant> parse_quadrant(std::string_view name) {
    std::string lower(name);
    std::ranges::transform(lower, lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "nw") return Quadrant::nw;
    if (lower == "ne") return Quadrant::ne;
    if (lower == "sw") return Quadrant::sw;
    if (lower == "se") return Quadrant::se;
    return std::nullopt;
}

std::string_view to_string(Quadrant q) noexcept {
    switch (q) {
        case Quadrant::nw: return "NW";
        case Quadrant::ne: return "NE";
        case Quadrant::sw: return "SW";
        case Quadrant::se: return "SE";
    }
    return "?";
}

std::string format_symbol(BasisProduct p, bool explicit_plus) {
    std::string out;
    if (p.sign < 0) {
        out += '-';
    } else if (explicit_plus) {
        out += '+';
    }
    if (p.index == 0) {
        out += '1';
    } else {
        out += 'e';
        out += std::to_string(p.index);
    }
    return out;
}

BasisProduct parse_symbol(std::string_view token) {
    const std::string original(token);
    BasisProduct p;
    if (!token.empty() && (token.front() == '+' || token.front() == '-')) {
        p.sign = token.front() == '-' ? -1 : 1;
        token.remove_prefix(1);
    }
    if (token == "1") {
        p.index = 0;
        return p;
    }
    if (token.size() < 2 || token.front() != 'e') {
        throw std::invalid_argument("malformed basis symbol '" + original + "'");
    }
    token.remove_prefix(1);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0 || value >= kDim) {
        throw std::invalid_argument("malformed basis symbol '" + original + "'");
    }
    p.index = static_cast<std::uint8_t>(value);
    return p;
}

namespace {

std::pair<std::size_t, std::size_t> quadrant_origin(Quadrant q) {
    switch (q) {
        case Quadrant::nw: return {0, 0};
        case Quadrant::ne: return {0, 16};
        case Quadrant::sw: return {16, 0};
        case Quadrant::se: return {16, 16};
    }
    return {0, 0};
}

std::vector<std::vector<std::string>> split_grid(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::vector<std::string> row;
        std::string w;
        while (words >> w) {
            row.push_back(w);
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void fill_block(CayleyTable& table, std::string_view text, std::size_t size, std::size_t row0,
                std::size_t col0) {
    const auto grid = split_grid(text);
    if (grid.size() != size) {
        throw std::invalid_argument("expected " + std::to_string(size) + " rows, got " +
                                    std::to_string(grid.size()));
    }
    for (std::size_t r = 0; r < size; ++r) {
        if (grid[r].size() != size) {
            throw std::invalid_argument("row " + std::to_string(r + 1) + ": expected " +
                                        std::to_string(size) + " symbols, got " +
                                        std::to_string(grid[r].size()));
        }
        for (std::size_t c = 0; c < size; ++c) {
            table(row0 + r, col0 + c) = parse_symbol(grid[r][c]);
        }
    }
}

}  // namespace

std::string dump_table(const CayleyTable& table, Quadrant q) {
    const auto [row0, col0] = quadrant_origin(q);
    std::string out;
    for (std::size_t r = 0; r < 16; ++r) {
        for (std::size_t c = 0; c < 16; ++c) {
            const auto sym = format_symbol(table(row0 + r, col0 + c));
            if (c != 0) {
                out += ' ';
            }
            out.append(4 - std::min<std::size_t>(4, sym.size()), ' ');
            out += sym;
        }
        out += '\n';
    }
    return out;
}

std::string format_table(const CayleyTable& table) {
    std::string out;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            if (c != 0) {
                out += ' ';
            }
            out += format_symbol(table(r, c), true);
        }
        out += '\n';
    }
    return out;
}

CayleyTable parse_table(std::string_view text) {
    CayleyTable table;
    fill_block(table, text, kDim, 0, 0);
    return table;
}

CayleyTable parse_quadrants(std::string_view nw, std::string_view ne, std::string_view sw,
                            std::string_view se) {
    CayleyTable table;
    fill_block(table, nw, 16, 0, 0);
    fill_block(table, ne, 16, 0, 16);
    fill_block(table, sw, 16, 16, 0);
    fill_block(table, se, 16, 16, 16);
    return table;
}

}  // namespace kaluza

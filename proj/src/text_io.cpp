#include "kaluza/text_io.hpp"

#include <charconv>
#include <cmath>

#include "kaluza/errors.hpp"

namespace kaluza {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

KaluzaNumber parse_number(std::string_view text) {
    KaluzaNumber out;
    std::size_t count = 0;
    std::size_t line_no = 0;
    std::size_t last_line = 1;
    std::size_t last_column = 1;

    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        const std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        std::size_t pos = 0;
        while (pos < line.size() && is_blank(line[pos])) ++pos;
        if (pos < line.size() && line[pos] == '#') {
            continue;
        }

        while (pos < line.size()) {
            while (pos < line.size() && is_blank(line[pos])) ++pos;
            if (pos == line.size()) break;
            std::size_t end = pos;
            while (end < line.size() && !is_blank(line[end])) ++end;
            const std::string_view token = line.substr(pos, end - pos);
            const std::size_t column = pos + 1;

            if (count == kDim) {
                throw ParseError(line_no, column, "expected 32 coefficients, found more");
            }
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec == std::errc::result_out_of_range) {
                throw ParseError(line_no, column, "coefficient '" + std::string(token) + "' is out of range");
            }
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw ParseError(line_no, column, "invalid number '" + std::string(token) + "'");
            }
            if (!std::isfinite(value)) {
                throw ParseError(line_no, column, "non-finite coefficient '" + std::string(token) + "'");
            }
            out[count++] = value;
            last_line = line_no;
            last_column = end + 1;
            pos = end;
        }
    }

    if (count != kDim) {
        throw ParseError(last_line, last_column,
                         "expected 32 coefficients, found " + std::to_string(count));
    }
    return out;
}

std::string format_number(const KaluzaNumber& x) {
    std::string out;
    char buf[32];
    for (std::size_t k = 0; k < kDim; ++k) {
        if (k != 0) {
            out += ' ';
        }
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x[k]);
        out.append(buf, ptr);
    }
    return out;
}

}  // namespace kaluza

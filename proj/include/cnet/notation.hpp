#pragma once

// Word notation: whitespace-separated letter tokens, `tok^N` repeats a token
// N times. `#` and `$` are ordinary tokens.

#include "cnet/core.hpp"

#include <charconv>
#include <sstream>

namespace cnet {

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline Word parse_word(std::string_view text)
{
    Word out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        auto caret = tok.rfind('^');
        if (caret == std::string::npos) {
            out.emplace_back(tok);
            continue;
        }
        std::string base = tok.substr(0, caret);
        std::string_view exp = std::string_view(tok).substr(caret + 1);
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), n);
        if (base.empty() || exp.empty() || ec != std::errc{} || ptr != exp.data() + exp.size())
            throw ParseError("malformed exponent in '" + tok + "'");
        out.insert(out.end(), n, Letter{base});
    }
    return out;
}

/// Inverse of parse_word, grouping runs of equal letters: "a^3 # b^2 c".
inline std::string format_word(const Word& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!out.empty())
            out += ' ';
        out += w[i].token;
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline std::string format_vector(const Vector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

} // namespace cnet

#pragma once

// Helpers shared by the test binaries.

#include "cnet/cnet.hpp"

#include <functional>

namespace cnet::testing_support {

inline Word W(std::string_view s) { return parse_word(s); }

/// Calls f on every word over `sigma` of length ≤ max_len (shortlex order).
inline void each_word(const std::vector<Letter>& sigma, std::size_t max_len, const std::function<void(const Word&)>& f)
{
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            f(w);
            if (len < max_len)
                for (const auto& l : sigma) {
                    Word v = w;
                    v.push_back(l);
                    next.push_back(std::move(v));
                }
        }
        layer = std::move(next);
    }
}

inline std::vector<Letter> letters(std::initializer_list<const char*> ts)
{
    std::vector<Letter> out;
    for (auto t : ts)
        out.emplace_back(t);
    return out;
}

inline CounterNet empty_language(const std::vector<Letter>& sigma, std::size_t dim)
{
    CounterNet n;
    n.name = "empty";
    n.dimension = dim;
    n.alphabet = sigma;
    n.states = {"q"};
    n.initial = {0};
    return validate(n);
}

} // namespace cnet::testing_support

#pragma once

// Text format for machine files.
//
//   ; comment to end of line
//   cn <name>
//   dim <k>
//   states <id> ...            optional; when present every state must be declared
//   alphabet <tok> ...         optional; when present every letter must be declared
//   init <state> ...
//   accept <state> ...
//   trans <src> <letter> <e_1> ... <e_k> <dst>
//   end

#include "cnet/core.hpp"
#include "cnet/notation.hpp"

#include <charconv>
#include <sstream>

namespace cnet {

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view line)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

template <class Int> Int parse_int(const std::string& tok, std::size_t line, const char* what)
{
    Int v{};
    const char* b = tok.data();
    const char* e = tok.data() + tok.size();
    if (*b == '+')
        ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || ptr != e || b == e)
        throw ParseError(std::string("bad ") + what + " '" + tok + "'", line);
    return v;
}

struct PendingNet {
    CounterNet net;
    std::size_t line = 0;
    bool have_dim = false;
    bool have_states = false;
    bool have_alphabet = false;
    std::set<std::string> seen_keywords;
};

} // namespace detail

inline std::vector<CounterNet> parse_machine_file(std::string_view text)
{
    std::vector<CounterNet> out;
    std::optional<detail::PendingNet> cur;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;

    auto state_ref = [&](const std::string& id, std::size_t line) -> StateId {
        auto& net = cur->net;
        if (auto q = net.find_state(id))
            return *q;
        if (cur->have_states)
            throw ParseError("undeclared state '" + id + "'", line);
        net.states.push_back(id);
        return net.states.size() - 1;
    };

    while (std::getline(in, raw)) {
        ++lineno;
        auto semi = raw.find(';');
        auto toks = detail::split_tokens(semi == std::string::npos ? raw : raw.substr(0, semi));
        if (toks.empty())
            continue;
        const std::string& kw = toks[0];
        const std::size_t args = toks.size() - 1;

        if (kw == "cn") {
            if (cur)
                throw ParseError("'cn' inside machine '" + cur->net.name + "' (missing 'end')", lineno);
            if (args != 1)
                throw ParseError("'cn' expects 1 argument, got " + std::to_string(args), lineno);
            cur.emplace();
            cur->net.name = toks[1];
            cur->line = lineno;
            continue;
        }
        if (!cur)
            throw ParseError(kw == "end" || kw == "dim" || kw == "states" || kw == "alphabet" || kw == "init" ||
                                     kw == "accept" || kw == "trans"
                                 ? "'" + kw + "' outside a machine block"
                                 : "unknown keyword '" + kw + "'",
                             lineno);
        auto& net = cur->net;
        auto once = [&] {
            if (!cur->seen_keywords.insert(kw).second)
                throw ParseError("duplicate '" + kw + "'", lineno);
        };

        if (kw == "dim") {
            once();
            if (args != 1)
                throw ParseError("'dim' expects 1 argument, got " + std::to_string(args), lineno);
            if (!net.transitions.empty())
                throw ParseError("'dim' after transitions", lineno);
            net.dimension = detail::parse_int<std::size_t>(toks[1], lineno, "dimension");
            cur->have_dim = true;
        } else if (kw == "states") {
            once();
            if (!net.states.empty())
                throw ParseError("'states' must precede every state reference", lineno);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (net.find_state(toks[i]))
                    throw ParseError("duplicate state '" + toks[i] + "'", lineno);
                net.states.push_back(toks[i]);
            }
            cur->have_states = true;
        } else if (kw == "alphabet") {
            once();
            for (std::size_t i = 1; i < toks.size(); ++i) {
                Letter l{toks[i]};
                if (net.has_letter(l))
                    throw ParseError("duplicate letter '" + toks[i] + "'", lineno);
                net.alphabet.push_back(l);
            }
            cur->have_alphabet = true;
        } else if (kw == "init" || kw == "accept") {
            auto& set = kw == "init" ? net.initial : net.accepting;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                StateId q = state_ref(toks[i], lineno);
                if (std::find(set.begin(), set.end(), q) == set.end())
                    set.push_back(q);
            }
        } else if (kw == "trans") {
            if (!cur->have_dim)
                throw ParseError("'trans' before 'dim'", lineno);
            const std::size_t k = net.dimension;
            if (args != k + 3)
                throw ParseError("'trans' expects <src> <letter> " + std::to_string(k) + " effect component" +
                                     (k == 1 ? "" : "s") + " <dst>, got " + std::to_string(args) + " arguments" +
                                     (args >= 3 ? " (effect-length mismatch: expected " + std::to_string(k) +
                                                      ", got " + std::to_string(args - 3) + ")"
                                                : ""),
                                 lineno);
            StateId src = state_ref(toks[1], lineno);
            Letter l{toks[2]};
            if (!net.has_letter(l)) {
                if (cur->have_alphabet)
                    throw ParseError("letter '" + toks[2] + "' not in alphabet", lineno);
                net.alphabet.push_back(l);
            }
            EffectVector e;
            for (std::size_t i = 0; i < k; ++i)
                e.push_back(detail::parse_int<std::int64_t>(toks[3 + i], lineno, "effect component"));
            StateId dst = state_ref(toks[3 + k], lineno);
            net.transitions.push_back({src, std::move(l), std::move(e), dst});
        } else if (kw == "end") {
            if (args != 0)
                throw ParseError("'end' takes no arguments", lineno);
            if (!cur->have_dim)
                throw ParseError("machine '" + net.name + "' has no 'dim'", lineno);
            try {
                validate(net);
            } catch (const ValidationError& e) {
                throw ParseError(std::string("machine '") + net.name + "': " + e.what(), lineno);
            }
            out.push_back(std::move(net));
            cur.reset();
        } else {
            throw ParseError("unknown keyword '" + kw + "'", lineno);
        }
    }
    if (cur)
        throw ParseError("machine '" + cur->net.name + "' is missing 'end'", cur->line);
    return out;
}

namespace detail {

inline const std::string& emit_token(const std::string& tok, const char* what)
{
    if (tok.empty() || tok.find(';') != std::string::npos ||
        std::any_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }))
        throw Error(std::string("cannot emit ") + what + " '" + tok + "'");
    return tok;
}

} // namespace detail

/// Canonical form: states and transitions in declaration order, every state
/// and letter declared up front.
inline std::string emit_machine(const CounterNet& net)
{
    validate(net);
    std::string s = "cn " + detail::emit_token(net.name, "machine name") + "\n";
    s += "dim " + std::to_string(net.dimension) + "\n";
    s += "states";
    for (const auto& q : net.states)
        s += " " + detail::emit_token(q, "state id");
    s += "\nalphabet";
    for (const auto& l : net.alphabet)
        s += " " + detail::emit_token(l.token, "letter");
    s += "\ninit";
    for (auto q : net.initial)
        s += " " + net.states[q];
    s += "\naccept";
    for (auto q : net.accepting)
        s += " " + net.states[q];
    s += "\n";
    for (const auto& t : net.transitions) {
        s += "trans " + net.states[t.source] + " " + t.letter.token;
        for (auto x : t.effect)
            s += " " + std::to_string(x);
        s += " " + net.states[t.target] + "\n";
    }
    s += "end\n";
    return s;
}

inline std::string emit_machine_file(const std::vector<CounterNet>& nets)
{
    std::string s;
    for (std::size_t i = 0; i < nets.size(); ++i) {
        if (i)
            s += "\n";
        s += emit_machine(nets[i]);
    }
    return s;
}

} // namespace cnet

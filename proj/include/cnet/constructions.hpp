#pragma once

// Language-level operators on counter nets.

#include "cnet/core.hpp"

#include <deque>
#include <map>
#include <set>

namespace cnet {

namespace detail {

inline bool same_alphabet(const CounterNet& a, const CounterNet& b)
{
    return std::set<Letter>(a.alphabet.begin(), a.alphabet.end()) ==
           std::set<Letter>(b.alphabet.begin(), b.alphabet.end());
}

inline std::vector<std::vector<std::size_t>> transitions_by_source(const CounterNet& net)
{
    std::vector<std::vector<std::size_t>> out(net.num_states());
    for (std::size_t i = 0; i < net.transitions.size(); ++i)
        out[net.transitions[i].source].push_back(i);
    return out;
}

/// Copies `src` into `dst` with state ids prefixed, returning the id map.
inline std::vector<StateId> embed(CounterNet& dst, const CounterNet& src, const std::string& prefix)
{
    std::vector<StateId> ids(src.num_states());
    for (StateId q = 0; q < src.num_states(); ++q) {
        dst.states.push_back(prefix + src.states[q]);
        ids[q] = dst.states.size() - 1;
    }
    for (const auto& t : src.transitions)
        dst.transitions.push_back({ids[t.source], t.letter, t.effect, ids[t.target]});
    return ids;
}

inline void merge_alphabet(CounterNet& dst, const std::vector<Letter>& letters)
{
    for (const auto& l : letters)
        if (!dst.has_letter(l))
            dst.alphabet.push_back(l);
}

} // namespace detail

/// Product state (p, q) -> id, restricted to pairs reachable in the control
/// graph from initial pairs.
using ProductStateMap = std::map<std::pair<StateId, StateId>, StateId>;

struct ProductResult {
    CounterNet net;
    ProductStateMap states;
};

inline ProductResult product_with_map(const CounterNet& a, const CounterNet& b)
{
    if (!detail::same_alphabet(a, b))
        throw Error("product: alphabet mismatch between '" + a.name + "' and '" + b.name + "'");

    ProductResult out;
    CounterNet& net = out.net;
    net.name = a.name + "*" + b.name;
    net.dimension = a.dimension + b.dimension;
    net.alphabet = a.alphabet;

    const auto from_a = detail::transitions_by_source(a);
    const auto from_b = detail::transitions_by_source(b);
    std::deque<std::pair<StateId, StateId>> queue;

    auto intern = [&](StateId p, StateId q) {
        auto [it, fresh] = out.states.emplace(std::pair{p, q}, net.states.size());
        if (fresh) {
            net.states.push_back("<" + a.states[p] + "," + b.states[q] + ">");
            if (a.is_accepting(p) && b.is_accepting(q))
                net.accepting.push_back(it->second);
            queue.emplace_back(p, q);
        }
        return it->second;
    };

    for (StateId p : a.initial)
        for (StateId q : b.initial)
            net.initial.push_back(intern(p, q));

    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        StateId src = out.states.at({p, q});
        for (auto i : from_a[p]) {
            const auto& ta = a.transitions[i];
            for (auto j : from_b[q]) {
                const auto& tb = b.transitions[j];
                if (ta.letter != tb.letter)
                    continue;
                EffectVector e = ta.effect;
                e.insert(e.end(), tb.effect.begin(), tb.effect.end());
                StateId dst = intern(ta.target, tb.target);
                net.transitions.push_back({src, ta.letter, std::move(e), dst});
            }
        }
    }
    validate(net);
    return out;
}

/// Synchronised product; L(product) = L(a) ∩ L(b), dimension k_a + k_b.
inline CounterNet product(const CounterNet& a, const CounterNet& b) { return product_with_map(a, b).net; }

/// Keeps only counter `coordinate` (1-based) of every effect.
inline CounterNet project(const CounterNet& net, std::size_t coordinate)
{
    if (coordinate < 1 || coordinate > net.dimension)
        throw Error("project: coordinate index " + std::to_string(coordinate) + " out of range 1.." +
                    std::to_string(net.dimension));
    if (net.dimension == 1)
        return net;
    CounterNet out = net;
    out.name = net.name + "|" + std::to_string(coordinate);
    out.dimension = 1;
    for (auto& t : out.transitions)
        t.effect = {t.effect[coordinate - 1]};
    return out;
}

/// Disjoint union of two nets of equal dimension over the same alphabet.
inline CounterNet net_union(const CounterNet& a, const CounterNet& b)
{
    if (a.dimension != b.dimension)
        throw Error("union: dimension mismatch");
    if (!detail::same_alphabet(a, b))
        throw Error("union: alphabet mismatch");
    CounterNet out;
    out.name = a.name + "+" + b.name;
    out.dimension = a.dimension;
    out.alphabet = a.alphabet;
    auto ia = detail::embed(out, a, "L.");
    auto ib = detail::embed(out, b, "R.");
    for (auto q : a.initial)
        out.initial.push_back(ia[q]);
    for (auto q : b.initial)
        out.initial.push_back(ib[q]);
    for (auto q : a.accepting)
        out.accepting.push_back(ia[q]);
    for (auto q : b.accepting)
        out.accepting.push_back(ib[q]);
    return validate(out);
}

/// Embeds the counters into `target_dim` dimensions; original coordinate i
/// goes to `placement[i]` (1-based), new coordinates are never touched.
inline CounterNet lift(const CounterNet& net, std::size_t target_dim, const std::vector<std::size_t>& placement)
{
    if (placement.size() != net.dimension || net.dimension > target_dim)
        throw Error("lift: placement must map all " + std::to_string(net.dimension) + " coordinates into " +
                    std::to_string(target_dim));
    std::set<std::size_t> used;
    for (auto p : placement)
        if (p < 1 || p > target_dim || !used.insert(p).second)
            throw Error("lift: invalid placement");
    CounterNet out = net;
    out.dimension = target_dim;
    for (auto& t : out.transitions) {
        EffectVector e(target_dim, 0);
        for (std::size_t i = 0; i < placement.size(); ++i)
            e[placement[i] - 1] = t.effect[i];
        t.effect = std::move(e);
    }
    return out;
}

/// Whether the control automaton (counters ignored) has at most one
/// accepting path per word. Decided exactly on the self-product: ambiguity
/// means a pair of diverged paths that can still both reach acceptance.
inline bool is_structurally_unambiguous(const CounterNet& net)
{
    const auto from = detail::transitions_by_source(net);
    using Node = std::tuple<StateId, StateId, bool>;
    std::set<Node> seen;
    std::deque<Node> queue;
    std::map<Node, std::vector<Node>> preds;
    auto visit = [&](Node n, std::optional<Node> pred) {
        if (pred)
            preds[n].push_back(*pred);
        if (seen.insert(n).second)
            queue.push_back(n);
    };
    for (auto p : net.initial)
        for (auto q : net.initial)
            visit({p, q, p != q}, std::nullopt);
    while (!queue.empty()) {
        Node n = queue.front();
        queue.pop_front();
        auto [p, q, diverged] = n;
        for (auto i : from[p])
            for (auto j : from[q]) {
                const auto& ti = net.transitions[i];
                const auto& tj = net.transitions[j];
                if (ti.letter != tj.letter)
                    continue;
                visit({ti.target, tj.target, diverged || i != j}, n);
            }
    }
    // Backward search from accepting pairs.
    std::set<Node> live;
    std::deque<Node> back;
    for (const auto& n : seen) {
        auto [p, q, d] = n;
        if (net.is_accepting(p) && net.is_accepting(q) && live.insert(n).second)
            back.push_back(n);
    }
    while (!back.empty()) {
        Node n = back.front();
        back.pop_front();
        if (std::get<2>(n))
            return false;
        for (const auto& m : preds[n])
            if (live.insert(m).second)
                back.push_back(m);
    }
    return true;
}

} // namespace cnet

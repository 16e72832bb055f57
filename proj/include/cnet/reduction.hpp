#pragma once

// Gadget turning a pair of 1-CNs (A, B) into a 2-CN over Σ ∪ Λ ∪ {$}
// whose language is {u$v | u ∈ L(B), v ∈ Λ*} whenever L(A) ⊆ L(B).

#include "cnet/constructions.hpp"
#include "cnet/zoo.hpp"

namespace cnet {

/// The reduction net. Accepting states of A′ feed every initial state of P
/// through a $-transition; accepting states of B′ feed a Λ-sink.
inline CounterNet build_reduction(const CounterNet& a, const CounterNet& b, const CounterNet& p = zoo::build_P())
{
    if (a.dimension != 1 || b.dimension != 1)
        throw Error("reduce: both machines must be 1-CNs");
    if (!detail::same_alphabet(a, b))
        throw Error("reduce: alphabet mismatch");
    if (p.dimension != 2)
        throw Error("reduce: P must be a 2-CN");
    const Letter dollar{"$"};
    std::set<Letter> reserved(p.alphabet.begin(), p.alphabet.end());
    reserved.insert(dollar);
    for (const auto& l : a.alphabet)
        if (reserved.contains(l))
            throw Error("reduce: letter '" + l.token + "' collides with P's alphabet or '$'");

    CounterNet c;
    c.name = "reduce(" + a.name + "," + b.name + ")";
    c.dimension = 2;
    c.alphabet = a.alphabet;
    detail::merge_alphabet(c, p.alphabet);
    c.alphabet.push_back(dollar);

    auto ia = detail::embed(c, lift(a, 2, {1}), "A.");
    auto ib = detail::embed(c, lift(b, 2, {1}), "B.");
    auto ip = detail::embed(c, p, "P.");
    c.states.push_back("top");
    const StateId top = c.states.size() - 1;

    const EffectVector zero(2, 0);
    for (auto q : a.accepting)
        for (auto p0 : p.initial)
            c.transitions.push_back({ia[q], dollar, zero, ip[p0]});
    for (const auto& l : p.alphabet)
        c.transitions.push_back({top, l, zero, top});
    for (auto q : b.accepting)
        c.transitions.push_back({ib[q], dollar, zero, top});

    for (auto q : a.initial)
        c.initial.push_back(ia[q]);
    for (auto q : b.initial)
        c.initial.push_back(ib[q]);
    for (auto q : p.accepting)
        c.accepting.push_back(ip[q]);
    c.accepting.push_back(top);
    return validate(c);
}

} // namespace cnet

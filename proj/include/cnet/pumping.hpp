#pragma once

// Cycles in runs, their sign classes, extraction of pumpable simple cycles and
// the bounded searches behind the counter-bound and cycle-existence lemmas.

#include "cnet/core.hpp"

#include <limits>
#include <map>

namespace cnet {

/// Componentwise sign of an effect. In dimension 1 these are the usual
/// >0 / ≥0 / <0 colours.
enum class SignClass { positive, nonnegative, negative, mixed };

inline const char* to_string(SignClass s)
{
    switch (s) {
    case SignClass::positive: return "positive";
    case SignClass::nonnegative: return "nonnegative";
    case SignClass::negative: return "negative";
    case SignClass::mixed: return "mixed";
    }
    return "?";
}

inline SignClass classify_sign(const EffectVector& e)
{
    bool all_pos = !e.empty(), all_nonneg = true, all_neg = !e.empty();
    for (auto x : e) {
        all_pos = all_pos && x > 0;
        all_nonneg = all_nonneg && x >= 0;
        all_neg = all_neg && x < 0;
    }
    if (all_pos)
        return SignClass::positive;
    if (all_nonneg)
        return SignClass::nonnegative;
    if (all_neg)
        return SignClass::negative;
    return SignClass::mixed;
}

/// Whether an effect of class `actual` meets a requirement (`nonnegative`
/// admits strictly positive effects too).
inline bool meets(SignClass actual, SignClass required)
{
    if (required == SignClass::nonnegative)
        return actual == SignClass::positive || actual == SignClass::nonnegative;
    return actual == required;
}

inline bool meets(const EffectVector& e, SignClass required) { return meets(classify_sign(e), required); }

// ------------------------------------------------------------------ bounds

inline std::uint64_t factorial(std::size_t n)
{
    if (n > 20)
        throw Error("factorial: " + std::to_string(n) + "! overflows 64 bits");
    std::uint64_t r = 1;
    for (std::size_t i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// Q_max! over the given nets.
inline std::uint64_t alpha(std::span<const CounterNet> nets)
{
    if (nets.empty())
        throw Error("alpha: empty net sequence");
    std::size_t q = 0;
    for (const auto& n : nets)
        q = std::max(q, n.num_states());
    return factorial(q);
}

inline std::uint64_t alpha(std::initializer_list<std::size_t> state_counts)
{
    if (state_counts.size() == 0)
        throw Error("alpha: empty sequence");
    return factorial(std::max(state_counts));
}

inline std::int64_t lemma1_bound(std::int64_t n, std::int64_t W, std::int64_t q_count) { return n + W * q_count; }

inline std::int64_t lemma2_threshold(std::int64_t q_count, std::int64_t W, std::int64_t n)
{
    if (q_count < 1)
        throw Error("lemma2_threshold: need at least one state");
    return q_count * (n + q_count * W);
}

// ------------------------------------------------------------------ cycles

/// Configuration-index range [begin, end] of a run.
struct Scope {
    std::size_t begin = 0;
    std::size_t end = 0;
};

inline Scope whole(const Run& run) { return {0, run.configurations.empty() ? 0 : run.configurations.size() - 1}; }

struct CycleWitness {
    std::size_t start = 0;
    std::size_t end = 0;
    EffectVector effect;
    SignClass sign = SignClass::mixed;
    std::size_t anchor = 0;

    [[nodiscard]] std::size_t length() const { return end - start; }
};

namespace detail {

inline void check_scope(const Run& run, Scope s)
{
    if (run.configurations.empty() || s.begin > s.end || s.end >= run.configurations.size())
        throw Error("scope out of run bounds");
}

} // namespace detail

/// Every simple cycle (start < end, equal states, no repeated state strictly
/// inside) within the scope, ordered by start then end.
inline std::vector<CycleWitness> find_cycles(const Run& run, Scope scope)
{
    detail::check_scope(run, scope);
    const auto& cs = run.configurations;
    std::vector<CycleWitness> out;
    std::map<StateId, std::size_t> first;
    for (std::size_t i = scope.begin; i <= scope.end; ++i)
        first.emplace(cs[i].state, i);
    for (std::size_t i = scope.begin; i <= scope.end; ++i) {
        std::set<StateId> seen{cs[i].state};
        for (std::size_t j = i + 1; j <= scope.end; ++j) {
            if (cs[j].state == cs[i].state) {
                auto e = sub(cs[j].counters, cs[i].counters);
                auto sign = classify_sign(e);
                out.push_back({i, j, std::move(e), sign, first.at(cs[i].state)});
                break;
            }
            if (!seen.insert(cs[j].state).second)
                break;
        }
    }
    return out;
}

/// Whether some (not necessarily simple) cycle inside the scope meets the
/// required sign.
inline bool has_cycle(const Run& run, Scope scope, SignClass required)
{
    detail::check_scope(run, scope);
    const auto& cs = run.configurations;
    for (std::size_t i = scope.begin; i <= scope.end; ++i)
        for (std::size_t j = i + 1; j <= scope.end; ++j)
            if (cs[i].state == cs[j].state && meets(sub(cs[j].counters, cs[i].counters), required))
                return true;
    return false;
}

/// A simple cycle obtained by cutting sub-cycles out of a longer one; its
/// steps need not be contiguous in the original run.
struct PumpableCycle {
    std::vector<std::size_t> steps; ///< transition positions in the run
    std::vector<std::size_t> transitions; ///< net transition indices
    EffectVector effect;
    SignClass sign = SignClass::mixed;
    std::size_t anchor = 0; ///< configuration index where the cycle is inserted
    CycleWitness enclosing;

    [[nodiscard]] std::size_t length() const { return steps.size(); }
};

/// Reduces an enclosing cycle of the required sign to a simple one: take the
/// last repetition; keep it if it meets the sign, otherwise cut it out.
inline std::optional<PumpableCycle> extract_pumpable_cycle(const CounterNet& net, const Run& run, Scope scope,
                                                           SignClass required)
{
    if (required != SignClass::positive && required != SignClass::nonnegative)
        throw Error("extract_pumpable_cycle: required sign must be positive or nonnegative");
    detail::check_scope(run, scope);
    const auto& cs = run.configurations;

    std::optional<CycleWitness> outer;
    for (std::size_t i = scope.begin; i <= scope.end && !outer; ++i)
        for (std::size_t j = i + 1; j <= scope.end; ++j)
            if (cs[i].state == cs[j].state) {
                auto e = sub(cs[j].counters, cs[i].counters);
                if (meets(e, required)) {
                    outer = CycleWitness{i, j, e, classify_sign(e), i};
                    break;
                }
            }
    if (!outer)
        return std::nullopt;

    std::vector<std::size_t> path;
    for (std::size_t s = outer->start; s < outer->end; ++s)
        path.push_back(s);
    auto state_at = [&](std::size_t p) {
        return p < path.size() ? cs[path[p]].state : cs[path.back() + 1].state;
    };
    auto effect_of = [&](std::size_t from, std::size_t to) {
        EffectVector e(net.dimension, 0);
        for (std::size_t p = from; p < to; ++p)
            e = add(e, net.transitions[run.transitions[path[p]]].effect);
        return e;
    };

    for (;;) {
        const std::size_t len = path.size();
        std::optional<std::pair<std::size_t, std::size_t>> rep;
        for (std::size_t j1 = len; j1-- > 0 && !rep;)
            for (std::size_t j2 = j1 + 1; j2 <= len; ++j2)
                if (state_at(j1) == state_at(j2)) {
                    rep = {j1, j2};
                    break;
                }
        auto [j1, j2] = *rep; // endpoints always repeat
        if (j1 == 0 && j2 == len)
            break;
        auto tau = effect_of(j1, j2);
        if (meets(tau, required))
            path = std::vector<std::size_t>(path.begin() + j1, path.begin() + j2);
        else
            path.erase(path.begin() + j1, path.begin() + j2);
    }

    PumpableCycle pc;
    pc.steps = path;
    for (auto s : path)
        pc.transitions.push_back(run.transitions[s]);
    pc.effect = effect_of(0, path.size());
    pc.sign = classify_sign(pc.effect);
    // Cutting a cycle that fails the sign only raises later counters in
    // dimension 1; in higher dimensions the result can miss the sign.
    if (!meets(pc.effect, required))
        return std::nullopt;
    pc.anchor = path.front();
    pc.enclosing = *outer;
    return pc;
}

/// Inserts the cycle m times at its anchor (m·|Q|!/len times with
/// normalisation). Throws if the result leaves N unless allow_z is set.
inline Run pump_run(const CounterNet& net, const Run& run, const PumpableCycle& cycle, std::size_t m,
                    bool normalize_to_factorial = false, bool allow_z = false)
{
    if (cycle.steps.empty())
        throw Error("pump_run: empty cycle");
    std::size_t reps = m;
    if (normalize_to_factorial) {
        auto f = factorial(net.num_states());
        if (f % cycle.length() != 0)
            throw Error("pump_run: cycle length does not divide |Q|!");
        reps = m * (f / cycle.length());
    }
    std::vector<std::size_t> steps(run.transitions.begin(), run.transitions.begin() + cycle.anchor);
    for (std::size_t r = 0; r < reps; ++r)
        steps.insert(steps.end(), cycle.transitions.begin(), cycle.transitions.end());
    steps.insert(steps.end(), run.transitions.begin() + cycle.anchor, run.transitions.end());
    Run out = make_run(net, run.configurations.front().state, run.configurations.front().counters, steps);
    if (!allow_z && !out.is_n_run())
        throw Error("pump_run: pumped run leaves the non-negative orthant");
    return out;
}

// ------------------------------------------------------------- lemma search

namespace detail {

inline std::vector<std::vector<std::size_t>> moves_on(const CounterNet& net, const Letter& sigma)
{
    std::vector<std::vector<std::size_t>> out(net.num_states());
    for (std::size_t i = 0; i < net.transitions.size(); ++i)
        if (net.transitions[i].letter == sigma)
            out[net.transitions[i].source].push_back(i);
    return out;
}

} // namespace detail

struct CycleSearchResult {
    std::optional<Run> witness; ///< offending run, if any
    std::size_t nodes = 0;
};

/// Searches every N-run of a 1-CN on σ^N from (q, n) for one that traverses
/// no ≥0 cycle, i.e. whose counter strictly decreases between any two visits
/// of the same state. Exhaustive; memoises dead search nodes.
inline CycleSearchResult find_run_without_nonneg_cycle(const CounterNet& net, const Letter& sigma, StateId q,
                                                       std::int64_t n, std::size_t N)
{
    if (net.dimension != 1)
        throw Error("find_run_without_nonneg_cycle: expects a 1-CN");
    const auto moves = detail::moves_on(net, sigma);
    constexpr std::int64_t unseen = std::numeric_limits<std::int64_t>::max();
    using Key = std::tuple<std::size_t, StateId, std::int64_t, std::vector<std::int64_t>>;
    std::set<Key> dead;
    CycleSearchResult res;
    std::vector<std::size_t> path;
    std::vector<std::int64_t> last(net.num_states(), unseen);

    auto dfs = [&](auto&& self, StateId p, std::int64_t c) -> bool {
        ++res.nodes;
        if (last[p] != unseen && c >= last[p])
            return false;
        if (path.size() == N)
            return true;
        Key key{path.size(), p, c, last};
        if (dead.contains(key))
            return false;
        auto saved = last[p];
        last[p] = c;
        for (auto i : moves[p]) {
            auto d = c + net.transitions[i].effect[0];
            if (d < 0)
                continue;
            path.push_back(i);
            if (self(self, net.transitions[i].target, d))
                return true;
            path.pop_back();
        }
        last[p] = saved;
        dead.insert(std::move(key));
        return false;
    };
    if (dfs(dfs, q, n))
        res.witness = make_run(net, q, {n}, path);
    return res;
}

/// Searches N-runs of a 1-CN on σ^N from (q, n) with no >0 cycle (counter
/// non-increasing between visits of a state) for one whose counter exceeds
/// `bound` somewhere.
inline CycleSearchResult find_bound_violation(const CounterNet& net, const Letter& sigma, StateId q, std::int64_t n,
                                              std::size_t N, std::int64_t bound)
{
    if (net.dimension != 1)
        throw Error("find_bound_violation: expects a 1-CN");
    const auto moves = detail::moves_on(net, sigma);
    constexpr std::int64_t unseen = std::numeric_limits<std::int64_t>::max();
    using Key = std::tuple<std::size_t, StateId, std::int64_t, std::vector<std::int64_t>>;
    std::set<Key> dead;
    CycleSearchResult res;
    std::vector<std::size_t> path;
    std::vector<std::int64_t> last(net.num_states(), unseen);

    auto dfs = [&](auto&& self, StateId p, std::int64_t c) -> bool {
        ++res.nodes;
        if (last[p] != unseen && c > last[p])
            return false;
        if (c > bound)
            return true;
        if (path.size() == N)
            return false;
        Key key{path.size(), p, c, last};
        if (dead.contains(key))
            return false;
        auto saved = last[p];
        last[p] = c;
        for (auto i : moves[p]) {
            auto d = c + net.transitions[i].effect[0];
            if (d < 0)
                continue;
            path.push_back(i);
            if (self(self, net.transitions[i].target, d))
                return true;
            path.pop_back();
        }
        last[p] = saved;
        dead.insert(std::move(key));
        return false;
    };
    if (dfs(dfs, q, n))
        res.witness = make_run(net, q, {n}, path);
    return res;
}

/// All N-runs on `word` from (q, v), accepting or not, via enumeration on a
/// copy of the net with q as the only initial state and every state accepting.
inline RunEnumeration enumerate_runs_from(const CounterNet& net, const Word& word, StateId q, const Vector& v,
                                         std::size_t cap)
{
    CounterNet open = net;
    open.initial = {q};
    open.accepting.clear();
    for (StateId s = 0; s < net.num_states(); ++s)
        open.accepting.push_back(s);
    return enumerate_accepting_runs(open, word, v, cap);
}

} // namespace cnet

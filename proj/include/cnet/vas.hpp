#pragma once

// Regularity pipeline for deterministic nets: relabel every transition with a
// fresh letter, then encode the finite control into three extra counters of a
// single-state net, each original step becoming a triple of phase letters.

#include "cnet/core.hpp"

#include <array>
#include <map>
#include <set>

namespace cnet::vas {

// ------------------------------------------------------------ distinct labels

struct LabelMap {
    std::vector<Letter> fresh;    ///< fresh[t] labels transition t
    std::vector<Letter> original; ///< original letter of transition t

    [[nodiscard]] std::optional<std::size_t> transition_of(const Letter& l) const
    {
        for (std::size_t t = 0; t < fresh.size(); ++t)
            if (fresh[t] == l)
                return t;
        return std::nullopt;
    }
};

struct Labelled {
    CounterNet net;
    LabelMap labels;
};

inline Letter fresh_label(std::size_t t) { return Letter{"g" + std::to_string(t)}; }

inline Labelled distinct_label(const CounterNet& d)
{
    if (!is_deterministic(d))
        throw Error("distinct_label: input net '" + d.name + "' is not deterministic");
    Labelled out;
    out.net = d;
    out.net.name = d.name + "_labelled";
    out.net.alphabet.clear();
    for (std::size_t t = 0; t < d.transitions.size(); ++t) {
        Letter g = fresh_label(t);
        out.labels.fresh.push_back(g);
        out.labels.original.push_back(d.transitions[t].letter);
        out.net.alphabet.push_back(g);
        out.net.transitions[t].letter = g;
    }
    return {validate(out.net), std::move(out.labels)};
}

/// Maps each fresh letter back to the letter of its transition.
inline Word unlabel(const LabelMap& map, const Word& w)
{
    Word out;
    out.reserve(w.size());
    for (const auto& l : w) {
        auto t = map.transition_of(l);
        if (!t)
            throw Error("unlabel: '" + l.token + "' is not a fresh label");
        out.push_back(map.original[*t]);
    }
    return out;
}

/// Every letter labels exactly one transition and there is a single start.
inline bool is_distinctly_labelled(const CounterNet& c)
{
    if (c.initial.size() != 1)
        return false;
    std::set<Letter> seen;
    for (const auto& t : c.transitions)
        if (!seen.insert(t.letter).second)
            return false;
    return true;
}

// ------------------------------------------------------------- state coding

struct StateCode {
    std::int64_t a = 0;
    std::int64_t b = 0;
};

/// a_i = i, b_i = (n+1)(n+1-i) for i = 1..n.
inline std::vector<StateCode> state_codes(std::size_t n)
{
    std::vector<StateCode> out;
    const auto N = static_cast<std::int64_t>(n);
    for (std::int64_t i = 1; i <= N; ++i)
        out.push_back({i, (N + 1) * (N + 1 - i)});
    return out;
}

struct Phase {
    std::size_t transition = 0; ///< index into the labelled net
    int phase = 1;              ///< 1, 2 or 3
};

struct Vasified {
    CounterNet net;              ///< single state, dimension k+3
    Vector initial;              ///< (0^k, a_{i0}, b_{i0}, 0)
    std::vector<StateCode> codes;
    std::vector<Phase> phases;   ///< phases[u] describes transition u of net
    std::map<Letter, std::array<Letter, 3>> triplets;

    [[nodiscard]] std::optional<Phase> phase_of(const Letter& l) const
    {
        for (std::size_t u = 0; u < net.transitions.size(); ++u)
            if (net.transitions[u].letter == l)
                return phases[u];
        return std::nullopt;
    }

    /// Control counters (k+1..k+3) of a valuation.
    [[nodiscard]] std::array<std::int64_t, 3> control(const Vector& v) const
    {
        auto k = net.dimension - 3;
        return {v[k], v[k + 1], v[k + 2]};
    }
};

inline Letter phase_letter(const Letter& g, int phase) { return Letter{g.token + "." + std::to_string(phase)}; }

inline Vasified hp_vasify(const CounterNet& c)
{
    if (!is_distinctly_labelled(c))
        throw Error("hp_vasify: net '" + c.name + "' is not distinctly labelled");
    const std::size_t n = c.num_states();
    const std::size_t k = c.dimension;
    Vasified out;
    out.codes = state_codes(n);
    out.net.name = c.name + "_vas";
    out.net.dimension = k + 3;
    out.net.states = {"u"};
    out.net.initial = {0};
    out.net.accepting = {0};

    // 0-based state index q has code index i = q + 1; "mirror" index n+1-i is
    // code index n - q.
    auto code = [&](StateId q) { return out.codes[q]; };
    auto mirror = [&](StateId q) { return out.codes[n - 1 - q]; };

    for (std::size_t t = 0; t < c.transitions.size(); ++t) {
        const auto& tr = c.transitions[t];
        const StateCode ci = code(tr.source), cm = mirror(tr.source), cj = code(tr.target);
        std::array<Letter, 3> letters{phase_letter(tr.letter, 1), phase_letter(tr.letter, 2),
                                      phase_letter(tr.letter, 3)};
        std::array<EffectVector, 3> effects;
        for (auto& e : effects)
            e.assign(k + 3, 0);
        effects[0][k] = -ci.a;
        effects[0][k + 1] = cm.a - ci.b;
        effects[0][k + 2] = cm.b;
        effects[1][k] = ci.b;
        effects[1][k + 1] = -cm.a;
        effects[1][k + 2] = ci.a - cm.b;
        for (std::size_t x = 0; x < k; ++x)
            effects[2][x] = tr.effect[x];
        effects[2][k] = cj.a - ci.b;
        effects[2][k + 1] = cj.b;
        effects[2][k + 2] = -ci.a;
        for (int p = 0; p < 3; ++p) {
            out.net.alphabet.push_back(letters[p]);
            out.net.transitions.push_back({0, letters[p], effects[p], 0});
            out.phases.push_back({t, p + 1});
        }
        out.triplets.emplace(tr.letter, letters);
    }
    out.initial.assign(k + 3, 0);
    const StateCode c0 = code(c.initial.front());
    out.initial[k] = c0.a;
    out.initial[k + 1] = c0.b;
    validate(out.net);
    return out;
}

/// Expands each letter to its three phase letters; the final letter expands
/// only to its first `stop` phases.
inline Word triplet_transform(const Word& w, int stop)
{
    if (stop < 1 || stop > 3)
        throw Error("triplet_transform: stop must be 1, 2 or 3");
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int upto = i + 1 == w.size() ? stop : 3;
        for (int p = 1; p <= upto; ++p)
            out.push_back(phase_letter(w[i], p));
    }
    return out;
}

/// Inverse of triplet_transform on well-formed images.
inline std::optional<std::pair<Word, int>> triplet_preimage(const Vasified& u, const CounterNet& c, const Word& w)
{
    if (w.empty())
        return std::pair{Word{}, 3};
    Word pre;
    int expected = 1;
    for (const auto& l : w) {
        auto ph = u.phase_of(l);
        if (!ph || ph->phase != expected)
            return std::nullopt;
        if (expected == 1)
            pre.push_back(c.transitions[ph->transition].letter);
        else if (c.transitions[ph->transition].letter != pre.back())
            return std::nullopt;
        expected = expected % 3 + 1;
    }
    int stop = expected == 1 ? 3 : expected - 1;
    return std::pair{pre, stop};
}

// ------------------------------------------------------------ verification

namespace detail {

/// All words of L(net) with length ≤ max_len, shortlex, via frontier DFS.
inline std::vector<Word> language_upto(const CounterNet& net, const Vector& initial, std::size_t max_len,
                                       std::size_t cap = 2'000'000)
{
    Acceptor acc(net);
    std::vector<Word> out;
    std::vector<std::vector<Word>> by_len(max_len + 1);
    Word cur;
    std::size_t nodes = 0;
    auto dfs = [&](auto&& self, const Frontier& f) -> void {
        if (++nodes > cap)
            throw CapExceeded("language_upto: node cap exceeded");
        if (acc.accepting(f))
            by_len[cur.size()].push_back(cur);
        if (cur.size() == max_len)
            return;
        for (std::size_t l = 0; l < net.alphabet.size(); ++l) {
            Frontier g = acc.step(f, l);
            if (g.empty())
                continue;
            cur.push_back(net.alphabet[l]);
            self(self, g);
            cur.pop_back();
        }
    };
    dfs(dfs, acc.initial_frontier(initial));
    for (auto& v : by_len)
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

} // namespace detail

struct GatingViolation {
    Word prefix;      ///< fired sequence ending in the offending letter
    std::string what;
};

struct GatingReport {
    std::size_t valuations_explored = 0;
    std::vector<GatingViolation> phase_violations;
    /// Enabled transitions that respect the phase order but belong to a
    /// different original transition than the one in progress.
    std::vector<GatingViolation> sibling_interleavings;

    [[nodiscard]] bool phase_gating_holds() const { return phase_violations.empty(); }
    [[nodiscard]] bool strict_gating_holds() const { return phase_violations.empty() && sibling_interleavings.empty(); }
};

/// Bounded exhaustive exploration of U from its initial valuation. After t_1
/// of a transition from q fires, only second-phase transitions out of q may be
/// enabled; after t_2 only third-phase ones out of q; after t_3 (reaching
/// q') only first-phase ones out of q', and the control counters must equal
/// the code of q'.
inline GatingReport check_gating(const Vasified& u, const CounterNet& c, std::size_t depth,
                                 std::size_t max_reports = 64)
{
    GatingReport rep;
    Word cur;
    auto report = [&](std::vector<GatingViolation>& into, const Letter& l, std::string what) {
        if (into.size() < max_reports) {
            Word w = cur;
            w.push_back(l);
            into.push_back({std::move(w), std::move(what)});
        }
    };
    // In-progress original transition (meaningful when phase is 1 or 2).
    auto dfs = [&](auto&& self, const Vector& v, StateId q, int last_phase, std::size_t cur_t) -> void {
        ++rep.valuations_explored;
        if (last_phase == 3 || last_phase == 0) {
            auto ctl = u.control(v);
            const auto code = u.codes[q];
            if (ctl[0] != code.a || ctl[1] != code.b || ctl[2] != 0)
                report(rep.phase_violations, Letter{"-"}, "control counters do not encode the current state");
        }
        if (cur.size() == depth)
            return;
        for (std::size_t x = 0; x < u.net.transitions.size(); ++x) {
            const auto& tr = u.net.transitions[x];
            Vector w = add(v, tr.effect);
            if (!nonnegative(w))
                continue;
            const Phase ph = u.phases[x];
            const auto& orig = c.transitions[ph.transition];
            const int want = last_phase % 3 + 1;
            if (ph.phase != want) {
                report(rep.phase_violations, tr.letter, "phase " + std::to_string(ph.phase) + " enabled, expected " +
                                                            std::to_string(want));
                continue;
            }
            if (orig.source != q) {
                report(rep.phase_violations, tr.letter, "transition out of a different state enabled");
                continue;
            }
            if (want != 1 && ph.transition != cur_t)
                report(rep.sibling_interleavings, tr.letter, "sibling transition continues the triple");
            cur.push_back(tr.letter);
            StateId next = ph.phase == 3 ? orig.target : q;
            self(self, w, next, ph.phase, ph.transition);
            cur.pop_back();
        }
    };
    dfs(dfs, u.initial, c.initial.front(), 0, 0);
    return rep;
}

struct PipelineReport {
    std::size_t max_len = 0;
    std::size_t u_max_len = 0;
    // Relabelling.
    std::size_t labelled_words = 0;
    std::size_t original_words = 0;
    bool bijection_holds = true;
    std::vector<Word> bijection_failures;
    // Forward simulation.
    std::size_t images_checked = 0;
    std::vector<Word> containment_violations;
    // Members of L(U) that are not images of L(C) words.
    std::size_t u_words = 0;
    std::vector<Word> anomalies;
    std::size_t anomaly_count = 0;
    GatingReport gating;

    [[nodiscard]] bool ok() const
    {
        return bijection_holds && containment_violations.empty() && gating.phase_gating_holds();
    }
};

struct PipelineResult {
    Labelled labelled;
    Vasified vas;
    PipelineReport report;
};

/// Runs relabelling and encoding on `d` and checks them on all words of length
/// ≤ max_len (L(U) words up to u_max_len, 0 meaning 3·max_len).
inline PipelineResult verify_pipeline(const CounterNet& d, std::size_t max_len, std::size_t u_max_len = 0,
                                      std::size_t max_listed = 64)
{
    if (u_max_len == 0)
        u_max_len = 3 * max_len;
    PipelineResult res{distinct_label(d), {}, {}};
    const auto& c = res.labelled.net;
    res.vas = hp_vasify(c);
    auto& r = res.report;
    r.max_len = max_len;
    r.u_max_len = u_max_len;

    auto lc = detail::language_upto(c, c.zero(), max_len);
    auto ld = detail::language_upto(d, d.zero(), max_len);
    r.labelled_words = lc.size();
    r.original_words = ld.size();
    std::set<Word> images;
    for (const auto& w : lc) {
        Word u = unlabel(res.labelled.labels, w);
        if (!accepts(d, u) || !images.insert(u).second) {
            r.bijection_holds = false;
            if (r.bijection_failures.size() < max_listed)
                r.bijection_failures.push_back(w);
        }
    }
    if (images.size() != ld.size())
        r.bijection_holds = false;

    Acceptor ua(res.vas.net);
    for (const auto& w : lc)
        for (int stop = 1; stop <= 3; ++stop) {
            if (w.empty() && stop < 3)
                continue;
            ++r.images_checked;
            Word img = triplet_transform(w, stop);
            if (!ua.accepts(img, res.vas.initial) && r.containment_violations.size() < max_listed)
                r.containment_violations.push_back(img);
        }

    auto lu = detail::language_upto(res.vas.net, res.vas.initial, u_max_len);
    r.u_words = lu.size();
    Acceptor ca(c);
    for (const auto& w : lu) {
        auto pre = triplet_preimage(res.vas, c, w);
        if (pre && ca.accepts(pre->first))
            continue;
        ++r.anomaly_count;
        if (r.anomalies.size() < max_listed)
            r.anomalies.push_back(w);
    }
    r.gating = check_gating(res.vas, c, u_max_len);
    return res;
}

} // namespace cnet::vas

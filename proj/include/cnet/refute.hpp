#pragma once

// Searching for words on which an intersection of 1-CNs and L(P) disagree.

#include "cnet/compare.hpp"
#include "cnet/forms.hpp"
#include "cnet/zoo.hpp"

#include <chrono>

namespace cnet {

enum class Strategy { enumerate, guided };

struct RefuteCaps {
    std::size_t max_bound = 8;        ///< enumerate: largest parameter value
    WitnessCaps witness{2, 256, 0};   ///< guided: bad-segment search
    FamilyCaps family{6, 5};          ///< guided: per-factor pump families
    std::size_t max_LB_multiple = 12; ///< guided: L and B range over multiples of α
    std::size_t max_n = 64;           ///< guided: largest n tried for w_n
};

struct RefuteStats {
    std::size_t words_checked = 0;
    std::size_t witness_words = 0;
    std::size_t witness_runs = 0;
    bool inconclusive = false;
    double seconds = 0;
    // Guided construction details.
    std::optional<std::size_t> bad_segment;
    std::vector<BadSegmentWitness> witnesses;
    std::vector<PumpFamily> families;
    std::uint64_t X = 0, Y = 0, Z = 0, L = 0, B = 0, n = 0;
};

struct RefuteResult {
    std::optional<Word> counterexample;
    bool factors_accept = false; ///< true: all factors accept, P rejects
    RefuteStats stats;

    [[nodiscard]] bool exhausted() const { return !counterexample; }
};

namespace detail {

inline bool all_accept(const std::vector<Acceptor>& accs, const Word& w)
{
    return std::all_of(accs.begin(), accs.end(), [&](const Acceptor& a) { return a.accepts(w); });
}

inline void check_factors(const std::vector<CounterNet>& factors)
{
    if (factors.empty())
        throw Error("refute_p_decomposition: no factors");
    const std::set<Letter> lambda{Letter{"a"}, Letter{"b"}, Letter{"c"}, Letter{"#"}};
    for (const auto& f : factors) {
        if (f.dimension != 1)
            throw Error("refute_p_decomposition: factor '" + f.name + "' is not a 1-CN");
        for (const auto& l : f.alphabet)
            if (!lambda.contains(l))
                throw Error("refute_p_decomposition: factor '" + f.name + "' uses letter '" + l.token +
                            "' outside {a,b,c,#}");
    }
}

inline RefuteResult refute_enumerate(const std::vector<CounterNet>& factors, const RefuteCaps& caps)
{
    RefuteResult res;
    std::vector<Acceptor> accs(factors.begin(), factors.end());
    const std::size_t t = factors.size() + 1;
    const std::size_t dim = t + 2;
    for (std::size_t bound = 0; bound <= caps.max_bound && !res.counterexample; ++bound) {
        // Shell: vectors with maximum coordinate exactly `bound`.
        GradedLex(dim, bound).each([&](const std::vector<std::size_t>& v) {
            if (bound > 0 && *std::max_element(v.begin(), v.end()) != bound)
                return false;
            ++res.stats.words_checked;
            SegmentedWord sw{{v.begin(), v.begin() + t}, v[t], v[t + 1]};
            Word w = zoo::render_segmented(sw);
            bool in_f = all_accept(accs, w);
            if (in_f == zoo::oracle_P(sw))
                return false;
            res.counterexample = w;
            res.factors_accept = in_f;
            return true;
        });
    }
    return res;
}

inline RefuteResult refute_guided(const std::vector<CounterNet>& factors, const RefuteCaps& caps)
{
    RefuteResult res;
    auto& st = res.stats;
    std::vector<Acceptor> accs(factors.begin(), factors.end());
    const std::size_t t = factors.size() + 1;
    WitnessCaps wc = caps.witness;
    wc.alpha = alpha(factors);
    const std::uint64_t a = wc.alpha;

    for (std::size_t l = 1; l <= t; ++l) {
        std::vector<BadSegmentWitness> ws;
        for (const auto& f : factors) {
            auto s = find_bad_segment_witness(f, l, t, wc);
            st.witness_words += s.words_tried;
            st.witness_runs += s.runs_examined;
            st.inconclusive = st.inconclusive || s.inconclusive;
            if (!s.witness)
                break;
            ws.push_back(std::move(*s.witness));
        }
        if (ws.size() != factors.size())
            continue;

        std::vector<PumpFamily> fams;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            auto f = lemma4_pump_family(ws[j], factors[j], caps.family);
            if (!f)
                break;
            fams.push_back(*f);
        }
        if (fams.size() != factors.size())
            continue;

        std::uint64_t X = 1, Y = 1, Z = 1;
        for (const auto& f : fams) {
            X *= f.x;
            Y *= f.y;
            Z *= f.z;
        }
        SegmentedWord base;
        base.segments.assign(t, 0);
        for (const auto& w : ws) {
            for (std::size_t i = 0; i < t; ++i)
                if (i + 1 != l)
                    base.segments[i] = std::max(base.segments[i], w.constants.segments[i]);
            base.mc = std::max(base.mc, w.constants.mc);
        }
        // L ascending from α, B ascending from 0, until every factor accepts.
        std::optional<std::pair<std::uint64_t, std::uint64_t>> LB;
        for (std::size_t li = 1; li <= caps.max_LB_multiple && !LB; ++li)
            for (std::size_t bi = 0; bi <= caps.max_LB_multiple && !LB; ++bi) {
                SegmentedWord w = base;
                w.segments[l - 1] = li * a;
                w.mb = bi * a;
                if (all_accept(accs, zoo::render_segmented(w)))
                    LB = std::pair{li * a, bi * a};
            }
        if (!LB)
            continue;
        base.segments[l - 1] = LB->first;
        base.mb = LB->second;
        PumpFamily global{X, Y, Z, base, l};
        for (std::size_t n = 0; n <= caps.max_n; ++n) {
            SegmentedWord sw = global.at(n);
            Word w = zoo::render_segmented(sw);
            ++st.words_checked;
            if (!all_accept(accs, w))
                break; // the family does not survive this far
            if (!zoo::oracle_P(sw)) {
                res.counterexample = w;
                res.factors_accept = true;
                st.bad_segment = l;
                st.witnesses = std::move(ws);
                st.families = std::move(fams);
                st.X = X, st.Y = Y, st.Z = Z, st.L = LB->first, st.B = LB->second, st.n = n;
                return res;
            }
        }
    }
    return res;
}

} // namespace detail

/// Looks for a word with k+1 segments (k = number of factors) on which the
/// factors' intersection and L(P) disagree. `enumerate` sweeps parameter
/// shells of growing maximum; `guided` assembles a pumped word from a segment
/// that is bad in every factor. Any returned word is re-verified.
inline RefuteResult refute_p_decomposition(const std::vector<CounterNet>& factors, Strategy strategy,
                                           const RefuteCaps& caps = {})
{
    detail::check_factors(factors);
    auto t0 = std::chrono::steady_clock::now();
    RefuteResult res = strategy == Strategy::enumerate ? detail::refute_enumerate(factors, caps)
                                                       : detail::refute_guided(factors, caps);
    res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.counterexample) {
        bool in_f = true;
        for (const auto& f : factors)
            in_f = in_f && accepts(f, *res.counterexample);
        auto sw = zoo::try_parse_segmented(*res.counterexample);
        if (!sw || in_f != res.factors_accept || in_f == zoo::oracle_P(*sw))
            throw Error("refute_p_decomposition: counterexample failed re-verification");
    }
    return res;
}

} // namespace cnet

#pragma once

// Colouring of runs on segmented words, the three witness forms for a bad
// segment, bounded witness search and pump-family search.

#include "cnet/pumping.hpp"
#include "cnet/zoo.hpp"

namespace cnet {

using zoo::SegmentedWord;

enum class FormTag { form_i, form_ii, form_iii, none };

inline const char* to_string(FormTag f)
{
    switch (f) {
    case FormTag::form_i: return "i";
    case FormTag::form_ii: return "ii";
    case FormTag::form_iii: return "iii";
    case FormTag::none: return "none";
    }
    return "?";
}

/// Cycle colours seen inside one block of the word.
struct SegmentColour {
    bool positive = false;    ///< some >0 cycle
    bool nonnegative = false; ///< some ≥0 cycle (a >0 one counts)
};

struct RunForm {
    std::vector<SegmentColour> segments; ///< a-segments 1..t
    SegmentColour b;
    SegmentColour c;
    std::size_t candidate = 0;
    bool matches_i = false, matches_ii = false, matches_iii = false;
    FormTag tag = FormTag::none;
};

/// Configuration spans [first, last] of each block of a segmented word.
struct SegmentSpans {
    std::vector<Scope> segments;
    Scope b;
    Scope c;
};

inline SegmentSpans segment_spans(const SegmentedWord& w)
{
    SegmentSpans s;
    std::size_t pos = 0;
    for (auto m : w.segments) {
        s.segments.push_back({pos, pos + m});
        pos += m + 1;
    }
    s.b = {pos, pos + w.mb};
    pos += w.mb;
    s.c = {pos, pos + w.mc};
    return s;
}

namespace detail {

inline SegmentColour colour(const Run& run, Scope s)
{
    return {has_cycle(run, s, SignClass::positive), has_cycle(run, s, SignClass::nonnegative)};
}

} // namespace detail

/// Colours every block and tests the forms for `candidate` (1-based). Extra
/// cycles of other colours never disqualify a form. The tag is the first
/// matching form in the order i, ii, iii.
inline RunForm classify_run_form(const Run& run, const SegmentedWord& w, std::size_t candidate)
{
    if (run.configurations.size() != zoo::render_segmented(w).size() + 1)
        throw Error("classify_run_form: run length does not match the word");
    if (candidate < 1 || candidate > w.segments.size())
        throw Error("classify_run_form: candidate segment out of range");
    auto spans = segment_spans(w);
    RunForm f;
    f.candidate = candidate;
    for (const auto& s : spans.segments)
        f.segments.push_back(detail::colour(run, s));
    f.b = detail::colour(run, spans.b);
    f.c = detail::colour(run, spans.c);

    bool before = true;
    for (std::size_t i = 0; i + 1 < candidate; ++i)
        before = before && f.segments[i].nonnegative;
    bool all_a = std::all_of(f.segments.begin(), f.segments.end(), [](auto s) { return s.nonnegative; });
    f.matches_i = before && f.segments[candidate - 1].positive;
    f.matches_ii = all_a && f.b.nonnegative && f.c.nonnegative;
    f.matches_iii = all_a && f.b.positive;
    f.tag = f.matches_i ? FormTag::form_i : f.matches_ii ? FormTag::form_ii : f.matches_iii ? FormTag::form_iii
                                                                                           : FormTag::none;
    return f;
}

inline RunForm classify_run_form(const CounterNet&, const Run& run, const SegmentedWord& w, std::size_t candidate)
{
    return classify_run_form(run, w, candidate);
}

// ------------------------------------------------------------ witness search

/// Graded-lexicographic enumeration of vectors in {0..K}^d: by total, then
/// larger leading coordinates first.
class GradedLex {
public:
    GradedLex(std::size_t dim, std::size_t max_coord) : dim_(dim), max_(max_coord) {}

    /// Calls f on each vector in order until f returns true. Returns whether
    /// f stopped the enumeration.
    template <class F> bool each(F&& f) const
    {
        std::vector<std::size_t> v(dim_, 0);
        for (std::size_t total = 0; total <= dim_ * max_; ++total)
            if (fill(v, 0, total, f))
                return true;
        return false;
    }

    template <class F> bool each_of_total(std::size_t total, F&& f) const
    {
        std::vector<std::size_t> v(dim_, 0);
        return fill(v, 0, total, f);
    }

private:
    template <class F> bool fill(std::vector<std::size_t>& v, std::size_t i, std::size_t rest, F& f) const
    {
        if (i + 1 == dim_ || dim_ == 0) {
            if (dim_ == 0)
                return rest == 0 && f(v);
            if (rest > max_)
                return false;
            v[i] = rest;
            return f(v);
        }
        for (std::size_t x = std::min(rest, max_) + 1; x-- > 0;) {
            if (rest - x > (dim_ - i - 1) * max_)
                break;
            v[i] = x;
            if (fill(v, i + 1, rest - x, f))
                return true;
        }
        return false;
    }

    std::size_t dim_;
    std::size_t max_;
};

struct WitnessCaps {
    std::size_t max_multiple = 2;   ///< constants range over {0, α, ..., Kα}
    std::size_t run_cap = 256;      ///< accepting runs enumerated per word
    std::uint64_t alpha = 0;        ///< 0: use |Q|! of the net
};

struct BadSegmentWitness {
    std::size_t segment = 0;
    SegmentedWord constants;
    Run run;
    FormTag form = FormTag::none;
    std::uint64_t alpha = 1;
};

struct WitnessSearch {
    std::optional<BadSegmentWitness> witness;
    bool inconclusive = false; ///< some word's run enumeration was truncated
    std::size_t words_tried = 0;
    std::size_t runs_examined = 0;
};

/// Smallest constants (graded-lex over multipliers of α) admitting an
/// accepting run of one of the three forms for `segment` on a word with t
/// segments.
inline WitnessSearch find_bad_segment_witness(const CounterNet& v, std::size_t segment, std::size_t t,
                                              const WitnessCaps& caps = {})
{
    if (segment < 1 || segment > t)
        throw Error("find_bad_segment_witness: segment out of range");
    const std::uint64_t a = caps.alpha ? caps.alpha : factorial(v.num_states());
    WitnessSearch out;
    if (caps.max_multiple == 0) {
        out.inconclusive = true;
        return out;
    }
    Acceptor acc(v);
    GradedLex gen(t + 2, caps.max_multiple);
    gen.each([&](const std::vector<std::size_t>& mult) {
        SegmentedWord sw;
        for (std::size_t i = 0; i < t; ++i)
            sw.segments.push_back(mult[i] * a);
        sw.mb = mult[t] * a;
        sw.mc = mult[t + 1] * a;
        ++out.words_tried;
        Word w = zoo::render_segmented(sw);
        if (!acc.accepts(w))
            return false;
        auto runs = enumerate_accepting_runs(v, w, v.zero(), caps.run_cap);
        for (auto& r : runs.runs) {
            ++out.runs_examined;
            auto form = classify_run_form(r, sw, segment);
            if (form.tag != FormTag::none) {
                out.witness = BadSegmentWitness{segment, sw, std::move(r), form.tag, a};
                return true;
            }
        }
        out.inconclusive = out.inconclusive || runs.cap_exceeded;
        return false;
    });
    return out;
}

/// Constants divisible by α, run accepting on the rendered word, form
/// reproduced by classification.
inline bool revalidate(const CounterNet& v, const BadSegmentWitness& w)
{
    auto div = [&](std::size_t x) { return x % w.alpha == 0; };
    if (!std::all_of(w.constants.segments.begin(), w.constants.segments.end(), div) || !div(w.constants.mb) ||
        !div(w.constants.mc))
        return false;
    if (!is_accepting_run(v, w.run, v.zero()) || run_word(v, w.run) != zoo::render_segmented(w.constants))
        return false;
    return classify_run_form(w.run, w.constants, w.segment).tag == w.form;
}

// --------------------------------------------------------------- pump family

struct PumpFamily {
    std::uint64_t x = 0, y = 0, z = 0;
    SegmentedWord base;
    std::size_t segment = 0; ///< 1-based index of the pumped a-segment

    [[nodiscard]] SegmentedWord at(std::size_t n) const
    {
        SegmentedWord w = base;
        w.segments[segment - 1] += x * n;
        w.mb += y * n;
        w.mc += z * n;
        return w;
    }
};

struct FamilyCaps {
    std::size_t max_multiple = 6; ///< x, y, z range over {α, ..., Kα}
    std::size_t horizon = 5;      ///< w_n checked for n = 0..horizon
};

/// Whether every w_n, n ≤ horizon, is accepted.
inline bool family_holds(const CounterNet& v, const PumpFamily& f, std::size_t horizon)
{
    Acceptor acc(v);
    for (std::size_t n = 0; n <= horizon; ++n)
        if (!acc.accepts(zoo::render_segmented(f.at(n))))
            return false;
    return true;
}

/// Coefficients found in the order z, then y, then x, each ascending over
/// multiples of α.
inline std::optional<PumpFamily> lemma4_pump_family(const BadSegmentWitness& w, const CounterNet& v,
                                                    const FamilyCaps& caps = {})
{
    const auto a = w.alpha;
    for (std::size_t zi = 1; zi <= caps.max_multiple; ++zi)
        for (std::size_t yi = 1; yi <= caps.max_multiple; ++yi)
            for (std::size_t xi = 1; xi <= caps.max_multiple; ++xi) {
                PumpFamily f{xi * a, yi * a, zi * a, w.constants, w.segment};
                if (family_holds(v, f, caps.horizon))
                    return f;
            }
    return std::nullopt;
}

} // namespace cnet

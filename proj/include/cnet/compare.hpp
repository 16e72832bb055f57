#pragma once

// Bounded language comparison between nets, intersections of nets and
// word-predicate oracles.

#include "cnet/core.hpp"
#include "cnet/forms.hpp"
#include "cnet/zoo.hpp"

#include <functional>
#include <memory>
#include <variant>

namespace cnet {

/// A language given by nets (intersection of their languages; an empty list
/// means Σ*) or by a membership predicate with an optional prefix test.
class Language {
public:
    using Predicate = std::function<bool(const Word&)>;

    static Language of(const CounterNet& net) { return intersection({net}); }

    static Language intersection(std::vector<CounterNet> nets)
    {
        Language l;
        l.kind_ = Kind::nets;
        l.nets_ = std::make_shared<std::vector<CounterNet>>(std::move(nets));
        for (const auto& n : *l.nets_)
            l.acceptors_.push_back(std::make_shared<Acceptor>(n));
        l.name_ = "∩{";
        for (std::size_t i = 0; i < l.nets_->size(); ++i)
            l.name_ += (i ? "," : "") + (*l.nets_)[i].name;
        l.name_ += "}";
        if (l.nets_->size() == 1)
            l.name_ = l.nets_->front().name;
        return l;
    }

    /// `prefix_live(u)` must be false only when no extension of u is a member.
    static Language oracle(std::string name, Predicate member, Predicate prefix_live = {})
    {
        Language l;
        l.kind_ = Kind::oracle;
        l.name_ = std::move(name);
        l.member_ = std::move(member);
        l.live_ = std::move(prefix_live);
        return l;
    }

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] bool is_oracle() const { return kind_ == Kind::oracle; }
    [[nodiscard]] bool has_prefix_test() const { return kind_ == Kind::nets || static_cast<bool>(live_); }

    [[nodiscard]] std::vector<Letter> alphabet() const
    {
        std::vector<Letter> out;
        if (kind_ == Kind::nets)
            for (const auto& n : *nets_)
                for (const auto& l : n.alphabet)
                    if (std::find(out.begin(), out.end(), l) == out.end())
                        out.push_back(l);
        return out;
    }

    [[nodiscard]] bool contains(const Word& w) const
    {
        if (kind_ == Kind::oracle)
            return member_(w);
        for (const auto& a : acceptors_)
            if (!a->accepts(w))
                return false;
        return true;
    }

    /// Incremental membership state along a word.
    struct Cursor {
        std::vector<Frontier> fronts;
        Word prefix;
        bool dead = false;
    };

    [[nodiscard]] Cursor start() const
    {
        Cursor c;
        if (kind_ == Kind::nets) {
            for (const auto& a : acceptors_) {
                c.fronts.push_back(a->initial_frontier(Vector(a->dimension(), 0)));
                c.dead = c.dead || c.fronts.back().empty();
            }
        } else {
            c.dead = live_ && !live_(c.prefix);
        }
        return c;
    }

    [[nodiscard]] Cursor step(const Cursor& c, const Letter& l) const
    {
        Cursor d;
        d.prefix = c.prefix;
        d.prefix.push_back(l);
        if (kind_ == Kind::nets) {
            for (std::size_t i = 0; i < acceptors_.size(); ++i) {
                d.fronts.push_back(c.dead ? Frontier(acceptors_[i]->num_states())
                                          : acceptors_[i]->step(c.fronts[i], l));
                d.dead = d.dead || d.fronts.back().empty();
            }
        } else {
            d.dead = c.dead || (live_ && !live_(d.prefix));
        }
        return d;
    }

    [[nodiscard]] bool accepting(const Cursor& c) const
    {
        if (c.dead)
            return false;
        if (kind_ == Kind::oracle)
            return member_(c.prefix);
        for (std::size_t i = 0; i < acceptors_.size(); ++i)
            if (!acceptors_[i]->accepting(c.fronts[i]))
                return false;
        return true;
    }

private:
    enum class Kind { nets, oracle };
    Kind kind_ = Kind::nets;
    std::string name_;
    std::shared_ptr<std::vector<CounterNet>> nets_;
    std::vector<std::shared_ptr<Acceptor>> acceptors_;
    Predicate member_;
    Predicate live_;
};

// --------------------------------------------------------------- generators

/// Every word over `alphabet` of length ≤ max_len, shortlex.
struct AllWords {
    std::vector<Letter> alphabet; ///< empty: union of both sides' alphabets
    std::size_t max_len = 0;
};

/// SegmentedWord parameters: t ≤ max_segments (or exactly, if fixed), every
/// parameter ≤ bound.
struct SegmentedBox {
    std::size_t max_segments = 3;
    std::size_t bound = 6;
    bool fixed_segments = false;
};

struct Fig1Box {
    std::size_t bound = 8;
};

struct LkBox {
    std::size_t k = 3;
    std::size_t bound = 5;
};

struct HkBox {
    std::size_t k = 2;
    std::size_t bound = 5;
};

/// ConjWord parameters for a fixed k.
struct ConjBox {
    std::size_t k = 2;
    std::size_t max_segments = 3;
    std::size_t bound = 6;
};

struct WordList {
    std::vector<Word> words;
};

using Generator = std::variant<AllWords, SegmentedBox, Fig1Box, LkBox, HkBox, ConjBox, WordList>;

enum class Verdict { equal, left_only, right_only, exhausted };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::left_only: return "left-only";
    case Verdict::right_only: return "right-only";
    case Verdict::exhausted: return "exhausted";
    }
    return "?";
}

struct ComparisonReport {
    Verdict verdict = Verdict::equal;
    std::optional<Word> counterexample;
    std::size_t words_checked = 0;
    std::size_t nodes = 0;
    double size_estimate = 0; ///< words the generator would produce

    [[nodiscard]] bool equal() const { return verdict == Verdict::equal; }
};

struct CompareOptions {
    /// Refuse generators whose unpruned size exceeds this.
    double hard_cap = 5e7;
    /// Stop with `exhausted` after this many search nodes.
    std::size_t node_budget = 50'000'000;
};

class GeneratorTooLarge : public CapExceeded {
public:
    GeneratorTooLarge(double estimate, double cap)
        : CapExceeded("generator would produce about " + std::to_string(static_cast<long long>(estimate)) +
                      " words, over the hard cap of " + std::to_string(static_cast<long long>(cap))),
          estimate_(estimate)
    {
    }
    [[nodiscard]] double estimate() const { return estimate_; }

private:
    double estimate_;
};

namespace detail {

inline double ipow(double b, std::size_t e)
{
    double r = 1;
    while (e--)
        r *= b;
    return r;
}

inline double estimate(const Generator& g, std::size_t alphabet_size)
{
    struct V {
        std::size_t s;
        double operator()(const AllWords& a) const
        {
            double t = 0;
            for (std::size_t n = 0; n <= a.max_len; ++n)
                t += ipow(static_cast<double>(a.alphabet.empty() ? s : a.alphabet.size()), n);
            return t;
        }
        double operator()(const SegmentedBox& b) const
        {
            double t = 0;
            for (std::size_t k = b.fixed_segments ? b.max_segments : 0; k <= b.max_segments; ++k)
                t += ipow(b.bound + 1.0, k + 2);
            return t;
        }
        double operator()(const Fig1Box& b) const { return ipow(b.bound + 1.0, 3); }
        double operator()(const LkBox& b) const { return ipow(b.bound + 1.0, b.k + 1) * b.k; }
        double operator()(const HkBox& b) const { return ipow(b.bound + 1.0, 2 * b.k); }
        double operator()(const ConjBox& b) const
        {
            double t = 0;
            for (std::size_t k = 0; k <= b.max_segments; ++k)
                t += ipow(b.bound + 1.0, k + b.k);
            return t;
        }
        double operator()(const WordList& w) const { return static_cast<double>(w.words.size()); }
    };
    return std::visit(V{alphabet_size}, g);
}

/// Feeds the words of a parameter-box generator to `f` until it returns true.
template <class F> bool each_box_word(const Generator& g, F&& f)
{
    auto vec = [](const std::vector<std::size_t>& v, std::size_t from, std::size_t n) {
        return std::vector<std::size_t>(v.begin() + from, v.begin() + from + n);
    };
    if (auto* b = std::get_if<SegmentedBox>(&g)) {
        for (std::size_t t = b->fixed_segments ? b->max_segments : 0; t <= b->max_segments; ++t)
            if (GradedLex(t + 2, b->bound).each([&](const auto& v) {
                    return f(zoo::render_segmented({vec(v, 0, t), v[t], v[t + 1]}));
                }))
                return true;
        return false;
    }
    if (auto* b = std::get_if<Fig1Box>(&g))
        return GradedLex(3, b->bound).each([&](const auto& v) { return f(zoo::render_fig1({v[0], v[1], v[2]})); });
    if (auto* b = std::get_if<LkBox>(&g)) {
        for (std::size_t sel = 1; sel <= b->k; ++sel)
            if (GradedLex(b->k + 1, b->bound).each([&](const auto& v) {
                    return f(zoo::render_Lk({vec(v, 0, b->k), sel, v[b->k]}));
                }))
                return true;
        return false;
    }
    if (auto* b = std::get_if<HkBox>(&g))
        return GradedLex(2 * b->k, b->bound).each([&](const auto& v) {
            return f(zoo::render_Hk({vec(v, 0, b->k), vec(v, b->k, b->k)}));
        });
    if (auto* b = std::get_if<ConjBox>(&g)) {
        for (std::size_t t = 0; t <= b->max_segments; ++t)
            if (GradedLex(t + b->k, b->bound).each([&](const auto& v) {
                    return f(zoo::render_conj({vec(v, 0, t), vec(v, t, b->k)}));
                }))
                return true;
        return false;
    }
    if (auto* b = std::get_if<WordList>(&g)) {
        for (const auto& w : b->words)
            if (f(w))
                return true;
        return false;
    }
    throw Error("each_box_word: not a box generator");
}

} // namespace detail

/// Compares two languages on the generator's words in order, stopping at the
/// first disagreement. AllWords is searched depth-first per length with a
/// prefix pruned once both sides are dead.
inline ComparisonReport bounded_compare(const Language& a, const Language& b, const Generator& gen,
                                        const CompareOptions& opt = {})
{
    ComparisonReport rep;
    auto decide = [&](const Word& w, bool in_a, bool in_b) {
        if (in_a == in_b)
            return false;
        // Re-verify through plain membership before reporting.
        if (a.contains(w) != in_a || b.contains(w) != in_b)
            throw Error("bounded_compare: counterexample failed re-verification");
        rep.verdict = in_a ? Verdict::left_only : Verdict::right_only;
        rep.counterexample = w;
        return true;
    };

    if (const auto* all = std::get_if<AllWords>(&gen)) {
        std::vector<Letter> sigma = all->alphabet;
        if (sigma.empty()) {
            sigma = a.alphabet();
            for (const auto& l : b.alphabet())
                if (std::find(sigma.begin(), sigma.end(), l) == sigma.end())
                    sigma.push_back(l);
        }
        rep.size_estimate = detail::estimate(AllWords{sigma, all->max_len}, sigma.size());
        if (!(a.has_prefix_test() && b.has_prefix_test()) && rep.size_estimate > opt.hard_cap)
            throw GeneratorTooLarge(rep.size_estimate, opt.hard_cap);
        bool stop = false;
        for (std::size_t len = 0; len <= all->max_len && !stop; ++len) {
            auto dfs = [&](auto&& self, const Language::Cursor& ca, const Language::Cursor& cb,
                           std::size_t depth) -> bool {
                if (++rep.nodes > opt.node_budget) {
                    rep.verdict = Verdict::exhausted;
                    return true;
                }
                if (ca.dead && cb.dead)
                    return false;
                if (depth == len) {
                    ++rep.words_checked;
                    return decide(ca.prefix, a.accepting(ca), b.accepting(cb));
                }
                for (const auto& l : sigma)
                    if (self(self, a.step(ca, l), b.step(cb, l), depth + 1))
                        return true;
                return false;
            };
            stop = dfs(dfs, a.start(), b.start(), 0);
        }
        return rep;
    }

    rep.size_estimate = detail::estimate(gen, 0);
    if (rep.size_estimate > opt.hard_cap)
        throw GeneratorTooLarge(rep.size_estimate, opt.hard_cap);
    detail::each_box_word(gen, [&](const Word& w) {
        ++rep.words_checked;
        ++rep.nodes;
        if (rep.nodes > opt.node_budget) {
            rep.verdict = Verdict::exhausted;
            return true;
        }
        return decide(w, a.contains(w), b.contains(w));
    });
    return rep;
}

/// Target against the intersection of the factors on the generator's words.
inline ComparisonReport check_decomposition(const Language& target, std::vector<CounterNet> factors,
                                            const Generator& gen, const CompareOptions& opt = {})
{
    return bounded_compare(target, Language::intersection(std::move(factors)), gen, opt);
}

// ------------------------------------------------------------ zoo oracles

namespace oracles {

inline Language P()
{
    return Language::oracle("oracle_P", zoo::oracle_P_word);
}

inline Language fig1()
{
    return Language::oracle("oracle_fig1", zoo::oracle_fig1_word);
}

inline Language Lk(std::size_t k)
{
    return Language::oracle("oracle_Lk", [k](const Word& w) { return zoo::oracle_Lk_word(k, w); });
}

inline Language Hk(std::size_t k)
{
    return Language::oracle("oracle_Hk", [k](const Word& w) { return zoo::oracle_Hk_word(k, w); });
}

inline Language Pk_conjecture(std::size_t k)
{
    return Language::oracle("oracle_Lk_conjecture",
                            [k](const Word& w) { return zoo::oracle_Lk_conjecture_word(k, w); });
}

} // namespace oracles

} // namespace cnet

#pragma once

// Concrete machines and independent set-builder oracles for their languages.

#include "cnet/constructions.hpp"
#include "cnet/core.hpp"
#include "cnet/notation.hpp"

#include <numeric>

namespace cnet::zoo {

namespace detail {

inline std::string idx(std::string_view base, std::size_t i) { return std::string(base) + "_" + std::to_string(i); }

inline EffectVector unit(std::size_t k, std::size_t i, std::int64_t sign = 1)
{
    EffectVector e(k, 0);
    e[i - 1] = sign;
    return e;
}

/// Splits a word into maximal blocks of equal letters.
inline std::vector<std::pair<Letter, std::size_t>> blocks(const Word& w)
{
    std::vector<std::pair<Letter, std::size_t>> out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().first == l)
            ++out.back().second;
        else
            out.emplace_back(l, 1);
    }
    return out;
}

/// Reads `letter^*` starting at `pos`, returning the count.
inline std::size_t take(const Word& w, std::size_t& pos, const Letter& letter)
{
    std::size_t n = 0;
    while (pos < w.size() && w[pos] == letter) {
        ++pos;
        ++n;
    }
    return n;
}

inline const Letter A{"a"}, B{"b"}, C{"c"}, HASH{"#"}, DOLLAR{"$"};

} // namespace detail

// ---------------------------------------------------------------- segmented

/// a^{m_1} # ... # a^{m_t} # b^{m_b} c^{m_c}
struct SegmentedWord {
    std::vector<std::size_t> segments;
    std::size_t mb = 0;
    std::size_t mc = 0;

    friend bool operator==(const SegmentedWord&, const SegmentedWord&) = default;
};

inline Word render_segmented(const SegmentedWord& s)
{
    Word w;
    for (auto m : s.segments) {
        w.insert(w.end(), m, detail::A);
        w.push_back(detail::HASH);
    }
    w.insert(w.end(), s.mb, detail::B);
    w.insert(w.end(), s.mc, detail::C);
    return w;
}

inline std::optional<SegmentedWord> try_parse_segmented(const Word& w, std::size_t* error_pos = nullptr)
{
    SegmentedWord s;
    std::size_t pos = 0;
    for (;;) {
        std::size_t save = pos;
        std::size_t m = detail::take(w, pos, detail::A);
        if (pos < w.size() && w[pos] == detail::HASH) {
            ++pos;
            s.segments.push_back(m);
            continue;
        }
        pos = save;
        break;
    }
    s.mb = detail::take(w, pos, detail::B);
    s.mc = detail::take(w, pos, detail::C);
    if (pos != w.size()) {
        if (error_pos)
            *error_pos = pos;
        return std::nullopt;
    }
    return s;
}

inline SegmentedWord parse_segmented(const Word& w)
{
    std::size_t pos = 0;
    if (auto s = try_parse_segmented(w, &pos))
        return *s;
    throw ParseError("malformed segmented word at position " + std::to_string(pos));
}

/// Exact: some I ⊆ [t] with Σ_I m_i ≥ m_b and Σ_{not I} m_i ≥ m_c.
inline bool oracle_P(const SegmentedWord& s)
{
    std::size_t total = std::accumulate(s.segments.begin(), s.segments.end(), std::size_t{0});
    if (total < s.mb + s.mc)
        return false;
    std::vector<char> reach(total + 1, 0);
    reach[0] = 1;
    for (auto m : s.segments)
        for (std::size_t v = total; v + 1 > m; --v)
            if (reach[v - m])
                reach[v] = 1;
    for (std::size_t v = s.mb; v <= total; ++v)
        if (reach[v] && total - v >= s.mc)
            return true;
    return false;
}

inline bool oracle_P_word(const Word& w)
{
    auto s = try_parse_segmented(w);
    return s && oracle_P(*s);
}

/// A hub state sends each a-segment to one of two counters, then
/// b spends counter 1 and c spends counter 2.
inline CounterNet build_P()
{
    NetBuilder b("P", 2);
    b.letters({"a", "b", "c", "#"});
    b.initial("hub").accepting("hub");
    b.trans("hub", "a", {1, 0}, "seg1").trans("seg1", "a", {1, 0}, "seg1").trans("seg1", "#", {0, 0}, "hub");
    b.trans("hub", "a", {0, 1}, "seg2").trans("seg2", "a", {0, 1}, "seg2").trans("seg2", "#", {0, 0}, "hub");
    b.trans("hub", "#", {0, 0}, "hub");
    b.trans("hub", "b", {-1, 0}, "b").trans("b", "b", {-1, 0}, "b");
    b.trans("hub", "c", {0, -1}, "c").trans("b", "c", {0, -1}, "c").trans("c", "c", {0, -1}, "c");
    b.accepting("b").accepting("c");
    return b.build();
}

namespace detail {

/// Segmented-shape 1-CN that credits every a and debits `debit_b` per b and
/// `debit_c` per c.
inline CounterNet coarse(std::string name, std::int64_t debit_b, std::int64_t debit_c)
{
    NetBuilder b(std::move(name), 1);
    b.letters({"a", "b", "c", "#"});
    b.initial("S").accepting("S").accepting("B").accepting("C");
    b.trans("S", "a", {1}, "S").trans("S", "#", {0}, "S");
    b.trans("S", "b", {-debit_b}, "B").trans("B", "b", {-debit_b}, "B");
    b.trans("S", "c", {-debit_c}, "C").trans("B", "c", {-debit_c}, "C").trans("C", "c", {-debit_c}, "C");
    return b.build();
}

} // namespace detail

/// Accepts segmented words with Σ m_i ≥ m_b (ignores how segments are split).
inline CounterNet build_coarse_b() { return detail::coarse("coarse_b", 1, 0); }

/// Accepts segmented words with Σ m_i ≥ m_c.
inline CounterNet build_coarse_c() { return detail::coarse("coarse_c", 0, 1); }

/// One accepting state looping on a, b, c, # with zero effect.
inline CounterNet build_universal_lambda()
{
    NetBuilder b("universal", 1);
    b.initial("u").accepting("u");
    for (auto l : {"a", "b", "c", "#"})
        b.trans("u", l, {0}, "u");
    return b.build();
}

// ---------------------------------------------------------------- fig. 1

struct Fig1 {
    CounterNet main;
    CounterNet factor1;
    CounterNet factor2;
};

struct Fig1Word {
    std::size_t m = 0, n = 0, k = 0;
};

inline Word render_fig1(const Fig1Word& p)
{
    Word w(p.m, detail::A);
    w.push_back(detail::HASH);
    w.insert(w.end(), p.n, detail::B);
    w.push_back(detail::HASH);
    w.insert(w.end(), p.k, detail::C);
    return w;
}

inline std::optional<Fig1Word> parse_fig1(const Word& w)
{
    Fig1Word p;
    std::size_t pos = 0;
    p.m = detail::take(w, pos, detail::A);
    if (pos >= w.size() || w[pos++] != detail::HASH)
        return std::nullopt;
    p.n = detail::take(w, pos, detail::B);
    if (pos >= w.size() || w[pos++] != detail::HASH)
        return std::nullopt;
    p.k = detail::take(w, pos, detail::C);
    if (pos != w.size())
        return std::nullopt;
    return p;
}

/// {a^m # b^n # c^k | m ≥ n ∧ m ≥ k}
inline bool oracle_fig1(const Fig1Word& p) { return p.m >= p.n && p.m >= p.k; }
inline bool oracle_fig1_factor1(const Fig1Word& p) { return p.m >= p.n; }
inline bool oracle_fig1_factor2(const Fig1Word& p) { return p.m >= p.k; }

inline bool oracle_fig1_word(const Word& w)
{
    auto p = parse_fig1(w);
    return p && oracle_fig1(*p);
}

namespace detail {

inline CounterNet fig1_shape(std::string name, std::size_t dim, EffectVector ea, EffectVector eb, EffectVector ec)
{
    NetBuilder b(std::move(name), dim);
    b.letters({"a", "b", "c", "#"});
    EffectVector zero(dim, 0);
    b.initial("s0").accepting("s2");
    b.trans("s0", "a", ea, "s0").trans("s0", "#", zero, "s1");
    b.trans("s1", "b", eb, "s1").trans("s1", "#", zero, "s2");
    b.trans("s2", "c", ec, "s2");
    return b.build();
}

} // namespace detail

inline Fig1 build_fig1()
{
    return {
        detail::fig1_shape("fig1", 2, {1, 1}, {-1, 0}, {0, -1}),
        detail::fig1_shape("fig1_factor1", 1, {1}, {-1}, {0}),
        detail::fig1_shape("fig1_factor2", 1, {1}, {0}, {-1}),
    };
}

// ---------------------------------------------------------------- L_k

/// a_1^{n_1} ... a_k^{n_k} b_i c^m
struct LkWord {
    std::vector<std::size_t> n;
    std::size_t selector = 1;
    std::size_t m = 0;
};

inline Word render_Lk(const LkWord& p)
{
    Word w;
    for (std::size_t i = 0; i < p.n.size(); ++i)
        w.insert(w.end(), p.n[i], Letter{detail::idx("a", i + 1)});
    w.emplace_back(detail::idx("b", p.selector));
    w.insert(w.end(), p.m, detail::C);
    return w;
}

inline std::optional<LkWord> parse_Lk(std::size_t k, const Word& w)
{
    LkWord p;
    std::size_t pos = 0;
    for (std::size_t i = 1; i <= k; ++i)
        p.n.push_back(detail::take(w, pos, Letter{detail::idx("a", i)}));
    if (pos >= w.size())
        return std::nullopt;
    bool found = false;
    for (std::size_t i = 1; i <= k; ++i)
        if (w[pos] == Letter{detail::idx("b", i)}) {
            p.selector = i;
            found = true;
        }
    if (!found)
        return std::nullopt;
    ++pos;
    p.m = detail::take(w, pos, detail::C);
    if (pos != w.size())
        return std::nullopt;
    return p;
}

inline bool oracle_Lk(const LkWord& p)
{
    return p.selector >= 1 && p.selector <= p.n.size() && p.n[p.selector - 1] >= p.m;
}

inline bool oracle_Lk_word(std::size_t k, const Word& w)
{
    auto p = parse_Lk(k, w);
    return p && oracle_Lk(*p);
}

inline std::vector<std::string> Lk_alphabet(std::size_t k)
{
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= k; ++i)
        out.push_back(detail::idx("a", i));
    for (std::size_t i = 1; i <= k; ++i)
        out.push_back(detail::idx("b", i));
    out.push_back("c");
    return out;
}

/// k-DCN counting each a_i block on its own counter.
inline CounterNet build_Lk_dcn(std::size_t k)
{
    if (k < 1)
        throw Error("build_Lk_dcn: k must be at least 1");
    NetBuilder b("Lk_dcn_" + std::to_string(k), k);
    for (const auto& l : Lk_alphabet(k))
        b.letter(l);
    EffectVector zero(k, 0);
    b.initial(detail::idx("A", 1));
    for (std::size_t j = 1; j <= k; ++j) {
        for (std::size_t l = j; l <= k; ++l)
            b.trans(detail::idx("A", j), detail::idx("a", l), detail::unit(k, l), detail::idx("A", l));
        for (std::size_t i = 1; i <= k; ++i)
            b.trans(detail::idx("A", j), detail::idx("b", i), zero, detail::idx("D", i));
    }
    for (std::size_t i = 1; i <= k; ++i) {
        b.trans(detail::idx("D", i), "c", detail::unit(k, i, -1), detail::idx("D", i));
        b.accepting(detail::idx("D", i));
    }
    return b.build();
}

/// 1-CN guessing the selector up front and counting only a_i.
inline CounterNet build_Lk_ncn(std::size_t k)
{
    if (k < 1)
        throw Error("build_Lk_ncn: k must be at least 1");
    NetBuilder b("Lk_ncn_" + std::to_string(k), 1);
    for (const auto& l : Lk_alphabet(k))
        b.letter(l);
    auto st = [](std::size_t i, std::size_t j) { return "G" + std::to_string(i) + "_" + std::to_string(j); };
    for (std::size_t i = 1; i <= k; ++i) {
        b.initial(st(i, 1));
        for (std::size_t j = 1; j <= k; ++j) {
            for (std::size_t l = j; l <= k; ++l)
                b.trans(st(i, j), detail::idx("a", l), {l == i ? 1 : 0}, st(i, l));
            b.trans(st(i, j), detail::idx("b", i), {0}, detail::idx("D", i));
        }
        b.trans(detail::idx("D", i), "c", {-1}, detail::idx("D", i));
        b.accepting(detail::idx("D", i));
    }
    return b.build();
}

// ---------------------------------------------------------------- H_k

/// a_1^{m_1} ... a_k^{m_k} b_1^{n_1} ... b_k^{n_k}
struct HkWord {
    std::vector<std::size_t> m;
    std::vector<std::size_t> n;
};

inline Word render_Hk(const HkWord& p)
{
    Word w;
    for (std::size_t i = 0; i < p.m.size(); ++i)
        w.insert(w.end(), p.m[i], Letter{detail::idx("a", i + 1)});
    for (std::size_t i = 0; i < p.n.size(); ++i)
        w.insert(w.end(), p.n[i], Letter{detail::idx("b", i + 1)});
    return w;
}

inline std::optional<HkWord> parse_Hk(std::size_t k, const Word& w)
{
    HkWord p;
    std::size_t pos = 0;
    for (std::size_t i = 1; i <= k; ++i)
        p.m.push_back(detail::take(w, pos, Letter{detail::idx("a", i)}));
    for (std::size_t i = 1; i <= k; ++i)
        p.n.push_back(detail::take(w, pos, Letter{detail::idx("b", i)}));
    if (pos != w.size())
        return std::nullopt;
    return p;
}

inline bool oracle_Hk(const HkWord& p)
{
    if (p.m.size() != p.n.size())
        return false;
    for (std::size_t i = 0; i < p.m.size(); ++i)
        if (p.m[i] < p.n[i])
            return false;
    return true;
}

inline bool oracle_Hk_word(std::size_t k, const Word& w)
{
    auto p = parse_Hk(k, w);
    return p && oracle_Hk(*p);
}

inline CounterNet build_Hk(std::size_t k)
{
    if (k < 1)
        throw Error("build_Hk: k must be at least 1");
    NetBuilder b("Hk_" + std::to_string(k), k);
    for (std::size_t i = 1; i <= k; ++i)
        b.letter(detail::idx("a", i));
    for (std::size_t i = 1; i <= k; ++i)
        b.letter(detail::idx("b", i));
    b.initial(detail::idx("A", 1));
    for (std::size_t j = 1; j <= k; ++j) {
        b.accepting(detail::idx("A", j));
        for (std::size_t l = j; l <= k; ++l)
            b.trans(detail::idx("A", j), detail::idx("a", l), detail::unit(k, l), detail::idx("A", l));
        for (std::size_t l = 1; l <= k; ++l)
            b.trans(detail::idx("A", j), detail::idx("b", l), detail::unit(k, l, -1), detail::idx("B", l));
    }
    for (std::size_t j = 1; j <= k; ++j) {
        b.accepting(detail::idx("B", j));
        for (std::size_t l = j; l <= k; ++l)
            b.trans(detail::idx("B", j), detail::idx("b", l), detail::unit(k, l, -1), detail::idx("B", l));
    }
    return b.build();
}

// ---------------------------------------------------------------- P_k family

/// a^{m_1} # ... # a^{m_t} # b_1^{n_1} # b_2^{n_2} ... # b_k^{n_k}
struct ConjWord {
    std::vector<std::size_t> segments;
    std::vector<std::size_t> targets;
};

inline Word render_conj(const ConjWord& p)
{
    Word w;
    for (auto m : p.segments) {
        w.insert(w.end(), m, detail::A);
        w.push_back(detail::HASH);
    }
    for (std::size_t i = 0; i < p.targets.size(); ++i) {
        if (i)
            w.push_back(detail::HASH);
        w.insert(w.end(), p.targets[i], Letter{detail::idx("b", i + 1)});
    }
    return w;
}

inline std::optional<ConjWord> parse_conj(std::size_t k, const Word& w)
{
    std::size_t hashes = std::count(w.begin(), w.end(), detail::HASH);
    if (k == 0 || hashes + 1 < k)
        return std::nullopt;
    ConjWord p;
    std::size_t pos = 0;
    for (std::size_t s = 0; s < hashes - (k - 1); ++s) {
        p.segments.push_back(detail::take(w, pos, detail::A));
        if (pos >= w.size() || w[pos++] != detail::HASH)
            return std::nullopt;
    }
    for (std::size_t i = 1; i <= k; ++i) {
        if (i > 1 && (pos >= w.size() || w[pos++] != detail::HASH))
            return std::nullopt;
        p.targets.push_back(detail::take(w, pos, Letter{detail::idx("b", i)}));
    }
    if (pos != w.size())
        return std::nullopt;
    return p;
}

/// Disjoint I_1..I_k ⊆ [t] with Σ_{I_i} m ≥ n_i; DP over k-tuples of partial
/// sums, each capped at its target.
inline bool oracle_Lk_conjecture(const ConjWord& p)
{
    const auto& n = p.targets;
    std::set<std::vector<std::size_t>> reach{std::vector<std::size_t>(n.size(), 0)};
    for (auto m : p.segments) {
        std::set<std::vector<std::size_t>> next = reach;
        for (const auto& v : reach)
            for (std::size_t i = 0; i < n.size(); ++i) {
                auto u = v;
                u[i] = std::min(n[i], u[i] + m);
                next.insert(std::move(u));
            }
        reach = std::move(next);
    }
    return reach.contains(n);
}

/// Same set-builder by brute force over all k^t assignments of segments.
inline bool oracle_Lk_conjecture_brute(const ConjWord& p)
{
    const std::size_t k = p.targets.size();
    const std::size_t t = p.segments.size();
    if (k == 0)
        return true;
    std::vector<std::size_t> assign(t, 0);
    for (;;) {
        std::vector<std::size_t> sums(k, 0);
        for (std::size_t j = 0; j < t; ++j)
            sums[assign[j]] += p.segments[j];
        bool ok = true;
        for (std::size_t i = 0; i < k; ++i)
            ok = ok && sums[i] >= p.targets[i];
        if (ok)
            return true;
        std::size_t j = 0;
        while (j < t && ++assign[j] == k)
            assign[j++] = 0;
        if (j == t)
            return false;
    }
}

inline bool oracle_Lk_conjecture_word(std::size_t k, const Word& w)
{
    auto p = parse_conj(k, w);
    return p && oracle_Lk_conjecture(*p);
}

/// k-counter generalisation of P: segments credit one of k counters, block i
/// of b_i spends counter i.
inline CounterNet build_Pk_conjecture(std::size_t k)
{
    if (k < 1)
        throw Error("build_Pk_conjecture: k must be at least 1");
    NetBuilder b("Pk_" + std::to_string(k), k);
    b.letters({"a", "#"});
    for (std::size_t i = 1; i <= k; ++i)
        b.letter(detail::idx("b", i));
    EffectVector zero(k, 0);
    b.initial("hub");
    b.trans("hub", "#", zero, "hub");
    for (std::size_t i = 1; i <= k; ++i) {
        auto seg = detail::idx("seg", i);
        b.trans("hub", "a", detail::unit(k, i), seg).trans(seg, "a", detail::unit(k, i), seg);
        b.trans(seg, "#", zero, "hub");
    }
    b.trans("hub", "b_1", detail::unit(k, 1, -1), "blk_1");
    for (std::size_t i = 1; i <= k; ++i) {
        auto blk = detail::idx("blk", i);
        b.trans(blk, detail::idx("b", i), detail::unit(k, i, -1), blk);
        if (i < k)
            b.trans(blk, "#", zero, detail::idx("blk", i + 1));
    }
    if (k >= 2)
        b.trans("hub", "#", zero, "blk_2");
    b.accepting(detail::idx("blk", k));
    if (k == 1)
        b.accepting("hub");
    return b.build();
}

/// P-side parameters as a k = 2 family word: b^{m_b} c^{m_c} ↦ b_1^{m_b} # b_2^{m_c}.
inline ConjWord segmented_as_conj(const SegmentedWord& s) { return {s.segments, {s.mb, s.mc}}; }

} // namespace cnet::zoo

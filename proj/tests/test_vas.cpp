#include "support.hpp"

#include <gtest/gtest.h>

using namespace cnet;
using namespace cnet::testing_support;

namespace {

CounterNet single_transition()
{
    NetBuilder b("one", 1);
    b.initial("p").accepting("q").trans("p", "x", {1}, "q");
    return b.build();
}

CounterNet plain_dfa()
{
    NetBuilder b("dfa", 0);
    b.initial("e").accepting("e");
    b.trans("e", "x", {}, "o").trans("o", "x", {}, "e").trans("e", "y", {}, "e").trans("o", "y", {}, "o");
    return b.build();
}

} // namespace

TEST(DistinctLabel, OneLetterPerTransition)
{
    auto d = zoo::build_Hk(2);
    auto l = vas::distinct_label(d);
    EXPECT_EQ(l.net.alphabet.size(), d.transitions.size());
    EXPECT_TRUE(vas::is_distinctly_labelled(l.net));
    EXPECT_EQ(l.net.transitions[0].letter, Letter{"g0"});
    for (std::size_t t = 0; t < d.transitions.size(); ++t) {
        EXPECT_EQ(l.labels.original[t], d.transitions[t].letter);
        EXPECT_EQ(l.net.transitions[t].effect, d.transitions[t].effect);
        EXPECT_EQ(l.labels.transition_of(l.labels.fresh[t]), t);
    }
    NetBuilder b("three", 1);
    b.initial("p").trans("p", "x", {1}, "p").trans("p", "y", {0}, "q").trans("q", "x", {-1}, "q");
    EXPECT_EQ(vas::distinct_label(b.build()).net.alphabet.size(), 3u);
}

TEST(DistinctLabel, RejectsNondeterministic)
{
    EXPECT_THROW(vas::distinct_label(zoo::build_P()), Error);
    EXPECT_THROW(vas::distinct_label(zoo::build_Lk_ncn(2)), Error);
}

TEST(DistinctLabel, WordsMatchAcceptingRuns)
{
    auto d = zoo::build_Hk(2);
    auto l = vas::distinct_label(d);
    for (std::size_t n = 0; n <= 6; ++n) {
        std::size_t runs = 0, labelled = 0;
        // Accepting runs of D of length n, counted through enumeration.
        each_word(d.alphabet, n, [&](const Word& w) {
            if (w.size() == n)
                runs += enumerate_accepting_runs(d, w, d.zero(), 1000).runs.size();
        });
        each_word(l.net.alphabet, n, [&](const Word& w) {
            if (w.size() == n && accepts(l.net, w))
                ++labelled;
        });
        EXPECT_EQ(runs, labelled) << "length " << n;
    }
}

TEST(DistinctLabel, UnlabelRecoversLanguage)
{
    auto d = zoo::build_Lk_dcn(2);
    auto l = vas::distinct_label(d);
    std::set<Word> images;
    each_word(l.net.alphabet, 4, [&](const Word& w) {
        if (accepts(l.net, w))
            images.insert(vas::unlabel(l.labels, w));
    });
    std::set<Word> direct;
    each_word(d.alphabet, 4, [&](const Word& w) {
        if (accepts(d, w))
            direct.insert(w);
    });
    EXPECT_EQ(images, direct);
    EXPECT_THROW(vas::unlabel(l.labels, W("a_1")), Error);
}

TEST(StateCodes, TwoStates)
{
    auto c = vas::state_codes(2);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].a, 1);
    EXPECT_EQ(c[1].a, 2);
    EXPECT_EQ(c[0].b, 6);
    EXPECT_EQ(c[1].b, 3);
}

TEST(HpVasify, Shape)
{
    auto c = vas::distinct_label(zoo::build_Hk(2)).net;
    auto u = vas::hp_vasify(c);
    EXPECT_EQ(u.net.num_states(), 1u);
    EXPECT_EQ(u.net.dimension, 5u);
    EXPECT_EQ(u.net.transitions.size(), 3 * c.transitions.size());
    EXPECT_TRUE(u.net.is_accepting(0));
    EXPECT_EQ(u.initial, (Vector{0, 0, 1, 20, 0})); // n = 4: a_1 = 1, b_1 = 5·4
    std::set<Letter> ys(u.net.alphabet.begin(), u.net.alphabet.end());
    EXPECT_EQ(ys.size(), u.net.alphabet.size());
    EXPECT_THROW(vas::hp_vasify(zoo::build_Hk(2)), Error);
}

TEST(HpVasify, TripleRestoresTargetCode)
{
    auto c = vas::distinct_label(zoo::build_Lk_dcn(2)).net;
    auto u = vas::hp_vasify(c);
    const std::size_t k = c.dimension;
    for (std::size_t t = 0; t < c.transitions.size(); ++t) {
        Vector sum(k + 3, 0);
        for (int p = 0; p < 3; ++p)
            sum = add(sum, u.net.transitions[3 * t + p].effect);
        auto ci = u.codes[c.transitions[t].source], cj = u.codes[c.transitions[t].target];
        EXPECT_EQ(sum[k], cj.a - ci.a);
        EXPECT_EQ(sum[k + 1], cj.b - ci.b);
        EXPECT_EQ(sum[k + 2], 0);
        for (std::size_t x = 0; x < k; ++x)
            EXPECT_EQ(sum[x], c.transitions[t].effect[x]);
    }
}

TEST(HpVasify, ZeroCompletedSecondPhaseDrifts)
{
    // With the second-phase third component left at 0, a full triple from
    // q_i leaves b_{n+1-i} - a_i = n·i on the last control counter.
    const std::int64_t n = 3;
    auto codes = vas::state_codes(n);
    for (std::int64_t i = 1; i <= n; ++i) {
        auto ci = codes[i - 1], cm = codes[n - i];
        std::int64_t c3 = 0;
        c3 += cm.b; // first phase
        c3 += 0;    // second phase, zero-completed
        c3 += -ci.a;
        EXPECT_EQ(c3, n * i);
        EXPECT_NE(c3, 0);
    }
}

TEST(Triplet, Examples)
{
    EXPECT_EQ(vas::triplet_transform(W("g h"), 1), W("g.1 g.2 g.3 h.1"));
    EXPECT_EQ(vas::triplet_transform(W("g"), 3), W("g.1 g.2 g.3"));
    for (int s = 1; s <= 3; ++s)
        EXPECT_TRUE(vas::triplet_transform(Word{}, s).empty());
    EXPECT_THROW(vas::triplet_transform(W("g"), 0), Error);
    EXPECT_THROW(vas::triplet_transform(W("g"), 4), Error);
}

TEST(Triplet, PrefixConsistentAndInjective)
{
    auto sigma = letters({"g", "h"});
    for (int s = 1; s <= 3; ++s) {
        std::set<Word> seen;
        each_word(sigma, 4, [&](const Word& w) {
            auto img = vas::triplet_transform(w, s);
            EXPECT_TRUE(seen.insert(img).second);
            if (s < 3) {
                auto next = vas::triplet_transform(w, s + 1);
                EXPECT_TRUE(std::equal(img.begin(), img.end(), next.begin()));
            }
        });
    }
}

TEST(Triplet, Preimage)
{
    auto c = vas::distinct_label(single_transition()).net;
    auto u = vas::hp_vasify(c);
    auto pre = vas::triplet_preimage(u, c, W("g0.1 g0.2"));
    ASSERT_TRUE(pre);
    EXPECT_EQ(pre->first, W("g0"));
    EXPECT_EQ(pre->second, 2);
    EXPECT_FALSE(vas::triplet_preimage(u, c, W("g0.2")));
}

TEST(HpVasify, SingleTransitionLanguage)
{
    auto c = vas::distinct_label(single_transition()).net;
    auto u = vas::hp_vasify(c);
    std::set<Word> got;
    each_word(u.net.alphabet, 3, [&](const Word& w) {
        if (!w.empty() && accepts(u.net, w, u.initial))
            got.insert(w);
    });
    EXPECT_EQ(got, (std::set<Word>{W("g0.1"), W("g0.1 g0.2"), W("g0.1 g0.2 g0.3")}));
}

TEST(Gating, HoldsOnZoo)
{
    for (const auto& d : {zoo::build_Hk(2), zoo::build_Lk_dcn(2), single_transition()}) {
        auto c = vas::distinct_label(d).net;
        auto u = vas::hp_vasify(c);
        auto g = vas::check_gating(u, c, 9);
        EXPECT_TRUE(g.phase_gating_holds()) << d.name << ": " << g.phase_violations.front().what;
        EXPECT_GT(g.valuations_explored, 1u);
    }
}

TEST(Gating, SiblingsAreReportedSeparately)
{
    // A_1 has several outgoing transitions whose second phases are all
    // enabled after any first phase out of A_1.
    auto c = vas::distinct_label(zoo::build_Hk(2)).net;
    auto g = vas::check_gating(vas::hp_vasify(c), c, 6);
    EXPECT_TRUE(g.phase_gating_holds());
    EXPECT_FALSE(g.strict_gating_holds());
    // With a single outgoing transition per state there is nothing to mix.
    auto c1 = vas::distinct_label(single_transition()).net;
    EXPECT_TRUE(vas::check_gating(vas::hp_vasify(c1), c1, 6).strict_gating_holds());
}

TEST(Pipeline, HkTwo)
{
    auto res = vas::verify_pipeline(zoo::build_Hk(2), 6, 9);
    const auto& r = res.report;
    EXPECT_TRUE(r.bijection_holds);
    EXPECT_TRUE(r.containment_violations.empty());
    EXPECT_TRUE(r.gating.phase_gating_holds());
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.labelled_words, r.original_words);
    EXPECT_GT(r.images_checked, 0u);
    // Incomplete triples of transitions that C cannot take show up as extras.
    EXPECT_GT(r.anomaly_count, 0u);
}

TEST(Pipeline, PlainDfa)
{
    auto res = vas::verify_pipeline(plain_dfa(), 5);
    EXPECT_TRUE(res.report.ok());
    EXPECT_EQ(res.vas.net.dimension, 3u);
}

TEST(Pipeline, RejectsNondeterministic) { EXPECT_THROW(vas::verify_pipeline(zoo::build_P(), 3), Error); }

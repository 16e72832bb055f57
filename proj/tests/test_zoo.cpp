#include "support.hpp"

#include <gtest/gtest.h>

using namespace cnet;
using namespace cnet::testing_support;
using zoo::SegmentedWord;

namespace {

/// Brute force over all 2^t subsets.
bool subset_oracle(const SegmentedWord& s)
{
    const std::size_t t = s.segments.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << t); ++mask) {
        std::size_t in = 0, out = 0;
        for (std::size_t i = 0; i < t; ++i)
            ((mask >> i) & 1 ? in : out) += s.segments[i];
        if (in >= s.mb && out >= s.mc)
            return true;
    }
    return false;
}

} // namespace

TEST(P, ExampleTwoCases)
{
    auto p = zoo::build_P();
    EXPECT_TRUE(accepts(p, W("a^10 # a^20 # a^15 # b^15 c^30")));
    EXPECT_FALSE(accepts(p, W("a^10 # a^20 # a^15 # b^21 c^21")));
    EXPECT_TRUE(zoo::oracle_P({{10, 20, 15}, 15, 30}));
    EXPECT_FALSE(zoo::oracle_P({{10, 20, 15}, 21, 21}));
    EXPECT_FALSE(zoo::oracle_P({{1, 1}, 2, 2}));
}

TEST(P, EmptyWord)
{
    EXPECT_TRUE(zoo::oracle_P({{}, 0, 0}));
    EXPECT_EQ(accepts(zoo::build_P(), Word{}), zoo::oracle_P({{}, 0, 0}));
}

TEST(P, OracleMatchesBruteForce)
{
    for (std::size_t t = 0; t <= 4; ++t)
        GradedLex(t + 2, 4).each([&](const std::vector<std::size_t>& v) {
            SegmentedWord s{{v.begin(), v.begin() + t}, v[t], v[t + 1]};
            EXPECT_EQ(zoo::oracle_P(s), subset_oracle(s));
            return false;
        });
}

TEST(P, MachineMatchesOracleOnSmallBox)
{
    auto rep = bounded_compare(Language::of(zoo::build_P()), oracles::P(), SegmentedBox{3, 4});
    EXPECT_TRUE(rep.equal()) << (rep.counterexample ? format_word(*rep.counterexample) : "");
}

TEST(P, OracleMonotone)
{
    GradedLex(5, 4).each([&](const std::vector<std::size_t>& v) {
        SegmentedWord s{{v[0], v[1], v[2]}, v[3], v[4]};
        if (!zoo::oracle_P(s))
            return false;
        for (int i = 0; i < 3; ++i) {
            auto u = s;
            ++u.segments[i];
            EXPECT_TRUE(zoo::oracle_P(u));
        }
        auto u = s;
        if (u.mb) {
            --u.mb;
            EXPECT_TRUE(zoo::oracle_P(u));
        }
        u = s;
        if (u.mc) {
            --u.mc;
            EXPECT_TRUE(zoo::oracle_P(u));
        }
        return false;
    });
}

TEST(P, NonSegmentedWordsRejected)
{
    auto p = zoo::build_P();
    for (const char* w : {"b a", "a", "c b", "a # c b", "# a"}) {
        EXPECT_FALSE(zoo::oracle_P_word(W(w))) << w;
        EXPECT_FALSE(accepts(p, W(w))) << w;
    }
}

TEST(Segmented, RoundTrip)
{
    SegmentedWord s{{2}, 1, 1};
    EXPECT_EQ(zoo::render_segmented(s), W("a^2 # b c"));
    EXPECT_EQ(zoo::parse_segmented(W("a^2 # b c")), s);
    EXPECT_EQ(zoo::render_segmented({{0, 0}, 0, 0}), W("# #"));
    GradedLex(5, 3).each([](const std::vector<std::size_t>& v) {
        SegmentedWord s{{v[0], v[1], v[2]}, v[3], v[4]};
        EXPECT_EQ(zoo::parse_segmented(zoo::render_segmented(s)), s);
        return false;
    });
}

TEST(Segmented, MalformedReportsPosition)
{
    try {
        zoo::parse_segmented(W("b a"));
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("malformed segmented word at position 1"), std::string::npos);
    }
    EXPECT_THROW(zoo::parse_segmented(W("a # c b")), ParseError);
}

TEST(Fig1, CaptionCases)
{
    auto f = zoo::build_fig1();
    auto all = [&](std::size_t m, std::size_t n, std::size_t k) {
        Word w = zoo::render_fig1({m, n, k});
        return std::tuple{accepts(f.main, w), accepts(f.factor1, w), accepts(f.factor2, w)};
    };
    EXPECT_EQ(all(3, 2, 3), std::tuple(true, true, true));
    EXPECT_EQ(all(3, 4, 1), std::tuple(false, false, true));
    EXPECT_EQ(all(0, 0, 0), std::tuple(true, true, true));
}

TEST(Fig1, MachinesMatchOracles)
{
    auto f = zoo::build_fig1();
    GradedLex(3, 6).each([&](const std::vector<std::size_t>& v) {
        zoo::Fig1Word p{v[0], v[1], v[2]};
        Word w = zoo::render_fig1(p);
        EXPECT_EQ(accepts(f.main, w), zoo::oracle_fig1(p));
        EXPECT_EQ(accepts(f.factor1, w), zoo::oracle_fig1_factor1(p));
        EXPECT_EQ(accepts(f.factor2, w), zoo::oracle_fig1_factor2(p));
        EXPECT_EQ(zoo::parse_fig1(w)->m, p.m);
        return false;
    });
}

TEST(Lk, DefinitionCases)
{
    for (const auto& net : {zoo::build_Lk_dcn(3), zoo::build_Lk_ncn(3)}) {
        EXPECT_TRUE(accepts(net, zoo::render_Lk({{2, 0, 1}, 1, 2}))) << net.name;
        EXPECT_FALSE(accepts(net, zoo::render_Lk({{2, 0, 1}, 3, 2}))) << net.name;
        for (std::size_t sel = 1; sel <= 3; ++sel)
            EXPECT_TRUE(accepts(net, zoo::render_Lk({{0, 0, 0}, sel, 0})));
    }
}

TEST(Lk, Determinism)
{
    for (std::size_t k = 1; k <= 4; ++k) {
        EXPECT_TRUE(is_deterministic(zoo::build_Lk_dcn(k)));
        EXPECT_EQ(is_deterministic(zoo::build_Lk_ncn(k)), k == 1) << k;
    }
}

TEST(Lk, MachinesMatchOracle)
{
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& net : {zoo::build_Lk_dcn(k), zoo::build_Lk_ncn(k)}) {
            auto rep = bounded_compare(Language::of(net), oracles::Lk(k), LkBox{k, 3});
            EXPECT_TRUE(rep.equal()) << net.name;
        }
}

TEST(Lk, OracleRejectsOtherShapes)
{
    EXPECT_FALSE(zoo::oracle_Lk_word(2, W("a_2 a_1 b_1")));
    EXPECT_FALSE(zoo::oracle_Lk_word(2, W("a_1 c")));
    EXPECT_FALSE(zoo::oracle_Lk_word(2, W("a_1 b_1 b_1")));
    EXPECT_TRUE(zoo::oracle_Lk_word(2, W("a_1 a_2 b_2 c")));
}

TEST(Hk, DefinitionCases)
{
    auto h = zoo::build_Hk(2);
    EXPECT_TRUE(accepts(h, zoo::render_Hk({{3, 1}, {2, 1}})));
    EXPECT_FALSE(accepts(h, zoo::render_Hk({{3, 1}, {2, 2}})));
    EXPECT_TRUE(accepts(h, Word{}));
    EXPECT_TRUE(is_deterministic(h));
}

TEST(Hk, MachinesMatchOracle)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        auto rep = bounded_compare(Language::of(zoo::build_Hk(k)), oracles::Hk(k), HkBox{k, 3});
        EXPECT_TRUE(rep.equal()) << k;
    }
}

TEST(Hk, AllWordsAgainstOracle)
{
    auto rep = bounded_compare(Language::of(zoo::build_Hk(2)), oracles::Hk(2), AllWords{{}, 6});
    EXPECT_TRUE(rep.equal()) << (rep.counterexample ? format_word(*rep.counterexample) : "");
}

TEST(Conjecture, OracleCases)
{
    EXPECT_TRUE(zoo::oracle_Lk_conjecture({{}, {0, 0}}));
    EXPECT_FALSE(zoo::oracle_Lk_conjecture({{5, 5, 5}, {5, 5, 6}}));
    EXPECT_FALSE(zoo::oracle_Lk_conjecture_brute({{5, 5, 5}, {5, 5, 6}}));
    EXPECT_TRUE(zoo::oracle_Lk_conjecture({{5, 5, 5}, {5, 5, 5}}));
}

TEST(Conjecture, DpMatchesBruteForce)
{
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t t = 0; t <= 3; ++t)
            GradedLex(t + k, 3).each([&](const std::vector<std::size_t>& v) {
                zoo::ConjWord p{{v.begin(), v.begin() + t}, {v.begin() + t, v.end()}};
                EXPECT_EQ(zoo::oracle_Lk_conjecture(p), zoo::oracle_Lk_conjecture_brute(p));
                return false;
            });
}

TEST(Conjecture, KOneIsTotalSum)
{
    GradedLex(4, 4).each([](const std::vector<std::size_t>& v) {
        zoo::ConjWord p{{v[0], v[1], v[2]}, {v[3]}};
        EXPECT_EQ(zoo::oracle_Lk_conjecture(p), v[0] + v[1] + v[2] >= v[3]);
        return false;
    });
}

TEST(Conjecture, KTwoMatchesP)
{
    auto pk = zoo::build_Pk_conjecture(2);
    for (std::size_t t = 0; t <= 3; ++t)
        GradedLex(t + 2, 4).each([&](const std::vector<std::size_t>& v) {
            SegmentedWord s{{v.begin(), v.begin() + t}, v[t], v[t + 1]};
            auto c = zoo::segmented_as_conj(s);
            EXPECT_EQ(zoo::oracle_Lk_conjecture(c), zoo::oracle_P(s));
            EXPECT_EQ(accepts(pk, zoo::render_conj(c)), zoo::oracle_P(s)) << format_word(zoo::render_conj(c));
            return false;
        });
}

TEST(Conjecture, MachinesMatchOracle)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        auto rep = bounded_compare(Language::of(zoo::build_Pk_conjecture(k)), oracles::Pk_conjecture(k),
                                   ConjBox{k, 3, 3});
        EXPECT_TRUE(rep.equal()) << k << " " << (rep.counterexample ? format_word(*rep.counterexample) : "");
    }
}

TEST(Conjecture, ParseRoundTrip)
{
    zoo::ConjWord p{{2, 0}, {1, 3}};
    Word w = zoo::render_conj(p);
    EXPECT_EQ(w, W("a^2 # # b_1 # b_2^3"));
    auto q = zoo::parse_conj(2, w);
    ASSERT_TRUE(q);
    EXPECT_EQ(q->segments, p.segments);
    EXPECT_EQ(q->targets, p.targets);
    EXPECT_FALSE(zoo::parse_conj(2, W("a b_1")));
}

TEST(Coarse, Languages)
{
    auto b = zoo::build_coarse_b(), c = zoo::build_coarse_c();
    GradedLex(5, 3).each([&](const std::vector<std::size_t>& v) {
        SegmentedWord s{{v[0], v[1], v[2]}, v[3], v[4]};
        Word w = zoo::render_segmented(s);
        EXPECT_EQ(accepts(b, w), v[0] + v[1] + v[2] >= v[3]);
        EXPECT_EQ(accepts(c, w), v[0] + v[1] + v[2] >= v[4]);
        return false;
    });
    auto u = zoo::build_universal_lambda();
    each_word(u.alphabet, 5, [&](const Word& w) { ASSERT_TRUE(accepts(u, w)); });
}

TEST(Refs, ZooNames)
{
    EXPECT_EQ(resolve_machine("zoo:P"), zoo::build_P());
    EXPECT_EQ(resolve_machine("zoo:fig1"), zoo::build_fig1().main);
    EXPECT_EQ(resolve_machine("zoo:fig1.factor2"), zoo::build_fig1().factor2);
    EXPECT_EQ(resolve_machine("zoo:Lk3.ncn"), zoo::build_Lk_ncn(3));
    EXPECT_EQ(resolve_machine("zoo:Hk2"), zoo::build_Hk(2));
    EXPECT_EQ(resolve_machine("zoo:PkConj2"), zoo::build_Pk_conjecture(2));
    EXPECT_THROW(resolve_machine("zoo:Hk"), Error);
    EXPECT_THROW(resolve_machine("zoo:nope"), Error);
    EXPECT_THROW(resolve_machine("oracle:P"), Error);
    EXPECT_TRUE(resolve_language("oracle:Hk2").is_oracle());
    EXPECT_FALSE(resolve_language("zoo:Hk2").is_oracle());
}

// Randomised property checks against brute-force oracles.

#include "support.hpp"

#include <gtest/gtest.h>

using namespace cnet;
using namespace cnet::testing_support;

namespace {

/// Plain path search; no frontier, no pruning.
bool brute_accepts(const CounterNet& n, const Word& w, const Vector& v0)
{
    auto dfs = [&](auto&& self, StateId q, const Vector& v, std::size_t i) -> bool {
        if (i == w.size())
            return n.is_accepting(q);
        for (const auto& t : n.transitions) {
            if (t.source != q || t.letter != w[i])
                continue;
            Vector u = v;
            bool ok = true;
            for (std::size_t c = 0; c < u.size(); ++c)
                ok = ok && (u[c] += t.effect[c]) >= 0;
            if (ok && self(self, t.target, u, i + 1))
                return true;
        }
        return false;
    };
    for (auto q : n.initial)
        if (dfs(dfs, q, v0, 0))
            return true;
    return false;
}

/// A random deterministic net: one initial state, at most one move per (state, letter).
CounterNet random_dcn(std::mt19937_64& rng, std::size_t dim)
{
    auto states = 1 + rng() % 4;
    NetBuilder b("D", dim);
    b.letters({"x", "y"});
    b.initial("q0");
    for (std::size_t q = 0; q < states; ++q) {
        auto name = "q" + std::to_string(q);
        b.state(name);
        if (rng() % 2)
            b.accepting(name);
        for (const char* l : {"x", "y"})
            if (rng() % 4 != 0) {
                EffectVector e(dim);
                for (auto& x : e)
                    x = static_cast<std::int64_t>(rng() % 5) - 2;
                b.trans(name, l, e, "q" + std::to_string(rng() % states));
            }
    }
    return b.build();
}

bool has_cycle_with(const cnet::Run& r, bool strict)
{
    const auto& cs = r.configurations;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (cs[i].state == cs[j].state &&
                (strict ? cs[j].counters[0] > cs[i].counters[0] : cs[j].counters[0] >= cs[i].counters[0]))
                return true;
    return false;
}

RandomNetParams unary_params()
{
    RandomNetParams p;
    p.max_states = 3;
    p.min_effect = -1;
    p.max_effect = 1;
    p.alphabet = {"x"};
    return p;
}

} // namespace

TEST(Properties, ProductLaw)
{
    std::mt19937_64 rng(1);
    RandomNetParams p;
    for (int i = 0; i < 50; ++i) {
        auto a = random_net(rng, p, "A"), b = random_net(rng, p, "B");
        auto ab = product(a, b);
        for (std::size_t len = 0; len <= 6; ++len)
            each_word(a.alphabet, len, [&](const Word& w) {
                ASSERT_EQ(accepts(ab, w), brute_accepts(a, w, {0}) && brute_accepts(b, w, {0}));
            });
    }
}

TEST(Properties, AntichainMatchesBruteForce)
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 60; ++i) {
        RandomNetParams p;
        p.dimension = 1 + i % 3;
        auto n = random_net(rng, p);
        Vector v0(p.dimension);
        for (auto& x : v0)
            x = static_cast<std::int64_t>(rng() % 2);
        for (std::size_t len = 0; len <= 6; ++len)
            each_word(n.alphabet, len, [&](const Word& w) {
                ASSERT_EQ(accepts(n, w, v0), brute_accepts(n, w, v0));
                ASSERT_EQ(accepts_naive(n, w, v0), brute_accepts(n, w, v0));
            });
    }
}

TEST(Properties, FrontierStaysAntichain)
{
    std::mt19937_64 rng(3);
    RandomNetParams p;
    p.dimension = 2;
    for (int i = 0; i < 40; ++i) {
        auto n = random_net(rng, p);
        Acceptor acc(n);
        auto f = acc.initial_frontier({1, 1});
        for (int s = 0; s < 12; ++s) {
            f = acc.step(f, rng() % n.alphabet.size());
            ASSERT_TRUE(f.is_antichain());
        }
    }
}

TEST(Properties, DominationMonotonicity)
{
    std::mt19937_64 rng(4);
    RandomNetParams p;
    p.dimension = 2;
    for (int i = 0; i < 40; ++i) {
        auto n = random_net(rng, p);
        Vector v{static_cast<std::int64_t>(rng() % 2), static_cast<std::int64_t>(rng() % 2)};
        Vector bigger{v[0] + static_cast<std::int64_t>(rng() % 3), v[1] + static_cast<std::int64_t>(rng() % 3)};
        for (std::size_t len = 0; len <= 6; ++len)
            each_word(n.alphabet, len, [&](const Word& w) {
                ASSERT_TRUE(!accepts(n, w, v) || accepts(n, w, bigger));
            });
    }
}

TEST(Properties, EnumeratedRunsAreValidAndBounded)
{
    std::mt19937_64 rng(5);
    RandomNetParams p;
    p.dimension = 2;
    for (int i = 0; i < 40; ++i) {
        auto n = random_net(rng, p);
        const auto W = max_positive_update(n);
        for (std::size_t len = 0; len <= 5; ++len)
            each_word(n.alphabet, len, [&](const Word& w) {
                auto runs = enumerate_accepting_runs(n, w, n.zero(), 1000);
                ASSERT_EQ(runs.runs.empty(), !brute_accepts(n, w, n.zero()));
                for (const auto& r : runs.runs) {
                    ASSERT_TRUE(is_accepting_run(n, r, n.zero()));
                    ASSERT_EQ(run_word(n, r), w);
                    for (const auto& c : r.configurations)
                        for (auto x : c.counters)
                            ASSERT_LE(x, static_cast<std::int64_t>(len) * W);
                }
            });
    }
}

TEST(Properties, DeterministicNetsAreComposite)
{
    std::mt19937_64 rng(6);
    for (int i = 0; i < 40; ++i) {
        auto d = random_dcn(rng, 1 + i % 3);
        ASSERT_TRUE(is_deterministic(d));
        std::vector<CounterNet> ps;
        for (std::size_t c = 1; c <= d.dimension; ++c)
            ps.push_back(project(d, c));
        for (std::size_t len = 0; len <= 7; ++len)
            each_word(d.alphabet, len, [&](const Word& w) {
                bool all = true;
                for (const auto& p : ps)
                    all = all && accepts(p, w);
                ASSERT_EQ(accepts(d, w), all);
            });
    }
}

TEST(Properties, ProjectionOverApproximates)
{
    std::mt19937_64 rng(7);
    RandomNetParams p;
    p.dimension = 2;
    for (int i = 0; i < 30; ++i) {
        auto n = random_net(rng, p);
        auto p1 = project(n, 1), p2 = project(n, 2);
        for (std::size_t len = 0; len <= 6; ++len)
            each_word(n.alphabet, len, [&](const Word& w) {
                ASSERT_TRUE(!accepts(n, w) || (accepts(p1, w) && accepts(p2, w)));
            });
    }
}

TEST(Properties, LiftAndUnion)
{
    std::mt19937_64 rng(8);
    RandomNetParams p;
    for (int i = 0; i < 30; ++i) {
        auto a = random_net(rng, p, "A"), b = random_net(rng, p, "B");
        auto la = lift(a, 3, {2});
        auto u = net_union(a, b);
        for (std::size_t len = 0; len <= 7; ++len)
            each_word(a.alphabet, len, [&](const Word& w) {
                ASSERT_EQ(accepts(la, w), accepts(a, w));
                ASSERT_EQ(accepts(u, w), brute_accepts(a, w, {0}) || brute_accepts(b, w, {0}));
            });
    }
}

TEST(Properties, NoPositiveCycleRunsStayBelowBound)
{
    std::mt19937_64 rng(9);
    std::size_t runs_checked = 0;
    for (int i = 0; i < 60; ++i) {
        auto n = random_net(rng, unary_params());
        const auto W = max_positive_update(n);
        const auto Q = static_cast<std::int64_t>(n.num_states());
        for (StateId q = 0; q < n.num_states(); ++q)
            for (std::int64_t c0 = 0; c0 <= 2; ++c0)
                for (std::size_t N = 0; N <= 10; ++N) {
                    auto runs = enumerate_runs_from(n, repeat(Letter{"x"}, N), q, {c0}, 20000);
                    ASSERT_FALSE(runs.cap_exceeded);
                    for (const auto& r : runs.runs) {
                        if (has_cycle_with(r, true))
                            continue;
                        ++runs_checked;
                        for (const auto& c : r.configurations)
                            ASSERT_LE(c.counters[0], lemma1_bound(c0, W, Q));
                    }
                    EXPECT_EQ(static_cast<bool>(find_bound_violation(n, Letter{"x"}, q, c0, N,
                                                                     lemma1_bound(c0, W, Q))
                                                    .witness),
                              false);
                }
    }
    EXPECT_GT(runs_checked, 1000u);
}

// Long enough runs repeat a state without the counter dropping. The stated
// threshold needs W ≥ 1; the W = 0 gap is covered by the analysis tests.
TEST(Properties, LongRunsHaveNonnegativeCycle)
{
    std::mt19937_64 rng(10);
    std::size_t checked = 0;
    for (int i = 0; i < 80; ++i) {
        auto n = random_net(rng, unary_params());
        const auto W = max_positive_update(n);
        const auto Q = static_cast<std::int64_t>(n.num_states());
        for (StateId q = 0; q < n.num_states(); ++q)
            for (std::int64_t c0 = 0; c0 <= 2; ++c0) {
                auto corrected = static_cast<std::size_t>(Q * (c0 + Q * W + 1));
                std::vector<std::size_t> lengths{corrected};
                if (W >= 1)
                    lengths.push_back(static_cast<std::size_t>(lemma2_threshold(Q, W, c0)));
                for (auto N : lengths) {
                    auto runs = enumerate_runs_from(n, repeat(Letter{"x"}, N), q, {c0}, 200000);
                    if (runs.cap_exceeded)
                        continue;
                    ++checked;
                    for (const auto& r : runs.runs)
                        ASSERT_TRUE(has_cycle_with(r, false)) << "W=" << W << " n=" << c0 << " N=" << N;
                    ASSERT_FALSE(find_run_without_nonneg_cycle(n, Letter{"x"}, q, c0, N).witness);
                }
            }
    }
    EXPECT_GT(checked, 300u);
}

TEST(Properties, CycleFreeSearchMatchesEnumeration)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        auto n = random_net(rng, unary_params());
        for (std::int64_t c0 = 0; c0 <= 2; ++c0)
            for (std::size_t N = 0; N <= 8; ++N) {
                auto runs = enumerate_runs_from(n, repeat(Letter{"x"}, N), 0, {c0}, 50000);
                ASSERT_FALSE(runs.cap_exceeded);
                bool any = std::any_of(runs.runs.begin(), runs.runs.end(),
                                       [](const cnet::Run& r) { return !has_cycle_with(r, false); });
                auto found = find_run_without_nonneg_cycle(n, Letter{"x"}, 0, c0, N);
                ASSERT_EQ(static_cast<bool>(found.witness), any);
                if (found.witness) {
                    ASSERT_TRUE(is_valid_n_run(n, *found.witness, {c0}));
                    ASSERT_FALSE(has_cycle_with(*found.witness, false));
                }
            }
    }
}

TEST(Properties, PumpingNonnegativeCycles)
{
    std::mt19937_64 rng(12);
    std::size_t pumped = 0;
    RandomNetParams p;
    p.alphabet = {"x"};
    for (int i = 0; i < 25; ++i) {
        auto n = random_net(rng, p);
        auto runs = enumerate_runs_from(n, repeat(Letter{"x"}, 8), 0, {2}, 500);
        for (const auto& r : runs.runs) {
            auto c = extract_pumpable_cycle(n, r, whole(r), SignClass::nonnegative);
            if (!c)
                continue;
            ASSERT_LT(c->length(), n.num_states() + 1);
            for (std::size_t m = 1; m <= 3; ++m) {
                auto pr = pump_run(n, r, *c, m);
                ++pumped;
                ASSERT_TRUE(is_valid_n_run(n, pr, {2}));
                ASSERT_EQ(pr.length(), r.length() + m * c->length());
                ASSERT_TRUE(leq(r.configurations.back().counters, pr.configurations.back().counters));
                ASSERT_EQ(run_effect(pr), add(run_effect(r), scale(c->effect, static_cast<std::int64_t>(m))));
            }
        }
    }
    EXPECT_GT(pumped, 100u);
}

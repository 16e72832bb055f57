#include "support.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace cnet;
using namespace cnet::testing_support;

namespace {

std::vector<CounterNet> all_zoo()
{
    auto f = zoo::build_fig1();
    std::vector<CounterNet> v{zoo::build_P(), zoo::build_coarse_b(), zoo::build_coarse_c(),
                              zoo::build_universal_lambda(), f.main, f.factor1, f.factor2,
                              product(f.factor1, f.factor2)};
    for (std::size_t k = 1; k <= 3; ++k) {
        v.push_back(zoo::build_Lk_dcn(k));
        v.push_back(zoo::build_Lk_ncn(k));
        v.push_back(zoo::build_Hk(k));
        v.push_back(zoo::build_Pk_conjecture(k));
    }
    return v;
}

std::size_t error_line(std::string_view text)
{
    try {
        parse_machine_file(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

std::string error_text(std::string_view text)
{
    try {
        parse_machine_file(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(MachineFile, ZooRoundTrip)
{
    for (const auto& n : all_zoo()) {
        auto text = emit_machine(n);
        auto back = parse_machine_file(text);
        ASSERT_EQ(back.size(), 1u) << n.name;
        EXPECT_EQ(back[0], n) << n.name;
        EXPECT_EQ(emit_machine(back[0]), text) << n.name;
    }
}

TEST(MachineFile, MultiMachineRoundTrip)
{
    auto zs = all_zoo();
    auto text = emit_machine_file(zs);
    auto back = parse_machine_file(text);
    EXPECT_EQ(back, zs);
    EXPECT_EQ(emit_machine_file(back), text);
}

TEST(MachineFile, RandomRoundTrip)
{
    std::mt19937_64 rng(5);
    RandomNetParams p;
    p.dimension = 3;
    for (int i = 0; i < 50; ++i) {
        auto n = random_net(rng, p, "r" + std::to_string(i));
        EXPECT_EQ(parse_machine_file(emit_machine(n)).at(0), n);
    }
}

TEST(MachineFile, Fig1NetsBehaveAfterRoundTrip)
{
    auto f = zoo::build_fig1();
    auto back = parse_machine_file(emit_machine_file({f.main, f.factor1, f.factor2}));
    for (std::size_t len = 0; len <= 6; ++len)
        each_word(f.main.alphabet, len, [&](const Word& w) {
            ASSERT_EQ(accepts(back[0], w), accepts(f.main, w));
            ASSERT_EQ(accepts(back[1], w), accepts(f.factor1, w));
        });
}

TEST(MachineFile, Empty)
{
    EXPECT_TRUE(parse_machine_file("").empty());
    EXPECT_TRUE(parse_machine_file("; nothing\n\n   \n").empty());
}

TEST(MachineFile, CommentsAndImplicitDeclarations)
{
    auto nets = parse_machine_file(R"(
; a counter
cn c   ; trailing comment
dim 1
init s
accept s
trans s up +1 s ; explicit plus
trans s down -1 s
end
)");
    ASSERT_EQ(nets.size(), 1u);
    const auto& n = nets[0];
    EXPECT_EQ(n.name, "c");
    EXPECT_EQ(n.states, (std::vector<std::string>{"s"}));
    EXPECT_EQ(n.alphabet, letters({"up", "down"}));
    EXPECT_TRUE(accepts(n, W("up up down down")));
    EXPECT_FALSE(accepts(n, W("up down down")));
}

TEST(MachineFile, EffectLengthMismatch)
{
    std::string text = "cn m\ndim 2\ninit p\naccept p\ntrans p a 1 p\nend\n";
    EXPECT_EQ(error_line(text), 5u);
    EXPECT_NE(error_text(text).find("effect-length mismatch: expected 2, got 1"), std::string::npos);
}

TEST(MachineFile, Errors)
{
    EXPECT_EQ(error_line("cn m\ndim 1\nfoo bar\nend\n"), 3u);
    EXPECT_NE(error_text("cn m\ndim 1\nfoo bar\nend\n").find("unknown keyword 'foo'"), std::string::npos);
    EXPECT_EQ(error_line("cn m\ndim 1\nstates p\ninit q\nend\n"), 4u);
    EXPECT_EQ(error_line("cn m\ndim 1\nalphabet a\ninit p\ntrans p b 0 p\nend\n"), 5u);
    EXPECT_EQ(error_line("\ncn m\ndim 1\ninit p\n"), 2u); // missing end points at the block
    EXPECT_EQ(error_line("cn m\ninit p\ntrans p a 0 p\nend\n"), 3u);
    EXPECT_EQ(error_line("cn m\ndim 1\ndim 1\nend\n"), 3u);
    EXPECT_EQ(error_line("cn m\ndim 1\ninit p\ntrans p a x p\nend\n"), 4u);
    EXPECT_EQ(error_line("cn m\ndim 1\ncn n\n"), 3u);
    EXPECT_EQ(error_line("trans p a 0 p\n"), 1u);
    EXPECT_EQ(error_line("cn m\nend\n"), 2u);
    EXPECT_EQ(error_line("cn m\ndim 1\nstates p\nend\n"), 4u); // no initial state
    EXPECT_EQ(parse_machine_file("cn z\ndim 0\ninit p\naccept p\ntrans p a p\nend\n").at(0).dimension, 0u);
    EXPECT_EQ(error_line("cn m\ndim 1\nstates p p\nend\n"), 3u);
}

TEST(MachineFile, EmitRejectsUnprintableNames)
{
    auto n = zoo::build_P();
    n.name = "two words";
    EXPECT_THROW(emit_machine(n), Error);
    n = zoo::build_P();
    n.states[0] = "x;y";
    EXPECT_THROW(emit_machine(n), Error);
}

TEST(MachineFile, ShippedFilesLoad)
{
    const std::string dir = CNET_MACHINES;
    EXPECT_EQ(load_machine_file(dir + "/coarse_b.cn").at(0), zoo::build_coarse_b());
    EXPECT_EQ(load_machine_file(dir + "/coarse_c.cn").at(0), zoo::build_coarse_c());
    auto pair = load_machine_file(dir + "/pair.cn");
    ASSERT_EQ(pair.size(), 2u);
    EXPECT_EQ(resolve_machine(dir + "/pair.cn:ge").name, "ge");
    EXPECT_THROW(resolve_machine(dir + "/pair.cn"), Error);
    EXPECT_THROW(resolve_machine(dir + "/pair.cn:zz"), Error);
    EXPECT_THROW(load_machine_file(dir + "/missing.cn"), Error);
}

TEST(WordNotation, Examples)
{
    EXPECT_TRUE(parse_word("a^0").empty());
    EXPECT_EQ(parse_word("b_1^2"), (Word{Letter{"b_1"}, Letter{"b_1"}}));
    EXPECT_EQ(parse_word("a^2 # b"), letters({"a", "a", "#", "b"}));
    EXPECT_EQ(parse_word("   "), Word{});
    EXPECT_THROW(parse_word("a^x"), ParseError);
    EXPECT_THROW(parse_word("a^"), ParseError);
    EXPECT_THROW(parse_word("^3"), ParseError);
    EXPECT_THROW(parse_word("a^-1"), ParseError);
}

TEST(WordNotation, FormatInvertsParse)
{
    EXPECT_EQ(format_word(parse_word("a a a # b^2 c")), "a^3 # b^2 c");
    EXPECT_EQ(format_word({}), "");
    std::mt19937_64 rng(3);
    auto sigma = letters({"a", "b", "#"});
    for (int i = 0; i < 200; ++i) {
        Word w;
        for (std::size_t j = rng() % 9; j > 0; --j)
            w.push_back(sigma[rng() % 3]);
        EXPECT_EQ(parse_word(format_word(w)), w);
    }
    EXPECT_EQ(format_vector({1, -2}), "(1,-2)");
}

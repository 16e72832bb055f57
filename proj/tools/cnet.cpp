// cnet: command-line front end for the counter-net library.
//
// Exit status: 0 positive verdict (or verdict equals --expect), 1 negative
// verdict, 2 usage or input error.

#include "cnet/cnet.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using json = nlohmann::ordered_json;
using namespace cnet;

struct Report {
    std::string command;
    std::vector<std::string> argv;
    std::string verdict;
    bool positive = true;
    std::optional<std::string> counterexample;
    json stats = json::object();
    json details = json::object();
    std::vector<std::string> text; ///< human-readable lines
    std::string machine_text;      ///< emitted machines when no -o was given
};

std::string word_text(const Word& w) { return w.empty() ? "ε" : format_word(w); }

std::vector<std::string> words_json(const std::vector<Word>& ws)
{
    std::vector<std::string> out;
    for (const auto& w : ws)
        out.push_back(format_word(w));
    return out;
}

Vector parse_vector(const std::string& s, std::size_t dim)
{
    Vector v;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw Error("empty component in vector '" + s + "'");
        item = item.substr(b, e - b + 1);
        std::int64_t x{};
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
        if (ec != std::errc{} || p != item.data() + item.size())
            throw Error("bad vector component '" + item + "'");
        v.push_back(x);
    }
    if (v.size() != dim)
        throw Error("vector '" + s + "' has " + std::to_string(v.size()) + " components, expected " +
                    std::to_string(dim));
    return v;
}

std::vector<std::size_t> parse_indices(const std::string& s)
{
    std::vector<std::size_t> out;
    for (auto x : parse_vector(s, static_cast<std::size_t>(std::count(s.begin(), s.end(), ',') + 1))) {
        if (x < 0)
            throw Error("negative index in '" + s + "'");
        out.push_back(static_cast<std::size_t>(x));
    }
    return out;
}

void write_machines(Report& r, const std::vector<CounterNet>& nets, const std::string& out)
{
    std::string text = emit_machine_file(nets);
    if (out.empty()) {
        r.machine_text = text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f || !(f << text))
            throw Error("cannot write '" + out + "'");
        r.text.push_back("wrote " + out);
    }
    json ms = json::array();
    for (const auto& n : nets)
        ms.push_back({{"name", n.name},
                      {"dimension", n.dimension},
                      {"states", n.num_states()},
                      {"transitions", n.transitions.size()},
                      {"deterministic", is_deterministic(n)}});
    r.details["machines"] = ms;
    if (!out.empty())
        r.details["output"] = out;
}

// ---------------------------------------------------------- generator flags

struct GenFlags {
    std::size_t max_len = 0;
    std::string alphabet;
    std::size_t segmented_box = 0;
    std::size_t segments = 3;
    bool fixed_segments = false;
    std::size_t fig1_box = 0;
    std::size_t lk_box = 0;
    std::size_t hk_box = 0;
    std::size_t conj_box = 0;
    std::size_t k = 0;
    std::size_t node_budget = 50'000'000;
    double hard_cap = 5e7;

    void add(CLI::App* c)
    {
        auto* g = c->add_option_group("generator", "word generator (exactly one)");
        g->add_option("--max-len", max_len, "all words up to this length");
        g->add_option("--segmented-box", segmented_box, "segmented words with parameters up to B");
        g->add_option("--fig1-box", fig1_box, "a^m # b^n # c^k with m, n, k up to B");
        g->add_option("--lk-box", lk_box, "L_k block words with parameters up to B (needs --k)");
        g->add_option("--hk-box", hk_box, "H_k block words with parameters up to B (needs --k)");
        g->add_option("--conj-box", conj_box, "conjecture-family words with parameters up to B (needs --k)");
        g->require_option(1);
        c->add_option("--alphabet", alphabet, "letters for --max-len (default: both sides' alphabets)");
        c->add_option("--segments", segments, "segment count for --segmented-box / --conj-box");
        c->add_flag("--fixed-segments", fixed_segments, "only exactly --segments segments");
        c->add_option("--k", k, "k for the block generators");
        c->add_option("--node-budget", node_budget, "search nodes before giving up with 'exhausted'");
        c->add_option("--hard-cap", hard_cap, "refuse unpruned generators larger than this");
    }

    Generator make() const
    {
        auto need_k = [&] {
            if (k == 0)
                throw Error("this generator needs --k");
            return k;
        };
        if (max_len || (!segmented_box && !fig1_box && !lk_box && !hk_box && !conj_box))
            return AllWords{parse_word(alphabet), max_len};
        if (segmented_box)
            return SegmentedBox{segments, segmented_box, fixed_segments};
        if (fig1_box)
            return Fig1Box{fig1_box};
        if (lk_box)
            return LkBox{need_k(), lk_box};
        if (hk_box)
            return HkBox{need_k(), hk_box};
        return ConjBox{need_k(), segments, conj_box};
    }

    json describe() const
    {
        json j = json::object();
        if (max_len || (!segmented_box && !fig1_box && !lk_box && !hk_box && !conj_box))
            j = {{"kind", "all-words"}, {"max_len", max_len}, {"alphabet", alphabet}};
        else if (segmented_box)
            j = {{"kind", "segmented-box"}, {"bound", segmented_box}, {"segments", segments},
                 {"fixed_segments", fixed_segments}};
        else if (fig1_box)
            j = {{"kind", "fig1-box"}, {"bound", fig1_box}};
        else if (lk_box)
            j = {{"kind", "lk-box"}, {"bound", lk_box}, {"k", k}};
        else if (hk_box)
            j = {{"kind", "hk-box"}, {"bound", hk_box}, {"k", k}};
        else
            j = {{"kind", "conj-box"}, {"bound", conj_box}, {"k", k}, {"segments", segments}};
        j["node_budget"] = node_budget;
        return j;
    }
};

void comparison_report(Report& r, const ComparisonReport& c, const Language& a, const Language& b)
{
    r.verdict = to_string(c.verdict);
    r.positive = c.equal();
    if (c.counterexample)
        r.counterexample = format_word(*c.counterexample);
    r.stats["words_checked"] = c.words_checked;
    r.stats["nodes"] = c.nodes;
    r.stats["size_estimate"] = c.size_estimate;
    r.details["left"] = a.name();
    r.details["right"] = b.name();
    std::string line = a.name() + " vs " + b.name() + ": " + r.verdict;
    if (c.counterexample)
        line += " on " + word_text(*c.counterexample) + " (accepted only by the " +
                (c.verdict == Verdict::left_only ? "left" : "right") + " side)";
    r.text.push_back(line);
    r.text.push_back(std::to_string(c.words_checked) + " words checked");
}

// ------------------------------------------------------------ random suites

struct PropsSummary {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

std::vector<PropsSummary> run_props(std::uint64_t seed, std::size_t scale)
{
    std::mt19937_64 rng(seed);
    std::vector<PropsSummary> out;
    auto all_words = [](const std::vector<Letter>& sigma, std::size_t max_len, auto&& f) {
        Word w;
        auto rec = [&](auto&& self, std::size_t left) -> void {
            f(w);
            if (left == 0)
                return;
            for (const auto& l : sigma) {
                w.push_back(l);
                self(self, left - 1);
                w.pop_back();
            }
        };
        rec(rec, max_len);
    };

    {
        PropsSummary s{"product-law", 0, 0, {}};
        RandomNetParams p;
        for (std::size_t i = 0; i < scale; ++i) {
            auto a = random_net(rng, p, "A"), b = random_net(rng, p, "B");
            auto ab = product(a, b);
            all_words(a.alphabet, 6, [&](const Word& w) {
                ++s.cases;
                if (accepts(ab, w) != (accepts(a, w) && accepts(b, w)) && s.failures++ == 0)
                    s.first_failure = "pair " + std::to_string(i) + " word " + word_text(w);
            });
        }
        out.push_back(s);
    }
    {
        PropsSummary s{"antichain-vs-naive", 0, 0, {}};
        for (std::size_t i = 0; i < scale; ++i) {
            RandomNetParams p;
            p.dimension = 1 + i % 3;
            p.max_states = 5;
            auto n = random_net(rng, p, "N");
            all_words(n.alphabet, 6, [&](const Word& w) {
                ++s.cases;
                if (accepts(n, w) != accepts_naive(n, w, n.zero()) && s.failures++ == 0)
                    s.first_failure = "net " + std::to_string(i) + " word " + word_text(w);
            });
        }
        out.push_back(s);
    }
    {
        PropsSummary s2{"nonneg-cycle-threshold", 0, 0, {}}, s1{"no-positive-cycle-bound", 0, 0, {}};
        for (std::size_t i = 0; i < scale; ++i) {
            RandomNetParams p;
            p.alphabet = {"x"};
            auto n = random_net(rng, p, "L");
            const auto W = max_positive_update(n);
            const auto q = static_cast<std::int64_t>(n.num_states());
            for (StateId st = 0; st < n.num_states(); ++st)
                for (std::int64_t c0 = 0; c0 <= 3; ++c0) {
                    auto N = static_cast<std::size_t>(lemma2_threshold(q, W, c0));
                    ++s2.cases;
                    if (find_run_without_nonneg_cycle(n, Letter{"x"}, st, c0, N).witness && s2.failures++ == 0)
                        s2.first_failure = "net " + std::to_string(i) + ", W=" + std::to_string(W) +
                                           ", n=" + std::to_string(c0) + ", N=" + std::to_string(N);
                    ++s1.cases;
                    if (find_bound_violation(n, Letter{"x"}, st, c0, N, lemma1_bound(c0, W, q)).witness &&
                        s1.failures++ == 0)
                        s1.first_failure = "net " + std::to_string(i);
                }
        }
        out.push_back(s2);
        out.push_back(s1);
    }
    return out;
}

// ------------------------------------------------------------------- main

int run(int argc, char** argv)
{
    CLI::App app{"Counter nets: membership, constructions, decompositions, refuters"};
    app.fallthrough();
    app.require_subcommand(1);
    bool as_json = false;
    std::string expect;
    app.add_flag("--json", as_json, "emit a JSON report");
    app.add_option("--expect", expect, "exit 0 exactly when the verdict equals this");

    Report r;
    for (int i = 0; i < argc; ++i)
        r.argv.push_back(argv[i]);
    std::function<void()> action;

    // check
    std::string a_ref, b_ref, word_s, initial_s, out;
    bool naive = false;
    auto* check = app.add_subcommand("check", "membership of a word");
    check->add_option("machine", a_ref, "machine reference")->required();
    check->add_option("--word", word_s, "word, e.g. \"a^3 # b^2 c\"")->required();
    check->add_option("--initial", initial_s, "initial counters v_1,...,v_k");
    check->add_flag("--naive", naive, "also run the naive DFS and compare");
    check->callback([&] {
        action = [&] {
            auto net = resolve_machine(a_ref);
            Word w = parse_word(word_s);
            Vector v = initial_s.empty() ? net.zero() : parse_vector(initial_s, net.dimension);
            auto t0 = std::chrono::steady_clock::now();
            bool ok = accepts(net, w, v);
            r.stats["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (naive) {
                bool nv = accepts_naive(net, w, v);
                r.details["naive"] = nv;
                if (nv != ok)
                    throw Error("naive membership disagrees with the antichain search");
            }
            r.verdict = ok ? "accept" : "reject";
            r.positive = ok;
            r.stats["words_checked"] = 1;
            r.details["machine"] = net.name;
            r.details["word"] = format_word(w);
            r.details["initial"] = v;
            r.text.push_back(net.name + " " + (ok ? "accepts " : "rejects ") + word_text(w));
        };
    });

    // eq / decompose-check
    GenFlags gen;
    auto* eq = app.add_subcommand("eq", "bounded language comparison");
    eq->add_option("left", a_ref, "machine or oracle reference")->required();
    eq->add_option("right", b_ref, "machine or oracle reference")->required();
    gen.add(eq);
    eq->callback([&] {
        action = [&] {
            auto a = resolve_language(a_ref), b = resolve_language(b_ref);
            CompareOptions opt{gen.hard_cap, gen.node_budget};
            auto t0 = std::chrono::steady_clock::now();
            auto c = bounded_compare(a, b, gen.make(), opt);
            r.stats["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            r.details["generator"] = gen.describe();
            comparison_report(r, c, a, b);
        };
    });

    std::vector<std::string> factor_refs;
    GenFlags dgen;
    auto* dc = app.add_subcommand("decompose-check", "target against the intersection of factors");
    dc->add_option("target", a_ref, "machine or oracle reference")->required();
    dc->add_option("factors", factor_refs, "factor machine references")->required();
    dgen.add(dc);
    dc->callback([&] {
        action = [&] {
            auto target = resolve_language(a_ref);
            std::vector<CounterNet> fs;
            for (const auto& f : factor_refs)
                fs.push_back(resolve_machine(f));
            auto rhs = Language::intersection(fs);
            CompareOptions opt{dgen.hard_cap, dgen.node_budget};
            auto t0 = std::chrono::steady_clock::now();
            auto c = bounded_compare(target, rhs, dgen.make(), opt);
            r.stats["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            r.details["generator"] = dgen.describe();
            json dims = json::array();
            for (const auto& f : fs)
                dims.push_back(f.dimension);
            r.details["factor_dimensions"] = dims;
            comparison_report(r, c, target, rhs);
        };
    });

    // constructions
    auto* prod = app.add_subcommand("product", "intersection of two machines");
    prod->add_option("a", a_ref)->required();
    prod->add_option("b", b_ref)->required();
    prod->add_option("-o,--output", out, "output machine file");
    prod->callback([&] {
        action = [&] {
            auto p = product(resolve_machine(a_ref), resolve_machine(b_ref));
            r.verdict = "ok";
            write_machines(r, {p}, out);
        };
    });

    std::size_t counter = 0;
    auto* proj = app.add_subcommand("project", "keep a single counter");
    proj->add_option("machine", a_ref)->required();
    proj->add_option("--counter", counter, "1-based counter index")->required();
    proj->add_option("-o,--output", out, "output machine file");
    proj->callback([&] {
        action = [&] {
            auto p = project(resolve_machine(a_ref), counter);
            r.verdict = "ok";
            write_machines(r, {p}, out);
        };
    });

    auto* uni = app.add_subcommand("union", "disjoint union of two machines");
    uni->add_option("a", a_ref)->required();
    uni->add_option("b", b_ref)->required();
    uni->add_option("-o,--output", out, "output machine file");
    uni->callback([&] {
        action = [&] {
            auto u = net_union(resolve_machine(a_ref), resolve_machine(b_ref));
            r.verdict = "ok";
            write_machines(r, {u}, out);
        };
    });

    std::size_t dim = 0;
    std::string placement_s;
    auto* lf = app.add_subcommand("lift", "embed the counters into more dimensions");
    lf->add_option("machine", a_ref)->required();
    lf->add_option("--dim", dim, "target dimension")->required();
    lf->add_option("--placement", placement_s, "1-based target coordinate per counter (default 1,...,k)");
    lf->add_option("-o,--output", out, "output machine file");
    lf->callback([&] {
        action = [&] {
            auto net = resolve_machine(a_ref);
            std::vector<std::size_t> pl;
            if (placement_s.empty())
                for (std::size_t i = 1; i <= net.dimension; ++i)
                    pl.push_back(i);
            else
                pl = parse_indices(placement_s);
            auto l = lift(net, dim, pl);
            r.verdict = "ok";
            write_machines(r, {l}, out);
        };
    });

    bool vas_report = false;
    std::size_t vas_len = 4, vas_ulen = 0;
    auto* vz = app.add_subcommand("vasify", "relabel and encode into a single-state net");
    vz->add_option("machine", a_ref)->required();
    vz->add_option("-o,--output", out, "output machine file");
    vz->add_flag("--report", vas_report, "verify on bounded words");
    vz->add_option("--max-len", vas_len, "word bound for --report");
    vz->add_option("--u-max-len", vas_ulen, "word bound for the encoded net (default 3x)");
    vz->callback([&] {
        action = [&] {
            auto d = resolve_machine(a_ref);
            if (!vas_report) {
                auto lab = vas::distinct_label(d);
                auto u = vas::hp_vasify(lab.net);
                r.verdict = "ok";
                r.details["initial"] = u.initial;
                write_machines(r, {lab.net, u.net}, out);
                r.text.push_back("initial valuation " + format_vector(u.initial));
                return;
            }
            auto t0 = std::chrono::steady_clock::now();
            auto res = vas::verify_pipeline(d, vas_len, vas_ulen);
            r.stats["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            const auto& p = res.report;
            r.verdict = p.ok() ? "ok" : "violations";
            r.positive = p.ok();
            r.stats["labelled_words"] = p.labelled_words;
            r.stats["original_words"] = p.original_words;
            r.stats["images_checked"] = p.images_checked;
            r.stats["u_words"] = p.u_words;
            r.stats["valuations_explored"] = p.gating.valuations_explored;
            r.details["max_len"] = p.max_len;
            r.details["u_max_len"] = p.u_max_len;
            r.details["initial"] = res.vas.initial;
            r.details["bijection_holds"] = p.bijection_holds;
            r.details["bijection_failures"] = words_json(p.bijection_failures);
            r.details["containment_violations"] = words_json(p.containment_violations);
            r.details["anomaly_count"] = p.anomaly_count;
            r.details["anomalies"] = words_json(p.anomalies);
            r.details["phase_gating_holds"] = p.gating.phase_gating_holds();
            r.details["sibling_interleavings"] = p.gating.sibling_interleavings.size();
            write_machines(r, {res.labelled.net, res.vas.net}, out);
            r.text.push_back("relabelling bijection: " + std::string(p.bijection_holds ? "holds" : "FAILS"));
            r.text.push_back("triplet images checked: " + std::to_string(p.images_checked) + ", violations: " +
                             std::to_string(p.containment_violations.size()));
            r.text.push_back("phase gating: " + std::string(p.gating.phase_gating_holds() ? "holds" : "FAILS") +
                             " (" + std::to_string(p.gating.valuations_explored) + " valuations, " +
                             std::to_string(p.gating.sibling_interleavings.size()) + " sibling interleavings)");
            r.text.push_back("extra words of the encoded net: " + std::to_string(p.anomaly_count));
        };
    });

    auto* red = app.add_subcommand("reduce", "2-CN built from a pair of 1-CNs and P");
    red->add_option("a", a_ref)->required();
    red->add_option("b", b_ref)->required();
    red->add_option("-o,--output", out, "output machine file");
    red->callback([&] {
        action = [&] {
            auto c = build_reduction(resolve_machine(a_ref), resolve_machine(b_ref));
            r.verdict = "ok";
            write_machines(r, {c}, out);
        };
    });

    std::string zoo_name;
    std::size_t zoo_k = 0;
    bool emit = false;
    auto* zo = app.add_subcommand("zoo", "built-in machines");
    zo->add_option("name", zoo_name, "P | fig1 | Lk | Hk | PkConj | coarse_b | coarse_c | universal")->required();
    zo->add_option("--k", zoo_k, "k for Lk, Hk, PkConj");
    zo->add_flag("--emit", emit, "print the machine file");
    zo->add_option("-o,--output", out, "output machine file");
    zo->callback([&] {
        action = [&] {
            std::vector<CounterNet> nets;
            auto withk = [&] {
                if (zoo_k == 0)
                    throw Error("zoo " + zoo_name + " needs --k");
                return zoo_name + std::to_string(zoo_k);
            };
            if (zoo_name == "fig1")
                for (auto part : {".main", ".factor1", ".factor2"})
                    nets.push_back(resolve_zoo(zoo_name + part));
            else if (zoo_name == "Lk")
                for (auto part : {".dcn", ".ncn"})
                    nets.push_back(resolve_zoo(withk() + part));
            else if (zoo_name == "Hk" || zoo_name == "PkConj")
                nets.push_back(resolve_zoo(withk()));
            else
                nets.push_back(resolve_zoo(zoo_name));
            r.verdict = "ok";
            std::string dst = out;
            write_machines(r, nets, dst);
            if (!emit && out.empty()) {
                r.machine_text.clear();
                for (const auto& n : nets)
                    r.text.push_back(n.name + ": dim " + std::to_string(n.dimension) + ", " +
                                     std::to_string(n.num_states()) + " states, " +
                                     std::to_string(n.transitions.size()) + " transitions" +
                                     (is_deterministic(n) ? ", deterministic" : ""));
            }
        };
    });

    std::string strategy_s = "enumerate";
    RefuteCaps caps;
    auto* rp = app.add_subcommand("refute-p", "word separating P from an intersection of 1-CNs");
    rp->add_option("factors", factor_refs, "factor machine references")->required();
    rp->add_option("--strategy", strategy_s, "enumerate | guided")
        ->check(CLI::IsMember({"enumerate", "guided"}));
    rp->add_option("--max-bound", caps.max_bound, "enumerate: largest parameter");
    rp->add_option("--witness-multiple", caps.witness.max_multiple, "guided: witness constants up to K*alpha");
    rp->add_option("--run-cap", caps.witness.run_cap, "guided: accepting runs examined per word");
    rp->add_option("--family-multiple", caps.family.max_multiple, "guided: pump coefficients up to K*alpha");
    rp->add_option("--horizon", caps.family.horizon, "guided: family members checked");
    rp->add_option("--max-lb-multiple", caps.max_LB_multiple, "guided: L and B up to K*alpha");
    rp->add_option("--max-n", caps.max_n, "guided: largest pump exponent");
    rp->callback([&] {
        action = [&] {
            std::vector<CounterNet> fs;
            for (const auto& f : factor_refs)
                fs.push_back(resolve_machine(f));
            auto st = strategy_s == "guided" ? Strategy::guided : Strategy::enumerate;
            auto res = refute_p_decomposition(fs, st, caps);
            const auto& s = res.stats;
            r.verdict = res.counterexample ? "counterexample" : "exhausted";
            r.positive = !res.counterexample;
            r.stats["words_checked"] = s.words_checked;
            r.stats["witness_words"] = s.witness_words;
            r.stats["witness_runs"] = s.witness_runs;
            r.stats["seconds"] = s.seconds;
            r.details["strategy"] = strategy_s;
            r.details["caps"] = {{"max_bound", caps.max_bound},
                                 {"witness_multiple", caps.witness.max_multiple},
                                 {"run_cap", caps.witness.run_cap},
                                 {"family_multiple", caps.family.max_multiple},
                                 {"horizon", caps.family.horizon},
                                 {"max_lb_multiple", caps.max_LB_multiple},
                                 {"max_n", caps.max_n}};
            r.details["inconclusive"] = s.inconclusive;
            if (res.counterexample) {
                r.counterexample = format_word(*res.counterexample);
                r.details["accepted_by_factors"] = res.factors_accept;
                r.details["accepted_by_P"] = !res.factors_accept;
                r.text.push_back("counterexample " + word_text(*res.counterexample) + ": " +
                                 (res.factors_accept ? "accepted by every factor, rejected by P"
                                                     : "accepted by P, rejected by some factor"));
            } else {
                r.text.push_back("no counterexample within the caps");
            }
            if (s.bad_segment) {
                r.details["bad_segment"] = *s.bad_segment;
                r.details["X"] = s.X, r.details["Y"] = s.Y, r.details["Z"] = s.Z;
                r.details["L"] = s.L, r.details["B"] = s.B, r.details["n"] = s.n;
                json ws = json::array();
                for (std::size_t i = 0; i < s.witnesses.size(); ++i)
                    ws.push_back({{"factor", fs[i].name},
                                  {"constants", format_word(zoo::render_segmented(s.witnesses[i].constants))},
                                  {"form", to_string(s.witnesses[i].form)},
                                  {"family", {s.families[i].x, s.families[i].y, s.families[i].z}}});
                r.details["witnesses"] = ws;
                r.text.push_back("bad segment " + std::to_string(*s.bad_segment) + ", X=" + std::to_string(s.X) +
                                 " Y=" + std::to_string(s.Y) + " Z=" + std::to_string(s.Z) + " L=" +
                                 std::to_string(s.L) + " B=" + std::to_string(s.B) + " n=" + std::to_string(s.n));
            }
            r.text.push_back(std::to_string(s.words_checked) + " words checked");
        };
    });

    std::size_t segment = 0, times = 1;
    std::string sign_s = "nonneg", scope_s;
    bool normalize = false;
    auto* pm = app.add_subcommand("pump", "pump a cycle of an accepting run");
    pm->add_option("machine", a_ref)->required();
    pm->add_option("--word", word_s, "word with an accepting run")->required();
    pm->add_option("--segment", segment, "1-based a-segment of a segmented word");
    pm->add_option("--scope", scope_s, "configuration range begin,end (instead of --segment)");
    pm->add_option("--sign", sign_s, "pos | nonneg")->check(CLI::IsMember({"pos", "nonneg"}));
    pm->add_option("--times", times, "repetitions of the cycle");
    pm->add_flag("--normalize", normalize, "repeat times*|Q|!/len so the pumped length is a multiple of |Q|!");
    pm->callback([&] {
        action = [&] {
            auto net = resolve_machine(a_ref);
            Word w = parse_word(word_s);
            Scope scope;
            if (!scope_s.empty()) {
                auto ix = parse_indices(scope_s);
                if (ix.size() != 2)
                    throw Error("--scope expects begin,end");
                scope = {ix[0], ix[1]};
            } else if (segment) {
                auto sw = zoo::parse_segmented(w);
                if (segment > sw.segments.size())
                    throw Error("--segment out of range");
                scope = segment_spans(sw).segments[segment - 1];
            } else {
                scope = {0, w.size()};
            }
            const auto sign = sign_s == "pos" ? SignClass::positive : SignClass::nonnegative;
            auto runs = enumerate_accepting_runs(net, w, net.zero(), 4096);
            r.stats["runs_examined"] = 0;
            for (const auto& run : runs.runs) {
                r.stats["runs_examined"] = r.stats["runs_examined"].get<std::size_t>() + 1;
                auto cyc = extract_pumpable_cycle(net, run, scope, sign);
                if (!cyc)
                    continue;
                auto pumped = pump_run(net, run, *cyc, times, normalize);
                Word pw = run_word(net, pumped);
                bool acc = is_accepting_run(net, pumped, net.zero());
                r.verdict = "pumped";
                r.positive = true;
                r.details["cycle"] = {{"anchor", cyc->anchor},
                                      {"length", cyc->length()},
                                      {"effect", cyc->effect},
                                      {"sign", to_string(cyc->sign)}};
                r.details["pumped_word"] = format_word(pw);
                r.details["pumped_run_accepting"] = acc;
                r.text.push_back("cycle of length " + std::to_string(cyc->length()) + " at configuration " +
                                 std::to_string(cyc->anchor) + ", effect " + format_vector(cyc->effect));
                r.text.push_back("pumped word " + word_text(pw) + (acc ? " (accepting run)" : ""));
                return;
            }
            r.verdict = runs.runs.empty() ? "rejected" : "no-cycle";
            r.positive = false;
            r.details["runs_truncated"] = runs.cap_exceeded;
            r.text.push_back(runs.runs.empty() ? "word not accepted" : "no cycle of that sign in the scope");
        };
    });

    std::uint64_t seed = 1;
    std::size_t scale = 20;
    auto* pr = app.add_subcommand("props", "randomised property suites");
    pr->add_option("--seed", seed, "random seed");
    pr->add_option("--count", scale, "random machines per suite");
    pr->callback([&] {
        action = [&] {
            auto t0 = std::chrono::steady_clock::now();
            auto sums = run_props(seed, scale);
            r.stats["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::size_t fails = 0;
            json suites = json::array();
            for (const auto& s : sums) {
                fails += s.failures;
                suites.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures},
                                  {"first_failure", s.first_failure}});
                r.text.push_back(s.name + ": " + std::to_string(s.cases) + " cases, " + std::to_string(s.failures) +
                                 " failures" + (s.failures ? " (" + s.first_failure + ")" : ""));
            }
            r.details["seed"] = seed;
            r.details["count"] = scale;
            r.details["suites"] = suites;
            r.verdict = fails ? "failures" : "pass";
            r.positive = fails == 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    r.command = app.get_subcommands().front()->get_name();

    try {
        action();
    } catch (const Error& e) {
        if (as_json)
            std::cout << json{{"command", r.command}, {"argv", r.argv}, {"verdict", "error"}, {"error", e.what()}}
                             .dump(2)
                      << "\n";
        else
            std::cerr << "cnet " << r.command << ": " << e.what() << "\n";
        return 2;
    }

    if (as_json) {
        json j{{"command", r.command}, {"argv", r.argv}, {"verdict", r.verdict}};
        j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
        j["stats"] = r.stats;
        for (auto& [k, v] : r.details.items())
            j[k] = v;
        if (!r.machine_text.empty())
            j["machine_file"] = r.machine_text;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.machine_text;
        for (const auto& l : r.text)
            std::cout << l << "\n";
        std::cout << "verdict: " << r.verdict << "\n";
    }
    if (!expect.empty())
        return r.verdict == expect ? 0 : 1;
    return r.positive ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "cnet: " << e.what() << "\n";
        return 2;
    }
}

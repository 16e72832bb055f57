// A short walk through the library: membership, products, the segmented
// family, a refutation and the pumping toolkit.

#include "cnet/cnet.hpp"

#include <iostream>

using namespace cnet;

int main()
{
    // A 1-CN over {x, y}: x^n y^m with n >= m.
    NetBuilder b("ge", 1);
    b.initial("X").accepting("X").accepting("Y");
    b.trans("X", "x", {1}, "X").trans("X", "y", {-1}, "Y").trans("Y", "y", {-1}, "Y");
    CounterNet ge = b.build();
    for (const char* w : {"x^3 y^2", "x y^2"})
        std::cout << "ge " << (accepts(ge, parse_word(w)) ? "accepts " : "rejects ") << w << "\n";

    // The two-counter machine P and its subset-split oracle.
    CounterNet p = zoo::build_P();
    zoo::SegmentedWord s{{10, 20, 15}, 15, 30};
    std::cout << "P on " << format_word(zoo::render_segmented(s)) << ": " << accepts(p, zoo::render_segmented(s))
              << " (oracle " << zoo::oracle_P(s) << ")\n";

    // fig1: a 2-CN equal to the product of two 1-CNs.
    auto f = zoo::build_fig1();
    auto rep = bounded_compare(Language::of(f.main), Language::intersection({f.factor1, f.factor2}), Fig1Box{8});
    std::cout << "fig1 vs factors: " << to_string(rep.verdict) << " on " << rep.words_checked << " words\n";

    // Two coarse 1-CNs cannot decompose P.
    std::vector<CounterNet> factors{zoo::build_coarse_b(), zoo::build_coarse_c()};
    for (auto st : {Strategy::enumerate, Strategy::guided}) {
        auto r = refute_p_decomposition(factors, st);
        std::cout << (st == Strategy::enumerate ? "enumerate" : "guided") << " refutation: "
                  << (r.counterexample ? format_word(*r.counterexample) : "none") << "\n";
    }

    // Pump the second segment of an accepting run.
    Word w = zoo::render_segmented(s);
    auto runs = enumerate_accepting_runs(p, w, p.zero(), 1);
    auto scope = segment_spans(s).segments[1];
    if (auto c = extract_pumpable_cycle(p, runs.runs.front(), scope, SignClass::nonnegative)) {
        auto pumped = pump_run(p, runs.runs.front(), *c, 2);
        std::cout << "pumped word: " << format_word(run_word(p, pumped)) << " accepted "
                  << accepts(p, run_word(p, pumped)) << "\n";
    }

    // Machine-file text for the product of the fig1 factors.
    std::cout << emit_machine(product(f.factor1, f.factor2));
}

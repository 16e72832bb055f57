#pragma once

// Seeded random counter nets for property suites.

#include "cnet/core.hpp"

#include <random>

namespace cnet {

struct RandomNetParams {
    std::size_t min_states = 1;
    std::size_t max_states = 4;
    std::size_t dimension = 1;
    std::int64_t min_effect = -2;
    std::int64_t max_effect = 2;
    std::vector<std::string> alphabet{"x", "y"};
    double edge_probability = 0.4; ///< per (state, letter, state) triple
    double accept_probability = 0.5;
    double extra_initial_probability = 0.2; ///< state 0 is always initial
};

inline CounterNet random_net(std::mt19937_64& rng, const RandomNetParams& p, std::string name = "rnd")
{
    if (p.min_states < 1 || p.min_states > p.max_states || p.min_effect > p.max_effect)
        throw Error("random_net: bad parameters");
    std::uniform_int_distribution<std::size_t> nstates(p.min_states, p.max_states);
    std::uniform_int_distribution<std::int64_t> eff(p.min_effect, p.max_effect);
    std::bernoulli_distribution edge(p.edge_probability), acc(p.accept_probability),
        init(p.extra_initial_probability);

    CounterNet net;
    net.name = std::move(name);
    net.dimension = p.dimension;
    for (const auto& l : p.alphabet)
        net.alphabet.push_back(Letter{l});
    const std::size_t n = nstates(rng);
    for (std::size_t q = 0; q < n; ++q)
        net.states.push_back("q" + std::to_string(q));
    net.initial.push_back(0);
    for (StateId q = 1; q < n; ++q)
        if (init(rng))
            net.initial.push_back(q);
    for (StateId q = 0; q < n; ++q)
        if (acc(rng))
            net.accepting.push_back(q);
    for (StateId s = 0; s < n; ++s)
        for (const auto& l : net.alphabet)
            for (StateId d = 0; d < n; ++d)
                if (edge(rng)) {
                    EffectVector e(p.dimension);
                    for (auto& x : e)
                        x = eff(rng);
                    net.transitions.push_back({s, l, std::move(e), d});
                }
    return validate(net);
}

} // namespace cnet

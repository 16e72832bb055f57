#pragma once

// Counter nets: finite automata whose transitions carry integer effects on k
// counters that must never drop below zero. No zero tests.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace cnet {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

/// Thrown when a bounded enumeration runs past its caller-supplied cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

struct Letter {
    std::string token;

    Letter() = default;
    explicit Letter(std::string t) : token(std::move(t)) {}

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word repeat(const Letter& letter, std::size_t n) { return Word(n, letter); }

inline Word concat(Word head, const Word& tail)
{
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

using Vector = std::vector<std::int64_t>;
using EffectVector = Vector;
using StateId = std::size_t;

inline Vector add(const Vector& a, const Vector& b)
{
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline Vector sub(const Vector& a, const Vector& b)
{
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline Vector scale(const Vector& a, std::int64_t m)
{
    Vector r(a);
    for (auto& x : r)
        x *= m;
    return r;
}

/// Componentwise a <= b.
inline bool leq(const Vector& a, const Vector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

inline bool nonnegative(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

struct Transition {
    StateId source = 0;
    Letter letter;
    EffectVector effect;
    StateId target = 0;

    friend bool operator==(const Transition&, const Transition&) = default;
};

struct CounterNet {
    std::string name;
    std::size_t dimension = 0;
    std::vector<Letter> alphabet;
    std::vector<std::string> states;
    std::vector<StateId> initial;
    std::vector<StateId> accepting;
    std::vector<Transition> transitions;

    [[nodiscard]] std::size_t num_states() const { return states.size(); }

    [[nodiscard]] std::optional<StateId> find_state(std::string_view id) const
    {
        for (StateId q = 0; q < states.size(); ++q)
            if (states[q] == id)
                return q;
        return std::nullopt;
    }

    [[nodiscard]] bool has_letter(const Letter& l) const
    {
        return std::find(alphabet.begin(), alphabet.end(), l) != alphabet.end();
    }

    [[nodiscard]] bool is_initial(StateId q) const
    {
        return std::find(initial.begin(), initial.end(), q) != initial.end();
    }

    [[nodiscard]] bool is_accepting(StateId q) const
    {
        return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
    }

    [[nodiscard]] Vector zero() const { return Vector(dimension, 0); }

    friend bool operator==(const CounterNet&, const CounterNet&) = default;
};

/// Returns the net iff every structural invariant holds; otherwise throws a
/// ValidationError naming the first violation found.
inline const CounterNet& validate(const CounterNet& net)
{
    auto fail = [&](const std::string& what) {
        throw ValidationError("net '" + net.name + "': " + what);
    };

    std::set<std::string> seen_states;
    for (const auto& s : net.states) {
        if (s.empty())
            fail("empty state id");
        if (!seen_states.insert(s).second)
            fail("duplicate state '" + s + "'");
    }
    std::set<Letter> seen_letters;
    for (const auto& l : net.alphabet) {
        if (l.token.empty())
            fail("empty letter");
        if (std::any_of(l.token.begin(), l.token.end(), [](unsigned char c) { return std::isspace(c); }))
            fail("letter '" + l.token + "' contains whitespace");
        if (!seen_letters.insert(l).second)
            fail("duplicate letter '" + l.token + "'");
    }
    if (net.initial.empty())
        fail("empty initial set");
    for (StateId q : net.initial)
        if (q >= net.num_states())
            fail("bad state reference in initial set");
    for (StateId q : net.accepting)
        if (q >= net.num_states())
            fail("bad state reference in accepting set");
    for (std::size_t i = 0; i < net.transitions.size(); ++i) {
        const auto& t = net.transitions[i];
        const auto where = " in transition " + std::to_string(i);
        if (t.source >= net.num_states() || t.target >= net.num_states())
            fail("bad state reference" + where);
        if (!net.has_letter(t.letter))
            fail("letter '" + t.letter.token + "' not in alphabet" + where);
        if (t.effect.size() != net.dimension)
            fail("effect-length mismatch" + where + ": expected " + std::to_string(net.dimension) +
                 ", got " + std::to_string(t.effect.size()));
    }
    return net;
}

/// Incremental construction by state and letter names. States and letters are
/// declared on first use, in order.
class NetBuilder {
public:
    NetBuilder(std::string name, std::size_t dimension)
    {
        net_.name = std::move(name);
        net_.dimension = dimension;
    }

    NetBuilder& letter(std::string_view token)
    {
        Letter l{std::string(token)};
        if (!net_.has_letter(l))
            net_.alphabet.push_back(std::move(l));
        return *this;
    }

    NetBuilder& letters(std::initializer_list<std::string_view> tokens)
    {
        for (auto t : tokens)
            letter(t);
        return *this;
    }

    StateId state(std::string_view id)
    {
        if (auto q = net_.find_state(id))
            return *q;
        net_.states.emplace_back(id);
        return net_.states.size() - 1;
    }

    NetBuilder& initial(std::string_view id)
    {
        StateId q = state(id);
        if (!net_.is_initial(q))
            net_.initial.push_back(q);
        return *this;
    }

    NetBuilder& accepting(std::string_view id)
    {
        StateId q = state(id);
        if (!net_.is_accepting(q))
            net_.accepting.push_back(q);
        return *this;
    }

    NetBuilder& trans(std::string_view src, std::string_view token, EffectVector effect, std::string_view dst)
    {
        StateId s = state(src);
        StateId d = state(dst);
        letter(token);
        net_.transitions.push_back({s, Letter{std::string(token)}, std::move(effect), d});
        return *this;
    }

    [[nodiscard]] const CounterNet& peek() const { return net_; }

    [[nodiscard]] CounterNet build() const { return validate(net_); }

private:
    CounterNet net_;
};

inline bool is_deterministic(const CounterNet& net)
{
    if (net.initial.size() != 1)
        return false;
    std::set<std::pair<StateId, Letter>> seen;
    for (const auto& t : net.transitions)
        if (!seen.emplace(t.source, t.letter).second)
            return false;
    return true;
}

/// Largest positive entry over all transition effects, 0 if there is none.
inline std::int64_t max_positive_update(const CounterNet& net)
{
    std::int64_t w = 0;
    for (const auto& t : net.transitions)
        for (auto x : t.effect)
            w = std::max(w, x);
    return w;
}

// ---------------------------------------------------------------------------
// Runs

enum class Regime { N, Z };

struct Configuration {
    StateId state = 0;
    Vector counters;
    Regime regime = Regime::N;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

inline Configuration make_configuration(StateId q, Vector counters)
{
    Regime r = nonnegative(counters) ? Regime::N : Regime::Z;
    return {q, std::move(counters), r};
}

/// Alternating configurations and transitions; `transitions[i]` is the index
/// (into the owning net) of the step from configuration i to i + 1.
struct Run {
    std::vector<Configuration> configurations;
    std::vector<std::size_t> transitions;

    [[nodiscard]] std::size_t length() const { return transitions.size(); }

    [[nodiscard]] bool is_n_run() const
    {
        return std::all_of(configurations.begin(), configurations.end(),
                           [](const Configuration& c) { return c.regime == Regime::N; });
    }

    friend bool operator==(const Run&, const Run&) = default;
};

/// Replays transition indices from (start, initial). The result may be a
/// Z-run; check `is_n_run()`.
inline Run make_run(const CounterNet& net, StateId start, Vector initial, std::span<const std::size_t> steps)
{
    Run run;
    run.configurations.push_back(make_configuration(start, std::move(initial)));
    for (std::size_t idx : steps) {
        const auto& t = net.transitions.at(idx);
        const auto& cur = run.configurations.back();
        if (t.source != cur.state)
            throw Error("make_run: transition " + std::to_string(idx) + " does not leave state '" +
                        net.states[cur.state] + "'");
        run.configurations.push_back(make_configuration(t.target, add(cur.counters, t.effect)));
        run.transitions.push_back(idx);
    }
    return run;
}

inline Word run_word(const CounterNet& net, const Run& run)
{
    Word w;
    w.reserve(run.transitions.size());
    for (auto idx : run.transitions)
        w.push_back(net.transitions.at(idx).letter);
    return w;
}

/// eff(run) = last counters - first counters.
inline EffectVector run_effect(const Run& run)
{
    if (run.configurations.empty())
        throw Error("run_effect: empty run");
    return sub(run.configurations.back().counters, run.configurations.front().counters);
}

inline bool is_valid_n_run(const CounterNet& net, const Run& run, const Vector& initial)
{
    if (run.configurations.empty() || run.configurations.size() != run.transitions.size() + 1)
        return false;
    if (run.configurations.front().counters != initial)
        return false;
    for (const auto& c : run.configurations) {
        if (c.state >= net.num_states() || c.counters.size() != net.dimension || !nonnegative(c.counters))
            return false;
    }
    for (std::size_t i = 0; i < run.transitions.size(); ++i) {
        if (run.transitions[i] >= net.transitions.size())
            return false;
        const auto& t = net.transitions[run.transitions[i]];
        const auto& a = run.configurations[i];
        const auto& b = run.configurations[i + 1];
        if (t.source != a.state || t.target != b.state || b.counters != add(a.counters, t.effect))
            return false;
    }
    return true;
}

inline bool is_accepting_run(const CounterNet& net, const Run& run, const Vector& initial)
{
    return is_valid_n_run(net, run, initial) && net.is_initial(run.configurations.front().state) &&
           net.is_accepting(run.configurations.back().state);
}

// ---------------------------------------------------------------------------
// Membership by antichain frontier search.
//
// Transition validity is monotone in the counters, so from (q, v') with
// v' >= v every run available from (q, v) is also available. Each state only
// needs its Pareto-maximal reachable vectors.

class Frontier {
public:
    Frontier() = default;
    explicit Frontier(std::size_t num_states) : sets_(num_states) {}

    [[nodiscard]] std::size_t num_states() const { return sets_.size(); }
    [[nodiscard]] const std::vector<Vector>& at(StateId q) const { return sets_.at(q); }

    /// Inserts v at q unless it is dominated; evicts vectors v dominates.
    /// Returns whether v was inserted.
    bool insert(StateId q, Vector v)
    {
        auto& set = sets_.at(q);
        for (const auto& u : set)
            if (leq(v, u))
                return false;
        std::erase_if(set, [&](const Vector& u) { return leq(u, v); });
        set.insert(std::lower_bound(set.begin(), set.end(), v), std::move(v));
        return true;
    }

    [[nodiscard]] bool empty() const
    {
        return std::all_of(sets_.begin(), sets_.end(), [](const auto& s) { return s.empty(); });
    }

    [[nodiscard]] bool is_antichain() const
    {
        for (const auto& set : sets_)
            for (std::size_t i = 0; i < set.size(); ++i)
                for (std::size_t j = 0; j < set.size(); ++j)
                    if (i != j && leq(set[i], set[j]))
                        return false;
        return true;
    }

    friend bool operator==(const Frontier&, const Frontier&) = default;

private:
    std::vector<std::vector<Vector>> sets_;
};

/// A net preprocessed for repeated membership queries.
class Acceptor {
public:
    explicit Acceptor(const CounterNet& net)
        : dimension_(net.dimension), num_states_(net.num_states()), initial_(net.initial),
          accepting_(net.num_states(), false)
    {
        for (StateId q : net.accepting)
            accepting_.at(q) = true;
        for (std::size_t i = 0; i < net.alphabet.size(); ++i)
            letter_ids_.emplace(net.alphabet[i], i);
        moves_.assign(num_states_, std::vector<std::vector<Move>>(net.alphabet.size()));
        for (const auto& t : net.transitions) {
            auto it = letter_ids_.find(t.letter);
            if (it == letter_ids_.end())
                throw ValidationError("net '" + net.name + "': letter '" + t.letter.token + "' not in alphabet");
            moves_.at(t.source)[it->second].push_back({t.effect, t.target});
        }
    }

    [[nodiscard]] std::size_t dimension() const { return dimension_; }
    [[nodiscard]] std::size_t num_states() const { return num_states_; }

    [[nodiscard]] std::optional<std::size_t> letter_id(const Letter& l) const
    {
        auto it = letter_ids_.find(l);
        if (it == letter_ids_.end())
            return std::nullopt;
        return it->second;
    }

    [[nodiscard]] Frontier initial_frontier(const Vector& initial) const
    {
        check_initial(initial);
        Frontier f(num_states_);
        for (StateId q : initial_)
            f.insert(q, initial);
        return f;
    }

    [[nodiscard]] Frontier step(const Frontier& frontier, std::size_t letter) const
    {
        Frontier next(num_states_);
        for (StateId q = 0; q < frontier.num_states(); ++q) {
            const auto& moves = moves_[q][letter];
            if (moves.empty())
                continue;
            for (const auto& v : frontier.at(q)) {
                for (const auto& m : moves) {
                    Vector w = add(v, m.effect);
                    if (nonnegative(w))
                        next.insert(m.target, std::move(w));
                }
            }
        }
        return next;
    }

    [[nodiscard]] Frontier step(const Frontier& frontier, const Letter& letter) const
    {
        auto id = letter_id(letter);
        if (!id)
            return Frontier(num_states_);
        return step(frontier, *id);
    }

    [[nodiscard]] bool accepting(const Frontier& frontier) const
    {
        for (StateId q = 0; q < frontier.num_states(); ++q)
            if (accepting_[q] && !frontier.at(q).empty())
                return true;
        return false;
    }

    [[nodiscard]] bool accepts(const Word& word, const Vector& initial) const
    {
        Frontier f = initial_frontier(initial);
        for (const auto& l : word) {
            if (f.empty())
                return false;
            f = step(f, l);
        }
        return accepting(f);
    }

    [[nodiscard]] bool accepts(const Word& word) const { return accepts(word, Vector(dimension_, 0)); }

private:
    struct Move {
        EffectVector effect;
        StateId target;
    };

    void check_initial(const Vector& initial) const
    {
        if (initial.size() != dimension_ || !nonnegative(initial))
            throw Error("initial counter vector must have " + std::to_string(dimension_) +
                        " non-negative components");
    }

    std::size_t dimension_;
    std::size_t num_states_;
    std::vector<StateId> initial_;
    std::vector<bool> accepting_;
    std::map<Letter, std::size_t> letter_ids_;
    std::vector<std::vector<std::vector<Move>>> moves_;
};

inline Frontier step_frontier(const CounterNet& net, const Frontier& frontier, const Letter& letter)
{
    return Acceptor(net).step(frontier, letter);
}

inline bool accepts(const CounterNet& net, const Word& word, const Vector& initial)
{
    return Acceptor(net).accepts(word, initial);
}

inline bool accepts(const CounterNet& net, const Word& word) { return accepts(net, word, net.zero()); }

/// Exhaustive path enumeration, no domination pruning. Cross-checks
/// `accepts`; throws CapExceeded once more than `cap` partial paths were
/// visited.
inline bool accepts_naive(const CounterNet& net, const Word& word, const Vector& initial,
                          std::size_t cap = 1'000'000)
{
    if (initial.size() != net.dimension || !nonnegative(initial))
        throw Error("accepts_naive: bad initial vector");
    std::size_t visited = 0;
    auto dfs = [&](auto&& self, StateId q, const Vector& v, std::size_t pos) -> bool {
        if (++visited > cap)
            throw CapExceeded("accepts_naive: more than " + std::to_string(cap) + " paths");
        if (pos == word.size())
            return net.is_accepting(q);
        for (const auto& t : net.transitions) {
            if (t.source != q || t.letter != word[pos])
                continue;
            Vector w = add(v, t.effect);
            if (nonnegative(w) && self(self, t.target, w, pos + 1))
                return true;
        }
        return false;
    };
    for (StateId q : net.initial)
        if (dfs(dfs, q, initial, 0))
            return true;
    return false;
}

struct RunEnumeration {
    std::vector<Run> runs;
    bool cap_exceeded = false;
};

/// All accepting N-runs on `word` from `initial`, depth-first by initial
/// state order then ascending transition index, truncated at `cap`.
inline RunEnumeration enumerate_accepting_runs(const CounterNet& net, const Word& word, const Vector& initial,
                                               std::size_t cap)
{
    if (cap == 0)
        throw Error("enumerate_accepting_runs: cap must be positive");
    if (initial.size() != net.dimension || !nonnegative(initial))
        throw Error("enumerate_accepting_runs: bad initial vector");

    RunEnumeration out;
    // (position, state, counters) from which no accepting completion exists.
    std::set<std::tuple<std::size_t, StateId, Vector>> dead;
    std::vector<std::size_t> path;
    StateId start = 0;

    auto dfs = [&](auto&& self, StateId q, const Vector& v, std::size_t pos) -> bool {
        if (out.cap_exceeded)
            return true;
        if (pos == word.size()) {
            if (!net.is_accepting(q))
                return false;
            if (out.runs.size() == cap) {
                out.cap_exceeded = true;
                return true;
            }
            out.runs.push_back(make_run(net, start, initial, path));
            return true;
        }
        if (dead.contains({pos, q, v}))
            return false;
        bool found = false;
        for (std::size_t i = 0; i < net.transitions.size(); ++i) {
            const auto& t = net.transitions[i];
            if (t.source != q || t.letter != word[pos])
                continue;
            Vector w = add(v, t.effect);
            if (!nonnegative(w))
                continue;
            path.push_back(i);
            found = self(self, t.target, w, pos + 1) || found;
            path.pop_back();
            if (out.cap_exceeded)
                return true;
        }
        if (!found)
            dead.insert({pos, q, v});
        return found;
    };

    for (StateId q : net.initial) {
        start = q;
        dfs(dfs, q, initial, 0);
        if (out.cap_exceeded)
            break;
    }
    return out;
}

} // namespace cnet

#include <stdexcept>

#include "psym/fixtures/fixtures.hpp"

namespace psym {

namespace {

constexpr Letter kNone = 0;
constexpr Letter kI1 = 1;
constexpr Letter kI2 = 2;
constexpr Letter kBoth = 3;
constexpr Letter kAllOutputs = 3;

std::vector<std::string> prefixed_names(const std::vector<std::string>& names, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t q = 0; q < n; ++q) out.push_back("A." + (q < names.size() ? names[q] : "q" + std::to_string(q)));
    return out;
}

}  // namespace

PaReduction reduce_pa_to_transducer(const PA& a, const Rational& lambda) {
    check_pa(a);
    if (a.alphabet_bits != 1) throw std::invalid_argument("reduce-pa: the PA must be over the alphabet {0, 1}");
    if (sgn(lambda) <= 0 || lambda >= 1) throw std::invalid_argument("reduce-pa: lambda must lie in (0, 1)");
    if (a.initial.mass() != 1) throw std::invalid_argument("reduce-pa: initial distribution must sum to one");
    const std::size_t n = a.num_states();
    for (std::size_t q = 0; q < n; ++q)
        for (Letter l : {Letter{0}, Letter{1}}) {
            auto it = a.rows[q].find(l);
            if (it == a.rows[q].end() || it->second.mass() != 1)
                throw std::invalid_argument("reduce-pa: state " + std::to_string(q) + " needs a stochastic row on " +
                                            std::to_string(l));
        }

    auto names = prefixed_names(a.names, n);
    const StateId init = static_cast<StateId>(n), mid = init + 1, top = init + 2, bot = init + 3;
    for (const char* s : {"s_init", "s_mid", "s_top", "s_bot"}) names.emplace_back(s);
    Transducer t(2, names);
    t.set_label(bot, kAllOutputs);
    t.set_initial(Distribution::dirac(init));
    for (StateId q = 0; q < n; ++q) {
        t.set_transition(q, kNone, a.rows[q].at(0));
        t.set_transition(q, kI2, a.rows[q].at(1));
        StateId exit = a.accepting[q] ? top : bot;
        t.set_transition(q, kI1, Distribution::dirac(exit));
        t.set_transition(q, kBoth, Distribution::dirac(exit));
    }
    t.set_transition(init, kI1, Distribution::dirac(mid));
    t.set_transition(init, kI2, a.initial);
    t.set_transition(init, kNone, Distribution::dirac(bot));
    t.set_transition(init, kBoth, Distribution::dirac(bot));
    t.set_transition(mid, kNone, Distribution::dirac(mid));
    t.set_transition(mid, kI1, Distribution::dirac(mid));
    t.set_transition(mid, kI2, Distribution::dirac(bot));
    t.set_transition(mid, kBoth, Distribution::dirac(bot));
    t.set_default(top, Distribution::dirac(top));
    t.set_default(bot, Distribution::dirac(bot));
    return {std::move(t), Permutation::parse("(1 2)", 2), lambda};
}

NfaReduction reduce_nfa_to_transducer(const NFA& a) {
    check_nfa(a);
    if (a.alphabet_bits != 1) throw std::invalid_argument("reduce-nfa: the NFA must be over the alphabet {0, 1}");
    if (a.initial.empty()) throw std::invalid_argument("reduce-nfa: the NFA needs an initial state");
    const std::size_t n = a.num_states();
    for (std::size_t q = 0; q < n; ++q)
        if (!a.accepting[q]) throw std::invalid_argument("reduce-nfa: every NFA state must be accepting");

    auto names = prefixed_names(a.names, n);
    const StateId init = static_cast<StateId>(n), mid = init + 1, bot = init + 2;
    for (const char* s : {"s_init", "s_mid", "s_bot"}) names.emplace_back(s);
    Transducer t(2, names);
    t.set_label(bot, kAllOutputs);
    t.set_initial(Distribution::dirac(init));
    auto with_bot = [&](StateId q, Letter l) {
        std::vector<StateId> targets;
        auto it = a.rows[q].find(l);
        if (it != a.rows[q].end()) targets = it->second;
        targets.push_back(bot);
        return Distribution::uniform(targets);
    };
    for (StateId q = 0; q < n; ++q) {
        t.set_transition(q, kNone, with_bot(q, 0));
        t.set_transition(q, kBoth, with_bot(q, 1));
        t.set_default(q, Distribution::dirac(bot));
    }
    t.set_transition(init, kI1, Distribution::uniform(a.initial));
    t.set_transition(init, kI2, Distribution::dirac(mid));
    t.set_default(init, Distribution::dirac(bot));
    t.set_transition(mid, kNone, Distribution::uniform({mid, bot}));
    t.set_transition(mid, kBoth, Distribution::uniform({mid, bot}));
    t.set_default(mid, Distribution::dirac(bot));
    t.set_default(bot, Distribution::dirac(bot));
    return {std::move(t), Permutation::parse("(1 2)", 2)};
}

}  // namespace psym

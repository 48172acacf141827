#include <deque>
#include <stdexcept>

#include "psym/automata/constructions.hpp"
#include "psym/fixtures/fixtures.hpp"
#include "psym/fixtures/random.hpp"
#include "psym/model/letter.hpp"

namespace psym {

namespace {

// Drops `den` units of mass on uniformly chosen states of `support`.
Distribution random_distribution(Rng& rng, const std::vector<StateId>& support, std::uint64_t den) {
    std::vector<std::uint64_t> units(support.size(), 0);
    for (std::uint64_t u = 0; u < den; ++u) ++units[rng.below(support.size())];
    std::vector<Distribution::Entry> entries;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (units[i] == 0) continue;
        Rational p(units[i], den);
        p.canonicalize();
        entries.emplace_back(support[i], p);
    }
    return Distribution(std::move(entries));
}

std::vector<StateId> all_states(std::size_t n) {
    std::vector<StateId> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<StateId>(i);
    return out;
}

}  // namespace

Transducer gen_random_transducer(std::uint64_t seed, std::size_t n_states, std::size_t k,
                                 std::uint64_t denominator_bound) {
    if (n_states < 1) throw std::invalid_argument("random transducer needs at least one state");
    if (k < 1 || k > kMaxConstructionProcesses) throw std::invalid_argument("random transducer: k out of range");
    if (denominator_bound < 1) throw std::invalid_argument("denominator bound must be at least 1");
    Rng rng(seed);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n_states; ++i) names.push_back("s" + std::to_string(i));
    Transducer t(k, names);
    const auto states = all_states(n_states);
    for (StateId s = 0; s < n_states; ++s) t.set_label(s, rng.below(letter_count(k)));
    t.set_initial(random_distribution(rng, states, rng.between(1, denominator_bound)));
    for (StateId s = 0; s < n_states; ++s)
        for (Letter i = 0; i < letter_count(k); ++i)
            t.set_transition(s, i, random_distribution(rng, states, rng.between(1, denominator_bound)));
    return t;
}

NFA gen_random_nfa(std::uint64_t seed, std::size_t n_states) {
    if (n_states < 1) throw std::invalid_argument("random NFA needs at least one state");
    Rng rng(seed);
    NFA a;
    a.alphabet_bits = 1;
    for (std::size_t i = 0; i < n_states; ++i) a.names.push_back("q" + std::to_string(i));
    a.initial = {0};
    a.accepting.assign(n_states, true);
    a.rows.resize(n_states);
    for (std::size_t q = 0; q < n_states; ++q)
        for (Letter l : {Letter{0}, Letter{1}}) {
            if (rng.chance(1, 4)) continue;
            std::vector<StateId> targets;
            for (StateId p = 0; p < n_states; ++p)
                if (rng.chance(1, 3)) targets.push_back(p);
            if (targets.empty()) targets.push_back(static_cast<StateId>(rng.below(n_states)));
            a.rows[q][l] = std::move(targets);
        }
    return a;
}

PA gen_random_dfa(std::uint64_t seed, std::size_t n_states) {
    if (n_states < 1) throw std::invalid_argument("random DFA needs at least one state");
    Rng rng(seed);
    PA a;
    a.alphabet_bits = 1;
    for (std::size_t i = 0; i < n_states; ++i) a.names.push_back("q" + std::to_string(i));
    a.initial = Distribution::dirac(0);
    a.accepting.resize(n_states);
    a.rows.resize(n_states);
    for (std::size_t q = 0; q < n_states; ++q) {
        a.accepting[q] = rng.chance(1, 4);
        for (Letter l : {Letter{0}, Letter{1}})
            a.rows[q][l] = Distribution::dirac(static_cast<StateId>(rng.below(n_states)));
    }
    return a;
}

long shortest_accepted_length(const PA& dfa) {
    const std::size_t n = dfa.num_states();
    std::vector<long> dist(n, -1);
    std::deque<StateId> todo;
    for (const auto& [s, p] : dfa.initial) {
        dist[s] = 0;
        todo.push_back(s);
    }
    while (!todo.empty()) {
        StateId q = todo.front();
        todo.pop_front();
        if (dfa.accepting[q]) return dist[q];
        for (const auto& [l, d] : dfa.rows[q])
            for (const auto& [p, prob] : d)
                if (dist[p] < 0) {
                    dist[p] = dist[q] + 1;
                    todo.push_back(p);
                }
    }
    return -1;
}

Transducer symmetrize(const Transducer& t, const std::vector<Permutation>& group) {
    require_valid(t);
    if (group.empty()) throw std::invalid_argument("symmetrize: empty group");
    const std::size_t k = t.k();
    const std::size_t n = t.num_states();
    const std::size_t m = group.size();
    for (const auto& g : group)
        if (g.size() != k) throw std::invalid_argument("symmetrize: group acts on the wrong number of processes");
    std::vector<std::string> names;
    for (std::size_t gi = 0; gi < m; ++gi)
        for (StateId s = 0; s < n; ++s) names.push_back(t.name(s) + "@" + std::to_string(gi));
    auto id = [n](StateId s, std::size_t gi) { return static_cast<StateId>(gi * n + s); };
    Transducer out(k, names);
    std::vector<Distribution::Entry> init;
    for (std::size_t gi = 0; gi < m; ++gi) {
        const Permutation inv = group[gi].inverse();
        for (const auto& [s, p] : t.initial()) {
            Rational w = p / static_cast<unsigned long>(m);
            init.emplace_back(id(s, gi), w);
        }
        for (StateId s = 0; s < n; ++s) {
            out.set_label(id(s, gi), permute_letter(group[gi], t.label(s)));
            for (Letter i = 0; i < letter_count(k); ++i) {
                std::vector<Distribution::Entry> row;
                for (const auto& [p, prob] : t.transition(s, permute_letter(inv, i))) row.emplace_back(id(p, gi), prob);
                out.set_transition(id(s, gi), i, Distribution(std::move(row)));
            }
        }
    }
    out.set_initial(Distribution(std::move(init)));
    return out;
}

Transducer perturb_probabilities(const Transducer& t, std::uint64_t seed) {
    Rng rng(seed);
    // Every support element gets at least one of `den` units.
    auto redraw = [&](const Distribution& d) {
        const std::size_t m = d.size();
        const std::uint64_t den = m + rng.between(0, 3);
        std::vector<std::uint64_t> units(m, 1);
        for (std::uint64_t u = m; u < den; ++u) ++units[rng.below(m)];
        std::vector<Distribution::Entry> entries;
        for (std::size_t i = 0; i < m; ++i) {
            Rational p(units[i], den);
            p.canonicalize();
            entries.emplace_back(d.entries()[i].first, p);
        }
        return Distribution(std::move(entries));
    };
    Transducer out = t;
    out.set_initial(redraw(t.initial()));
    for (StateId s = 0; s < t.num_states(); ++s) {
        for (const auto& [i, d] : t.rows(s)) out.set_transition(s, i, redraw(d));
        if (t.default_row(s)) out.set_default(s, redraw(*t.default_row(s)));
    }
    return out;
}

}  // namespace psym

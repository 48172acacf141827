#include "psym/automata/constructions.hpp"

#include <map>
#include <stdexcept>

#include "psym/model/letter.hpp"

namespace psym {

namespace {

void check_inputs(const Transducer& t, const Permutation& pi) {
    if (pi.size() != t.k())
        throw std::invalid_argument("permutation acts on " + std::to_string(pi.size()) + " processes, transducer has k=" +
                                    std::to_string(t.k()));
    if (t.k() > kMaxConstructionProcesses)
        throw std::invalid_argument("k=" + std::to_string(t.k()) + " exceeds the construction limit of " +
                                    std::to_string(kMaxConstructionProcesses));
    require_valid(t);
}

// Splits a successor distribution by the output letter the successor emits,
// as seen by the reader: label mapped through `relabel`.
template <class F>
std::map<Letter, std::vector<Distribution::Entry>> split_by_output(const Transducer& t, const Distribution& d,
                                                                   F relabel) {
    std::map<Letter, std::vector<Distribution::Entry>> out;
    for (const auto& [p, prob] : d) out[relabel(t.label(p))].emplace_back(p, prob);
    return out;
}

PA build_pa(const Transducer& t, const Permutation& pi, bool permuted) {
    const std::size_t k = t.k();
    const std::size_t n = t.num_states();
    const StateId sink = static_cast<StateId>(n);
    const Permutation inv = pi.inverse();
    PA a;
    a.alphabet_bits = 2 * k;
    a.names = t.names();
    a.names.push_back("q_bot");
    a.initial = t.initial();
    a.accepting.assign(n + 1, true);
    a.accepting[sink] = false;
    a.rows.resize(n + 1);
    a.sink = sink;
    for (StateId q = 0; q < n; ++q) {
        for (Letter i = 0; i < letter_count(k); ++i) {
            const Distribution& d = t.transition(q, permuted ? permute_letter(pi, i) : i);
            // B reads output o where the successor emits pi(o).
            auto groups = split_by_output(t, d, [&](Letter l) { return permuted ? permute_letter(inv, l) : l; });
            for (auto& [o, entries] : groups) {
                Rational kept(0);
                for (const auto& e : entries) kept += e.second;
                if (kept != 1) entries.emplace_back(sink, 1 - kept);
                a.rows[q][combine_letter(i, o, k)] = Distribution(std::move(entries));
            }
        }
    }
    return a;
}

PRA build_pra(const Transducer& t, const Permutation& pi, bool permuted) {
    const std::size_t k = t.k();
    const std::size_t n = t.num_states();
    const Permutation inv = pi.inverse();
    PRA r;
    r.k = k;
    r.pa.alphabet_bits = k;
    r.pa.names = t.names();
    r.pa.initial = t.initial();
    r.pa.accepting.assign(n, true);
    r.pa.rows.resize(n);
    r.reward.resize(n);
    for (StateId q = 0; q < n; ++q) {
        for (Letter i = 0; i < letter_count(k); ++i)
            r.pa.rows[q][i] = t.transition(q, permuted ? permute_letter(pi, i) : i);
        r.reward[q] = permuted ? permute_letter(inv, t.label(q)) : t.label(q);
    }
    return r;
}

NFA build_nfa(const Transducer& t, const Permutation& pi, bool permuted) {
    const std::size_t k = t.k();
    const std::size_t n = t.num_states();
    const Permutation inv = pi.inverse();
    NFA a;
    a.alphabet_bits = 2 * k;
    a.names = t.names();
    a.initial = t.initial().support();
    a.accepting.assign(n, true);
    a.rows.resize(n);
    for (StateId q = 0; q < n; ++q) {
        for (Letter i = 0; i < letter_count(k); ++i) {
            const Distribution& d = t.transition(q, permuted ? permute_letter(pi, i) : i);
            for (const auto& [p, prob] : d) {
                Letter o = permuted ? permute_letter(inv, t.label(p)) : t.label(p);
                a.rows[q][combine_letter(i, o, k)].push_back(p);
            }
        }
    }
    return a;
}

}  // namespace

std::pair<PA, PA> build_pa_pair(const Transducer& t, const Permutation& pi) {
    check_inputs(t, pi);
    return {build_pa(t, pi, false), build_pa(t, pi, true)};
}

std::pair<PRA, PRA> build_pra_pair(const Transducer& t, const Permutation& pi) {
    check_inputs(t, pi);
    return {build_pra(t, pi, false), build_pra(t, pi, true)};
}

std::pair<NFA, NFA> build_nfa_pair(const Transducer& t, const Permutation& pi) {
    check_inputs(t, pi);
    return {build_nfa(t, pi, false), build_nfa(t, pi, true)};
}

}  // namespace psym

#include "psym/automata/automata.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace psym {

std::vector<Letter> PA::letters() const {
    std::set<Letter> all;
    for (const auto& row : rows)
        for (const auto& [l, d] : row) all.insert(l);
    return {all.begin(), all.end()};
}

std::vector<Rational> PA::forward(const Word& w) const {
    const std::size_t n = num_states();
    std::vector<Rational> v(n);
    for (const auto& [s, p] : initial) v[s] += p;
    for (Letter l : w) {
        std::vector<Rational> next(n);
        for (std::size_t q = 0; q < n; ++q) {
            if (is_zero(v[q])) continue;
            auto it = rows[q].find(l);
            if (it == rows[q].end()) {
                if (sink) next[*sink] += v[q];
                continue;
            }
            for (const auto& [p, prob] : it->second) next[p] += v[q] * prob;
        }
        v = std::move(next);
    }
    return v;
}

Rational PA::accept_probability(const Word& w) const {
    auto v = forward(w);
    Rational sum(0);
    for (std::size_t q = 0; q < v.size(); ++q)
        if (accepting[q]) sum += v[q];
    return sum;
}

std::vector<Letter> NFA::letters() const {
    std::set<Letter> all;
    for (const auto& row : rows)
        for (const auto& [l, d] : row) all.insert(l);
    return {all.begin(), all.end()};
}

std::vector<StateId> NFA::reach(const Word& w) const {
    std::set<StateId> cur(initial.begin(), initial.end());
    for (Letter l : w) {
        std::set<StateId> next;
        for (StateId q : cur) {
            auto it = rows[q].find(l);
            if (it != rows[q].end()) next.insert(it->second.begin(), it->second.end());
        }
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

bool NFA::accepts(const Word& w) const {
    for (StateId q : reach(w))
        if (accepting[q]) return true;
    return false;
}

void check_pa(const PA& a) {
    const std::size_t n = a.num_states();
    if (a.accepting.size() != n) throw std::invalid_argument("PA: accepting vector has wrong size");
    if (a.sink && *a.sink >= n) throw std::invalid_argument("PA: sink out of range");
    if (a.alphabet_bits > 62) throw std::invalid_argument("PA: alphabet too large");
    const Letter limit = Letter{1} << a.alphabet_bits;
    for (const auto& [s, p] : a.initial)
        if (s >= n) throw std::invalid_argument("PA: initial distribution names an unknown state");
    if (a.initial.mass() > 1) throw std::invalid_argument("PA: initial mass exceeds one");
    for (std::size_t q = 0; q < n; ++q) {
        for (const auto& [l, d] : a.rows[q]) {
            if (l >= limit) throw std::invalid_argument("PA: letter out of range");
            for (const auto& [s, p] : d)
                if (s >= n) throw std::invalid_argument("PA: transition to unknown state");
            if (a.sink ? d.mass() != 1 : d.mass() > 1)
                throw std::invalid_argument("PA: row of state " + std::to_string(q) + " has mass " + to_string(d.mass()));
        }
    }
}

void check_nfa(const NFA& a) {
    const std::size_t n = a.num_states();
    if (a.accepting.size() != n) throw std::invalid_argument("NFA: accepting vector has wrong size");
    if (a.alphabet_bits > 62) throw std::invalid_argument("NFA: alphabet too large");
    const Letter limit = Letter{1} << a.alphabet_bits;
    for (StateId s : a.initial)
        if (s >= n) throw std::invalid_argument("NFA: unknown initial state");
    for (const auto& row : a.rows)
        for (const auto& [l, targets] : row) {
            if (l >= limit) throw std::invalid_argument("NFA: letter out of range");
            if (targets.empty()) throw std::invalid_argument("NFA: empty successor set listed explicitly");
            for (StateId s : targets)
                if (s >= n) throw std::invalid_argument("NFA: transition to unknown state");
        }
}

}  // namespace psym

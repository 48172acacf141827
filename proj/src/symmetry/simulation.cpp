#include "psym/symmetry/simulation.hpp"

#include <stdexcept>

namespace psym {

namespace {

void check_input(const Transducer& t, const Word& x) {
    if (x.empty()) throw std::invalid_argument("input words must be nonempty");
    for (Letter l : x)
        if (l >> t.k()) throw std::invalid_argument("input letter uses a signal above k");
}

// Generic forward expansion over (key, state) pairs; `extend` maps a key and
// the entered state to the successor key.
template <class Key, class Extend>
std::map<Key, std::map<StateId, Rational>> expand(const Transducer& t, const Word& x, Key start, Extend extend) {
    std::map<Key, std::map<StateId, Rational>> cur;
    for (const auto& [s, p] : t.initial()) cur[start][s] += p;
    for (Letter i : x) {
        std::map<Key, std::map<StateId, Rational>> next;
        for (const auto& [key, states] : cur)
            for (const auto& [q, w] : states)
                for (const auto& [p, prob] : t.transition(q, i)) next[extend(key, p)][p] += w * prob;
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

Rational output_probability(const Transducer& t, const Word& x, const Word& y) {
    check_input(t, x);
    if (x.size() != y.size()) throw std::invalid_argument("input and output words differ in length");
    std::map<StateId, Rational> v;
    for (const auto& [s, p] : t.initial()) v[s] += p;
    for (std::size_t step = 0; step < x.size(); ++step) {
        std::map<StateId, Rational> next;
        for (const auto& [q, w] : v)
            for (const auto& [p, prob] : t.transition(q, x[step]))
                if (t.label(p) == y[step]) next[p] += w * prob;
        v = std::move(next);
        if (v.empty()) return Rational(0);
    }
    Rational sum(0);
    for (const auto& [q, w] : v) sum += w;
    return sum;
}

std::map<Word, Rational> output_distribution(const Transducer& t, const Word& x) {
    check_input(t, x);
    auto cur = expand(t, x, Word{}, [&](const Word& y, StateId p) {
        Word z = y;
        z.push_back(t.label(p));
        return z;
    });
    std::map<Word, Rational> out;
    for (const auto& [y, states] : cur)
        for (const auto& [q, w] : states) out[y] += w;
    return out;
}

std::map<ParikhVector, Rational> parikh_distribution(const Transducer& t, const Word& x) {
    check_input(t, x);
    const std::size_t k = t.k();
    auto cur = expand(t, x, ParikhVector(k, 0), [&](const ParikhVector& a, StateId p) {
        ParikhVector b = a;
        for (std::size_t j = 0; j < k; ++j)
            if ((t.label(p) >> j) & 1U) ++b[j];
        return b;
    });
    std::map<ParikhVector, Rational> out;
    for (const auto& [a, states] : cur)
        for (const auto& [q, w] : states) out[a] += w;
    return out;
}

std::vector<Rational> expected_parikh(const Transducer& t, const Word& x) {
    check_input(t, x);
    const std::size_t k = t.k();
    // Per state: probability mass and reward-weighted mass per signal.
    std::map<StateId, std::pair<Rational, std::vector<Rational>>> cur;
    for (const auto& [s, p] : t.initial()) {
        auto& slot = cur[s];
        slot.first += p;
        slot.second.resize(k);
    }
    for (Letter i : x) {
        std::map<StateId, std::pair<Rational, std::vector<Rational>>> next;
        for (const auto& [q, slot] : cur) {
            for (const auto& [p, prob] : t.transition(q, i)) {
                auto& dst = next[p];
                dst.second.resize(k);
                Rational mass = slot.first * prob;
                dst.first += mass;
                for (std::size_t j = 0; j < k; ++j) {
                    dst.second[j] += slot.second[j] * prob;
                    if ((t.label(p) >> j) & 1U) dst.second[j] += mass;
                }
            }
        }
        cur = std::move(next);
    }
    std::vector<Rational> out(k);
    for (const auto& [q, slot] : cur)
        for (std::size_t j = 0; j < k; ++j) out[j] += slot.second[j];
    return out;
}

}  // namespace psym

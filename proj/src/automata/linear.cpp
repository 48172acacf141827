#include "psym/automata/linear.hpp"

#include <deque>

namespace psym {

namespace {

// States from which some accepting state is reachable.
std::vector<bool> coreachable(const PA& a) {
    const std::size_t n = a.num_states();
    std::vector<std::vector<StateId>> preds(n);
    for (StateId q = 0; q < n; ++q)
        for (const auto& [l, d] : a.rows[q])
            for (const auto& [p, prob] : d) preds[p].push_back(q);
    std::vector<bool> live(n, false);
    std::deque<StateId> todo;
    for (StateId q = 0; q < n; ++q)
        if (a.accepting[q]) {
            live[q] = true;
            todo.push_back(q);
        }
    while (!todo.empty()) {
        StateId p = todo.front();
        todo.pop_front();
        for (StateId q : preds[p])
            if (!live[q]) {
                live[q] = true;
                todo.push_back(q);
            }
    }
    return live;
}

}  // namespace

QRepresentation to_linear_representation(const PA& a) {
    check_pa(a);
    std::vector<bool> live = coreachable(a);
    std::vector<std::size_t> index(a.num_states(), SIZE_MAX);
    std::size_t dim = 0;
    for (std::size_t q = 0; q < a.num_states(); ++q)
        if (live[q]) index[q] = dim++;

    QRepresentation r;
    r.alphabet_bits = a.alphabet_bits;
    r.dimension = dim;
    r.initial.assign(dim, Rational(0));
    r.final.assign(dim, Rational(0));
    for (const auto& [s, p] : a.initial)
        if (live[s]) r.initial[index[s]] += p;
    for (std::size_t q = 0; q < a.num_states(); ++q)
        if (live[q] && a.accepting[q]) r.final[index[q]] = 1;
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        if (!live[q]) continue;
        for (const auto& [l, d] : a.rows[q]) {
            for (const auto& [p, prob] : d) {
                if (!live[p]) continue;
                auto [it, fresh] = r.letters.try_emplace(l, dim, dim);
                it->second(index[q], index[p]) += prob;
            }
        }
    }
    return r;
}

QRepresentation expected_reward_representation(const PRA& p, std::size_t j) {
    if (j >= p.k) throw std::out_of_range("reward coordinate " + std::to_string(j + 1) + " out of range 1.." +
                                          std::to_string(p.k));
    check_pa(p.pa);
    const std::size_t n = p.pa.num_states();
    QRepresentation r;
    r.alphabet_bits = p.pa.alphabet_bits;
    r.dimension = 2 * n;
    r.initial.assign(2 * n, Rational(0));
    r.final.assign(2 * n, Rational(0));
    for (const auto& [s, w] : p.pa.initial) r.initial[s] += w;
    for (std::size_t q = 0; q < n; ++q)
        if (p.pa.accepting[q]) r.final[n + q] = 1;
    for (std::size_t q = 0; q < n; ++q) {
        for (const auto& [l, d] : p.pa.rows[q]) {
            auto [it, fresh] = r.letters.try_emplace(l, 2 * n, 2 * n);
            QMatrix& m = it->second;
            for (const auto& [s, prob] : d) {
                m(q, s) += prob;
                m(n + q, n + s) += prob;
                if ((p.reward[s] >> j) & 1U) m(q, n + s) += prob;
            }
        }
    }
    return r;
}

PolyRepresentation symbolic_reward_representation(const PRA& p) {
    check_pa(p.pa);
    const std::size_t n = p.pa.num_states();
    const std::size_t k = p.k;
    PolyRepresentation r;
    r.alphabet_bits = p.pa.alphabet_bits;
    r.dimension = n;
    r.initial.assign(n, Polynomial(k));
    r.final.assign(n, Polynomial(k));
    for (const auto& [s, w] : p.pa.initial) r.initial[s] += Polynomial(k, w);
    for (std::size_t q = 0; q < n; ++q)
        if (p.pa.accepting[q]) r.final[q] = Polynomial(k, Rational(1));
    for (std::size_t q = 0; q < n; ++q) {
        for (const auto& [l, d] : p.pa.rows[q]) {
            auto [it, fresh] = r.letters.try_emplace(l, n, n);
            for (const auto& [s, prob] : d) {
                Polynomial::Exponents e(k, 0);
                for (std::size_t j = 0; j < k; ++j) e[j] = (p.reward[s] >> j) & 1U;
                it->second(q, s) += Polynomial::monomial(k, std::move(e), prob);
            }
        }
    }
    return r;
}

QRepresentation evaluate_at(const PolyRepresentation& r, std::span<const Rational> point) {
    QRepresentation out;
    out.alphabet_bits = r.alphabet_bits;
    out.dimension = r.dimension;
    for (const auto& x : r.initial) out.initial.push_back(x.evaluate(point));
    for (const auto& x : r.final) out.final.push_back(x.evaluate(point));
    for (const auto& [l, m] : r.letters) {
        QMatrix e(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m(i, c).is_zero()) e(i, c) = m(i, c).evaluate(point);
        out.letters.emplace(l, std::move(e));
    }
    return out;
}

}  // namespace psym

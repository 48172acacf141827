#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "psym/algebra/matrix.hpp"
#include "psym/algebra/polynomial.hpp"
#include "psym/automata/automata.hpp"

namespace psym {

/// Weighted automaton (u, {M_a}, f): the value of w = a1..an is
/// u * M_a1 * ... * M_an * f. Letters without a matrix act as zero.
template <class T>
struct LinearRepresentation {
    std::size_t alphabet_bits = 0;
    std::size_t dimension = 0;
    std::vector<T> initial;
    std::vector<T> final;
    std::map<Letter, Matrix<T>> letters;

    const Matrix<T>* matrix(Letter a) const {
        auto it = letters.find(a);
        return it == letters.end() ? nullptr : &it->second;
    }

    /// u * M_w; a missing letter yields the zero vector.
    std::vector<T> forward(std::span<const Letter> w) const {
        std::vector<T> v = initial;
        for (Letter a : w) {
            const Matrix<T>* m = matrix(a);
            if (!m) return std::vector<T>(dimension);
            v = vec_mat_mul(v, *m);
        }
        return v;
    }

    T value(std::span<const Letter> w) const { return dot(forward(w), final); }
    T value(const Word& w) const { return value(std::span<const Letter>(w)); }

    void check() const {
        if (initial.size() != dimension || final.size() != dimension)
            throw DimensionError("linear representation: vector sizes disagree with dimension");
        for (const auto& [a, m] : letters)
            if (m.rows() != dimension || m.cols() != dimension)
                throw DimensionError("linear representation: matrix for letter " + std::to_string(a) + " is " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
};

using QRepresentation = LinearRepresentation<Rational>;
using PolyRepresentation = LinearRepresentation<Polynomial>;

/// u = initial distribution, M_a[q][p] = delta(q, a)(p), f = accepting set.
/// States from which no accepting state is reachable (such as a rejecting
/// sink) are removed first; they never contribute to the value.
QRepresentation to_linear_representation(const PA& a);

/// Dimension-2n representation whose value on w is the expected total of
/// reward bit j (0-based) collected while reading w.
QRepresentation expected_reward_representation(const PRA& p, std::size_t j);

/// Entries delta(q, a)(p) * prod_j y_j^{R(p)_j}; the value of w is the
/// generating polynomial sum_v Pr(reward total = v) * y^v.
PolyRepresentation symbolic_reward_representation(const PRA& p);

/// Substitutes a point for the variables of every entry.
QRepresentation evaluate_at(const PolyRepresentation& r, std::span<const Rational> point);

}  // namespace psym

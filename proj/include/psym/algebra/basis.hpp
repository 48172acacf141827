#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "psym/algebra/matrix.hpp"
#include "psym/algebra/polynomial.hpp"
#include "psym/algebra/rational.hpp"
#include "psym/common.hpp"

namespace psym {

namespace detail {

template <class T>
std::size_t first_nonzero(const std::vector<T>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) return i;
    return v.size();
}

// Scales a basis vector to a canonical representative of its line.
inline void normalize(std::vector<Rational>& v, std::size_t pivot) {
    Rational inv = 1 / v[pivot];
    for (std::size_t i = pivot; i < v.size(); ++i)
        if (!is_zero(v[i])) v[i] *= inv;
}

inline void eliminate(std::vector<Rational>& v, const std::vector<Rational>& b, std::size_t pivot) {
    if (is_zero(v[pivot])) return;
    Rational factor = v[pivot];  // b[pivot] == 1
    for (std::size_t i = pivot; i < v.size(); ++i)
        if (!is_zero(b[i])) v[i] -= factor * b[i];
}

}  // namespace detail

/// Incrementally maintained row-echelon basis. Each stored vector carries the
/// word whose forward vector it was derived from.
///
/// For polynomial entries the span is taken over the fraction field Q(y);
/// elimination stays inside Q[y] (fraction-free, Bareiss).
template <class T>
class Basis {
public:
    explicit Basis(std::size_t dimension) : dimension_(dimension) {}

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return vectors_.size(); }
    bool empty() const { return vectors_.empty(); }

    const std::vector<std::vector<T>>& vectors() const { return vectors_; }
    const std::vector<Word>& witnesses() const { return witnesses_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residue of v after elimination against the basis; zero iff v is in the span.
    std::vector<T> reduce(std::vector<T> v) const {
        check_dimension(v);
        if constexpr (std::is_same_v<T, Polynomial>) {
            // Bareiss steps in insertion order: every intermediate entry is a
            // minor of the original rows, so the divisions are exact and
            // degrees grow linearly.
            const Polynomial* prev = nullptr;
            for (std::size_t i = 0; i < vectors_.size(); ++i) {
                const auto& b = vectors_[i];
                const Polynomial& piv = b[pivots_[i]];
                Polynomial coef = v[pivots_[i]];
                for (std::size_t j = 0; j < v.size(); ++j) {
                    if (v[j].is_zero() && (coef.is_zero() || b[j].is_zero())) continue;
                    Polynomial next = piv * v[j];
                    if (!coef.is_zero() && !b[j].is_zero()) next -= coef * b[j];
                    v[j] = prev ? exact_quotient(next, *prev) : std::move(next);
                }
                prev = &piv;
            }
        } else {
            for (std::size_t i = 0; i < vectors_.size(); ++i) detail::eliminate(v, vectors_[i], pivots_[i]);
        }
        return v;
    }

    bool contains(const std::vector<T>& v) const { return is_zero_vector(reduce(v)); }

    /// Adds v (with its witness word) when it is not in the span. Returns
    /// whether the basis grew.
    bool extend(std::vector<T> v, Word witness) {
        std::vector<T> r = reduce(std::move(v));
        std::size_t pivot = detail::first_nonzero(r);
        if (pivot == r.size()) return false;
        if constexpr (std::is_same_v<T, Polynomial>) {
            // Unnormalized, in insertion order (see reduce).
            pivots_.push_back(pivot);
            vectors_.push_back(std::move(r));
            witnesses_.push_back(std::move(witness));
        } else {
            detail::normalize(r, pivot);
            auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
            pivots_.insert(pivots_.begin() + pos, pivot);
            vectors_.insert(vectors_.begin() + pos, std::move(r));
            witnesses_.insert(witnesses_.begin() + pos, std::move(witness));
        }
        return true;
    }

private:
    void check_dimension(const std::vector<T>& v) const {
        if (v.size() != dimension_)
            throw DimensionError("basis of dimension " + std::to_string(dimension_) + " given vector of length " +
                                 std::to_string(v.size()));
    }

    std::size_t dimension_;
    std::vector<std::vector<T>> vectors_;
    std::vector<Word> witnesses_;
    std::vector<std::size_t> pivots_;
};

/// Value-returning form of Basis::extend.
template <class T>
std::pair<Basis<T>, bool> extend_basis(Basis<T> basis, std::vector<T> v, Word witness) {
    bool added = basis.extend(std::move(v), std::move(witness));
    return {std::move(basis), added};
}

}  // namespace psym

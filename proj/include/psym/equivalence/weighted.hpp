#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "psym/algebra/basis.hpp"
#include "psym/automata/linear.hpp"

namespace psym {

template <class T>
struct WeightedResult {
    bool equivalent = true;
    std::optional<Word> witness;
    T left{};   // value of the witness in the first representation
    T right{};  // ... and in the second
    std::size_t basis_size = 0;
    std::size_t extensions = 0;  // candidate vectors examined
};

namespace detail {

template <class T>
Matrix<T> block_diagonal(const Matrix<T>* a, std::size_t n1, const Matrix<T>* b, std::size_t n2) {
    Matrix<T> m(n1 + n2, n1 + n2);
    if (a)
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j) m(i, j) = (*a)(i, j);
    if (b)
        for (std::size_t i = 0; i < n2; ++i)
            for (std::size_t j = 0; j < n2; ++j) m(n1 + i, n1 + j) = (*b)(i, j);
    return m;
}

template <class T>
std::vector<T> mat_vec_mul(const Matrix<T>& m, const std::vector<T>& v) {
    std::vector<T> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(v[j]) && !is_zero(m(i, j))) out[i] += m(i, j) * v[j];
    return out;
}

template <class T>
bool orthogonal_to(const std::vector<T>& v, const Basis<T>& space) {
    for (const auto& b : space.vectors())
        if (!is_zero(dot(v, b))) return false;
    return true;
}

// Among words of length `len` with nonzero value u*M_w*f, the
// lexicographically least one. Requires that such a word exists.
template <class T>
Word least_witness(const std::vector<T>& u, const std::vector<T>& f, const std::vector<Letter>& letters,
                   const std::vector<Matrix<T>>& mats, std::size_t len) {
    const std::size_t dim = u.size();
    // back[r] spans {M_s f : |s| = r}.
    std::vector<Basis<T>> back;
    back.emplace_back(dim);
    back[0].extend(f, {});
    for (std::size_t r = 1; r < len; ++r) {
        Basis<T> next(dim);
        for (const auto& b : back[r - 1].vectors())
            for (const auto& m : mats) {
                next.extend(mat_vec_mul(m, b), {});
                if (next.size() == dim) break;
            }
        back.push_back(std::move(next));
    }
    Word w;
    std::vector<T> v = u;
    for (std::size_t t = 0; t < len; ++t) {
        const Basis<T>& target = back[len - 1 - t];
        bool moved = false;
        for (std::size_t a = 0; a < letters.size(); ++a) {
            std::vector<T> next = vec_mat_mul(v, mats[a]);
            if (!orthogonal_to(next, target)) {
                v = std::move(next);
                w.push_back(letters[a]);
                moved = true;
                break;
            }
        }
        if (!moved) throw std::logic_error("least_witness: no extension keeps a nonzero value");
    }
    return w;
}

}  // namespace detail

/// Decides whether two weighted automata agree on every nonempty word by a
/// breadth-first span search over the stacked difference automaton. On
/// disagreement the witness is a shortest word, lexicographically least
/// (by letter value) among the shortest.
template <class T>
WeightedResult<T> weighted_equivalent(const LinearRepresentation<T>& r1, const LinearRepresentation<T>& r2) {
    r1.check();
    r2.check();
    if (r1.alphabet_bits != r2.alphabet_bits)
        throw std::invalid_argument("weighted_equivalent: alphabets differ (" + std::to_string(r1.alphabet_bits) +
                                    " vs " + std::to_string(r2.alphabet_bits) + " bits)");
    const std::size_t n1 = r1.dimension;
    const std::size_t n2 = r2.dimension;
    const std::size_t dim = n1 + n2;

    std::set<Letter> all;
    for (const auto& [a, m] : r1.letters) all.insert(a);
    for (const auto& [a, m] : r2.letters) all.insert(a);
    std::vector<Letter> letters(all.begin(), all.end());
    std::vector<Matrix<T>> mats;
    mats.reserve(letters.size());
    for (Letter a : letters) mats.push_back(detail::block_diagonal(r1.matrix(a), n1, r2.matrix(a), n2));

    std::vector<T> u(dim), f(dim);
    for (std::size_t i = 0; i < n1; ++i) {
        u[i] = r1.initial[i];
        f[i] = r1.final[i];
    }
    for (std::size_t i = 0; i < n2; ++i) {
        u[n1 + i] = r2.initial[i];
        f[n1 + i] = T{} - r2.final[i];
    }

    WeightedResult<T> result;
    Basis<T> basis(dim);
    std::deque<std::pair<std::vector<T>, Word>> queue;
    std::optional<std::size_t> found_len;

    auto consider = [&](std::vector<T> v, const Word& w) {
        ++result.extensions;
        if (is_zero_vector(v)) return;
        if (!is_zero(dot(v, f))) {
            found_len = w.size();
            return;
        }
        if (basis.extend(v, w)) queue.emplace_back(std::move(v), w);
    };

    for (std::size_t a = 0; a < letters.size() && !found_len; ++a) consider(vec_mat_mul(u, mats[a]), Word{letters[a]});
    while (!queue.empty() && !found_len) {
        auto [v, w] = std::move(queue.front());
        queue.pop_front();
        for (std::size_t a = 0; a < letters.size() && !found_len; ++a) {
            Word next = w;
            next.push_back(letters[a]);
            consider(vec_mat_mul(v, mats[a]), next);
        }
    }
    result.basis_size = basis.size();
    if (!found_len) return result;

    Word w = detail::least_witness(u, f, letters, mats, *found_len);
    result.equivalent = false;
    result.left = r1.value(w);
    result.right = r2.value(w);
    result.witness = std::move(w);
    return result;
}

}  // namespace psym

#include "psym/symmetry/falsify.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <optional>

#include "psym/model/letter.hpp"

namespace psym {

FrontierExplosion::FrontierExplosion(std::size_t size, std::size_t cap, std::size_t length)
    : std::runtime_error("state explosion: frontier of " + std::to_string(size) + " entries exceeds the cap of " +
                         std::to_string(cap) + " at input length " + std::to_string(length)),
      size_(size),
      cap_(cap),
      length_(length) {}

std::vector<Letter> letters_in_display_order(std::size_t k) {
    std::vector<Letter> out(letter_count(k));
    for (Letter l = 0; l < out.size(); ++l) out[l] = l;
    std::sort(out.begin(), out.end(),
              [k](Letter a, Letter b) { return letter_to_bits(a, k) < letter_to_bits(b, k); });
    return out;
}

namespace {

// Output word -> weight per current state.
using Frontier = std::map<Word, std::map<StateId, Rational>>;

struct Found {
    Word x, y;
    Rational left, right;
};

class Search {
public:
    Search(const Transducer& t, const Permutation& pi, const Rational& eps, std::size_t cap)
        : t_(t), pi_(pi), inv_(pi.inverse()), eps_(eps), cap_(cap), order_(letters_in_display_order(t.k())) {
        rank_.resize(order_.size());
        for (std::size_t r = 0; r < order_.size(); ++r) rank_[order_[r]] = r;
        for (const auto& [s, p] : t.initial()) root_[Word{}][s] += p;
    }

    const std::vector<Letter>& order() const { return order_; }

    // Least counterexample of exactly this length whose input starts with `first`.
    std::optional<Found> subtree(Letter first, std::size_t length) const {
        Word x{first};
        Frontier left = step(root_, first, false, 1);
        Frontier right = step(root_, permute_letter(pi_, first), true, 1);
        return dfs(x, left, right, length);
    }

private:
    // The right-hand side is keyed by pi^{-1} of its outputs so both
    // frontiers are indexed by the same y.
    Frontier step(const Frontier& cur, Letter input, bool permuted, std::size_t depth) const {
        Frontier next;
        std::size_t entries = 0;
        for (const auto& [y, states] : cur)
            for (const auto& [q, w] : states)
                for (const auto& [p, prob] : t_.transition(q, input)) {
                    Word z = y;
                    z.push_back(permuted ? permute_letter(inv_, t_.label(p)) : t_.label(p));
                    auto& slot = next[std::move(z)][p];
                    if (is_zero(slot)) ++entries;
                    slot += w * prob;
                    if (entries > cap_) throw FrontierExplosion(entries, cap_, depth);
                }
        return next;
    }

    std::optional<Found> dfs(Word& x, const Frontier& left, const Frontier& right, std::size_t length) const {
        if (x.size() == length) return compare(x, left, right);
        for (Letter i : order_) {
            x.push_back(i);
            Frontier l = step(left, i, false, x.size());
            Frontier r = step(right, permute_letter(pi_, i), true, x.size());
            auto found = dfs(x, l, r, length);
            x.pop_back();
            if (found) return found;
        }
        return std::nullopt;
    }

    bool display_less(const Word& a, const Word& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [&](Letter u, Letter v) { return rank_[u] < rank_[v]; });
    }

    static Rational mass(const Frontier& f, const Word& y) {
        auto it = f.find(y);
        Rational sum(0);
        if (it != f.end())
            for (const auto& [q, w] : it->second) sum += w;
        return sum;
    }

    std::optional<Found> compare(const Word& x, const Frontier& left, const Frontier& right) const {
        std::optional<Found> best;
        auto consider = [&](const Word& y) {
            if (best && !display_less(y, best->y)) return;
            Rational l = mass(left, y);
            Rational r = mass(right, y);
            if (abs(l - r) > eps_) best = Found{x, y, l, r};
        };
        for (const auto& [y, s] : left) consider(y);
        for (const auto& [y, s] : right)
            if (!left.count(y)) consider(y);
        return best;
    }

    const Transducer& t_;
    const Permutation& pi_;
    Permutation inv_;
    Rational eps_;
    std::size_t cap_;
    std::vector<Letter> order_;
    std::vector<std::size_t> rank_;
    Frontier root_;
};

}  // namespace

SymmetryVerdict falsify_linf(const Transducer& t, const Permutation& pi, const Rational& epsilon, std::size_t max_len,
                             const FalsifyOptions& options) {
    if (sgn(epsilon) <= 0 || epsilon > 1)
        throw std::invalid_argument("epsilon must lie in (0, 1], got " + to_string(epsilon));
    if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
    if (pi.size() != t.k())
        throw std::invalid_argument("permutation acts on " + std::to_string(pi.size()) + " processes, model has k=" +
                                    std::to_string(t.k()));
    if (t.k() > 16) throw std::invalid_argument("falsify_linf enumerates 2^k input letters; k is too large");
    require_valid(t);

    SymmetryVerdict v;
    v.kind = SymmetryKind::LinfFalsify;
    v.result = VerdictResult::NoCounterexampleFound;
    v.permutation = pi;
    v.epsilon = epsilon;
    v.max_len = max_len;
    v.engine.engine = "bounded-forward-search";
    v.note = "bounded search only; absence of a counterexample is not a proof of approximate symmetry";
    // Probabilities lie in [0, 1], so no deviation can exceed epsilon = 1.
    if (epsilon == 1) return v;

    Search search(t, pi, epsilon, options.frontier_cap);
    const auto& order = search.order();
    for (std::size_t length = 1; length <= max_len; ++length) {
        std::vector<std::optional<Found>> found(order.size());
        std::vector<std::exception_ptr> errors(order.size());
        auto run = [&](std::size_t i) {
            try {
                found[i] = search.subtree(order[i], length);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        };
        if (options.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
            for (std::size_t i = 0; i < order.size(); ++i) run(i);
        } else {
            for (std::size_t i = 0; i < order.size(); ++i) {
                run(i);
                if (found[i] || errors[i]) break;
            }
        }
        // Outcome of the first subtree (in input order) that ended the search.
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (errors[i]) std::rethrow_exception(errors[i]);
            if (found[i]) {
                v.result = VerdictResult::NotSymmetric;
                Counterexample c;
                c.input = found[i]->x;
                c.output = found[i]->y;
                c.left = found[i]->left;
                c.right = found[i]->right;
                v.counterexample = std::move(c);
                v.note.clear();
                return v;
            }
        }
    }
    return v;
}

}  // namespace psym

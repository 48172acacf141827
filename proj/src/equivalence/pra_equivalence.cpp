#include "psym/equivalence/pra_equivalence.hpp"

#include <random>
#include <stdexcept>

#include "psym/automata/linear.hpp"
#include "psym/equivalence/weighted.hpp"

namespace psym {

const char* to_string(ParikhMode mode) { return mode == ParikhMode::Symbolic ? "symbolic" : "randomized"; }

ParikhMode parse_parikh_mode(const std::string& text) {
    if (text == "symbolic") return ParikhMode::Symbolic;
    if (text == "randomized") return ParikhMode::Randomized;
    throw std::invalid_argument("unknown mode '" + text + "' (expected symbolic or randomized)");
}

ParikhMode default_parikh_mode(std::size_t k) { return k <= 4 ? ParikhMode::Symbolic : ParikhMode::Randomized; }

namespace {

void check_pair(const PRA& p1, const PRA& p2) {
    if (p1.k != p2.k)
        throw std::invalid_argument("reward automata disagree on k (" + std::to_string(p1.k) + " vs " +
                                    std::to_string(p2.k) + ")");
    if (p1.pa.alphabet_bits != p2.pa.alphabet_bits) throw std::invalid_argument("reward automata disagree on alphabet");
}

// Fills in the reward vector whose probabilities differ: the least monomial
// (in exponent order) with different coefficients.
void describe_witness(const PRA& p1, const PRA& p2, PraDistributionResult& r) {
    r.left_polynomial = reward_generating_polynomial(p1, *r.witness);
    r.right_polynomial = reward_generating_polynomial(p2, *r.witness);
    Polynomial diff = r.left_polynomial - r.right_polynomial;
    if (diff.is_zero()) throw std::logic_error("distribution witness does not separate the automata");
    const auto& e = diff.terms().begin()->first;
    r.reward.assign(e.begin(), e.end());
    r.left = r.left_polynomial.coefficient(e);
    r.right = r.right_polynomial.coefficient(e);
}

}  // namespace

Polynomial reward_generating_polynomial(const PRA& p, const Word& w) {
    return symbolic_reward_representation(p).value(w);
}

std::vector<std::vector<Rational>> draw_points(std::uint64_t seed, std::size_t trials, std::size_t k) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rational>> points(trials, std::vector<Rational>(k));
    for (auto& point : points)
        for (auto& c : point) {
            // Top 31 bits plus one: uniform on [1, 2^31].
            std::uint64_t v = (rng() >> 33) + 1;
            c = Rational(mpz_class(std::to_string(v)));
        }
    return points;
}

PraDistributionResult pra_distribution_equivalent(const PRA& p1, const PRA& p2, const DistributionOptions& options) {
    check_pair(p1, p2);
    PraDistributionResult r;
    r.mode = options.mode;
    const PolyRepresentation s1 = symbolic_reward_representation(p1);
    const PolyRepresentation s2 = symbolic_reward_representation(p2);

    if (options.mode == ParikhMode::Symbolic) {
        auto w = weighted_equivalent(s1, s2);
        r.basis_size = w.basis_size;
        if (w.equivalent) return r;
        r.verdict = PraVerdict::Witness;
        r.witness = w.witness;
        describe_witness(p1, p2, r);
        return r;
    }

    if (options.trials < 1) throw std::invalid_argument("randomized mode needs at least one trial");
    r.seed = options.seed;
    r.trials = options.trials;
    r.points = draw_points(options.seed, options.trials, p1.k);
    const std::size_t trials = options.trials;
    std::vector<WeightedResult<Rational>> runs(trials);
    auto run = [&](std::size_t t) {
        runs[t] = weighted_equivalent(evaluate_at(s1, r.points[t]), evaluate_at(s2, r.points[t]));
    };
    if (options.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t t = 0; t < trials; ++t) run(t);
    } else {
        for (std::size_t t = 0; t < trials; ++t) run(t);
    }
    for (const auto& w : runs) {
        r.basis_size = std::max(r.basis_size, w.basis_size);
        if (!w.equivalent && !r.witness) r.witness = w.witness;
    }
    if (r.witness) {
        r.verdict = PraVerdict::Witness;
        describe_witness(p1, p2, r);
        return r;
    }
    // A shortest distinguishing word has length at most n1 + n2, so its
    // difference polynomial has total degree at most k (n1 + n2).
    r.verdict = PraVerdict::ProbablyEquivalent;
    mpz_class degree(static_cast<unsigned long>(p1.k * (p1.pa.num_states() + p2.pa.num_states())));
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), degree.get_mpz_t(), trials);
    mpz_ui_pow_ui(den.get_mpz_t(), 2, 31 * trials);
    Rational bound(num, den);
    bound.canonicalize();
    if (bound > 1) bound = 1;
    r.error_bound = bound;
    return r;
}

PraExpectedResult pra_expected_equivalent(const PRA& p1, const PRA& p2, Execution execution) {
    check_pair(p1, p2);
    const std::size_t k = p1.k;
    std::vector<WeightedResult<Rational>> runs(k);
    auto run = [&](std::size_t j) {
        runs[j] = weighted_equivalent(expected_reward_representation(p1, j), expected_reward_representation(p2, j));
    };
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t j = 0; j < k; ++j) run(j);
    } else {
        for (std::size_t j = 0; j < k; ++j) run(j);
    }
    PraExpectedResult r;
    for (std::size_t j = 0; j < k; ++j) {
        r.basis_size = std::max(r.basis_size, runs[j].basis_size);
        if (!runs[j].equivalent && r.equivalent) {
            r.equivalent = false;
            r.coordinate = j;
            r.witness = runs[j].witness;
            r.left = runs[j].left;
            r.right = runs[j].right;
        }
    }
    return r;
}

}  // namespace psym

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psym/algebra/polynomial.hpp"
#include "psym/automata/automata.hpp"

namespace psym {

enum class ParikhMode { Symbolic, Randomized };
enum class Execution { Serial, Parallel };

const char* to_string(ParikhMode mode);
/// "symbolic" or "randomized"; throws std::invalid_argument otherwise.
ParikhMode parse_parikh_mode(const std::string& text);

/// Symbolic for k <= 4, randomized above.
ParikhMode default_parikh_mode(std::size_t k);

struct DistributionOptions {
    ParikhMode mode = ParikhMode::Symbolic;
    std::uint64_t seed = 0;
    std::size_t trials = 3;
    Execution execution = Execution::Parallel;
};

enum class PraVerdict { Equivalent, Witness, ProbablyEquivalent };

struct PraDistributionResult {
    PraVerdict verdict = PraVerdict::Equivalent;
    ParikhMode mode = ParikhMode::Symbolic;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::optional<Word> witness;
    /// Reward vector whose probability differs, with both probabilities.
    std::vector<std::uint64_t> reward;
    Rational left, right;
    /// Generating polynomials of the two reward distributions on the witness.
    Polynomial left_polynomial, right_polynomial;
    /// One-sided error of a ProbablyEquivalent verdict.
    std::optional<Rational> error_bound;
    std::size_t basis_size = 0;
    /// Random evaluation points, one row per trial (randomized mode).
    std::vector<std::vector<Rational>> points;
};

struct PraExpectedResult {
    bool equivalent = true;
    std::optional<Word> witness;
    std::optional<std::size_t> coordinate;  // 0-based
    Rational left, right;
    std::size_t basis_size = 0;  // largest basis over the coordinates
};

/// Do both automata induce the same reward-total distribution on every
/// nonempty word?
PraDistributionResult pra_distribution_equivalent(const PRA& p1, const PRA& p2, const DistributionOptions& options);

/// Do both automata have the same expected reward vector on every nonempty
/// word? Exact; coordinates are checked independently.
PraExpectedResult pra_expected_equivalent(const PRA& p1, const PRA& p2, Execution execution = Execution::Parallel);

/// Reward-total distribution of one PRA on a word, as a generating polynomial.
Polynomial reward_generating_polynomial(const PRA& p, const Word& w);

/// Draws `trials` points in [1, 2^31]^k from a seeded 64-bit Mersenne twister.
std::vector<std::vector<Rational>> draw_points(std::uint64_t seed, std::size_t trials, std::size_t k);

}  // namespace psym

#pragma once

#include <cstddef>
#include <stdexcept>

#include "psym/model/permutation.hpp"
#include "psym/model/transducer.hpp"
#include "psym/symmetry/verdict.hpp"

namespace psym {

/// Raised when a forward frontier grows beyond the configured cap.
class FrontierExplosion : public std::runtime_error {
public:
    FrontierExplosion(std::size_t size, std::size_t cap, std::size_t length);
    std::size_t size() const { return size_; }
    std::size_t cap() const { return cap_; }
    std::size_t length() const { return length_; }

private:
    std::size_t size_;
    std::size_t cap_;
    std::size_t length_;
};

struct FalsifyOptions {
    /// Largest number of (output word, state) entries in one frontier.
    std::size_t frontier_cap = 1'000'000;
    Execution execution = Execution::Parallel;
};

/// Bounded search for x, y with |Pr(T(x)=y) - Pr(T(pi x)=pi y)| > epsilon,
/// |x| <= max_len. Inputs are tried by length, then lexicographically on
/// their bitstrings; the reported y is the least such output in the same
/// order. NoCounterexampleFound is not a proof of symmetry.
/// Requires 0 < epsilon <= 1 and max_len >= 1.
SymmetryVerdict falsify_linf(const Transducer& t, const Permutation& pi, const Rational& epsilon, std::size_t max_len,
                             const FalsifyOptions& options = {});

/// Input letters 0..2^k-1 in lexicographic order of their bitstrings.
std::vector<Letter> letters_in_display_order(std::size_t k);

}  // namespace psym

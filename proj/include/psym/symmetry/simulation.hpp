#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "psym/algebra/rational.hpp"
#include "psym/model/transducer.hpp"

namespace psym {

/// Direct forward computations on a transducer. Inputs must be nonempty;
/// the initial state's label is never emitted.

/// Pr(T(x) = y). Throws std::invalid_argument on empty x or |x| != |y|.
Rational output_probability(const Transducer& t, const Word& x, const Word& y);

/// Full output distribution of T on x (outputs with positive probability).
std::map<Word, Rational> output_distribution(const Transducer& t, const Word& x);

using ParikhVector = std::vector<std::uint64_t>;

/// Distribution of the Parikh image of T(x).
std::map<ParikhVector, Rational> parikh_distribution(const Transducer& t, const Word& x);

/// E[P(T(x))], one entry per signal.
std::vector<Rational> expected_parikh(const Transducer& t, const Word& x);

}  // namespace psym

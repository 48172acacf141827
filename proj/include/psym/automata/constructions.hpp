#pragma once

#include <cstddef>
#include <utility>

#include "psym/automata/automata.hpp"
#include "psym/model/permutation.hpp"
#include "psym/model/transducer.hpp"

namespace psym {

/// Constructions enumerate all 2^k input letters.
inline constexpr std::size_t kMaxConstructionProcesses = 16;

/// A reads x (x) y with probability Pr(T(x) = y); B with Pr(T(pi x) = pi y).
/// Both run over the combined alphabet (inputs in the low k bits) and send
/// the mass of mismatching outputs to a rejecting sink, the last state.
std::pair<PA, PA> build_pa_pair(const Transducer& t, const Permutation& pi);

/// Reward-automaton pair over the input alphabet. A carries the label of
/// each state as its reward. B reads x as T reads pi(x) and rewards
/// pi^{-1}(label), so that Pr(B(x) = a) = Pr(P(T(pi x)) = pi(a)).
std::pair<PRA, PRA> build_pra_pair(const Transducer& t, const Permutation& pi);

/// Support-level pair: A accepts x (x) y iff Pr(T(x) = y) > 0, B iff
/// Pr(T(pi x) = pi y) > 0.
std::pair<NFA, NFA> build_nfa_pair(const Transducer& t, const Permutation& pi);

}  // namespace psym

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psym/algebra/rational.hpp"
#include "psym/common.hpp"
#include "psym/model/distribution.hpp"

namespace psym {

/// Probabilistic automaton over letters < 2^alphabet_bits.
///
/// A letter missing from a state's row sends all mass to `sink` when one is
/// set, and is otherwise undefined (mass lost). Explicit rows may be
/// substochastic only in the sink-less case.
struct PA {
    std::size_t alphabet_bits = 0;
    std::vector<std::string> names;
    Distribution initial;
    std::vector<bool> accepting;
    std::vector<std::map<Letter, Distribution>> rows;
    std::optional<StateId> sink;

    std::size_t num_states() const { return rows.size(); }
    /// Sorted union of the letters that appear in some row.
    std::vector<Letter> letters() const;
    /// Probability of ending in an accepting state after reading w.
    Rational accept_probability(const Word& w) const;
    std::vector<Rational> forward(const Word& w) const;
};

/// PA with a 0/1 reward vector (a letter over k signals) on every state.
/// Rewards are collected on entering a state, never for the initial state.
struct PRA {
    PA pa;
    std::size_t k = 0;
    std::vector<Letter> reward;
};

/// Nondeterministic automaton. A letter missing from a row has no successor.
struct NFA {
    std::size_t alphabet_bits = 0;
    std::vector<std::string> names;
    std::vector<StateId> initial;
    std::vector<bool> accepting;
    std::vector<std::map<Letter, std::vector<StateId>>> rows;

    std::size_t num_states() const { return rows.size(); }
    std::vector<Letter> letters() const;
    bool accepts(const Word& w) const;
    /// Set of states reachable by reading w (sorted).
    std::vector<StateId> reach(const Word& w) const;
};

/// Throws std::invalid_argument when the PA has rows, targets or letters out
/// of range, or when a row with a sink does not sum to one.
void check_pa(const PA& a);
void check_nfa(const NFA& a);

}  // namespace psym

#pragma once

#include <cstddef>
#include <optional>

#include "psym/automata/automata.hpp"

namespace psym {

struct NfaEquivalenceResult {
    bool equivalent = true;
    std::optional<Word> witness;
    bool left_accepts = false;
    bool right_accepts = false;
    std::size_t pairs_explored = 0;
};

/// Language equivalence restricted to nonempty words, by breadth-first
/// exploration of macrostate pairs pruned up to congruence. The witness is
/// the first word found in the symmetric difference; breadth-first order
/// makes it short but minimality is not guaranteed under pruning.
NfaEquivalenceResult nfa_equivalent(const NFA& n1, const NFA& n2);

}  // namespace psym

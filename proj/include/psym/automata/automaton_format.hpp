#pragma once

#include <string>
#include <string_view>

#include "psym/automata/automata.hpp"

namespace psym {

/// Text dialect for PA / NFA inputs (see docs/model-format.md):
///
///   automaton pa
///   bits 1
///   states q0 q1
///   initial q0: 1
///   accepting q1
///   transitions
///     q0, 0 -> q0: 1/2, q1: 1/2
///
/// For `automaton nfa` the initial line and rows list bare state names.
/// Errors are reported as ParseError.
PA parse_pa(std::string_view text);
NFA parse_nfa(std::string_view text);

std::string serialize_pa(const PA& a);
std::string serialize_nfa(const NFA& a);

PA load_pa(const std::string& path);
NFA load_nfa(const std::string& path);

}  // namespace psym

#pragma once

#include <cstdint>
#include <vector>

namespace psym {

/// A set of signals encoded as a bitmask; bit j-1 stands for signal j.
/// Combined input/output letters keep inputs in the low k bits and outputs
/// in bits k..2k-1.
using Letter = std::uint64_t;
using Word = std::vector<Letter>;

using StateId = std::uint32_t;

}  // namespace psym

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psym/common.hpp"

namespace psym {

/// Upper bound on the number of processes accepted by the model format.
inline constexpr std::size_t kMaxProcesses = 62;

inline std::uint64_t letter_count(std::size_t k) { return std::uint64_t{1} << k; }

/// Characteristic-vector form: character j (0-based) is '1' iff signal j+1 is
/// present, so "100" is {i1}.
std::string letter_to_bits(Letter letter, std::size_t k);
Letter parse_bits(std::string_view bits, std::size_t k);

/// Space-separated bitstrings.
std::string word_to_string(const Word& word, std::size_t k);

inline Letter combine_letter(Letter input, Letter output, std::size_t k) { return input | (output << k); }
inline std::pair<Letter, Letter> split_letter(Letter combined, std::size_t k) {
    Letter mask = letter_count(k) - 1;
    return {combined & mask, (combined >> k) & mask};
}

/// x (x) y: letter-wise union of an input and an output word of equal length.
Word combine_word(const Word& input, const Word& output, std::size_t k);
std::pair<Word, Word> split_word(const Word& combined, std::size_t k);

/// Per-signal occurrence counts of an output word.
std::vector<std::uint64_t> parikh_image(const Word& output, std::size_t k);

}  // namespace psym

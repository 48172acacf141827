#include "psym/model/letter.hpp"

#include <stdexcept>

#include "psym/algebra/rational.hpp"

namespace psym {

std::string letter_to_bits(Letter letter, std::size_t k) {
    std::string bits(k, '0');
    for (std::size_t j = 0; j < k; ++j)
        if ((letter >> j) & 1U) bits[j] = '1';
    return bits;
}

Letter parse_bits(std::string_view bits, std::size_t k) {
    if (bits.size() != k)
        throw std::invalid_argument("bitstring '" + std::string(bits) + "' must have length " + std::to_string(k));
    Letter letter = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (bits[j] == '1')
            letter |= Letter{1} << j;
        else if (bits[j] != '0')
            throw std::invalid_argument("bitstring '" + std::string(bits) + "' may only contain 0 and 1");
    }
    return letter;
}

std::string word_to_string(const Word& word, std::size_t k) {
    std::string out;
    for (std::size_t t = 0; t < word.size(); ++t) {
        if (t) out += ' ';
        out += letter_to_bits(word[t], k);
    }
    return out;
}

Word combine_word(const Word& input, const Word& output, std::size_t k) {
    if (input.size() != output.size())
        throw DimensionError("combine_word: input length " + std::to_string(input.size()) + " vs output length " +
                             std::to_string(output.size()));
    Word w(input.size());
    for (std::size_t t = 0; t < w.size(); ++t) w[t] = combine_letter(input[t], output[t], k);
    return w;
}

std::pair<Word, Word> split_word(const Word& combined, std::size_t k) {
    Word x, y;
    x.reserve(combined.size());
    y.reserve(combined.size());
    for (Letter c : combined) {
        auto [i, o] = split_letter(c, k);
        x.push_back(i);
        y.push_back(o);
    }
    return {std::move(x), std::move(y)};
}

std::vector<std::uint64_t> parikh_image(const Word& output, std::size_t k) {
    std::vector<std::uint64_t> counts(k, 0);
    for (Letter o : output)
        for (std::size_t j = 0; j < k; ++j)
            if ((o >> j) & 1U) ++counts[j];
    return counts;
}

}  // namespace psym

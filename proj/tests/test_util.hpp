#pragma once

#include <sstream>
#include <string>

#include "psym/algebra/rational.hpp"
#include "psym/model/letter.hpp"

namespace testutil {

// "100 010" -> two letters over k = 3.
inline psym::Word word(const std::string& text, std::size_t k) {
    std::istringstream in(text);
    psym::Word w;
    std::string bits;
    while (in >> bits) w.push_back(psym::parse_bits(bits, k));
    return w;
}

inline psym::Rational q(long n, unsigned long d = 1) { return psym::make_rational(n, d); }

}  // namespace testutil

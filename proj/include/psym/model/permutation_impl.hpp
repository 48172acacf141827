#pragma once

#include "psym/algebra/rational.hpp"

namespace psym {

template <class T>
std::vector<T> permute_vector(const Permutation& pi, const std::vector<T>& a) {
    if (a.size() != pi.size())
        throw DimensionError("permute_vector: vector of length " + std::to_string(a.size()) + " for permutation of " +
                             std::to_string(pi.size()));
    std::vector<T> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[pi(j)] = a[j];
    return out;
}

}  // namespace psym

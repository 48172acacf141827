#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "psym/common.hpp"

namespace psym {

/// A bijection on the process indices. Indices are 0-based in code; cycle
/// notation is 1-based, as in "(1 2 7)".
class Permutation {
public:
    static Permutation identity(std::size_t k);
    /// Throws std::invalid_argument unless `images` is a permutation of 0..k-1.
    static Permutation from_images(std::vector<std::uint32_t> images);
    /// Parses a product of disjoint cycles. Elements not listed are fixed.
    static Permutation parse(std::string_view cycles, std::size_t k);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t j) const { return image_[j]; }
    const std::vector<std::uint32_t>& images() const { return image_; }

    Permutation inverse() const;
    bool is_identity() const;

    /// Cycle notation without fixed points; the identity prints as "()".
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {}
    std::vector<std::uint32_t> image_;
};

/// Functional composition: (pi o tau)(j) = pi(tau(j)).
Permutation compose(const Permutation& pi, const Permutation& tau);

/// Bit j of the argument is set iff bit pi(j) of the result is set.
Letter permute_letter(const Permutation& pi, Letter letter);
Word permute_word(const Permutation& pi, const Word& word);

/// Index pi(j) of the result holds a[j].
template <class T>
std::vector<T> permute_vector(const Permutation& pi, const std::vector<T>& a);

class GeneratorSet {
public:
    /// Throws when empty or when the permutations disagree on k.
    explicit GeneratorSet(std::vector<Permutation> generators);

    std::size_t degree() const { return generators_.front().size(); }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }

private:
    std::vector<Permutation> generators_;
};

/// {(1 2), (1 2 ... k)}; for k = 2 both coincide and only (1 2) is returned.
GeneratorSet sk_generators(std::size_t k);

/// Every element of the generated group, sorted. Intended for small k.
std::vector<Permutation> group_elements(const GeneratorSet& generators);

}  // namespace psym

#include "psym/model/permutation_impl.hpp"

#include "psym/model/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace psym {

Permutation Permutation::identity(std::size_t k) {
    std::vector<std::uint32_t> image(k);
    for (std::size_t j = 0; j < k; ++j) image[j] = static_cast<std::uint32_t>(j);
    return Permutation(std::move(image));
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
        if (v >= images.size() || seen[v]) throw std::invalid_argument("image array is not a bijection");
        seen[v] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t k) {
    if (k < 1) throw std::invalid_argument("permutation degree must be at least 1");
    std::vector<std::uint32_t> image = identity(k).image_;
    std::vector<bool> used(k, false);
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation '" + std::string(text) + "'");
        ++pos;
        std::vector<std::uint32_t> cycle;
        for (;;) {
            skip_space();
            if (pos >= text.size()) throw std::invalid_argument("unterminated cycle in '" + std::string(text) + "'");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("unexpected character '" + std::string(1, text[pos]) + "' in cycle notation");
            std::size_t value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
                if (value > k) break;
                ++pos;
            }
            if (value < 1 || value > k)
                throw std::invalid_argument("element " + std::to_string(value) + " out of range 1.." + std::to_string(k));
            if (used[value - 1]) throw std::invalid_argument("element " + std::to_string(value) + " repeated");
            used[value - 1] = true;
            cycle.push_back(static_cast<std::uint32_t>(value - 1));
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) image[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_space();
    }
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(image_.size());
    for (std::size_t j = 0; j < image_.size(); ++j) inv[image_[j]] = static_cast<std::uint32_t>(j);
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t j = 0; j < image_.size(); ++j)
        if (image_[j] != j) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string out;
    std::vector<bool> done(image_.size(), false);
    for (std::size_t start = 0; start < image_.size(); ++start) {
        if (done[start] || image_[start] == start) continue;
        out += '(';
        std::size_t j = start;
        bool first = true;
        do {
            if (!first) out += ' ';
            first = false;
            out += std::to_string(j + 1);
            done[j] = true;
            j = image_[j];
        } while (j != start);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& pi, const Permutation& tau) {
    if (pi.size() != tau.size())
        throw std::invalid_argument("compose: degree mismatch " + std::to_string(pi.size()) + " vs " +
                                    std::to_string(tau.size()));
    std::vector<std::uint32_t> image(pi.size());
    for (std::size_t j = 0; j < image.size(); ++j) image[j] = static_cast<std::uint32_t>(pi(tau(j)));
    return Permutation::from_images(std::move(image));
}

Letter permute_letter(const Permutation& pi, Letter letter) {
    Letter out = 0;
    for (std::size_t j = 0; j < pi.size(); ++j)
        if ((letter >> j) & 1U) out |= Letter{1} << pi(j);
    return out;
}

Word permute_word(const Permutation& pi, const Word& word) {
    Word out;
    out.reserve(word.size());
    for (Letter l : word) out.push_back(permute_letter(pi, l));
    return out;
}

GeneratorSet::GeneratorSet(std::vector<Permutation> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw std::invalid_argument("generator set must be nonempty");
    for (const auto& g : generators_)
        if (g.size() != generators_.front().size())
            throw std::invalid_argument("generators disagree on the number of processes");
}

GeneratorSet sk_generators(std::size_t k) {
    if (k < 2) throw std::invalid_argument("sk_generators needs k >= 2");
    Permutation transposition = Permutation::parse("(1 2)", k);
    std::vector<std::uint32_t> cycle(k);
    for (std::size_t j = 0; j < k; ++j) cycle[j] = static_cast<std::uint32_t>((j + 1) % k);
    Permutation rotation = Permutation::from_images(std::move(cycle));
    if (rotation == transposition) return GeneratorSet({transposition});
    return GeneratorSet({transposition, rotation});
}

std::vector<Permutation> group_elements(const GeneratorSet& generators) {
    std::set<Permutation> seen{Permutation::identity(generators.degree())};
    std::deque<Permutation> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        Permutation p = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators.generators()) {
            Permutation q = compose(g, p);
            if (seen.insert(q).second) frontier.push_back(q);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace psym

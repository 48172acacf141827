#include "psym/model/distribution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace psym {

Distribution::Distribution(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0 && entries[i].first == entries[i - 1].first)
            throw std::invalid_argument("distribution lists state " + std::to_string(entries[i].first) + " twice");
        if (sgn(entries[i].second) < 0) throw std::invalid_argument("negative probability in distribution");
    }
    for (auto& e : entries)
        if (!is_zero(e.second)) entries_.push_back(std::move(e));
}

Distribution Distribution::dirac(StateId s) { return Distribution({{s, Rational(1)}}); }

Distribution Distribution::uniform(const std::vector<StateId>& support) {
    if (support.empty()) throw std::invalid_argument("uniform distribution over an empty set");
    Rational w(1, support.size());
    w.canonicalize();
    std::vector<Entry> entries;
    for (StateId s : support) entries.emplace_back(s, w);
    return Distribution(std::move(entries));
}

Rational Distribution::mass() const {
    Rational sum(0);
    for (const auto& [s, p] : entries_) sum += p;
    return sum;
}

Rational Distribution::at(StateId s) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                               [](const Entry& e, StateId v) { return e.first < v; });
    return it != entries_.end() && it->first == s ? it->second : Rational(0);
}

std::vector<StateId> Distribution::support() const {
    std::vector<StateId> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
}

}  // namespace psym

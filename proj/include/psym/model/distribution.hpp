#pragma once

#include <utility>
#include <vector>

#include "psym/algebra/rational.hpp"
#include "psym/common.hpp"

namespace psym {

/// Finitely supported distribution over state ids. Entries are kept sorted
/// by state and every stored weight is positive; the weights are not forced
/// to sum to one here (validation reports that).
class Distribution {
public:
    using Entry = std::pair<StateId, Rational>;

    Distribution() = default;
    /// Zero weights are dropped. Throws std::invalid_argument on a negative
    /// weight or a repeated state.
    explicit Distribution(std::vector<Entry> entries);

    static Distribution dirac(StateId s);
    /// Equal weight on each listed state.
    static Distribution uniform(const std::vector<StateId>& support);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    Rational mass() const;
    Rational at(StateId s) const;
    std::vector<StateId> support() const;

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    std::vector<Entry> entries_;
};

}  // namespace psym

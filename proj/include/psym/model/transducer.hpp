#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psym/common.hpp"
#include "psym/model/distribution.hpp"

namespace psym {

struct MissingTransitionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Probabilistic I/O transducer over k corresponding input/output signals.
///
/// Each state carries an output label (a letter over O) and, per input
/// letter, a distribution over successor states. A state may give a default
/// row that applies to every input letter it does not list explicitly.
/// The label of a state only matters when the state is entered; labels seen
/// through the initial distribution are never emitted.
class Transducer {
public:
    Transducer() = default;
    /// Throws std::invalid_argument unless 1 <= k <= 62 and names are unique.
    Transducer(std::size_t k, std::vector<std::string> names);

    std::size_t k() const { return k_; }
    std::size_t num_states() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(StateId s) const { return names_.at(s); }
    std::optional<StateId> find_state(const std::string& name) const;

    Letter label(StateId s) const { return labels_.at(s); }
    const std::vector<Letter>& labels() const { return labels_; }
    void set_label(StateId s, Letter label);

    const Distribution& initial() const { return initial_; }
    void set_initial(Distribution d);

    void set_transition(StateId s, Letter input, Distribution d);
    void set_default(StateId s, Distribution d);

    const std::map<Letter, Distribution>& rows(StateId s) const { return rows_.at(s); }
    const std::optional<Distribution>& default_row(StateId s) const { return defaults_.at(s); }

    /// Explicit row, else the default row, else nullptr.
    const Distribution* find_transition(StateId s, Letter input) const;
    /// As find_transition, but throws MissingTransitionError when undefined.
    const Distribution& transition(StateId s, Letter input) const;

    friend bool operator==(const Transducer&, const Transducer&) = default;

private:
    void check_state(StateId s) const;

    std::size_t k_ = 0;
    std::vector<std::string> names_;
    std::vector<Letter> labels_;
    Distribution initial_;
    std::vector<std::map<Letter, Distribution>> rows_;
    std::vector<std::optional<Distribution>> defaults_;
};

struct Violation {
    enum class Kind {
        NoStates,
        InitialNotStochastic,
        NonStochastic,
        MissingTransition,
        LabelOutOfRange,
        LetterOutOfRange,
        TargetOutOfRange,
    };
    Kind kind;
    std::optional<StateId> state;
    std::optional<Letter> letter;  // nullopt for the default row
    std::string message;
};

const char* to_string(Violation::Kind kind);

/// Empty iff the transducer is well formed: initial distribution and every
/// row sum to exactly one, all 2^k input letters are covered, and every
/// label, letter and target is in range.
std::vector<Violation> validate_transducer(const Transducer& t);

/// Throws std::invalid_argument listing the violations, if any.
void require_valid(const Transducer& t);

}  // namespace psym

#include "psym/model/transducer.hpp"

#include <set>

#include "psym/model/letter.hpp"

namespace psym {

Transducer::Transducer(std::size_t k, std::vector<std::string> names)
    : k_(k),
      names_(std::move(names)),
      labels_(names_.size(), 0),
      rows_(names_.size()),
      defaults_(names_.size()) {
    if (k_ < 1 || k_ > kMaxProcesses)
        throw std::invalid_argument("k must lie in 1.." + std::to_string(kMaxProcesses) + ", got " +
                                    std::to_string(k_));
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate state name '" + n + "'");
}

std::optional<StateId> Transducer::find_state(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<StateId>(i);
    return std::nullopt;
}

void Transducer::check_state(StateId s) const {
    if (s >= names_.size()) throw std::out_of_range("state id " + std::to_string(s) + " out of range");
}

void Transducer::set_label(StateId s, Letter label) {
    check_state(s);
    labels_[s] = label;
}

void Transducer::set_initial(Distribution d) { initial_ = std::move(d); }

void Transducer::set_transition(StateId s, Letter input, Distribution d) {
    check_state(s);
    rows_[s][input] = std::move(d);
}

void Transducer::set_default(StateId s, Distribution d) {
    check_state(s);
    defaults_[s] = std::move(d);
}

const Distribution* Transducer::find_transition(StateId s, Letter input) const {
    const auto& row = rows_.at(s);
    auto it = row.find(input);
    if (it != row.end()) return &it->second;
    const auto& d = defaults_[s];
    return d ? &*d : nullptr;
}

const Distribution& Transducer::transition(StateId s, Letter input) const {
    const Distribution* d = find_transition(s, input);
    if (!d)
        throw MissingTransitionError("no transition from state '" + names_.at(s) + "' on input " +
                                     letter_to_bits(input, k_));
    return *d;
}

const char* to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::NoStates: return "NoStates";
        case Violation::Kind::InitialNotStochastic: return "InitialNotStochastic";
        case Violation::Kind::NonStochastic: return "NonStochastic";
        case Violation::Kind::MissingTransition: return "MissingTransition";
        case Violation::Kind::LabelOutOfRange: return "LabelOutOfRange";
        case Violation::Kind::LetterOutOfRange: return "LetterOutOfRange";
        case Violation::Kind::TargetOutOfRange: return "TargetOutOfRange";
    }
    return "Unknown";
}

namespace {

bool targets_in_range(const Distribution& d, std::size_t n) {
    for (const auto& [s, p] : d)
        if (s >= n) return false;
    return true;
}

}  // namespace

std::vector<Violation> validate_transducer(const Transducer& t) {
    using K = Violation::Kind;
    std::vector<Violation> out;
    const std::size_t n = t.num_states();
    const std::size_t k = t.k();
    if (n == 0) {
        out.push_back({K::NoStates, std::nullopt, std::nullopt, "transducer has no states"});
        return out;
    }
    const Letter limit = letter_count(k);
    if (!targets_in_range(t.initial(), n))
        out.push_back({K::TargetOutOfRange, std::nullopt, std::nullopt, "initial distribution names an unknown state"});
    if (t.initial().mass() != 1)
        out.push_back({K::InitialNotStochastic, std::nullopt, std::nullopt,
                       "initial distribution sums to " + to_string(t.initial().mass())});

    for (StateId s = 0; s < n; ++s) {
        const std::string& name = t.name(s);
        if (t.label(s) >= limit)
            out.push_back({K::LabelOutOfRange, s, std::nullopt, "label of '" + name + "' uses a signal above k"});
        auto check_row = [&](const Distribution& d, std::optional<Letter> letter) {
            std::string where = "'" + name + "', " + (letter ? letter_to_bits(*letter, k) : std::string("default"));
            if (!targets_in_range(d, n))
                out.push_back({K::TargetOutOfRange, s, letter, "row " + where + " names an unknown state"});
            if (d.mass() != 1)
                out.push_back({K::NonStochastic, s, letter, "row " + where + " sums to " + to_string(d.mass())});
        };
        for (const auto& [letter, d] : t.rows(s)) {
            if (letter >= limit) {
                out.push_back({K::LetterOutOfRange, s, letter, "row of '" + name + "' on a letter above k"});
                continue;
            }
            check_row(d, letter);
        }
        if (t.default_row(s)) {
            check_row(*t.default_row(s), std::nullopt);
        } else {
            // First input letter without a row, if any.
            Letter expect = 0;
            for (const auto& [letter, d] : t.rows(s)) {
                if (letter != expect) break;
                ++expect;
            }
            if (expect < limit)
                out.push_back({K::MissingTransition, s, expect,
                               "state '" + name + "' has no row for input " + letter_to_bits(expect, k)});
        }
    }
    return out;
}

void require_valid(const Transducer& t) {
    auto violations = validate_transducer(t);
    if (violations.empty()) return;
    std::string msg = "invalid transducer:";
    for (const auto& v : violations) msg += "\n  " + std::string(to_string(v.kind)) + ": " + v.message;
    throw std::invalid_argument(msg);
}

}  // namespace psym

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "psym/automata/automata.hpp"
#include "psym/model/permutation.hpp"
#include "psym/model/transducer.hpp"

namespace psym {

/// Initial choice for the round-robin arbiter: uniform over the k waiting
/// states, or all mass on the state that listens to process `process`
/// (1-based).
struct RoundRobinInit {
    bool uniform = true;
    std::size_t process = 1;

    static RoundRobinInit make_uniform() { return {true, 1}; }
    static RoundRobinInit deterministic(std::size_t j) { return {false, j}; }
};

/// Round-robin arbiter over k processes. State wait<j> (label empty) and
/// grant<j> (label o_j) have both just served process j and next listen to
/// process j+1 (mod k): on reading i_{j+1} they move to grant<j+1>,
/// otherwise to wait<j+1>.
Transducer gen_round_robin(std::size_t k, RoundRobinInit init);

struct PaReduction {
    Transducer transducer;
    Permutation pi;
    Rational epsilon;
};

/// Transducer that is (lambda, (1 2))-symmetric iff no word has acceptance
/// probability above lambda in `a`. The PA must be over one bit (letters 0
/// and 1), complete and stochastic; 0 is read as the empty input and 1 as
/// {i2}. States: the PA states, then s_init, s_mid, s_top, s_bot.
PaReduction reduce_pa_to_transducer(const PA& a, const Rational& lambda);

struct NfaReduction {
    Transducer transducer;
    Permutation pi;
};

/// Transducer that is (1 2)-qualitative-symmetric iff `a` is universal.
/// The NFA must be over one bit with every state accepting; 0 is read as the
/// empty input and 1 as {i1, i2}. Supports get uniform probabilities.
/// States: the NFA states, then s_init, s_mid, s_bot.
NfaReduction reduce_nfa_to_transducer(const NFA& a);

/// Random complete transducer. Every row and the initial distribution have
/// a denominator of at most `denominator_bound`. Deterministic in the seed.
Transducer gen_random_transducer(std::uint64_t seed, std::size_t n_states, std::size_t k,
                                 std::uint64_t denominator_bound);

/// Random NFA over one bit, all states accepting, initial state q0. Each
/// (state, letter) has no successor with probability 1/4.
NFA gen_random_nfa(std::uint64_t seed, std::size_t n_states);

/// Random complete DFA over one bit written as a 0/1-probability PA.
PA gen_random_dfa(std::uint64_t seed, std::size_t n_states);

/// Shortest accepted word of a PA whose rows are Dirac (a DFA), or -1 when
/// the language is empty.
long shortest_accepted_length(const PA& dfa);

/// Averages t over a permutation group: states (s, g), entered on input i
/// with delta(s, g^{-1} i), labelled g(label(s)), initial weight
/// init(s)/|G|. The result is exactly G-symmetric.
Transducer symmetrize(const Transducer& t, const std::vector<Permutation>& group);

/// Re-draws every probability of t while keeping each support, so that
/// support-level properties are preserved.
Transducer perturb_probabilities(const Transducer& t, std::uint64_t seed);

struct ManifestRow {
    std::string fixture;
    std::string model;  // file name relative to the manifest
    std::string permutation;
    std::string check;  // a SymmetryKind name
    bool expect_pass;
};

struct NamedFixture {
    std::string name;
    Transducer transducer;
};

/// order-swap, fifty-fifty, support-perturbation and biased, all over k = 2.
std::vector<NamedFixture> gen_hierarchy_fixtures();
std::vector<ManifestRow> hierarchy_manifest();

std::string serialize_manifest(const std::vector<ManifestRow>& rows);
std::vector<ManifestRow> parse_manifest(const std::string& text);

/// Writes <name>.sym for every fixture plus manifest.tsv into dir.
void write_hierarchy_fixtures(const std::string& dir);

}  // namespace psym

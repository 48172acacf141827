#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psym/algebra/rational.hpp"
#include "psym/equivalence/pra_equivalence.hpp"
#include "psym/model/permutation.hpp"
#include "psym/symmetry/simulation.hpp"

namespace psym {

enum class SymmetryKind { Exact, ParikhDistribution, ParikhExpected, Qualitative, LinfFalsify };
enum class VerdictResult { Symmetric, NotSymmetric, ProbablySymmetric, NoCounterexampleFound };

/// "exact", "parikh-dist", "parikh-exp", "qualitative", "linf-falsify".
const char* to_string(SymmetryKind kind);
SymmetryKind parse_symmetry_kind(const std::string& text);
const char* to_string(VerdictResult result);

/// Meaning of left/right by kind, with pi the checked permutation:
///   exact, qualitative, linf-falsify: Pr(T(x) = y) and Pr(T(pi x) = pi y)
///   parikh-dist: Pr(P(T(x)) = a) and Pr(P(T(pi x)) = pi(a))
///   parikh-exp: E[P(T(x))]_j and E[P(T(pi x))]_{pi(j)}
struct Counterexample {
    Word input;
    std::optional<Word> output;
    std::optional<ParikhVector> parikh;
    std::optional<std::size_t> coordinate;  // 0-based
    Rational left;
    Rational right;
};

struct EngineInfo {
    std::string engine;
    std::optional<ParikhMode> mode;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::size_t basis_size = 0;
    std::optional<Rational> error_bound;
};

struct SymmetryVerdict {
    SymmetryKind kind = SymmetryKind::Exact;
    VerdictResult result = VerdictResult::Symmetric;
    /// The permutation checked; for group checks the failing generator.
    std::optional<Permutation> permutation;
    std::optional<Counterexample> counterexample;
    EngineInfo engine;
    /// Group checks: one sub-verdict per generator, in generator order.
    std::vector<SymmetryVerdict> generators;
    std::optional<Rational> epsilon;
    std::optional<std::size_t> max_len;
    std::string note;
};

struct VerifyResult {
    bool ok = true;
    std::string message;
};

/// Replays the counterexample of a NotSymmetric verdict by forward
/// simulation: the recomputed values must equal the stored ones exactly and
/// exhibit the claimed inequality. Verdicts without a counterexample pass
/// trivially.
VerifyResult verify(const Transducer& t, const SymmetryVerdict& v);

}  // namespace psym

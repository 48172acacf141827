#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "psym/model/permutation.hpp"
#include "psym/model/transducer.hpp"
#include "psym/symmetry/verdict.hpp"

namespace psym {

struct CheckOptions {
    /// Parikh-distribution engine; nullopt picks symbolic for k <= 4.
    std::optional<ParikhMode> mode;
    std::uint64_t seed = 0;
    std::size_t trials = 3;
    Execution execution = Execution::Parallel;
};

SymmetryVerdict check_exact(const Transducer& t, const Permutation& pi);
SymmetryVerdict check_parikh_distribution(const Transducer& t, const Permutation& pi, const CheckOptions& options = {});
SymmetryVerdict check_parikh_expected(const Transducer& t, const Permutation& pi, const CheckOptions& options = {});
SymmetryVerdict check_qualitative(const Transducer& t, const Permutation& pi);

/// Dispatches on kind (any kind but linf-falsify).
SymmetryVerdict check(const Transducer& t, const Permutation& pi, SymmetryKind kind, const CheckOptions& options = {});

/// Symmetric iff the single check passes for every generator. The first
/// failing generator (in list order) is reported.
SymmetryVerdict check_group(const Transducer& t, const GeneratorSet& generators, SymmetryKind kind,
                            const CheckOptions& options = {});

/// check_group over {(1 2), (1 2 ... k)}; k = 1 is trivially symmetric.
SymmetryVerdict check_full_sk(const Transducer& t, SymmetryKind kind, const CheckOptions& options = {});

}  // namespace psym

#include "psym/symmetry/checks.hpp"

#include <exception>
#include <stdexcept>

#include "psym/automata/constructions.hpp"
#include "psym/automata/linear.hpp"
#include "psym/equivalence/nfa_equivalence.hpp"
#include "psym/equivalence/weighted.hpp"
#include "psym/model/letter.hpp"

namespace psym {

namespace {

void check_degree(const Transducer& t, const Permutation& pi) {
    if (pi.size() != t.k())
        throw std::invalid_argument("permutation acts on " + std::to_string(pi.size()) + " processes, model has k=" +
                                    std::to_string(t.k()));
}

SymmetryVerdict start(SymmetryKind kind, const Permutation& pi, const char* engine) {
    SymmetryVerdict v;
    v.kind = kind;
    v.permutation = pi;
    v.engine.engine = engine;
    return v;
}

// Splits a combined witness and recomputes both sides by simulation.
Counterexample word_pair_counterexample(const Transducer& t, const Permutation& pi, const Word& combined) {
    auto [x, y] = split_word(combined, t.k());
    Counterexample c;
    c.left = output_probability(t, x, y);
    c.right = output_probability(t, permute_word(pi, x), permute_word(pi, y));
    c.input = std::move(x);
    c.output = std::move(y);
    return c;
}

}  // namespace

SymmetryVerdict check_exact(const Transducer& t, const Permutation& pi) {
    check_degree(t, pi);
    SymmetryVerdict v = start(SymmetryKind::Exact, pi, "weighted-span");
    auto [a, b] = build_pa_pair(t, pi);
    auto r = weighted_equivalent(to_linear_representation(a), to_linear_representation(b));
    v.engine.basis_size = r.basis_size;
    if (r.equivalent) return v;
    v.result = VerdictResult::NotSymmetric;
    v.counterexample = word_pair_counterexample(t, pi, *r.witness);
    if (v.counterexample->left != r.left || v.counterexample->right != r.right)
        throw std::logic_error("exact check: simulation disagrees with the automaton values");
    return v;
}

SymmetryVerdict check_qualitative(const Transducer& t, const Permutation& pi) {
    check_degree(t, pi);
    SymmetryVerdict v = start(SymmetryKind::Qualitative, pi, "nfa-congruence");
    auto [a, b] = build_nfa_pair(t, pi);
    auto r = nfa_equivalent(a, b);
    v.engine.basis_size = r.pairs_explored;
    if (r.equivalent) return v;
    v.result = VerdictResult::NotSymmetric;
    v.counterexample = word_pair_counterexample(t, pi, *r.witness);
    if ((sgn(v.counterexample->left) > 0) != r.left_accepts || (sgn(v.counterexample->right) > 0) != r.right_accepts)
        throw std::logic_error("qualitative check: simulation disagrees with the automaton supports");
    return v;
}

SymmetryVerdict check_parikh_distribution(const Transducer& t, const Permutation& pi, const CheckOptions& options) {
    check_degree(t, pi);
    SymmetryVerdict v = start(SymmetryKind::ParikhDistribution, pi, "reward-distribution");
    auto [a, b] = build_pra_pair(t, pi);
    DistributionOptions d;
    d.mode = options.mode.value_or(default_parikh_mode(t.k()));
    d.seed = options.seed;
    d.trials = options.trials;
    d.execution = options.execution;
    auto r = pra_distribution_equivalent(a, b, d);
    v.engine.mode = r.mode;
    v.engine.basis_size = r.basis_size;
    if (r.mode == ParikhMode::Randomized) {
        v.engine.seed = r.seed;
        v.engine.trials = r.trials;
    }
    switch (r.verdict) {
        case PraVerdict::Equivalent:
            return v;
        case PraVerdict::ProbablyEquivalent:
            v.result = VerdictResult::ProbablySymmetric;
            v.engine.error_bound = r.error_bound;
            return v;
        case PraVerdict::Witness:
            break;
    }
    v.result = VerdictResult::NotSymmetric;
    Counterexample c;
    c.input = *r.witness;
    c.parikh = r.reward;
    c.left = r.left;
    c.right = r.right;
    v.counterexample = std::move(c);
    return v;
}

SymmetryVerdict check_parikh_expected(const Transducer& t, const Permutation& pi, const CheckOptions& options) {
    check_degree(t, pi);
    SymmetryVerdict v = start(SymmetryKind::ParikhExpected, pi, "expected-reward");
    auto [a, b] = build_pra_pair(t, pi);
    auto r = pra_expected_equivalent(a, b, options.execution);
    v.engine.basis_size = r.basis_size;
    if (r.equivalent) return v;
    v.result = VerdictResult::NotSymmetric;
    Counterexample c;
    c.input = *r.witness;
    c.coordinate = r.coordinate;
    c.left = r.left;
    c.right = r.right;
    v.counterexample = std::move(c);
    return v;
}

SymmetryVerdict check(const Transducer& t, const Permutation& pi, SymmetryKind kind, const CheckOptions& options) {
    switch (kind) {
        case SymmetryKind::Exact: return check_exact(t, pi);
        case SymmetryKind::ParikhDistribution: return check_parikh_distribution(t, pi, options);
        case SymmetryKind::ParikhExpected: return check_parikh_expected(t, pi, options);
        case SymmetryKind::Qualitative: return check_qualitative(t, pi);
        case SymmetryKind::LinfFalsify: break;
    }
    throw std::invalid_argument("linf-falsify is a bounded search, not a check");
}

SymmetryVerdict check_group(const Transducer& t, const GeneratorSet& generators, SymmetryKind kind,
                            const CheckOptions& options) {
    if (generators.degree() != t.k())
        throw std::invalid_argument("generators act on " + std::to_string(generators.degree()) +
                                    " processes, model has k=" + std::to_string(t.k()));
    if (kind == SymmetryKind::LinfFalsify) throw std::invalid_argument("group checks do not support linf-falsify");
    require_valid(t);
    const auto& gens = generators.generators();
    const std::size_t m = gens.size();
    std::vector<SymmetryVerdict> sub(m);
    std::vector<std::exception_ptr> errors(m);
    auto run = [&](std::size_t i) {
        try {
            sub[i] = check(t, gens[i], kind, options);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (options.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < m; ++i) run(i);
    } else {
        for (std::size_t i = 0; i < m; ++i) run(i);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    SymmetryVerdict v;
    v.kind = kind;
    v.engine = sub.front().engine;
    v.engine.basis_size = 0;
    v.engine.error_bound.reset();
    Rational bound(0);
    bool probable = false;
    for (std::size_t i = 0; i < m; ++i) {
        v.engine.basis_size = std::max(v.engine.basis_size, sub[i].engine.basis_size);
        if (sub[i].result == VerdictResult::NotSymmetric && v.result != VerdictResult::NotSymmetric) {
            v.result = VerdictResult::NotSymmetric;
            v.permutation = gens[i];
            v.counterexample = sub[i].counterexample;
        }
        if (sub[i].result == VerdictResult::ProbablySymmetric) {
            probable = true;
            bound += *sub[i].engine.error_bound;
        }
    }
    if (v.result != VerdictResult::NotSymmetric && probable) {
        v.result = VerdictResult::ProbablySymmetric;
        v.engine.error_bound = bound > 1 ? Rational(1) : bound;
    }
    v.generators = std::move(sub);
    return v;
}

SymmetryVerdict check_full_sk(const Transducer& t, SymmetryKind kind, const CheckOptions& options) {
    if (t.k() < 2) {
        require_valid(t);
        SymmetryVerdict v;
        v.kind = kind;
        v.engine.engine = "trivial";
        v.note = "k = 1: the only permutation is the identity";
        return v;
    }
    return check_group(t, sk_generators(t.k()), kind, options);
}

}  // namespace psym

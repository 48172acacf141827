#include "psym/symmetry/verdict.hpp"

#include <stdexcept>

#include "psym/model/letter.hpp"

namespace psym {

const char* to_string(SymmetryKind kind) {
    switch (kind) {
        case SymmetryKind::Exact: return "exact";
        case SymmetryKind::ParikhDistribution: return "parikh-dist";
        case SymmetryKind::ParikhExpected: return "parikh-exp";
        case SymmetryKind::Qualitative: return "qualitative";
        case SymmetryKind::LinfFalsify: return "linf-falsify";
    }
    return "unknown";
}

SymmetryKind parse_symmetry_kind(const std::string& text) {
    for (auto kind : {SymmetryKind::Exact, SymmetryKind::ParikhDistribution, SymmetryKind::ParikhExpected,
                      SymmetryKind::Qualitative, SymmetryKind::LinfFalsify})
        if (text == to_string(kind)) return kind;
    throw std::invalid_argument("unknown symmetry kind '" + text + "'");
}

const char* to_string(VerdictResult result) {
    switch (result) {
        case VerdictResult::Symmetric: return "symmetric";
        case VerdictResult::NotSymmetric: return "not-symmetric";
        case VerdictResult::ProbablySymmetric: return "probably-symmetric";
        case VerdictResult::NoCounterexampleFound: return "no-counterexample-found";
    }
    return "unknown";
}

namespace {

VerifyResult mismatch(const std::string& what, const Rational& stored, const Rational& replayed) {
    return {false, what + ": stored " + to_string(stored) + ", replayed " + to_string(replayed)};
}

}  // namespace

VerifyResult verify(const Transducer& t, const SymmetryVerdict& v) {
    if (!v.counterexample) {
        if (v.result == VerdictResult::NotSymmetric) return {false, "not-symmetric verdict without a counterexample"};
        return {};
    }
    if (!v.permutation) return {false, "counterexample without a permutation"};
    const Counterexample& c = *v.counterexample;
    const Permutation& pi = *v.permutation;
    const Word px = permute_word(pi, c.input);
    Rational left, right;
    switch (v.kind) {
        case SymmetryKind::Exact:
        case SymmetryKind::Qualitative:
        case SymmetryKind::LinfFalsify: {
            if (!c.output) return {false, "counterexample lacks an output word"};
            left = output_probability(t, c.input, *c.output);
            right = output_probability(t, px, permute_word(pi, *c.output));
            break;
        }
        case SymmetryKind::ParikhDistribution: {
            if (!c.parikh) return {false, "counterexample lacks a Parikh vector"};
            auto d1 = parikh_distribution(t, c.input);
            auto d2 = parikh_distribution(t, px);
            auto it1 = d1.find(*c.parikh);
            auto it2 = d2.find(permute_vector(pi, *c.parikh));
            left = it1 == d1.end() ? Rational(0) : it1->second;
            right = it2 == d2.end() ? Rational(0) : it2->second;
            break;
        }
        case SymmetryKind::ParikhExpected: {
            if (!c.coordinate || *c.coordinate >= t.k()) return {false, "counterexample lacks a valid coordinate"};
            left = expected_parikh(t, c.input)[*c.coordinate];
            right = expected_parikh(t, px)[pi(*c.coordinate)];
            break;
        }
    }
    if (left != c.left) return mismatch("left value", c.left, left);
    if (right != c.right) return mismatch("right value", c.right, right);
    switch (v.kind) {
        case SymmetryKind::Qualitative:
            if ((sgn(left) > 0) == (sgn(right) > 0)) return {false, "supports agree on the counterexample"};
            break;
        case SymmetryKind::LinfFalsify:
            if (!v.epsilon || abs(left - right) <= *v.epsilon) return {false, "deviation does not exceed epsilon"};
            break;
        default:
            if (left == right) return {false, "values agree on the counterexample"};
    }
    return {};
}

}  // namespace psym

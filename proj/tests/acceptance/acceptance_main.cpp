// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles/brute_force.hpp"
#include "psym/automata/constructions.hpp"
#include "psym/cli/cli.hpp"
#include "psym/equivalence/pra_equivalence.hpp"
#include "psym/fixtures/fixtures.hpp"
#include "psym/fixtures/random.hpp"
#include "psym/model/letter.hpp"
#include "psym/model/model_format.hpp"
#include "psym/symmetry/checks.hpp"
#include "psym/symmetry/falsify.hpp"
#include "psym/symmetry/simulation.hpp"

using namespace psym;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

// Every NotSymmetric verdict produced by any suite, for criterion 8.
struct Replay {
    std::size_t verdicts = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void record(const Transducer& t, const SymmetryVerdict& v) {
        if (v.result != VerdictResult::NotSymmetric) return;
        ++verdicts;
        VerifyResult r = verify(t, v);
        if (!r.ok && failures++ == 0) first_failure = r.message;
    }
} replay;

Word bits_word(const std::string& text, std::size_t k) {
    std::istringstream in(text);
    Word w;
    std::string b;
    while (in >> b) w.push_back(parse_bits(b, k));
    return w;
}

Permutation random_permutation(Rng& rng, std::size_t k) {
    std::vector<std::uint32_t> img(k);
    for (std::uint32_t j = 0; j < k; ++j) img[j] = j;
    for (std::size_t i = k; i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
    return Permutation::from_images(img);
}

Transducer family_instance(std::uint64_t seed) { return gen_random_transducer(seed, 1 + seed % 4, 2, 4); }

const Permutation kSwap = Permutation::parse("(1 2)", 2);
const Permutation kId2 = Permutation::identity(2);

enum class Enumeration { Agree, Mismatch, TooLarge };

// Breadth-first enumeration of all inputs up to max_len for two forward
// computations (on x and on pi(x)). Side states are flat rational vectors on
// which the compared quantity is linear, so pairs are deduplicated up to a
// positive scalar. With the identity permutation both sides coincide.
template <class Step, class Differ>
Enumeration enumerate_pairs(const Transducer& t, const Permutation& pi, std::size_t max_len, oracle::Vec start,
                            Step step, Differ differ, std::size_t limit = 400'000) {
    if (pi.is_identity()) return Enumeration::Agree;
    std::vector<std::pair<oracle::Vec, oracle::Vec>> layer{{start, start}};
    std::set<std::pair<oracle::Vec, oracle::Vec>> seen;
    for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
        std::vector<std::pair<oracle::Vec, oracle::Vec>> next;
        for (const auto& [l, r] : layer)
            for (Letter i = 0; i < (Letter{1} << t.k()); ++i) {
                oracle::Vec l2 = step(l, i), r2 = step(r, oracle::perm_letter(pi, i));
                if (differ(l2, r2)) return Enumeration::Mismatch;
                auto key = oracle::normalized(l2, r2);
                if (len < max_len && seen.insert(key).second) next.push_back(std::move(key));
                if (seen.size() > limit) return Enumeration::TooLarge;
            }
        layer = std::move(next);
    }
    return Enumeration::Agree;
}

// Expected Parikh vectors: side state = per-state mass followed by per-state,
// per-coordinate accumulated reward.
Enumeration expected_enumeration(const Transducer& t, const Permutation& pi, std::size_t max_len) {
    const std::size_t n = t.num_states(), k = t.k();
    oracle::Vec start(n + n * k, Rational(0));
    for (const auto& [q, p] : t.initial()) start[q] = p;
    auto step = [&](const oracle::Vec& s, Letter i) {
        oracle::Vec o(s.size(), Rational(0));
        for (StateId q = 0; q < n; ++q) {
            bool live = s[q] != 0;
            for (std::size_t j = 0; j < k && !live; ++j) live = s[n + q * k + j] != 0;
            if (!live) continue;
            for (const auto& [p, prob] : t.transition(q, i)) {
                o[p] += s[q] * prob;
                for (std::size_t j = 0; j < k; ++j) {
                    o[n + p * k + j] += s[n + q * k + j] * prob;
                    if ((t.label(p) >> j) & 1U) o[n + p * k + j] += s[q] * prob;
                }
            }
        }
        return o;
    };
    auto expectation = [&](const oracle::Vec& s) {
        oracle::Vec e(k, Rational(0));
        for (StateId q = 0; q < n; ++q)
            for (std::size_t j = 0; j < k; ++j) e[j] += s[n + q * k + j];
        return e;
    };
    auto differ = [&](const oracle::Vec& l, const oracle::Vec& r) {
        oracle::Vec el = expectation(l), permuted(k);
        for (std::size_t j = 0; j < k; ++j) permuted[pi(j)] = el[j];
        return permuted != expectation(r);
    };
    return enumerate_pairs(t, pi, max_len, start, step, differ);
}

// Parikh distributions: side state = mass per (state, Parikh vector), with
// Parikh vectors bounded by max_len and laid out densely.
Enumeration distribution_enumeration(const Transducer& t, const Permutation& pi, std::size_t max_len) {
    const std::size_t n = t.num_states(), k = t.k(), base = max_len + 1;
    std::size_t cells = 1;
    for (std::size_t j = 0; j < k; ++j) cells *= base;
    auto index = [&](const oracle::Parikh& c) {
        std::size_t ix = 0;
        for (std::size_t j = k; j-- > 0;) ix = ix * base + c[j];
        return ix;
    };
    auto vector_of = [&](std::size_t ix) {
        oracle::Parikh c(k);
        for (std::size_t j = 0; j < k; ++j) c[j] = ix % base, ix /= base;
        return c;
    };
    oracle::Vec start(n * cells, Rational(0));
    for (const auto& [q, p] : t.initial()) start[q * cells] = p;
    auto step = [&](const oracle::Vec& s, Letter i) {
        oracle::Vec o(s.size(), Rational(0));
        for (StateId q = 0; q < n; ++q)
            for (std::size_t c = 0; c < cells; ++c) {
                if (s[q * cells + c] == 0) continue;
                for (const auto& [p, prob] : t.transition(q, i)) {
                    oracle::Parikh v = vector_of(c);
                    for (std::size_t j = 0; j < k; ++j)
                        if ((t.label(p) >> j) & 1U) ++v[j];
                    o[p * cells + index(v)] += s[q * cells + c] * prob;
                }
            }
        return o;
    };
    auto totals = [&](const oracle::Vec& s, const Permutation* by) {
        std::map<oracle::Parikh, Rational> d;
        for (StateId q = 0; q < n; ++q)
            for (std::size_t c = 0; c < cells; ++c)
                if (s[q * cells + c] != 0) d[by ? oracle::perm_parikh(*by, vector_of(c)) : vector_of(c)] += s[q * cells + c];
        return d;
    };
    auto differ = [&](const oracle::Vec& l, const oracle::Vec& r) { return totals(l, &pi) != totals(r, nullptr); };
    return enumerate_pairs(t, pi, max_len, start, step, differ);
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Outcome o;
    std::ostringstream d;
    auto t0 = Clock::now();
    Transducer uniform = gen_round_robin(3, RoundRobinInit::make_uniform());
    SymmetryVerdict g = check_group(uniform, sk_generators(3), SymmetryKind::Exact);
    replay.record(uniform, g);
    double t_uniform = seconds_since(t0);
    d << "uniform S3 via generators: " << to_string(g.result);
    if (g.result != VerdictResult::Symmetric) {
        std::string why = "uniform arbiter is not S3-symmetric";
        if (g.permutation && g.counterexample)
            why += ": generator " + g.permutation->to_string() + " fails on x=" +
                   word_to_string(g.counterexample->input, 3) + ", y=" + word_to_string(*g.counterexample->output, 3) +
                   " (" + to_string(g.counterexample->left) + " vs " + to_string(g.counterexample->right) + ")";
        o.fail(why);
    }
    SymmetryVerdict cyc = check_exact(uniform, Permutation::parse("(1 2 3)", 3));
    d << "; uniform under (1 2 3): " << to_string(cyc.result);
    if (cyc.result != VerdictResult::Symmetric) o.fail("uniform arbiter not (1 2 3)-symmetric");

    t0 = Clock::now();
    Transducer det = gen_round_robin(3, RoundRobinInit::deterministic(1));
    SymmetryVerdict v = check_exact(det, Permutation::parse("(1 2 3)", 3));
    replay.record(det, v);
    double t_det = seconds_since(t0);
    d << "; deterministic under (1 2 3): " << to_string(v.result);
    if (v.result != VerdictResult::NotSymmetric || !v.counterexample) {
        o.fail("deterministic arbiter not refuted");
    } else {
        d << " x=" << word_to_string(v.counterexample->input, 3) << " y=" << word_to_string(*v.counterexample->output, 3);
        if (v.counterexample->input != bits_word("100", 3)) o.fail("witness input is not 100");
    }
    // The example's two facts, by exact simulation.
    if (output_probability(det, bits_word("100", 3), bits_word("100", 3)) != 1 ||
        output_probability(det, bits_word("010", 3), bits_word("000", 3)) != 1)
        o.fail("T(100)=100 or T(010)=000 does not hold with probability 1");
    if (t_uniform >= 1.0 || t_det >= 1.0) o.fail("runtime above 1 s");
    char buf[96];
    std::snprintf(buf, sizeof buf, "; times %.3fs / %.3fs", t_uniform, t_det);
    d << buf;
    o.detail = o.pass ? d.str() : o.detail + " [" + d.str() + "]";
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto t0 = Clock::now();
    std::size_t agree = 0, total = 0, refuted = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Transducer t = family_instance(seed);
        for (const Permutation& pi : {kSwap, kId2}) {
            auto [a, b] = build_pa_pair(t, pi);
            std::size_t bound = a.num_states() + b.num_states() - 1;
            bool oracle_fails = oracle::exact_mismatch(t, pi, bound).has_value();
            SymmetryVerdict v = check_exact(t, pi);
            replay.record(t, v);
            bool engine_fails = v.result == VerdictResult::NotSymmetric;
            ++total;
            refuted += engine_fails;
            if (engine_fails == oracle_fails) ++agree;
            else o.fail("seed " + std::to_string(seed) + " " + pi.to_string() + ": engine " + to_string(v.result));
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 120) o.fail("runtime " + std::to_string(secs) + " s");
    std::ostringstream d;
    d << agree << "/" << total << " agree (" << refuted << " not symmetric), " << secs << " s";
    o.detail = o.pass ? d.str() : o.detail + " [" + d.str() + "]";
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto t0 = Clock::now();
    std::size_t checked = 0, refuted = 0, confirmed_symmetric = 0, skipped = 0, too_large = 0, identity = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Transducer t = family_instance(seed);
        for (const Permutation& pi : {kSwap, kId2}) {
            auto [a, b] = build_pra_pair(t, pi);
            const std::size_t n = a.pa.num_states();
            for (SymmetryKind kind : {SymmetryKind::ParikhDistribution, SymmetryKind::ParikhExpected}) {
                SymmetryVerdict v = check(t, pi, kind);
                replay.record(t, v);
                ++checked;
                std::string tag = "seed " + std::to_string(seed) + " " + pi.to_string() + " " + to_string(kind);
                if (v.result == VerdictResult::NotSymmetric) {
                    ++refuted;
                    const Word& x = v.counterexample->input;
                    bool differs = kind == SymmetryKind::ParikhDistribution
                                       ? [&] {
                                             std::map<oracle::Parikh, Rational> p;
                                             for (const auto& [c, w] : oracle::parikh_distribution(t, x))
                                                 p[oracle::perm_parikh(pi, c)] = w;
                                             return p != oracle::parikh_distribution(t, oracle::perm_word(pi, x));
                                         }()
                                       : [&] {
                                             auto e = oracle::expected_parikh(t, x);
                                             std::vector<Rational> p(e.size());
                                             for (std::size_t j = 0; j < e.size(); ++j) p[pi(j)] = e[j];
                                             return p != oracle::expected_parikh(t, oracle::perm_word(pi, x));
                                         }();
                    if (!differs) o.fail(tag + ": witness does not re-verify");
                    bool short_found = kind == SymmetryKind::ParikhDistribution
                                           ? oracle::parikh_distribution_mismatch(t, pi, 4).has_value()
                                           : oracle::parikh_expected_mismatch(t, pi, 4).has_value();
                    if (x.size() <= 4 && !short_found) o.fail(tag + ": enumeration up to 4 finds no discrepancy");
                } else if (pi.is_identity()) {
                    ++identity;  // both sides are the same computation
                } else if (t.num_states() <= 3) {
                    // Span bound: distribution reps have dimension n, expected reps 2n.
                    Enumeration e = kind == SymmetryKind::ParikhDistribution
                                        ? distribution_enumeration(t, pi, 2 * n - 1)
                                        : expected_enumeration(t, pi, 4 * n - 1);
                    if (e == Enumeration::Mismatch) o.fail(tag + ": enumeration finds a discrepancy");
                    if (e == Enumeration::TooLarge) ++too_large;
                    else ++confirmed_symmetric;
                } else {
                    ++skipped;
                }
            }
        }
    }
    std::ostringstream d;
    d << checked << " verdicts, " << refuted << " refutations re-verified, " << confirmed_symmetric
      << " symmetric non-identity verdicts enumerated to the span bound, " << identity
      << " identity verdicts, " << too_large
      << " beyond the enumeration budget, " << skipped << " symmetric verdicts on 4-state instances not enumerated, "
      << seconds_since(t0) << " s";
    o.detail = o.pass ? d.str() : o.detail + " [" + d.str() + "]";
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::map<std::string, Transducer> by_name;
    for (const auto& f : gen_hierarchy_fixtures()) by_name.emplace(f.name, f.transducer);
    std::size_t rows = 0;
    for (const auto& row : hierarchy_manifest()) {
        const Transducer& t = by_name.at(row.fixture);
        SymmetryVerdict v = check(t, Permutation::parse(row.permutation, t.k()), parse_symmetry_kind(row.check));
        replay.record(t, v);
        ++rows;
        bool pass = v.result != VerdictResult::NotSymmetric;
        if (pass != row.expect_pass)
            o.fail(row.fixture + " " + row.check + " " + row.permutation + ": got " + to_string(v.result));
    }
    if (o.pass) o.detail = std::to_string(rows) + " manifest rows hold over " + std::to_string(by_name.size()) + " fixtures";
    return o;
}

Outcome criterion5() {
    Outcome o;
    const SymmetryKind kinds[] = {SymmetryKind::Exact, SymmetryKind::ParikhDistribution, SymmetryKind::ParikhExpected,
                                  SymmetryKind::Qualitative};
    std::ostringstream d;
    Rng rng(555);
    for (SymmetryKind kind : kinds) {
        std::size_t triples = 0, tries = 0, nontrivial = 0;
        while (triples < 50 && tries < 2000) {
            ++tries;
            std::size_t k = 3;
            Permutation pi = random_permutation(rng, k), tau = random_permutation(rng, k);
            Transducer base = gen_random_transducer(rng.next(), 1 + rng.below(2), k, 3);
            // Symmetrize over <pi, tau> so both checks have a chance to pass;
            // perturbation keeps supports but usually breaks exactness.
            Transducer t = symmetrize(base, group_elements(GeneratorSet({pi, tau})));
            if (rng.chance(1, 3)) t = perturb_probabilities(t, rng.next());
            if (rng.chance(1, 4)) t = base;
            SymmetryVerdict vp = check(t, pi, kind), vt = check(t, tau, kind);
            replay.record(t, vp);
            replay.record(t, vt);
            if (vp.result == VerdictResult::NotSymmetric || vt.result == VerdictResult::NotSymmetric) continue;
            ++triples;
            Permutation composed = compose(pi, tau);
            nontrivial += !composed.is_identity();
            SymmetryVerdict vc = check(t, composed, kind);
            replay.record(t, vc);
            if (vc.result == VerdictResult::NotSymmetric)
                o.fail(std::string(to_string(kind)) + ": " + pi.to_string() + " o " + tau.to_string() + " fails");
        }
        if (triples < 50) o.fail(std::string(to_string(kind)) + ": only " + std::to_string(triples) + " passing triples");
        d << to_string(kind) << " " << triples << " triples (" << nontrivial << " non-identity products); ";
    }
    o.detail = o.pass ? d.str() + "0 violations" : o.detail;
    return o;
}

Outcome criterion6() {
    Outcome o;
    auto t0 = Clock::now();
    std::size_t agree = 0, universal = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        NFA n = gen_random_nfa(1000 + seed, 1 + seed % 6);
        NfaReduction r = reduce_nfa_to_transducer(n);
        SymmetryVerdict v = check_qualitative(r.transducer, r.pi);
        replay.record(r.transducer, v);
        bool is_universal = oracle::nfa_universal(n);
        universal += is_universal;
        if ((v.result == VerdictResult::Symmetric) == is_universal) ++agree;
        else o.fail("seed " + std::to_string(seed) + ": verdict " + to_string(v.result));
    }
    double secs = seconds_since(t0);
    if (secs >= 60) o.fail("runtime " + std::to_string(secs) + " s");
    std::ostringstream d;
    d << agree << "/100 agree (" << universal << " universal), " << secs << " s";
    o.detail = o.pass ? d.str() : o.detail + " [" + d.str() + "]";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::size_t nonempty = 0, empty = 0;
    const Rational half(1, 2);
    for (std::uint64_t seed = 0; seed < 400 && (nonempty < 60 || empty < 20); ++seed) {
        PA dfa = gen_random_dfa(seed, 2 + seed % 5);
        long shortest = shortest_accepted_length(dfa);
        if (shortest > 6) continue;
        if (shortest >= 0 && nonempty >= 60) continue;
        if (shortest < 0 && empty >= 20) continue;
        PaReduction r = reduce_pa_to_transducer(dfa, half);
        SymmetryVerdict v = falsify_linf(r.transducer, r.pi, half, 8);
        replay.record(r.transducer, v);
        std::string tag = "dfa seed " + std::to_string(seed);
        if (shortest >= 0) {
            ++nonempty;
            if (v.result != VerdictResult::NotSymmetric) o.fail(tag + ": no counterexample");
            else if (abs(v.counterexample->left - v.counterexample->right) != 1) o.fail(tag + ": deviation is not 1");
        } else {
            ++empty;
            if (v.result != VerdictResult::NoCounterexampleFound) o.fail(tag + ": spurious counterexample");
        }
    }
    if (nonempty < 60 || empty < 20) o.fail("not enough DFAs drawn");
    if (o.pass)
        o.detail = std::to_string(nonempty) + " nonempty DFAs refuted with deviation 1, " + std::to_string(empty) +
                   " empty DFAs without counterexample";
    return o;
}

Outcome criterion9() {
    Outcome o;
    auto t0 = Clock::now();
    std::vector<std::pair<Transducer, Permutation>> inequivalent, equivalent;
    for (const auto& f : gen_hierarchy_fixtures())
        if (check_parikh_distribution(f.transducer, kSwap).result == VerdictResult::NotSymmetric)
            inequivalent.push_back({f.transducer, kSwap});
    CheckOptions symbolic;
    symbolic.mode = ParikhMode::Symbolic;
    for (std::uint64_t seed = 0; inequivalent.size() < 50 || equivalent.size() < 20; ++seed) {
        Transducer t = gen_random_transducer(7000 + seed, 1 + seed % 3, 2, 4);
        if (seed % 2) t = symmetrize(t, group_elements(GeneratorSet({kSwap})));
        SymmetryVerdict v = check_parikh_distribution(t, kSwap, symbolic);
        if (v.result == VerdictResult::NotSymmetric && inequivalent.size() < 50) inequivalent.push_back({t, kSwap});
        if (v.result == VerdictResult::Symmetric && equivalent.size() < 20) equivalent.push_back({t, kSwap});
    }
    std::size_t worst = 100, witnesses = 0;
    for (std::size_t i = 0; i < inequivalent.size(); ++i) {
        const auto& [t, pi] = inequivalent[i];
        auto [a, b] = build_pra_pair(t, pi);
        std::size_t found = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            DistributionOptions opts;
            opts.mode = ParikhMode::Randomized;
            opts.seed = seed;
            opts.trials = 3;
            auto r = pra_distribution_equivalent(a, b, opts);
            if (r.verdict != PraVerdict::Witness) continue;
            ++found;
            std::map<oracle::Parikh, Rational> permuted;
            for (const auto& [c, w] : oracle::parikh_distribution(t, *r.witness)) permuted[oracle::perm_parikh(pi, c)] = w;
            if (permuted == oracle::parikh_distribution(t, oracle::perm_word(pi, *r.witness)))
                o.fail("pair " + std::to_string(i) + " seed " + std::to_string(seed) + ": unsound witness");
        }
        witnesses += found;
        worst = std::min(worst, found);
        if (found < 95) o.fail("pair " + std::to_string(i) + ": witness in only " + std::to_string(found) + "/100 seeds");
    }
    // Route one seed per pair through the full check for the replay tally.
    for (const auto& [t, pi] : inequivalent) {
        CheckOptions rnd;
        rnd.mode = ParikhMode::Randomized;
        replay.record(t, check_parikh_distribution(t, pi, rnd));
    }
    for (std::size_t i = 0; i < equivalent.size(); ++i) {
        const auto& [t, pi] = equivalent[i];
        auto [a, b] = build_pra_pair(t, pi);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            DistributionOptions opts;
            opts.mode = ParikhMode::Randomized;
            opts.seed = seed;
            if (pra_distribution_equivalent(a, b, opts).verdict == PraVerdict::Witness)
                o.fail("equivalent pair " + std::to_string(i) + " got a witness");
        }
    }
    std::ostringstream d;
    d << inequivalent.size() << " inequivalent pairs: " << witnesses << "/" << inequivalent.size() * 100
      << " runs found a verified witness (worst pair " << worst << "/100); " << equivalent.size()
      << " equivalent pairs x 100 seeds: no witness; " << seconds_since(t0) << " s";
    o.detail = o.pass ? d.str() : o.detail + " [" + d.str() + "]";
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome criterion10() {
    Outcome o;
    fs::path dir = fs::temp_directory_path() / "psym_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string cli = PSYM_CLI_PATH;
    auto sh = [&](const std::string& args) {
        std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    auto p = [&](const std::string& name) { return "\"" + (dir / name).string() + "\""; };
    std::vector<std::pair<std::string, std::string>> runs;  // args with {out} placeholder, output file
    std::size_t compared = 0;
    for (int round = 0; round < 2; ++round) {
        std::string r = std::to_string(round);
        sh("gen round-robin --k 3 --init det:1 -o " + p("rr3d_" + r + ".sym"));
        sh("gen round-robin --k 4 --init uniform -o " + p("rr4u_" + r + ".sym"));
        sh("gen random --seed 7 --states 3 --k 2 --denominator-bound 4 -o " + p("rand_" + r + ".sym"));
        sh("gen hierarchy-fixtures --out-dir " + p("hier_" + r));
        std::ofstream(dir / ("dfa_" + r + ".pa"))
            << "automaton pa\nstates a b c d\ninitial a: 1\naccepting c\ntransitions\na, 0 -> d: 1\na, 1 -> b: 1\n"
               "b, 0 -> d: 1\nb, 1 -> c: 1\nc, 0 -> d: 1\nc, 1 -> d: 1\nd, 0 -> d: 1\nd, 1 -> d: 1\n";
        sh("gen reduce-pa " + p("dfa_" + r + ".pa") + " --lambda 1/2 -o " + p("t5_" + r + ".sym"));
    }
    for (std::string f : {"rr3d", "rr4u", "rand", "t5"}) {
        ++compared;
        std::string a = slurp(dir / (f + "_0.sym")), b = slurp(dir / (f + "_1.sym"));
        if (a.empty() || a != b) o.fail("generated " + f + " differs between runs");
    }
    for (const auto& e : fs::directory_iterator(dir / "hier_0")) {
        ++compared;
        if (slurp(e.path()) != slurp(dir / "hier_1" / e.path().filename()))
            o.fail("hierarchy file " + e.path().filename().string() + " differs");
    }
    const std::vector<std::string> commands = {
        "check exact --model " + p("rr3d_0.sym") + " --full-sk --verify",
        "check parikh-dist --model " + p("rr4u_0.sym") + " --perm \"(1 2 3 4)\" --mode randomized --seed 11",
        "check parikh-dist --model " + p("rand_0.sym") + " --full-sk",
        "check parikh-exp --model " + p("rr3d_0.sym") + " --group \"(1 2 3),(1 2)\"",
        "check qualitative --model " + p("rand_0.sym") + " --perm \"(1 2)\"",
        "falsify --model " + p("t5_0.sym") + " --perm \"(1 2)\" --epsilon 1/2 --max-len 5",
    };
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::string a = "rep_" + std::to_string(i) + "_a.jsonl", b = "rep_" + std::to_string(i) + "_b.jsonl";
        int ca = sh(commands[i] + " --report " + p(a)), cb = sh(commands[i] + " --report " + p(b));
        ++compared;
        if (ca != cb) o.fail("command " + std::to_string(i) + ": exit codes differ");
        if (ca < 0 || ca > 1) o.fail("command " + std::to_string(i) + ": exit code " + std::to_string(ca));
        std::string ra = slurp(dir / a);
        if (ra.empty() || ra != slurp(dir / b)) o.fail("command " + std::to_string(i) + ": reports differ");
    }
    fs::remove_all(dir);
    if (o.pass) o.detail = std::to_string(compared) + " artifacts byte-identical across two runs";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    // Optional arguments select criteria by number.
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "round-robin example", criterion1},
        {2, "exact-symmetry oracle agreement", criterion2},
        {3, "Parikh-check oracle agreement", criterion3},
        {4, "hierarchy strictness", criterion4},
        {5, "composition", criterion5},
        {6, "NFA-universality reduction", criterion6},
        {7, "threshold reduction with the falsifier", criterion7},
        {9, "randomized Parikh-distribution mode", criterion9},
        {10, "determinism", criterion10},
    };
    int failures = 0;
    auto report = [&](int id, const char* name, const Outcome& o) {
        std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    };
    for (const auto& c : criteria)
        if (only.empty() || only.count(c.id)) report(c.id, c.name, c.run());
    Outcome replayed;
    if (replay.failures)
        replayed.fail(std::to_string(replay.failures) + " of " + std::to_string(replay.verdicts) +
                      " counterexamples fail to replay; first: " + replay.first_failure);
    else
        replayed.detail = std::to_string(replay.verdicts) + " counterexamples from all suites replay exactly";
    report(8, "witness self-verification", replayed);
    std::printf("%d criteria failed\n", failures);
    return failures;
}

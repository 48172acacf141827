#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles/brute_force.hpp"
#include "psym/automata/automaton_format.hpp"
#include "psym/fixtures/fixtures.hpp"
#include "psym/model/model_format.hpp"
#include "psym/symmetry/checks.hpp"
#include "psym/symmetry/falsify.hpp"
#include "psym/symmetry/simulation.hpp"
#include "test_util.hpp"

using namespace psym;
using testutil::q;
using testutil::word;

namespace {

// DFA over {0,1} accepting exactly "11".
PA dfa_11() {
    return parse_pa(R"(automaton pa
states a b c d
initial a: 1
accepting c
transitions
a, 0 -> d: 1
a, 1 -> b: 1
b, 0 -> d: 1
b, 1 -> c: 1
c, 0 -> d: 1
c, 1 -> d: 1
d, 0 -> d: 1
d, 1 -> d: 1
)");
}

NFA nfa_from(const std::string& rows) {
    return parse_nfa("automaton nfa\nstates a b\ninitial a\naccepting a b\ntransitions\n" + rows);
}

}  // namespace

TEST(RoundRobin, Shape) {
    Transducer t = gen_round_robin(3, RoundRobinInit::make_uniform());
    EXPECT_EQ(t.num_states(), 6u);
    EXPECT_TRUE(validate_transducer(t).empty());
    EXPECT_EQ(t.initial().size(), 3u);
    Transducer d = gen_round_robin(3, RoundRobinInit::deterministic(1));
    EXPECT_EQ(d.initial().size(), 1u);
    EXPECT_THROW(gen_round_robin(3, RoundRobinInit::deterministic(4)), std::invalid_argument);
    EXPECT_THROW(gen_round_robin(3, RoundRobinInit::deterministic(0)), std::invalid_argument);
    EXPECT_THROW(gen_round_robin(1, RoundRobinInit::make_uniform()), std::invalid_argument);
}

TEST(RoundRobin, GrantsTheListenedProcess) {
    Transducer t = gen_round_robin(3, RoundRobinInit::deterministic(1));
    EXPECT_EQ(oracle::run_probability(t, word("100", 3), word("100", 3)), q(1));
    EXPECT_EQ(oracle::run_probability(t, word("010", 3), word("000", 3)), q(1));
    EXPECT_EQ(oracle::run_probability(t, word("111 111 111", 3), word("100 010 001", 3)), q(1));
}

TEST(ReducePa, ShapeAndLabels) {
    PA a = dfa_11();
    PaReduction r = reduce_pa_to_transducer(a, q(1, 2));
    EXPECT_EQ(r.transducer.num_states(), a.num_states() + 4);
    EXPECT_EQ(r.pi, Permutation::parse("(1 2)", 2));
    EXPECT_EQ(r.epsilon, q(1, 2));
    EXPECT_TRUE(validate_transducer(r.transducer).empty());
    for (Letter l : r.transducer.labels()) EXPECT_TRUE(l == 0 || l == 3);
    EXPECT_THROW(reduce_pa_to_transducer(a, q(0)), std::invalid_argument);
    EXPECT_THROW(reduce_pa_to_transducer(a, q(1)), std::invalid_argument);
}

TEST(ReducePa, FalsifierFindsAcceptedWord) {
    PaReduction r = reduce_pa_to_transducer(dfa_11(), q(1, 2));
    auto v = falsify_linf(r.transducer, r.pi, r.epsilon, 5);
    ASSERT_EQ(v.result, VerdictResult::NotSymmetric);
    // x = {i2} . 1 . 1 . c with 1 read as {i2}. Both c = {i1} and c = {i1,i2}
    // lead to s_top from an accepting state; {i1} comes first in display order.
    EXPECT_EQ(v.counterexample->input, word("01 01 01 10", 2));
    EXPECT_EQ(output_probability(r.transducer, word("01 01 01 11", 2), word("00 00 00 00", 2)),
              v.counterexample->left);
    EXPECT_EQ(v.counterexample->output, word("00 00 00 00", 2));
    EXPECT_EQ(abs(v.counterexample->left - v.counterexample->right), q(1));
}

TEST(ReducePa, EmptyLanguageHasNoCounterexample) {
    PA a = dfa_11();
    a.accepting.assign(a.num_states(), false);
    PaReduction r = reduce_pa_to_transducer(a, q(1, 3));
    EXPECT_EQ(falsify_linf(r.transducer, r.pi, r.epsilon, 6).result, VerdictResult::NoCounterexampleFound);
}

TEST(ReduceNfa, UniversalAndNonUniversal) {
    NFA universal = nfa_from("a, 0 -> a\na, 1 -> a\nb, 0 -> b\nb, 1 -> b\n");
    NfaReduction r = reduce_nfa_to_transducer(universal);
    EXPECT_EQ(r.transducer.num_states(), universal.num_states() + 3);
    EXPECT_TRUE(validate_transducer(r.transducer).empty());
    EXPECT_EQ(check_qualitative(r.transducer, r.pi).result, VerdictResult::Symmetric);

    NFA rejects_10 = nfa_from("a, 0 -> a\na, 1 -> b\nb, 1 -> b\n");
    NfaReduction s = reduce_nfa_to_transducer(rejects_10);
    auto v = check_qualitative(s.transducer, s.pi);
    ASSERT_EQ(v.result, VerdictResult::NotSymmetric);
    EXPECT_TRUE(verify(s.transducer, v).ok);
    // The witness from the construction: x = {i1} . w, y = empty^{|w|+1}.
    Word x = word("10 11 00", 2), y = word("00 00 00", 2);
    EXPECT_EQ(oracle::run_probability(s.transducer, x, y), q(0));
    EXPECT_GT(oracle::run_probability(s.transducer, oracle::perm_word(s.pi, x), y), q(0));

    NFA bad = rejects_10;
    bad.accepting[1] = false;
    EXPECT_THROW(reduce_nfa_to_transducer(bad), std::invalid_argument);
}

TEST(ReduceNfaProperty, MatchesUniversality) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        NFA n = gen_random_nfa(seed, 1 + seed % 5);
        NfaReduction r = reduce_nfa_to_transducer(n);
        EXPECT_EQ(check_qualitative(r.transducer, r.pi).result == VerdictResult::Symmetric, oracle::nfa_universal(n))
            << "seed " << seed;
    }
}

TEST(RandomTransducer, DeterministicAndValid) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Transducer t = gen_random_transducer(seed, 3, 2, 4);
        EXPECT_TRUE(validate_transducer(t).empty());
        EXPECT_EQ(serialize_model(t), serialize_model(gen_random_transducer(seed, 3, 2, 4)));
        for (StateId s = 0; s < 3; ++s)
            for (Letter l = 0; l < 4; ++l)
                for (const auto& [p, w] : t.transition(s, l)) EXPECT_LE(w.get_den(), 4);
    }
    EXPECT_NE(serialize_model(gen_random_transducer(1, 3, 2, 4)), serialize_model(gen_random_transducer(2, 3, 2, 4)));
    EXPECT_THROW(gen_random_transducer(1, 3, 2, 0), std::invalid_argument);
    EXPECT_THROW(gen_random_transducer(1, 0, 2, 3), std::invalid_argument);
}

TEST(RandomDfa, ShortestAcceptedLength) {
    EXPECT_EQ(shortest_accepted_length(dfa_11()), 2);
    PA empty = dfa_11();
    empty.accepting.assign(empty.num_states(), false);
    EXPECT_EQ(shortest_accepted_length(empty), -1);
}

TEST(Symmetrize, ProducesGroupSymmetricTransducers) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Transducer t = symmetrize(gen_random_transducer(seed, 2, 3, 3), group_elements(sk_generators(3)));
        EXPECT_TRUE(validate_transducer(t).empty());
        EXPECT_EQ(check_full_sk(t, SymmetryKind::Exact).result, VerdictResult::Symmetric);
    }
}

TEST(Hierarchy, ManifestHolds) {
    auto fixtures = gen_hierarchy_fixtures();
    ASSERT_EQ(fixtures.size(), 4u);
    std::map<std::string, Transducer> by_name;
    for (const auto& f : fixtures) {
        EXPECT_TRUE(validate_transducer(f.transducer).empty()) << f.name;
        by_name.emplace(f.name, f.transducer);
    }
    auto rows = hierarchy_manifest();
    EXPECT_EQ(parse_manifest(serialize_manifest(rows)).size(), rows.size());
    for (const auto& row : rows) {
        const Transducer& t = by_name.at(row.fixture);
        auto v = check(t, Permutation::parse(row.permutation, t.k()), parse_symmetry_kind(row.check));
        EXPECT_EQ(v.result != VerdictResult::NotSymmetric, row.expect_pass) << row.fixture << " " << row.check;
        if (v.result == VerdictResult::NotSymmetric) EXPECT_TRUE(verify(t, v).ok);
    }
}

// Oracle view of the manifest: each declared pass or fail is confirmed by
// enumeration on words of length <= 4.
TEST(Hierarchy, ManifestAgreesWithEnumeration) {
    std::map<std::string, Transducer> by_name;
    for (const auto& f : gen_hierarchy_fixtures()) by_name.emplace(f.name, f.transducer);
    for (const auto& row : hierarchy_manifest()) {
        const Transducer& t = by_name.at(row.fixture);
        Permutation pi = Permutation::parse(row.permutation, t.k());
        bool fails = false;
        switch (parse_symmetry_kind(row.check)) {
            case SymmetryKind::Exact: fails = oracle::exact_mismatch(t, pi, 4).has_value(); break;
            case SymmetryKind::ParikhDistribution: fails = oracle::parikh_distribution_mismatch(t, pi, 4).has_value(); break;
            case SymmetryKind::ParikhExpected: fails = oracle::parikh_expected_mismatch(t, pi, 4).has_value(); break;
            default: fails = oracle::support_mismatch(t, pi, 4).has_value();
        }
        EXPECT_EQ(!fails, row.expect_pass) << row.fixture << " " << row.check;
    }
}

TEST(Hierarchy, WritesFilesDeterministically) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "psym_hierarchy_test";
    fs::remove_all(dir);
    write_hierarchy_fixtures(dir.string());
    std::ifstream m(dir / "manifest.tsv");
    std::stringstream text;
    text << m.rdbuf();
    EXPECT_EQ(text.str(), serialize_manifest(hierarchy_manifest()));
    for (const auto& f : gen_hierarchy_fixtures()) EXPECT_EQ(load_model((dir / (f.name + ".sym")).string()), f.transducer);
    fs::remove_all(dir);
}

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "psym/fixtures/fixtures.hpp"
#include "psym/model/model_format.hpp"

namespace psym {

namespace {

constexpr Letter kNone = 0, kI1 = 1, kI2 = 2, kBoth = 3;
constexpr Letter kO1 = 1, kO2 = 2;

Rational q(long num, unsigned long den) { return make_rational(num, den); }

// Input-independent: with probability 1/3 each the first two outputs are
// o1 o2, o2 -, or - o1; nothing is emitted afterwards. Parikh images are
// (1,1), (0,1), (1,0) with equal weight, a (1 2)-invariant distribution,
// while the word o1 o2 has no permuted counterpart.
Transducer order_swap() {
    Transducer t(2, {"start", "a1", "a2", "b1", "b2", "c1", "c2", "idle"});
    StateId start = 0, a1 = 1, a2 = 2, b1 = 3, b2 = 4, c1 = 5, c2 = 6, idle = 7;
    t.set_label(a1, kO1);
    t.set_label(a2, kO2);
    t.set_label(b1, kO2);
    t.set_label(c2, kO1);
    t.set_initial(Distribution::dirac(start));
    t.set_default(start, Distribution({{a1, q(1, 3)}, {b1, q(1, 3)}, {c1, q(1, 3)}}));
    t.set_default(a1, Distribution::dirac(a2));
    t.set_default(b1, Distribution::dirac(b2));
    t.set_default(c1, Distribution::dirac(c2));
    for (StateId s : {a2, b2, c2, idle}) t.set_default(s, Distribution::dirac(idle));
    return t;
}

// First input {i1}: o1 o1 or o2 o2, each with probability 1/2.
// First input {i2}: o1 o2 or o2 o1, each with probability 1/2.
// Otherwise nothing is ever emitted. Expected images agree, distributions
// do not.
Transducer fifty_fifty() {
    Transducer t(2, {"start", "p11a", "p11b", "p22a", "p22b", "p12a", "p12b", "p21a", "p21b", "idle"});
    StateId start = 0, p11a = 1, p11b = 2, p22a = 3, p22b = 4, p12a = 5, p12b = 6, p21a = 7, p21b = 8, idle = 9;
    t.set_label(p11a, kO1);
    t.set_label(p11b, kO1);
    t.set_label(p22a, kO2);
    t.set_label(p22b, kO2);
    t.set_label(p12a, kO1);
    t.set_label(p12b, kO2);
    t.set_label(p21a, kO2);
    t.set_label(p21b, kO1);
    t.set_initial(Distribution::dirac(start));
    t.set_transition(start, kI1, Distribution({{p11a, q(1, 2)}, {p22a, q(1, 2)}}));
    t.set_transition(start, kI2, Distribution({{p12a, q(1, 2)}, {p21a, q(1, 2)}}));
    t.set_transition(start, kNone, Distribution::dirac(idle));
    t.set_transition(start, kBoth, Distribution::dirac(idle));
    t.set_default(p11a, Distribution::dirac(p11b));
    t.set_default(p22a, Distribution::dirac(p22b));
    t.set_default(p12a, Distribution::dirac(p12b));
    t.set_default(p21a, Distribution::dirac(p21b));
    for (StateId s : {p11b, p22b, p12b, p21b, idle}) t.set_default(s, Distribution::dirac(idle));
    return t;
}

// A request of process 1 is granted with probability 1/2, one of process 2
// with probability 1/3; supports are symmetric, probabilities are not.
Transducer support_perturbation() {
    Transducer t(2, {"rest", "g1", "g2"});
    StateId rest = 0, g1 = 1, g2 = 2;
    t.set_label(g1, kO1);
    t.set_label(g2, kO2);
    t.set_initial(Distribution::dirac(rest));
    for (StateId s : {rest, g1, g2}) {
        t.set_transition(s, kI1, Distribution({{rest, q(1, 2)}, {g1, q(1, 2)}}));
        t.set_transition(s, kI2, Distribution({{rest, q(2, 3)}, {g2, q(1, 3)}}));
        t.set_default(s, Distribution::dirac(rest));
    }
    return t;
}

// Grants the single requester, and process 1 whenever both request.
Transducer biased() {
    Transducer t(2, {"rest", "g1", "g2"});
    StateId rest = 0, g1 = 1, g2 = 2;
    t.set_label(g1, kO1);
    t.set_label(g2, kO2);
    t.set_initial(Distribution::dirac(rest));
    for (StateId s : {rest, g1, g2}) {
        t.set_transition(s, kNone, Distribution::dirac(rest));
        t.set_transition(s, kI1, Distribution::dirac(g1));
        t.set_transition(s, kI2, Distribution::dirac(g2));
        t.set_transition(s, kBoth, Distribution::dirac(g1));
    }
    return t;
}

}  // namespace

std::vector<NamedFixture> gen_hierarchy_fixtures() {
    return {{"order-swap", order_swap()},
            {"fifty-fifty", fifty_fifty()},
            {"support-perturbation", support_perturbation()},
            {"biased", biased()}};
}

std::vector<ManifestRow> hierarchy_manifest() {
    // exact, parikh-dist, parikh-exp, qualitative under (1 2).
    struct Expect {
        const char* name;
        bool pass[4];
    };
    const Expect table[] = {
        {"order-swap", {false, true, true, false}},
        {"fifty-fifty", {false, false, true, false}},
        {"support-perturbation", {false, false, false, true}},
        {"biased", {false, false, false, false}},
    };
    const char* checks[] = {"exact", "parikh-dist", "parikh-exp", "qualitative"};
    std::vector<ManifestRow> rows;
    for (const auto& e : table) {
        for (int c = 0; c < 4; ++c) rows.push_back({e.name, std::string(e.name) + ".sym", "(1 2)", checks[c], e.pass[c]});
        for (int c = 0; c < 4; ++c) rows.push_back({e.name, std::string(e.name) + ".sym", "()", checks[c], true});
    }
    return rows;
}

std::string serialize_manifest(const std::vector<ManifestRow>& rows) {
    std::ostringstream out;
    out << "# fixture\tmodel\tpermutation\tcheck\texpect\n";
    for (const auto& r : rows)
        out << r.fixture << '\t' << r.model << '\t' << r.permutation << '\t' << r.check << '\t'
            << (r.expect_pass ? "pass" : "fail") << '\n';
    return out.str();
}

std::vector<ManifestRow> parse_manifest(const std::string& text) {
    std::vector<ManifestRow> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::size_t pos = 0;
        for (;;) {
            std::size_t tab = line.find('\t', pos);
            cols.push_back(line.substr(pos, tab - pos));
            if (tab == std::string::npos) break;
            pos = tab + 1;
        }
        if (cols.size() != 5 || (cols[4] != "pass" && cols[4] != "fail"))
            throw std::invalid_argument("manifest line " + std::to_string(line_no) + ": expected 5 tab-separated columns");
        rows.push_back({cols[0], cols[1], cols[2], cols[3], cols[4] == "pass"});
    }
    return rows;
}

void write_hierarchy_fixtures(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& f : gen_hierarchy_fixtures()) save_model(f.transducer, (std::filesystem::path(dir) / (f.name + ".sym")).string());
    std::ofstream out(std::filesystem::path(dir) / "manifest.tsv", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest in '" + dir + "'");
    out << serialize_manifest(hierarchy_manifest());
}

}  // namespace psym

#include "psym/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "psym/automata/automaton_format.hpp"
#include "psym/fixtures/fixtures.hpp"
#include "psym/model/letter.hpp"
#include "psym/model/model_format.hpp"
#include "psym/symmetry/checks.hpp"
#include "psym/symmetry/falsify.hpp"

namespace psym::cli {

using json = nlohmann::ordered_json;

std::vector<std::string> split_group(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
            continue;
        }
        cur += c;
    }
    out.push_back(cur);
    return out;
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string report_path;
    bool json_to_stdout = false;
    bool verify = false;
    bool timing = false;
    bool serial = false;
};

void add_output_options(CLI::App* cmd, Output& o) {
    cmd->add_option("--report", o.report_path, "Write the JSON Lines report to FILE");
    cmd->add_flag("--json", o.json_to_stdout, "Print the JSON Lines report instead of the summary");
    cmd->add_flag("--verify", o.verify, "Replay the counterexample by forward simulation");
    cmd->add_flag("--timing", o.timing, "Include wall time (makes the report nondeterministic)");
    cmd->add_flag("--serial", o.serial, "Use the serial reference kernels");
}

Transducer load_valid_model(const std::string& path) {
    Transducer t = load_model(path);
    auto violations = validate_transducer(t);
    if (!violations.empty()) {
        std::string msg = path + ": invalid model";
        for (const auto& v : violations) msg += "\n  " + std::string(to_string(v.kind)) + ": " + v.message;
        throw std::invalid_argument(msg);
    }
    return t;
}

std::string word_text(const Word& w, std::size_t k) {
    std::string s = word_to_string(w, k);
    return s.empty() ? "(empty)" : s;
}

std::string vector_text(const std::vector<std::uint64_t>& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

void print_summary(std::ostream& out, const SymmetryVerdict& v, std::size_t k) {
    out << to_string(v.kind) << ": " << to_string(v.result);
    if (v.permutation) out << " (permutation " << v.permutation->to_string() << ")";
    out << "\n";
    for (const auto& g : v.generators)
        out << "  generator " << (g.permutation ? g.permutation->to_string() : "?") << ": " << to_string(g.result) << "\n";
    if (v.engine.mode) out << "  mode: " << to_string(*v.engine.mode) << "\n";
    if (v.engine.error_bound) out << "  error bound: " << to_string(*v.engine.error_bound) << "\n";
    if (!v.note.empty()) out << "  note: " << v.note << "\n";
    if (!v.counterexample || !v.permutation) return;
    const Counterexample& c = *v.counterexample;
    const Permutation& pi = *v.permutation;
    out << "  counterexample input x = " << word_text(c.input, k) << ", pi(x) = " << word_text(permute_word(pi, c.input), k)
        << "\n";
    switch (v.kind) {
        case SymmetryKind::ParikhDistribution:
            out << "  Pr(P(T(x)) = " << vector_text(*c.parikh) << ") = " << to_string(c.left) << "\n";
            out << "  Pr(P(T(pi x)) = " << vector_text(permute_vector(pi, *c.parikh)) << ") = " << to_string(c.right)
                << "\n";
            break;
        case SymmetryKind::ParikhExpected:
            out << "  E[P(T(x))]_" << *c.coordinate + 1 << " = " << to_string(c.left) << "\n";
            out << "  E[P(T(pi x))]_" << pi(*c.coordinate) + 1 << " = " << to_string(c.right) << "\n";
            break;
        default:
            out << "  y = " << word_text(*c.output, k) << ", pi(y) = " << word_text(permute_word(pi, *c.output), k) << "\n";
            out << "  Pr(T(x) = y) = " << to_string(c.left) << "\n";
            out << "  Pr(T(pi x) = pi y) = " << to_string(c.right) << "\n";
            if (v.kind == SymmetryKind::LinfFalsify) out << "  deviation = " << to_string(abs(c.left - c.right)) << "\n";
    }
}

int exit_code_for(const SymmetryVerdict& v) {
    return v.result == VerdictResult::NotSymmetric ? kExitNotSymmetric : kExitSymmetric;
}

// Emits summary and report, runs --verify, and returns the exit code.
int finish(const std::string& command, const std::string& model_path, const Transducer& t, const SymmetryVerdict& v,
           const Output& o, double wall_ms, std::ostream& out, std::ostream& err) {
    std::vector<std::string> lines;
    lines.push_back(report_header());
    json input;
    input["type"] = "input";
    input["command"] = command;
    input["model"] = model_path;
    input["k"] = t.k();
    input["states"] = t.num_states();
    lines.push_back(input.dump());
    lines.push_back(verdict_json(v, t.k()));
    int code = exit_code_for(v);
    if (o.verify) {
        VerifyResult r = verify(t, v);
        json j;
        j["type"] = "verify";
        j["ok"] = r.ok;
        if (!r.ok) j["message"] = r.message;
        lines.push_back(j.dump());
        if (!r.ok) {
            err << "verify: counterexample does not replay: " << r.message << "\n";
            code = kExitVerifyMismatch;
        }
    }
    if (o.timing) {
        json j;
        j["type"] = "timing";
        j["wall_ms"] = wall_ms;
        lines.push_back(j.dump());
    }
    if (!o.report_path.empty()) {
        std::ofstream f(o.report_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write report '" + o.report_path + "'");
        for (const auto& l : lines) f << l << "\n";
    }
    if (o.json_to_stdout) {
        for (const auto& l : lines) out << l << "\n";
    } else {
        print_summary(out, v, t.k());
        if (o.verify && code != kExitVerifyMismatch) out << "  verify: ok\n";
        if (o.timing) out << "  wall time: " << wall_ms << " ms\n";
    }
    return code;
}

std::string emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return "standard output";
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
    return path;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Process-symmetry checks for probabilistic I/O transducers", "psym"};
    app.require_subcommand(1);

    // check
    auto* check_cmd = app.add_subcommand("check", "Decide a symmetry notion for a permutation or group");
    std::string kind_text, model_path, perm_text, group_text, mode_text;
    bool full_sk = false;
    std::uint64_t seed = 0;
    std::size_t trials = 3;
    Output check_out;
    check_cmd->add_option("kind", kind_text, "exact | parikh-dist | parikh-exp | qualitative")
        ->required()
        ->check(CLI::IsMember({"exact", "parikh-dist", "parikh-exp", "qualitative"}));
    check_cmd->add_option("--model", model_path, "Model file")->required();
    check_cmd->add_option("--perm", perm_text, "Permutation in cycle notation, e.g. \"(1 2 3)\"");
    check_cmd->add_option("--group", group_text, "Comma-separated generators, e.g. \"(1 2),(1 2 3)\"");
    check_cmd->add_flag("--full-sk", full_sk, "Check the full symmetric group");
    check_cmd->add_option("--mode", mode_text, "parikh-dist engine: symbolic | randomized")
        ->check(CLI::IsMember({"symbolic", "randomized"}));
    check_cmd->add_option("--seed", seed, "Seed for randomized mode");
    check_cmd->add_option("--trials", trials, "Evaluation points for randomized mode")->check(CLI::PositiveNumber);
    add_output_options(check_cmd, check_out);

    // falsify
    auto* falsify_cmd = app.add_subcommand("falsify", "Bounded search for an L-infinity symmetry violation");
    std::string f_model, f_perm, eps_text;
    std::size_t max_len = 0;
    std::size_t cap = 1'000'000;
    Output falsify_out;
    falsify_cmd->add_option("--model", f_model, "Model file")->required();
    falsify_cmd->add_option("--perm", f_perm, "Permutation in cycle notation")->required();
    falsify_cmd->add_option("--epsilon", eps_text, "Tolerance P/Q in (0, 1]")->required();
    falsify_cmd->add_option("--max-len", max_len, "Longest input word tried")->required();
    falsify_cmd->add_option("--cap", cap, "Frontier size limit");
    add_output_options(falsify_cmd, falsify_out);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate models");
    gen_cmd->require_subcommand(1);
    auto* rr_cmd = gen_cmd->add_subcommand("round-robin", "Round-robin arbiter");
    std::size_t rr_k = 3;
    std::string rr_init = "uniform", rr_out;
    rr_cmd->add_option("--k", rr_k, "Number of processes")->required();
    rr_cmd->add_option("--init", rr_init, "uniform | det:J");
    rr_cmd->add_option("-o,--output", rr_out, "Output file (default: standard output)");

    auto* rnd_cmd = gen_cmd->add_subcommand("random", "Random transducer");
    std::uint64_t rnd_seed = 0, rnd_den = 4;
    std::size_t rnd_states = 3, rnd_k = 2;
    std::string rnd_out;
    rnd_cmd->add_option("--seed", rnd_seed, "Seed")->required();
    rnd_cmd->add_option("--states", rnd_states, "Number of states");
    rnd_cmd->add_option("--k", rnd_k, "Number of processes");
    rnd_cmd->add_option("--denominator-bound", rnd_den, "Largest denominator");
    rnd_cmd->add_option("-o,--output", rnd_out, "Output file");

    auto* rpa_cmd = gen_cmd->add_subcommand("reduce-pa", "Transducer from a PA over {0,1} and a threshold");
    std::string rpa_in, rpa_lambda, rpa_out;
    rpa_cmd->add_option("file", rpa_in, "PA file")->required();
    rpa_cmd->add_option("--lambda", rpa_lambda, "Threshold P/Q in (0, 1)")->required();
    rpa_cmd->add_option("-o,--output", rpa_out, "Output file");

    auto* rnfa_cmd = gen_cmd->add_subcommand("reduce-nfa", "Transducer from an all-accepting NFA over {0,1}");
    std::string rnfa_in, rnfa_out;
    rnfa_cmd->add_option("file", rnfa_in, "NFA file")->required();
    rnfa_cmd->add_option("-o,--output", rnfa_out, "Output file");

    auto* hier_cmd = gen_cmd->add_subcommand("hierarchy-fixtures", "Fixtures separating the symmetry notions");
    std::string hier_dir;
    hier_cmd->add_option("--out-dir", hier_dir, "Directory for the fixtures and manifest.tsv")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (check_cmd->parsed()) {
            int chosen = (!perm_text.empty()) + (!group_text.empty()) + (full_sk ? 1 : 0);
            if (chosen != 1) throw UsageError("check: give exactly one of --perm, --group, --full-sk");
            Transducer t = load_valid_model(model_path);
            SymmetryKind kind = parse_symmetry_kind(kind_text);
            CheckOptions options;
            if (!mode_text.empty()) options.mode = parse_parikh_mode(mode_text);
            options.seed = seed;
            options.trials = trials;
            options.execution = check_out.serial ? Execution::Serial : Execution::Parallel;
            auto t0 = std::chrono::steady_clock::now();
            SymmetryVerdict v;
            if (!perm_text.empty()) {
                v = check(t, Permutation::parse(perm_text, t.k()), kind, options);
            } else if (!group_text.empty()) {
                std::vector<Permutation> gens;
                for (const auto& g : split_group(group_text)) gens.push_back(Permutation::parse(g, t.k()));
                v = check_group(t, GeneratorSet(std::move(gens)), kind, options);
            } else {
                v = check_full_sk(t, kind, options);
            }
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            return finish("check " + kind_text, model_path, t, v, check_out, ms, out, err);
        }
        if (falsify_cmd->parsed()) {
            Transducer t = load_valid_model(f_model);
            Rational eps;
            try {
                eps = parse_rational(eps_text);
            } catch (const std::exception&) {
                throw UsageError("falsify: malformed epsilon '" + eps_text + "'");
            }
            if (sgn(eps) <= 0 || eps > 1) throw UsageError("falsify: epsilon must lie in (0, 1], got " + eps_text);
            if (max_len < 1) throw UsageError("falsify: --max-len must be at least 1");
            FalsifyOptions options;
            options.frontier_cap = cap;
            options.execution = falsify_out.serial ? Execution::Serial : Execution::Parallel;
            auto t0 = std::chrono::steady_clock::now();
            SymmetryVerdict v;
            try {
                v = falsify_linf(t, Permutation::parse(f_perm, t.k()), eps, max_len, options);
            } catch (const FrontierExplosion& e) {
                if (!falsify_out.report_path.empty()) {
                    std::ofstream f(falsify_out.report_path, std::ios::binary);
                    json j;
                    j["type"] = "error";
                    j["error"] = "state-explosion";
                    j["frontier"] = e.size();
                    j["cap"] = e.cap();
                    j["length"] = e.length();
                    f << report_header() << "\n" << j.dump() << "\n";
                }
                err << "error: " << e.what() << "\n";
                return kExitError;
            }
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            return finish("falsify", f_model, t, v, falsify_out, ms, out, err);
        }
        if (rr_cmd->parsed()) {
            RoundRobinInit init;
            if (rr_init == "uniform") {
                init = RoundRobinInit::make_uniform();
            } else if (rr_init.rfind("det:", 0) == 0) {
                std::size_t j = 0;
                try {
                    j = std::stoul(rr_init.substr(4));
                } catch (const std::exception&) {
                    throw UsageError("gen round-robin: malformed --init '" + rr_init + "'");
                }
                init = RoundRobinInit::deterministic(j);
            } else {
                throw UsageError("gen round-robin: --init must be uniform or det:J");
            }
            std::string where = emit(serialize_model(gen_round_robin(rr_k, init)), rr_out, out);
            if (!rr_out.empty()) out << "wrote " << where << "\n";
            return 0;
        }
        if (rnd_cmd->parsed()) {
            std::string where = emit(serialize_model(gen_random_transducer(rnd_seed, rnd_states, rnd_k, rnd_den)), rnd_out, out);
            if (!rnd_out.empty()) out << "wrote " << where << "\n";
            return 0;
        }
        if (rpa_cmd->parsed()) {
            Rational lambda;
            try {
                lambda = parse_rational(rpa_lambda);
            } catch (const std::exception&) {
                throw UsageError("gen reduce-pa: malformed --lambda '" + rpa_lambda + "'");
            }
            PaReduction r = reduce_pa_to_transducer(load_pa(rpa_in), lambda);
            std::string where = emit(serialize_model(r.transducer), rpa_out, out);
            if (!rpa_out.empty())
                out << "wrote " << where << " (permutation " << r.pi.to_string() << ", epsilon " << to_string(r.epsilon)
                    << ")\n";
            return 0;
        }
        if (rnfa_cmd->parsed()) {
            NfaReduction r = reduce_nfa_to_transducer(load_nfa(rnfa_in));
            std::string where = emit(serialize_model(r.transducer), rnfa_out, out);
            if (!rnfa_out.empty()) out << "wrote " << where << " (permutation " << r.pi.to_string() << ")\n";
            return 0;
        }
        if (hier_cmd->parsed()) {
            write_hierarchy_fixtures(hier_dir);
            out << "wrote " << gen_hierarchy_fixtures().size() << " fixtures and manifest.tsv to " << hier_dir << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace psym::cli

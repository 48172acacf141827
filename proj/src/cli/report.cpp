#include <json.hpp>

#include "psym/cli/cli.hpp"
#include "psym/model/letter.hpp"

namespace psym::cli {

using json = nlohmann::ordered_json;

namespace {

json word_json(const Word& w, std::size_t k) {
    json a = json::array();
    for (Letter l : w) a.push_back(letter_to_bits(l, k));
    return a;
}

json counterexample_json(const SymmetryVerdict& v, std::size_t k) {
    const Counterexample& c = *v.counterexample;
    json j;
    j["input"] = word_json(c.input, k);
    if (v.permutation) j["permuted_input"] = word_json(permute_word(*v.permutation, c.input), k);
    if (c.output) {
        j["output"] = word_json(*c.output, k);
        if (v.permutation) j["permuted_output"] = word_json(permute_word(*v.permutation, *c.output), k);
    }
    if (c.parikh) {
        j["parikh"] = *c.parikh;
        if (v.permutation) j["permuted_parikh"] = permute_vector(*v.permutation, *c.parikh);
    }
    if (c.coordinate) {
        j["coordinate"] = *c.coordinate + 1;
        if (v.permutation) j["permuted_coordinate"] = (*v.permutation)(*c.coordinate) + 1;
    }
    j["left"] = to_string(c.left);
    j["right"] = to_string(c.right);
    if (v.kind == SymmetryKind::LinfFalsify) j["deviation"] = to_string(abs(c.left - c.right));
    return j;
}

json engine_json(const EngineInfo& e) {
    json j;
    j["engine"] = e.engine;
    if (e.mode) j["mode"] = to_string(*e.mode);
    if (e.seed) j["seed"] = *e.seed;
    if (e.trials) j["trials"] = *e.trials;
    j["basis_size"] = e.basis_size;
    if (e.error_bound) j["error_bound"] = to_string(*e.error_bound);
    return j;
}

json verdict_object(const SymmetryVerdict& v, std::size_t k) {
    json j;
    j["kind"] = to_string(v.kind);
    j["result"] = to_string(v.result);
    j["permutation"] = v.permutation ? json(v.permutation->to_string()) : json(nullptr);
    j["counterexample"] = v.counterexample ? counterexample_json(v, k) : json(nullptr);
    j["engine"] = engine_json(v.engine);
    if (v.epsilon) j["epsilon"] = to_string(*v.epsilon);
    if (v.max_len) j["max_len"] = *v.max_len;
    if (v.result == VerdictResult::NoCounterexampleFound) j["not_a_proof"] = true;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

}  // namespace

std::string report_header() {
    json j;
    j["format"] = "psym-report";
    j["version"] = 1;
    return j.dump();
}

std::string verdict_json(const SymmetryVerdict& v, std::size_t k) {
    json j;
    j["type"] = "verdict";
    j.update(verdict_object(v, k));
    if (!v.generators.empty()) {
        json gens = json::array();
        for (const auto& g : v.generators) gens.push_back(verdict_object(g, k));
        j["generators"] = std::move(gens);
    }
    return j.dump();
}

}  // namespace psym::cli

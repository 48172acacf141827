#include "psym/automata/automaton_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "psym/model/letter.hpp"
#include "psym/model/model_format.hpp"

namespace psym {

namespace {

using format::Token;
using Kind = ParseError::Kind;

struct Raw {
    bool probabilistic = false;
    std::size_t bits = 1;
    std::vector<std::string> names;
    std::map<std::string, StateId> index;
    std::vector<bool> accepting;
    std::optional<StateId> sink;
    // Both kinds are collected as weighted lists; NFA weights are all 1.
    std::vector<std::pair<StateId, Rational>> initial;
    std::vector<std::map<Letter, std::vector<std::pair<StateId, Rational>>>> rows;
};

class AutomatonParser {
public:
    AutomatonParser(std::string_view text, bool probabilistic) : text_(text) { raw_.probabilistic = probabilistic; }

    Raw run() {
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t end = text_.find('\n', pos);
            if (end == std::string_view::npos) end = text_.size();
            std::string_view line = text_.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_;
            auto tokens = format::tokenize_line(line);
            if (!tokens.empty()) handle(tokens);
            pos = end + 1;
        }
        if (!header_) {
            line_ = 1;
            fail(Kind::Syntax, 1, "empty automaton: expected 'automaton pa' or 'automaton nfa'");
        }
        if (!states_) fail(Kind::Syntax, 1, "missing 'states'");
        if (!initial_) fail(Kind::Semantic, 1, "missing 'initial'");
        return std::move(raw_);
    }

private:
    [[noreturn]] void fail(Kind kind, std::size_t column, const std::string& msg) const {
        throw ParseError(kind, line_, column, msg);
    }

    void handle(const std::vector<Token>& t) {
        const std::string& head = t[0].text;
        if (!header_) {
            if (head != "automaton" || t.size() != 2) fail(Kind::Syntax, t[0].column, "expected 'automaton pa|nfa'");
            std::string want = raw_.probabilistic ? "pa" : "nfa";
            if (t[1].text != want) fail(Kind::Semantic, t[1].column, "expected an automaton of kind '" + want + "'");
            header_ = true;
            return;
        }
        if (head == "bits") {
            if (states_ || t.size() != 2) fail(Kind::Syntax, t[0].column, "'bits N' must precede 'states'");
            std::size_t v = 0;
            for (char c : t[1].text) {
                if (!std::isdigit(static_cast<unsigned char>(c))) fail(Kind::Syntax, t[1].column, "bits must be an integer");
                v = v * 10 + static_cast<std::size_t>(c - '0');
                if (v > 100) break;
            }
            if (v < 1 || v > 62) fail(Kind::Semantic, t[1].column, "bits must lie in 1..62");
            raw_.bits = v;
            return;
        }
        if (head == "states") {
            if (states_) fail(Kind::Syntax, t[0].column, "states given twice");
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (!is_valid_state_name(t[i].text)) fail(Kind::Syntax, t[i].column, "invalid state name '" + t[i].text + "'");
                if (!raw_.index.emplace(t[i].text, static_cast<StateId>(raw_.names.size())).second)
                    fail(Kind::Semantic, t[i].column, "duplicate state '" + t[i].text + "'");
                raw_.names.push_back(t[i].text);
            }
            if (raw_.names.empty()) fail(Kind::Syntax, t[0].column, "expected at least one state");
            raw_.accepting.assign(raw_.names.size(), false);
            raw_.rows.resize(raw_.names.size());
            states_ = true;
            return;
        }
        if (!states_) fail(Kind::Syntax, t[0].column, "'" + head + "' must follow 'states'");
        if (head == "initial") {
            if (initial_) fail(Kind::Syntax, t[0].column, "initial given twice");
            raw_.initial = targets(t, 1);
            initial_ = true;
            return;
        }
        if (head == "accepting") {
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (t[i].text == ",") continue;
                raw_.accepting[state(t[i])] = true;
            }
            return;
        }
        if (head == "sink") {
            if (t.size() != 2) fail(Kind::Syntax, t[0].column, "expected 'sink state'");
            raw_.sink = state(t[1]);
            return;
        }
        if (head == "transitions") {
            in_transitions_ = true;
            return;
        }
        if (!in_transitions_) fail(Kind::Syntax, t[0].column, "unexpected '" + head + "'");
        StateId q = state(t[0]);
        if (t.size() < 5 || t[1].text != "," || t[3].text != "->")
            fail(Kind::Syntax, t[0].column, "expected 'state, letter -> targets'");
        Letter l;
        try {
            l = parse_bits(t[2].text, raw_.bits);
        } catch (const std::invalid_argument& e) {
            fail(Kind::Syntax, t[2].column, e.what());
        }
        if (raw_.rows[q].count(l)) fail(Kind::Semantic, t[2].column, "second row for '" + t[0].text + "', " + t[2].text);
        raw_.rows[q][l] = targets(t, 4);
    }

    StateId state(const Token& tok) const {
        auto it = raw_.index.find(tok.text);
        if (it == raw_.index.end()) fail(Kind::Semantic, tok.column, "unknown state '" + tok.text + "'");
        return it->second;
    }

    std::vector<std::pair<StateId, Rational>> targets(const std::vector<Token>& t, std::size_t i) const {
        std::vector<std::pair<StateId, Rational>> out;
        std::set<StateId> seen;
        if (i >= t.size()) fail(Kind::Syntax, t.back().column, "expected at least one target");
        for (;;) {
            StateId s = state(t[i]);
            if (!seen.insert(s).second) fail(Kind::Semantic, t[i].column, "state '" + t[i].text + "' listed twice");
            Rational p(1);
            ++i;
            if (raw_.probabilistic) {
                if (i >= t.size()) fail(Kind::Syntax, t.back().column, "expected ': probability'");
                if (t[i].text != ":" || i + 1 >= t.size()) fail(Kind::Syntax, t[i].column, "expected ': probability'");
                try {
                    p = parse_rational(t[i + 1].text);
                } catch (const std::domain_error&) {
                    fail(Kind::Semantic, t[i + 1].column, "zero denominator");
                } catch (const std::invalid_argument&) {
                    fail(Kind::Syntax, t[i + 1].column, "malformed rational '" + t[i + 1].text + "'");
                }
                if (sgn(p) < 0) fail(Kind::Semantic, t[i + 1].column, "negative probability");
                i += 2;
            }
            out.emplace_back(s, p);
            if (i == t.size()) break;
            if (t[i].text != ",") fail(Kind::Syntax, t[i].column, "expected ','");
            ++i;
            if (i == t.size()) fail(Kind::Syntax, t[i - 1].column, "trailing ','");
        }
        return out;
    }

    std::string_view text_;
    std::size_t line_ = 0;
    bool header_ = false;
    bool states_ = false;
    bool initial_ = false;
    bool in_transitions_ = false;
    Raw raw_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <class F>
auto with_source(const std::string& path, F parse) {
    std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw ParseError(e.kind(), e.line(), e.column(), e.message(), path);
    }
}

void write_header(std::ostringstream& out, const char* kind, std::size_t bits, const std::vector<std::string>& names) {
    out << "automaton " << kind << "\nbits " << bits << "\nstates";
    for (const auto& n : names) out << ' ' << n;
    out << "\n";
}

std::vector<std::string> names_or_default(const std::vector<std::string>& names, std::size_t n) {
    if (names.size() == n) return names;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("q" + std::to_string(i));
    return out;
}

}  // namespace

PA parse_pa(std::string_view text) {
    Raw raw = AutomatonParser(text, true).run();
    PA a;
    a.alphabet_bits = raw.bits;
    a.names = raw.names;
    a.accepting = raw.accepting;
    a.sink = raw.sink;
    a.initial = Distribution(raw.initial);
    a.rows.resize(raw.names.size());
    for (std::size_t q = 0; q < raw.rows.size(); ++q)
        for (auto& [l, entries] : raw.rows[q]) a.rows[q][l] = Distribution(std::move(entries));
    return a;
}

NFA parse_nfa(std::string_view text) {
    Raw raw = AutomatonParser(text, false).run();
    NFA a;
    a.alphabet_bits = raw.bits;
    a.names = raw.names;
    a.accepting = raw.accepting;
    for (const auto& [s, w] : raw.initial) a.initial.push_back(s);
    std::sort(a.initial.begin(), a.initial.end());
    a.rows.resize(raw.names.size());
    for (std::size_t q = 0; q < raw.rows.size(); ++q)
        for (auto& [l, entries] : raw.rows[q]) {
            std::vector<StateId> targets;
            for (const auto& e : entries) targets.push_back(e.first);
            std::sort(targets.begin(), targets.end());
            a.rows[q][l] = std::move(targets);
        }
    return a;
}

std::string serialize_pa(const PA& a) {
    auto names = names_or_default(a.names, a.num_states());
    std::ostringstream out;
    write_header(out, "pa", a.alphabet_bits, names);
    out << "initial";
    bool first = true;
    for (const auto& [s, p] : a.initial) {
        out << (first ? " " : ", ") << names[s] << ": " << to_string(p);
        first = false;
    }
    out << "\naccepting";
    for (std::size_t q = 0; q < a.num_states(); ++q)
        if (a.accepting[q]) out << ' ' << names[q];
    out << "\n";
    if (a.sink) out << "sink " << names[*a.sink] << "\n";
    out << "transitions\n";
    for (std::size_t q = 0; q < a.num_states(); ++q)
        for (const auto& [l, d] : a.rows[q]) {
            out << "  " << names[q] << ", " << letter_to_bits(l, a.alphabet_bits) << " ->";
            bool f = true;
            for (const auto& [s, p] : d) {
                out << (f ? " " : ", ") << names[s] << ": " << to_string(p);
                f = false;
            }
            out << "\n";
        }
    return out.str();
}

std::string serialize_nfa(const NFA& a) {
    auto names = names_or_default(a.names, a.num_states());
    std::ostringstream out;
    write_header(out, "nfa", a.alphabet_bits, names);
    out << "initial";
    for (std::size_t i = 0; i < a.initial.size(); ++i) out << (i ? ", " : " ") << names[a.initial[i]];
    out << "\naccepting";
    for (std::size_t q = 0; q < a.num_states(); ++q)
        if (a.accepting[q]) out << ' ' << names[q];
    out << "\ntransitions\n";
    for (std::size_t q = 0; q < a.num_states(); ++q)
        for (const auto& [l, targets] : a.rows[q]) {
            out << "  " << names[q] << ", " << letter_to_bits(l, a.alphabet_bits) << " ->";
            for (std::size_t i = 0; i < targets.size(); ++i) out << (i ? ", " : " ") << names[targets[i]];
            out << "\n";
        }
    return out.str();
}

PA load_pa(const std::string& path) {
    return with_source(path, [](const std::string& text) { return parse_pa(text); });
}

NFA load_nfa(const std::string& path) {
    return with_source(path, [](const std::string& text) { return parse_nfa(text); });
}

}  // namespace psym

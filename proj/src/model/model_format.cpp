#include "psym/model/model_format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "psym/model/letter.hpp"

namespace psym {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message,
                       const std::string& source)
    : std::runtime_error((source.empty() ? std::string() : source + ": ") + "line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message),
      source_(source) {}

namespace format {

std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == ':' || c == ',') {
            out.push_back({std::string(1, c), i + 1});
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({"->", i + 1});
            i += 2;
            continue;
        }
        std::size_t start = i;
        while (i < line.size()) {
            char d = line[i];
            if (std::isspace(static_cast<unsigned char>(d)) || d == ':' || d == ',' || d == '#') break;
            if (d == '-' && i + 1 < line.size() && line[i + 1] == '>') break;
            ++i;
        }
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

}  // namespace format

namespace {

using format::Token;
using Kind = ParseError::Kind;

const char* const kKeywords[] = {"k", "states", "initial", "labels", "transitions", "families", "default"};

bool is_keyword(std::string_view w) {
    for (const char* kw : kKeywords)
        if (w == kw) return true;
    return false;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Transducer run() {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t end = text_.find('\n', pos);
            if (end == std::string_view::npos) end = text_.size();
            std::string_view line = text_.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_no;
            line_ = line_no;
            auto tokens = format::tokenize_line(line);
            if (!tokens.empty()) handle(tokens);
            pos = end + 1;
        }
        return finish();
    }

private:
    [[noreturn]] void fail(Kind kind, std::size_t column, const std::string& msg) const {
        throw ParseError(kind, line_, column, msg);
    }

    void handle(const std::vector<Token>& t) {
        const std::string& head = t[0].text;
        if (head == "k") return parse_k(t);
        if (head == "states") return parse_states(t);
        if (head == "initial") return parse_initial(t);
        if (head == "labels" || head == "transitions") {
            require_states(t[0]);
            if (t.size() > 1) fail(Kind::Syntax, t[1].column, "unexpected text after section header '" + head + "'");
            section_ = head == "labels" ? Section::Labels : Section::Transitions;
            if (head == "labels") labels_line_ = line_;
            return;
        }
        if (head == "families") fail(Kind::Syntax, t[0].column, "the 'families' section is reserved and not supported");
        switch (section_) {
            case Section::Labels: return parse_label(t);
            case Section::Transitions: return parse_transition(t);
            case Section::None: break;
        }
        fail(Kind::Syntax, t[0].column, "unexpected '" + head + "'");
    }

    void parse_k(const std::vector<Token>& t) {
        if (k_) fail(Kind::Syntax, t[0].column, "k given twice");
        if (t.size() != 2) fail(Kind::Syntax, t[0].column, "expected 'k <number>'");
        const Token& v = t[1];
        std::size_t value = 0;
        for (char c : v.text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail(Kind::Syntax, v.column, "k must be a decimal integer");
            value = value * 10 + static_cast<std::size_t>(c - '0');
            if (value > 1000) break;
        }
        if (value < 1 || value > kMaxProcesses)
            fail(Kind::Semantic, v.column, "k must lie in 1.." + std::to_string(kMaxProcesses));
        k_ = value;
        k_line_ = line_;
    }

    void parse_states(const std::vector<Token>& t) {
        if (!k_) fail(Kind::Syntax, t[0].column, "'states' must follow 'k'");
        if (t_) fail(Kind::Syntax, t[0].column, "states given twice");
        if (t.size() < 2) fail(Kind::Syntax, t[0].column, "expected at least one state name");
        std::vector<std::string> names;
        std::map<std::string, StateId> index;
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (!is_valid_state_name(t[i].text)) fail(Kind::Syntax, t[i].column, "invalid state name '" + t[i].text + "'");
            if (!index.emplace(t[i].text, static_cast<StateId>(names.size())).second)
                fail(Kind::Semantic, t[i].column, "duplicate state name '" + t[i].text + "'");
            names.push_back(t[i].text);
        }
        index_ = std::move(index);
        t_.emplace(*k_, std::move(names));
        labelled_.assign(t_->num_states(), false);
        row_seen_.assign(t_->num_states(), {});
        default_seen_.assign(t_->num_states(), false);
    }

    void require_states(const Token& at) const {
        if (!t_) fail(Kind::Syntax, at.column, "'" + at.text + "' must follow 'states'");
    }

    StateId state(const Token& tok) const {
        if (tok.text == ":" || tok.text == "," || tok.text == "->")
            fail(Kind::Syntax, tok.column, "expected a state name, found '" + tok.text + "'");
        auto it = index_.find(tok.text);
        if (it == index_.end()) fail(Kind::Semantic, tok.column, "unknown state '" + tok.text + "'");
        return it->second;
    }

    Rational rational(const Token& tok) const {
        try {
            return parse_rational(tok.text);
        } catch (const std::domain_error&) {
            fail(Kind::Semantic, tok.column, "zero denominator in '" + tok.text + "'");
        } catch (const std::invalid_argument&) {
            fail(Kind::Syntax, tok.column, "malformed rational '" + tok.text + "'");
        }
    }

    Letter bits(const Token& tok) const {
        try {
            return parse_bits(tok.text, *k_);
        } catch (const std::invalid_argument& e) {
            fail(Kind::Syntax, tok.column, e.what());
        }
    }

    // NAME ':' RAT (',' NAME ':' RAT)* starting at index `i`.
    Distribution distribution(const std::vector<Token>& t, std::size_t i) const {
        std::vector<Distribution::Entry> entries;
        std::map<StateId, bool> seen;
        if (i >= t.size()) fail(Kind::Syntax, t.back().column, "expected a distribution");
        for (;;) {
            if (i + 2 >= t.size())
                fail(Kind::Syntax, i < t.size() ? t[i].column : t.back().column, "expected 'state: probability'");
            StateId s = state(t[i]);
            if (t[i + 1].text != ":") fail(Kind::Syntax, t[i + 1].column, "expected ':'");
            Rational p = rational(t[i + 2]);
            if (sgn(p) < 0) fail(Kind::Semantic, t[i + 2].column, "negative probability");
            if (seen.count(s)) fail(Kind::Semantic, t[i].column, "state '" + t[i].text + "' listed twice");
            seen[s] = true;
            entries.emplace_back(s, p);
            i += 3;
            if (i == t.size()) break;
            if (t[i].text != ",") fail(Kind::Syntax, t[i].column, "expected ','");
            ++i;
            if (i == t.size()) fail(Kind::Syntax, t[i - 1].column, "trailing ','");
        }
        return Distribution(std::move(entries));
    }

    void parse_initial(const std::vector<Token>& t) {
        require_states(t[0]);
        if (initial_seen_) fail(Kind::Syntax, t[0].column, "initial given twice");
        if (t.size() < 2) fail(Kind::Syntax, t[0].column, "expected an initial distribution");
        t_->set_initial(distribution(t, 1));
        initial_seen_ = true;
    }

    void parse_label(const std::vector<Token>& t) {
        StateId s = state(t[0]);
        if (t.size() != 3 || t[1].text != ":")
            fail(Kind::Syntax, t.size() > 1 ? t[1].column : t[0].column, "expected 'state: bits'");
        if (labelled_[s]) fail(Kind::Semantic, t[0].column, "state '" + t[0].text + "' labelled twice");
        t_->set_label(s, bits(t[2]));
        labelled_[s] = true;
    }

    void parse_transition(const std::vector<Token>& t) {
        StateId s = state(t[0]);
        if (t.size() < 5) fail(Kind::Syntax, t[0].column, "expected 'state, bits -> distribution'");
        if (t[1].text != ",") fail(Kind::Syntax, t[1].column, "expected ','");
        if (t[3].text != "->") fail(Kind::Syntax, t[3].column, "expected '->'");
        Distribution d = distribution(t, 4);
        if (t[2].text == "default") {
            if (default_seen_[s]) fail(Kind::Semantic, t[2].column, "second default row for '" + t[0].text + "'");
            default_seen_[s] = true;
            t_->set_default(s, std::move(d));
            return;
        }
        Letter input = bits(t[2]);
        if (!row_seen_[s].emplace(input, true).second)
            fail(Kind::Semantic, t[2].column, "second row for '" + t[0].text + "', " + t[2].text);
        t_->set_transition(s, input, std::move(d));
    }

    Transducer finish() {
        if (!k_) {
            line_ = 1;
            fail(Kind::Syntax, 1, "empty model: expected 'k <number>'");
        }
        if (!t_) {
            line_ = k_line_;
            fail(Kind::Syntax, 1, "missing 'states'");
        }
        if (!initial_seen_) {
            line_ = k_line_;
            fail(Kind::Semantic, 1, "missing 'initial'");
        }
        for (StateId s = 0; s < t_->num_states(); ++s) {
            if (!labelled_[s]) {
                line_ = labels_line_ ? labels_line_ : k_line_;
                fail(Kind::Semantic, 1, "state '" + t_->name(s) + "' has no label");
            }
        }
        return std::move(*t_);
    }

    enum class Section { None, Labels, Transitions };

    std::string_view text_;
    std::size_t line_ = 0;
    std::size_t k_line_ = 1;
    std::size_t labels_line_ = 0;
    Section section_ = Section::None;
    std::optional<std::size_t> k_;
    std::optional<Transducer> t_;
    std::map<std::string, StateId> index_;
    bool initial_seen_ = false;
    std::vector<bool> labelled_;
    std::vector<std::map<Letter, bool>> row_seen_;
    std::vector<bool> default_seen_;
};

void write_distribution(std::ostringstream& out, const Transducer& t, const Distribution& d) {
    bool first = true;
    for (const auto& [s, p] : d) {
        if (!first) out << ", ";
        first = false;
        out << t.name(s) << ": " << to_string(p);
    }
}

}  // namespace

bool is_valid_state_name(std::string_view name) {
    if (name.empty() || is_keyword(name)) return false;
    for (char c : name) {
        bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '@' || c == '[' ||
                  c == ']' || c == '+';
        if (!ok) return false;
    }
    return true;
}

Transducer parse_model(std::string_view text) { return Parser(text).run(); }

std::string serialize_model(const Transducer& t) {
    for (const auto& n : t.names())
        if (!is_valid_state_name(n)) throw std::invalid_argument("state name '" + n + "' cannot be serialized");
    std::ostringstream out;
    out << "k " << t.k() << "\n";
    out << "states";
    for (const auto& n : t.names()) out << ' ' << n;
    out << "\ninitial ";
    write_distribution(out, t, t.initial());
    out << "\nlabels\n";
    for (StateId s = 0; s < t.num_states(); ++s) out << "  " << t.name(s) << ": " << letter_to_bits(t.label(s), t.k()) << "\n";
    out << "transitions\n";
    for (StateId s = 0; s < t.num_states(); ++s) {
        if (const auto& d = t.default_row(s)) {
            out << "  " << t.name(s) << ", default -> ";
            write_distribution(out, t, *d);
            out << "\n";
        }
        for (const auto& [letter, d] : t.rows(s)) {
            out << "  " << t.name(s) << ", " << letter_to_bits(letter, t.k()) << " -> ";
            write_distribution(out, t, d);
            out << "\n";
        }
    }
    return out.str();
}

Transducer load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_model(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.kind(), e.line(), e.column(), e.message(), path);
    }
}

void save_model(const Transducer& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_model(t);
}

}  // namespace psym

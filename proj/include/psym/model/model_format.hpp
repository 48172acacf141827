#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psym/model/transducer.hpp"

namespace psym {

/// Error raised by the text parsers, positioned at a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, Semantic };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message,
               const std::string& source = {});

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }
    const std::string& source() const { return source_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
    std::string source_;
};

/// Parses the line-oriented model format (see docs/model-format.md).
/// Structural problems throw ParseError; stochasticity and totality are left
/// to validate_transducer.
Transducer parse_model(std::string_view text);

/// Canonical text form. parse_model(serialize_model(t)) == t.
std::string serialize_model(const Transducer& t);

/// Reads and parses a file; a ParseError carries the path as its source.
Transducer load_model(const std::string& path);
void save_model(const Transducer& t, const std::string& path);

bool is_valid_state_name(std::string_view name);

namespace format {

struct Token {
    std::string text;
    std::size_t column;
};

/// Splits one line into words and the punctuation tokens ':' ',' '->'.
/// Everything from '#' on is a comment.
std::vector<Token> tokenize_line(std::string_view line);

}  // namespace format

}  // namespace psym

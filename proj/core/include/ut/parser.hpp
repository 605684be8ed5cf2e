#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ut/term.hpp"

namespace ut {

enum class TokenKind { Name, Variable, Integer, LParen, RParen, Comma };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t offset;  // 0-based character offset into the input

    bool operator==(const Token&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::string message,
               std::optional<std::string> expected = std::nullopt)
        : std::runtime_error(format(position, message, expected)),
          position_(position),
          message_(std::move(message)),
          expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::string& message() const { return message_; }
    const std::optional<std::string>& expected() const { return expected_; }

private:
    static std::string format(std::size_t position, const std::string& message,
                              const std::optional<std::string>& expected);

    std::size_t position_;
    std::string message_;
    std::optional<std::string> expected_;
};

struct ParseOptions {
    // Maximum number of simultaneously open compound terms; deeper input
    // is rejected with a ParseError instead of exhausting the call stack.
    std::size_t max_depth = 10'000;
};

// Splits the input into tokens. Whitespace separates tokens and is
// discarded; anything outside the token alphabet raises ParseError.
std::vector<Token> tokenize(std::string_view input);

// Parses a single term covering the entire input (trailing whitespace
// allowed). Grammar:
//
//   term := VARIABLE | NAME | INTEGER | NAME "(" term ("," term)* ")"
//
// Integer literals become constants with their literal spelling as name.
Term parse_term(std::string_view input, const ParseOptions& options = {});

}  // namespace ut

#include "ut/parser.hpp"

#include <cstdio>
#include <utility>

namespace ut {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_name_char(char c) {
    return is_lower(c) || is_upper(c) || is_digit(c) || c == '_';
}

std::string describe_char(char c) {
    if (c >= 0x21 && c <= 0x7e) {
        return std::string("'") + c + "'";
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "0x%02x", static_cast<unsigned char>(c));
    return buf;
}

}  // namespace

std::string ParseError::format(std::size_t position, const std::string& message,
                               const std::optional<std::string>& expected) {
    std::string out = "offset " + std::to_string(position) + ": " + message;
    if (expected) {
        out += "; expected " + *expected;
    }
    return out;
}

std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        const char c = input[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (c == '(') {
            tokens.push_back({TokenKind::LParen, "(", i++});
            continue;
        }
        if (c == ')') {
            tokens.push_back({TokenKind::RParen, ")", i++});
            continue;
        }
        if (c == ',') {
            tokens.push_back({TokenKind::Comma, ",", i++});
            continue;
        }
        if (is_lower(c) || is_upper(c) || c == '_') {
            const std::size_t start = i;
            while (i < input.size() && is_name_char(input[i])) ++i;
            tokens.push_back({is_lower(c) ? TokenKind::Name : TokenKind::Variable,
                              std::string(input.substr(start, i - start)), start});
            continue;
        }
        if (is_digit(c)) {
            const std::size_t start = i;
            while (i < input.size() && is_digit(input[i])) ++i;
            tokens.push_back({TokenKind::Integer,
                              std::string(input.substr(start, i - start)), start});
            continue;
        }
        throw ParseError(i, "illegal character " + describe_char(c));
    }
    return tokens;
}

namespace {

struct OpenCompound {
    std::string functor;
    std::size_t open_offset;  // offset of the '('
    std::vector<Term> args;
};

}  // namespace

Term parse_term(std::string_view input, const ParseOptions& options) {
    const std::vector<Token> tokens = tokenize(input);
    std::size_t pos = 0;
    std::vector<OpenCompound> open;

    auto at_end = [&] { return pos == tokens.size(); };
    auto end_error = [&](const char* expected) -> ParseError {
        return ParseError(input.size(), "unexpected end of input", expected);
    };

    for (;;) {
        // One term start: a leaf, or the head of a compound.
        if (at_end()) throw end_error("a term");
        const Token& tok = tokens[pos];
        std::optional<Term> completed;
        switch (tok.kind) {
            case TokenKind::Variable:
                completed = Term::variable(tok.text);
                ++pos;
                break;
            case TokenKind::Integer:
                completed = Term::constant(tok.text);
                ++pos;
                break;
            case TokenKind::Name:
                ++pos;
                if (!at_end() && tokens[pos].kind == TokenKind::LParen) {
                    if (open.size() >= options.max_depth) {
                        throw ParseError(tokens[pos].offset,
                                         "maximum nesting depth exceeded");
                    }
                    open.push_back({tok.text, tokens[pos].offset, {}});
                    ++pos;
                    continue;  // parse the first argument
                }
                completed = Term::constant(tok.text);
                break;
            default:
                throw ParseError(tok.offset, "expected a term",
                                 "identifier, variable, or integer");
        }

        // Completion cascade: attach the finished term to its parent,
        // closing as many compounds as ')' tokens allow.
        for (;;) {
            if (open.empty()) {
                if (!at_end()) {
                    throw ParseError(tokens[pos].offset,
                                     "unexpected input after term");
                }
                return std::move(*completed);
            }
            open.back().args.push_back(std::move(*completed));
            if (at_end()) throw end_error("',' or ')'");
            if (tokens[pos].kind == TokenKind::Comma) {
                ++pos;
                break;  // next argument
            }
            if (tokens[pos].kind != TokenKind::RParen) {
                throw ParseError(tokens[pos].offset, "expected ',' or ')'");
            }
            ++pos;
            OpenCompound done = std::move(open.back());
            open.pop_back();
            completed = Term::compound(std::move(done.functor), std::move(done.args));
        }
    }
}

}  // namespace ut

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ut {

enum class TermKind { Variable, Constant, Compound };

//
// Immutable first-order term: a variable, a constant, or a compound
// term functor(arg1, ..., argN) with N >= 1. Zero-arity symbols are
// constants, never compounds. Structural equality is member-wise and
// recurses through the argument vectors.
//
// Lexical convention (enforced by the parser, assumed elsewhere):
// variables start with an uppercase letter or underscore, constants
// and functors with a lowercase letter or are all-digit literals.
//
class Term {
public:
    static Term variable(std::string name) {
        return Term(TermKind::Variable, std::move(name), {});
    }

    static Term constant(std::string name) {
        return Term(TermKind::Constant, std::move(name), {});
    }

    static Term compound(std::string functor, std::vector<Term> args) {
        if (args.empty()) {
            throw std::invalid_argument("compound term requires at least one argument");
        }
        return Term(TermKind::Compound, std::move(functor), std::move(args));
    }

    TermKind kind() const { return kind_; }
    bool is_variable() const { return kind_ == TermKind::Variable; }
    bool is_constant() const { return kind_ == TermKind::Constant; }
    bool is_compound() const { return kind_ == TermKind::Compound; }

    // Variable/constant name, or the main functor of a compound.
    const std::string& name() const { return name_; }

    const std::vector<Term>& args() const { return args_; }
    std::size_t arity() const { return args_.size(); }

    bool operator==(const Term& other) const = default;

private:
    Term(TermKind kind, std::string name, std::vector<Term> args)
        : kind_(kind), name_(std::move(name)), args_(std::move(args)) {
        if (name_.empty()) {
            throw std::invalid_argument("term name must be nonempty");
        }
    }

    TermKind kind_;
    std::string name_;
    std::vector<Term> args_;
};

}  // namespace ut

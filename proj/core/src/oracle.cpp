#include "ut/oracle.hpp"

#include <utility>

namespace ut {

namespace {

// Replaces var by image everywhere in the images of s, then records
// var -> image itself. Keeps the composed substitution idempotent as
// long as image never contains var (the occur check below).
void compose(OracleSubstitution& s, const std::string& var, const Term& image) {
    OracleSubstitution single;
    single.emplace(var, image);
    for (auto& [name, value] : s) {
        value = apply_substitution(single, value);
    }
    s.insert_or_assign(var, image);
}

bool bind_variable(const std::string& var, const Term& value,
                   OracleSubstitution& s, OracleFailure& why) {
    if (value.is_variable() && value.name() == var) return true;
    if (occurs_in(var, value)) {
        why = OracleFailure::Occurs;
        return false;
    }
    compose(s, var, value);
    return true;
}

bool unify_under(const Term& left, const Term& right, OracleSubstitution& s,
                 OracleFailure& why) {
    const Term a = apply_substitution(s, left);
    const Term b = apply_substitution(s, right);
    if (a.is_variable()) return bind_variable(a.name(), b, s, why);
    if (b.is_variable()) return bind_variable(b.name(), a, s, why);
    if (a.name() != b.name() || a.arity() != b.arity() || a.kind() != b.kind()) {
        why = OracleFailure::Clash;
        return false;
    }
    for (std::size_t k = 0; k < a.arity(); ++k) {
        if (!unify_under(a.args()[k], b.args()[k], s, why)) return false;
    }
    return true;
}

bool walk_equivalent(const Term& a, const Term& b,
                     std::map<std::string, std::string>& fwd,
                     std::map<std::string, std::string>& rev) {
    if (a.kind() != b.kind()) return false;
    if (a.is_variable()) {
        auto [fit, finserted] = fwd.try_emplace(a.name(), b.name());
        if (!finserted && fit->second != b.name()) return false;
        auto [rit, rinserted] = rev.try_emplace(b.name(), a.name());
        return rinserted || rit->second == a.name();
    }
    if (a.name() != b.name() || a.arity() != b.arity()) return false;
    for (std::size_t k = 0; k < a.arity(); ++k) {
        if (!walk_equivalent(a.args()[k], b.args()[k], fwd, rev)) return false;
    }
    return true;
}

}  // namespace

OracleResult oracle_unify(const Term& x, const Term& y) {
    OracleResult result;
    OracleSubstitution s;
    OracleFailure why = OracleFailure::Clash;
    if (unify_under(x, y, s, why)) {
        result.mgu = std::move(s);
    } else {
        result.failure = why;
    }
    return result;
}

Term apply_substitution(const OracleSubstitution& s, const Term& t) {
    switch (t.kind()) {
        case TermKind::Variable: {
            auto it = s.find(t.name());
            return it != s.end() ? it->second : t;
        }
        case TermKind::Constant:
            return t;
        case TermKind::Compound: {
            std::vector<Term> args;
            args.reserve(t.arity());
            for (const Term& arg : t.args()) {
                args.push_back(apply_substitution(s, arg));
            }
            return Term::compound(t.name(), std::move(args));
        }
    }
    return t;  // unreachable
}

bool occurs_in(std::string_view var, const Term& t) {
    if (t.is_variable()) return t.name() == var;
    for (const Term& arg : t.args()) {
        if (occurs_in(var, arg)) return true;
    }
    return false;
}

bool equivalent_mgus(const OracleSubstitution& s1, const OracleSubstitution& s2,
                     const Term& x, const Term& y) {
    std::map<std::string, std::string> fwd;
    std::map<std::string, std::string> rev;
    // The two unifiers agree iff the applied terms match up to one
    // consistent variable bijection across both inputs.
    return walk_equivalent(apply_substitution(s1, x), apply_substitution(s2, x),
                           fwd, rev) &&
           walk_equivalent(apply_substitution(s1, y), apply_substitution(s2, y),
                           fwd, rev);
}

}  // namespace ut

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ut/term.hpp"

namespace ut {

// Reference unifier working directly on term ASTs by substitution
// composition, with the occur check always on. Deliberately naive;
// ground truth for property tests, not a competitor.

using OracleSubstitution = std::map<std::string, Term>;

enum class OracleFailure { Clash, Occurs };

struct OracleResult {
    std::optional<OracleSubstitution> mgu;
    std::optional<OracleFailure> failure;

    bool ok() const { return mgu.has_value(); }
};

OracleResult oracle_unify(const Term& x, const Term& y);

// Simultaneous replacement of every bound variable by its image.
// Expects an idempotent substitution (oracle results are).
Term apply_substitution(const OracleSubstitution& s, const Term& t);

// True iff the variable occurs anywhere in t.
bool occurs_in(std::string_view var, const Term& t);

// True iff s1 and s2 agree on (x, y) up to a consistent bijective
// renaming of free variables, checked by a simultaneous walk over the
// applied terms that builds the bijection both ways.
bool equivalent_mgus(const OracleSubstitution& s1, const OracleSubstitution& s2,
                     const Term& x, const Term& y);

}  // namespace ut

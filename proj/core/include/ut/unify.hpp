#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ut/table.hpp"
#include "ut/term.hpp"

namespace ut {

//
// Two-stack unification over a built table. The loop pops an index pair
// (i from Sx, j from Sy) each iteration and dispatches on the entry
// kinds:
//
//   STR/STR   functor and arity must match, else clash; on a match the
//             component lists are pushed onto the stacks in the same
//             positional order so popped pairs stay argument-aligned
//   STR/VAR   free variable: bind it to the structure; bound variable:
//             dereference and either re-enter STR/STR or bind the free
//             representative
//   VAR/STR   symmetric
//   VAR/VAR   free/free and free/bound bind the free side; bound/bound
//             pushes both full dereferences back for the next iteration
//
// Every bind marks the variable, and the marked set is exactly the
// domain of the extracted substitution. Bindings are never overwritten
// within one run; there is no trail.
//

// Per-entry binding slots plus the MGU mark array. STR entries stay
// permanently free; only bind() below writes to a store.
class BindingStore {
public:
    explicit BindingStore(std::size_t entry_count)
        : binding_(entry_count, kFree), mark_(entry_count, false) {}

    std::size_t size() const { return binding_.size(); }

    bool is_free(std::size_t i) const { return binding_.at(i) == kFree; }

    // Target entry index of a bound slot.
    std::size_t target(std::size_t i) const;

    bool marked(std::size_t i) const { return mark_.at(i); }

private:
    friend void bind(const UnificationTable& t, BindingStore& b,
                     std::size_t var_index, std::size_t target_index, bool mark);

    static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

    std::vector<std::size_t> binding_;
    std::vector<bool> mark_;
};

struct UnifyConfig {
    bool occur_check = false;
    std::size_t print_depth_limit = 10;  // must be >= 1
};

// Functor name or arity mismatch between the two popped entries.
struct Clash {
    std::size_t left;   // index popped from Sx
    std::size_t right;  // index popped from Sy
};

// Occur-check mode only: the variable occurs inside the structure it
// would have been bound to.
struct OccurViolation {
    std::size_t var;
    std::size_t term;
};

using FailureCause = std::variant<Clash, OccurViolation>;

struct SubstitutionEntry {
    std::string name;  // variable name
    Term value;        // resolved binding, possibly containing "..." elisions
    bool truncated;    // true when the depth guard fired while resolving
};

// Resolved variable -> term map in table index order of the variables.
struct Substitution {
    std::vector<SubstitutionEntry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    const SubstitutionEntry* find(std::string_view name) const;
    bool any_truncated() const;
};

// One "Var=term" line per entry, newline-terminated.
std::string to_text(const Substitution& s);

class UnifyOutcome {
public:
    static UnifyOutcome success(Substitution s) { return UnifyOutcome(std::move(s)); }
    static UnifyOutcome failure(FailureCause c) { return UnifyOutcome(std::move(c)); }

    bool ok() const { return std::holds_alternative<Substitution>(value_); }
    const Substitution& mgu() const { return std::get<Substitution>(value_); }
    const FailureCause& cause() const { return std::get<FailureCause>(value_); }

private:
    explicit UnifyOutcome(std::variant<Substitution, FailureCause> v)
        : value_(std::move(v)) {}

    std::variant<Substitution, FailureCause> value_;
};

// Follows binding slots from i while the current entry is a bound
// variable; returns the first STR entry or free VAR entry reached.
// Throws std::logic_error if the walk cannot terminate (a binding
// cycle, impossible for stores produced by this module).
std::size_t dereference(const UnificationTable& t, const BindingStore& b,
                        std::size_t i);

// Binds the free variable entry var_index to target_index and records
// the MGU mark. Preconditions (VAR kind, free slot, distinct indexes)
// are internal invariants; violations throw std::logic_error.
void bind(const UnificationTable& t, BindingStore& b, std::size_t var_index,
          std::size_t target_index, bool mark);

// True iff var_index is reachable from term_index through component
// lists and bound variables. Iterative worklist with a visited set, so
// shared structure and cyclic stores are safe.
bool occurs(const UnificationTable& t, const BindingStore& b,
            std::size_t var_index, std::size_t term_index);

struct ResolvedTerm {
    Term term;
    bool truncated;
};

// Rebuilds the term at entry `index` with every variable dereferenced
// and expanded. Free variables render as themselves. Expansion beyond
// depth_limit levels renders as the constant "..." and sets truncated;
// the marker is outside the parseable alphabet, so it can never collide
// with a real constant. Total even on cyclic stores.
ResolvedTerm resolve(const UnificationTable& t, const BindingStore& b,
                     std::size_t index, std::size_t depth_limit);

// Substitution for every marked variable, in table index order,
// resolved at cfg.print_depth_limit.
Substitution extract_mgu(const UnificationTable& t, const BindingStore& b,
                         const UnifyConfig& cfg = {});

// Runs the two-stack loop over a caller-provided store. Returns the
// failure cause, or nullopt on success (the store then holds the
// bindings and marks). The loop checks |Sx| == |Sy| every iteration and
// enforces an iteration ceiling of size()^2; either tripping is a
// std::logic_error.
std::optional<FailureCause> unify_into(const UnificationTable& t,
                                       BindingStore& b, std::size_t ix,
                                       std::size_t iy,
                                       const UnifyConfig& cfg = {});

// unify_into over a fresh store, plus MGU extraction on success.
UnifyOutcome unify(const UnificationTable& t, std::size_t ix, std::size_t iy,
                   const UnifyConfig& cfg = {});

// Convenience: build the table for (x, y) and unify the two roots,
// seeding Sx with y's root as build order dictates.
UnifyOutcome unify_terms(const Term& x, const Term& y,
                         const UnifyConfig& cfg = {});

}  // namespace ut

#include "ut/unify.hpp"

#include <stdexcept>
#include <utility>

#include "ut/printer.hpp"

namespace ut {

namespace {

constexpr std::string_view kEllipsis = "...";

void require(bool condition, const char* what) {
    if (!condition) throw std::logic_error(what);
}

}  // namespace

std::size_t BindingStore::target(std::size_t i) const {
    const std::size_t t = binding_.at(i);
    require(t != kFree, "BindingStore::target on a free slot");
    return t;
}

const SubstitutionEntry* Substitution::find(std::string_view name) const {
    for (const SubstitutionEntry& e : entries) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

bool Substitution::any_truncated() const {
    for (const SubstitutionEntry& e : entries) {
        if (e.truncated) return true;
    }
    return false;
}

std::string to_text(const Substitution& s) {
    std::string out;
    for (const SubstitutionEntry& e : s.entries) {
        out += e.name;
        out += '=';
        out += print_term(e.value);
        out += '\n';
    }
    return out;
}

std::size_t dereference(const UnificationTable& t, const BindingStore& b,
                        std::size_t i) {
    std::size_t current = t.entry(i).index;
    std::size_t steps = 0;
    while (t.entry(current).kind == EntryKind::Var && !b.is_free(current)) {
        current = b.target(current);
        // More steps than entries means some index repeated.
        require(++steps <= t.size(), "dereference: binding cycle");
    }
    return current;
}

void bind(const UnificationTable& t, BindingStore& b, std::size_t var_index,
          std::size_t target_index, bool mark) {
    require(t.entry(var_index).kind == EntryKind::Var,
            "bind: entry is not a variable");
    require(target_index < t.size(), "bind: target out of range");
    require(var_index != target_index, "bind: variable bound to itself");
    require(b.is_free(var_index), "bind: slot already bound");
    b.binding_[var_index] = target_index;
    if (mark) b.mark_[var_index] = true;
}

bool occurs(const UnificationTable& t, const BindingStore& b,
            std::size_t var_index, std::size_t term_index) {
    require(t.entry(var_index).kind == EntryKind::Var,
            "occurs: entry is not a variable");
    std::vector<std::size_t> work{t.entry(term_index).index};
    std::vector<bool> visited(t.size(), false);
    while (!work.empty()) {
        const std::size_t i = work.back();
        work.pop_back();
        if (i == var_index) return true;
        if (visited[i]) continue;
        visited[i] = true;
        const UtEntry& e = t.entry(i);
        if (e.kind == EntryKind::Str) {
            for (std::size_t c : e.components) work.push_back(c);
        } else if (!b.is_free(i)) {
            work.push_back(b.target(i));
        }
    }
    return false;
}

ResolvedTerm resolve(const UnificationTable& t, const BindingStore& b,
                     std::size_t index, std::size_t depth_limit) {
    if (depth_limit == 0) {
        throw std::invalid_argument("resolve: depth_limit must be >= 1");
    }
    bool truncated = false;

    // Either a finished term (leaf or elision) or the dereferenced STR
    // entry that still needs its components expanded.
    auto expand = [&](std::size_t i,
                      std::size_t depth) -> std::variant<Term, std::size_t> {
        if (depth > depth_limit) {
            truncated = true;
            return Term::constant(std::string(kEllipsis));
        }
        const std::size_t d = dereference(t, b, i);
        const UtEntry& e = t.entry(d);
        if (e.kind == EntryKind::Var) return Term::variable(e.functor);
        if (e.arity == 0) return Term::constant(e.functor);
        return d;
    };

    auto first = expand(index, 1);
    if (Term* leaf = std::get_if<Term>(&first)) {
        return {std::move(*leaf), truncated};
    }

    struct Frame {
        std::size_t entry;
        std::size_t depth;
        std::vector<Term> args;
    };
    std::vector<Frame> stack;
    stack.push_back({std::get<std::size_t>(first), 1, {}});
    for (;;) {
        Frame& top = stack.back();
        const UtEntry& e = t.entry(top.entry);
        if (top.args.size() < e.arity) {
            auto next = expand(e.components[top.args.size()], top.depth + 1);
            if (Term* leaf = std::get_if<Term>(&next)) {
                top.args.push_back(std::move(*leaf));
            } else {
                stack.push_back({std::get<std::size_t>(next), top.depth + 1, {}});
            }
        } else {
            Term done = Term::compound(e.functor, std::move(top.args));
            stack.pop_back();
            if (stack.empty()) return {std::move(done), truncated};
            stack.back().args.push_back(std::move(done));
        }
    }
}

Substitution extract_mgu(const UnificationTable& t, const BindingStore& b,
                         const UnifyConfig& cfg) {
    Substitution s;
    for (const UtEntry& e : t.entries()) {
        if (!b.marked(e.index)) continue;
        ResolvedTerm r = resolve(t, b, e.index, cfg.print_depth_limit);
        s.entries.push_back({e.functor, std::move(r.term), r.truncated});
    }
    return s;
}

std::optional<FailureCause> unify_into(const UnificationTable& t,
                                       BindingStore& b, std::size_t ix,
                                       std::size_t iy, const UnifyConfig& cfg) {
    require(ix < t.size() && iy < t.size(), "unify: root index out of range");
    require(b.size() == t.size(), "unify: store size does not match table");
    if (cfg.print_depth_limit == 0) {
        throw std::invalid_argument("unify: print_depth_limit must be >= 1");
    }

    std::vector<std::size_t> sx{ix};
    std::vector<std::size_t> sy{iy};
    const std::size_t ceiling = t.size() * t.size() + 16;
    std::size_t iterations = 0;

    // Occur check happens at bind time: whenever a variable is about to
    // become (transitively) bound to a structure.
    auto bind_checked = [&](std::size_t var_i,
                            std::size_t target_j) -> std::optional<FailureCause> {
        if (cfg.occur_check) {
            const std::size_t d = dereference(t, b, target_j);
            if (t.entry(d).kind == EntryKind::Str && occurs(t, b, var_i, d)) {
                return FailureCause(OccurViolation{var_i, d});
            }
        }
        bind(t, b, var_i, target_j, /*mark=*/true);
        return std::nullopt;
    };

    while (!sx.empty() && !sy.empty()) {
        require(++iterations <= ceiling, "unify: iteration ceiling exceeded");
        const std::size_t i = sx.back();
        sx.pop_back();
        const std::size_t j = sy.back();
        sy.pop_back();
        if (i == j) continue;  // identical entries are trivially consistent

        const UtEntry& ei = t.entry(i);
        const UtEntry& ej = t.entry(j);
        const bool i_str = ei.kind == EntryKind::Str;
        const bool j_str = ej.kind == EntryKind::Str;

        if (i_str && j_str) {
            if (ei.functor != ej.functor || ei.arity != ej.arity) {
                return FailureCause(Clash{i, j});
            }
            for (std::size_t k = 0; k < ei.arity; ++k) {
                sx.push_back(ei.components[k]);
                sy.push_back(ej.components[k]);
            }
        } else if (i_str) {  // STR / VAR
            if (b.is_free(j)) {
                if (auto fail = bind_checked(j, i)) return fail;
            } else {
                const std::size_t dj = dereference(t, b, j);
                if (t.entry(dj).kind == EntryKind::Str) {
                    sx.push_back(i);
                    sy.push_back(dj);
                } else if (auto fail = bind_checked(dj, i)) {
                    return fail;
                }
            }
        } else if (j_str) {  // VAR / STR
            if (b.is_free(i)) {
                if (auto fail = bind_checked(i, j)) return fail;
            } else {
                const std::size_t di = dereference(t, b, i);
                if (t.entry(di).kind == EntryKind::Str) {
                    sx.push_back(di);
                    sy.push_back(j);
                } else if (auto fail = bind_checked(di, j)) {
                    return fail;
                }
            }
        } else {  // VAR / VAR
            const bool i_free = b.is_free(i);
            const bool j_free = b.is_free(j);
            if (i_free && j_free) {
                bind(t, b, i, j, /*mark=*/true);
            } else if (i_free) {
                // Skip when j's chain already ends at i, else binding i
                // would close a variable cycle.
                if (dereference(t, b, j) != i) {
                    if (auto fail = bind_checked(i, j)) return fail;
                }
            } else if (j_free) {
                if (dereference(t, b, i) != j) {
                    if (auto fail = bind_checked(j, i)) return fail;
                }
            } else {
                sx.push_back(dereference(t, b, i));
                sy.push_back(dereference(t, b, j));
            }
        }
        require(sx.size() == sy.size(), "unify: stack sizes diverged");
    }
    require(sx.empty() && sy.empty(), "unify: stacks did not empty together");
    return std::nullopt;
}

UnifyOutcome unify(const UnificationTable& t, std::size_t ix, std::size_t iy,
                   const UnifyConfig& cfg) {
    BindingStore store(t.size());
    if (auto fail = unify_into(t, store, ix, iy, cfg)) {
        return UnifyOutcome::failure(std::move(*fail));
    }
    return UnifyOutcome::success(extract_mgu(t, store, cfg));
}

UnifyOutcome unify_terms(const Term& x, const Term& y, const UnifyConfig& cfg) {
    const UnificationTable table = build_table(x, y);
    return unify(table, table.root_y(), table.root_x(), cfg);
}

}  // namespace ut

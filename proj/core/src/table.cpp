#include "ut/table.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "ut/printer.hpp"

namespace ut {

std::string_view to_string(EntryKind kind) {
    return kind == EntryKind::Var ? "VAR" : "STR";
}

namespace {

class TableBuilder {
public:
    // Appends all subterm entries of t, children before parents,
    // visiting arguments right to left. Returns the root entry index.
    std::size_t flatten(const Term& t) {
        if (!t.is_compound()) return leaf_index(t);

        std::vector<Frame> stack;
        stack.push_back(make_frame(t));
        for (;;) {
            Frame& top = stack.back();
            if (top.cursor >= 0) {
                const Term& child = top.node->args()[static_cast<std::size_t>(top.cursor)];
                --top.cursor;
                if (child.is_compound()) {
                    stack.push_back(make_frame(child));
                } else {
                    top.components[static_cast<std::size_t>(top.cursor) + 1] =
                        leaf_index(child);
                }
            } else {
                const std::size_t index = append(EntryKind::Str, top.node->name(),
                                                 std::move(top.components));
                stack.pop_back();
                if (stack.empty()) return index;
                Frame& parent = stack.back();
                parent.components[static_cast<std::size_t>(parent.cursor) + 1] = index;
            }
        }
    }

    std::vector<UtEntry> entries;
    std::unordered_map<std::string, std::size_t> var_index;

private:
    struct Frame {
        const Term* node;
        // Next argument to visit, counting down; -1 when all done.
        int cursor;
        std::vector<std::size_t> components;
    };

    Frame make_frame(const Term& t) {
        return Frame{&t, static_cast<int>(t.arity()) - 1,
                     std::vector<std::size_t>(t.arity())};
    }

    std::size_t leaf_index(const Term& t) {
        if (t.is_variable()) {
            auto [it, inserted] = var_index.try_emplace(t.name(), entries.size());
            if (inserted) append(EntryKind::Var, t.name(), {});
            return it->second;
        }
        return append(EntryKind::Str, t.name(), {});
    }

    std::size_t append(EntryKind kind, const std::string& functor,
                       std::vector<std::size_t> components) {
        const std::size_t index = entries.size();
        const std::size_t arity = components.size();
        entries.push_back({index, functor, kind, arity, std::move(components)});
        return index;
    }
};

}  // namespace

UnificationTable build_table(const Term& x, const Term& y) {
    TableBuilder builder;
    UnificationTable table;
    table.root_y_ = builder.flatten(y);
    table.root_x_ = builder.flatten(x);
    table.entries_ = std::move(builder.entries);
    table.var_index_ = std::move(builder.var_index);
    return table;
}

Term UnificationTable::reconstruct(std::size_t index) const {
    if (index >= entries_.size()) {
        throw std::out_of_range("reconstruct: entry index out of range");
    }
    // children-first ordering: every entry <= index can be built from
    // already-built smaller indexes.
    std::vector<std::optional<Term>> built(index + 1);
    for (std::size_t i = 0; i <= index; ++i) {
        const UtEntry& e = entries_[i];
        if (e.kind == EntryKind::Var) {
            built[i] = Term::variable(e.functor);
        } else if (e.arity == 0) {
            built[i] = Term::constant(e.functor);
        } else {
            std::vector<Term> args;
            args.reserve(e.arity);
            for (std::size_t c : e.components) args.push_back(*built[c]);
            built[i] = Term::compound(e.functor, std::move(args));
        }
    }
    return std::move(*built[index]);
}

std::vector<TableRow> table_to_rows(const UnificationTable& t) {
    std::vector<TableRow> rows;
    rows.reserve(t.size());
    for (const UtEntry& e : t.entries()) {
        rows.push_back({print_term(t.reconstruct(e.index)), e.index, e.functor,
                        e.kind, e.arity, e.components});
    }
    return rows;
}

std::string table_to_tsv(const UnificationTable& t) {
    std::string out;
    for (const TableRow& row : table_to_rows(t)) {
        out += std::to_string(row.index);
        out += '\t';
        out += row.functor;
        out += '\t';
        out += to_string(row.kind);
        out += '\t';
        out += std::to_string(row.arity);
        out += '\t';
        for (std::size_t k = 0; k < row.components.size(); ++k) {
            if (k != 0) out += ' ';
            out += std::to_string(row.components[k]);
        }
        out += '\t';
        out += row.term;
        out += '\n';
    }
    return out;
}

}  // namespace ut

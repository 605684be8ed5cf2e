#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ut/term.hpp"

namespace ut {

//
// Flattened term representation. Both input terms are decomposed into
// one table entry per subterm occurrence:
//
//   kind VAR, arity 0   variable (one entry per distinct name, shared
//                       across both terms)
//   kind STR, arity 0   constant (one entry per occurrence, duplicates
//                       are never merged)
//   kind STR, arity n   compound term; `components` holds the entry
//                       indexes of its n arguments in left-to-right
//                       argument order
//
// Entries are appended children-first, so every component index is
// strictly smaller than the index of the entry that references it.
// The second term (y) is flattened before the first (x), and each
// term's arguments are visited right to left.
//

enum class EntryKind { Var, Str };

std::string_view to_string(EntryKind kind);  // "VAR" / "STR"

struct UtEntry {
    std::size_t index;
    std::string functor;  // variable name, constant name, or main functor
    EntryKind kind;
    std::size_t arity;    // always components.size()
    std::vector<std::size_t> components;
};

class UnificationTable {
public:
    const std::vector<UtEntry>& entries() const { return entries_; }
    const UtEntry& entry(std::size_t i) const { return entries_.at(i); }
    std::size_t size() const { return entries_.size(); }

    std::size_t root_x() const { return root_x_; }
    std::size_t root_y() const { return root_y_; }

    // Variable name -> index of its unique VAR entry.
    const std::unordered_map<std::string, std::size_t>& var_index() const {
        return var_index_;
    }

    // Rebuilds the subterm rooted at entry `index` from the table alone.
    Term reconstruct(std::size_t index) const;

private:
    UnificationTable() = default;
    friend UnificationTable build_table(const Term& x, const Term& y);

    std::vector<UtEntry> entries_;
    std::unordered_map<std::string, std::size_t> var_index_;
    std::size_t root_x_ = 0;
    std::size_t root_y_ = 0;
};

// Flattens y, then x, into a fresh table. Total on well-formed terms.
UnificationTable build_table(const Term& x, const Term& y);

// One display row per entry, in index order. `term` is the subterm text
// reconstructed from the table, the column a write procedure would
// produce for the entry's index.
struct TableRow {
    std::string term;
    std::size_t index;
    std::string functor;
    EntryKind kind;
    std::size_t arity;
    std::vector<std::size_t> components;
};

std::vector<TableRow> table_to_rows(const UnificationTable& t);

// Tab-separated dump, one entry per line:
// index, functor, VAR|STR, arity, space-separated components (empty
// field if none), reconstructed term text.
std::string table_to_tsv(const UnificationTable& t);

}  // namespace ut

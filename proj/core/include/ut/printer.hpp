#pragma once

#include <string>

#include "ut/term.hpp"

namespace ut {

// Renders a term in the same syntax parse_term accepts, with no
// whitespace: parse_term(print_term(t)) == t. Iterative, so arbitrarily
// deep terms print without growing the call stack.
std::string print_term(const Term& t);

}  // namespace ut

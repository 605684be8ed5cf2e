#include "ut/printer.hpp"

#include <variant>
#include <vector>

namespace ut {

std::string print_term(const Term& t) {
    std::string out;
    using Item = std::variant<const Term*, char>;
    std::vector<Item> work;
    work.emplace_back(&t);
    while (!work.empty()) {
        const Item item = work.back();
        work.pop_back();
        if (const char* punct = std::get_if<char>(&item)) {
            out.push_back(*punct);
            continue;
        }
        const Term* term = std::get<const Term*>(item);
        out += term->name();
        if (term->is_compound()) {
            out.push_back('(');
            work.emplace_back(')');
            const auto& args = term->args();
            for (std::size_t k = args.size(); k-- > 0;) {
                work.emplace_back(&args[k]);
                if (k != 0) work.emplace_back(',');
            }
        }
    }
    return out;
}

}  // namespace ut

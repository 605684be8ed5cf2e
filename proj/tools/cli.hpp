#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ut::cli {

enum class OutputFormat { Text, Json };

struct CliConfig {
    std::string term_x;
    std::string term_y;
    bool show_table = false;
    bool occur_check = false;
    std::size_t depth_limit = 10;
    OutputFormat output_format = OutputFormat::Text;
};

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUnifyFailure = 1;
inline constexpr int kExitUsage = 2;

// Full ut-unify run: parse flags and terms, build the table, unify, and
// render. `args` excludes the program name. A term given as "-" is read
// from `in`, one term per line, x before y when both are "-".
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace ut::cli

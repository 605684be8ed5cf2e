#include "cli.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "ut/parser.hpp"
#include "ut/printer.hpp"
#include "ut/table.hpp"
#include "ut/unify.hpp"

namespace ut::cli {

namespace {

constexpr const char* kProgram = "ut-unify";

// Commits to a config, or to an early exit code (help, usage errors).
struct ParsedArgs {
    CliConfig config;
    std::optional<int> exit_code;
};

ParsedArgs parse_args(std::vector<std::string> args, std::ostream& out,
                      std::ostream& err) {
    ParsedArgs parsed;
    CLI::App app{"Unify two first-order terms over a flattened term table",
                 kProgram};
    app.add_flag("--table", parsed.config.show_table,
                 "Print the term table before the result");
    app.add_flag("--occur-check", parsed.config.occur_check,
                 "Fail instead of building cyclic bindings");
    app.add_option("--depth", parsed.config.depth_limit,
                   "Depth limit when printing resolved terms")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag_callback(
        "--json",
        [&parsed] { parsed.config.output_format = OutputFormat::Json; },
        "Emit a JSON object");
    app.add_option("term-x", parsed.config.term_x, "First term, or - for stdin")
        ->required();
    app.add_option("term-y", parsed.config.term_y, "Second term, or - for stdin")
        ->required();

    try {
        std::reverse(args.begin(), args.end());  // CLI11 wants argv reversed
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        parsed.exit_code = kExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << kProgram << ": " << e.what() << "\n";
        parsed.exit_code = kExitUsage;
    }
    return parsed;
}

bool read_stdin_term(std::istream& in, const char* label, std::string& dest,
                     std::ostream& err) {
    std::string line;
    if (!std::getline(in, line)) {
        err << kProgram << ": missing " << label << " on standard input\n";
        return false;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    dest = std::move(line);
    return true;
}

std::string_view cause_name(const FailureCause& cause) {
    return std::holds_alternative<Clash>(cause) ? "clash" : "occur-check";
}

nlohmann::ordered_json table_json(const UnificationTable& table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const TableRow& row : table_to_rows(table)) {
        rows.push_back({{"index", row.index},
                        {"functor", row.functor},
                        {"kind", to_string(row.kind)},
                        {"arity", row.arity},
                        {"components", row.components},
                        {"term", row.term}});
    }
    return rows;
}

void write_json(const CliConfig& cfg, const UnificationTable& table,
                const UnifyOutcome& outcome, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["result"] = outcome.ok() ? "success" : "fail";
    nlohmann::ordered_json mgu = nlohmann::ordered_json::object();
    bool truncated = false;
    if (outcome.ok()) {
        for (const SubstitutionEntry& e : outcome.mgu().entries) {
            mgu[e.name] = print_term(e.value);
        }
        truncated = outcome.mgu().any_truncated();
    }
    doc["mgu"] = std::move(mgu);
    doc["truncated"] = truncated;
    if (cfg.show_table) doc["table"] = table_json(table);
    if (!outcome.ok()) doc["cause"] = cause_name(outcome.cause());
    out << doc.dump(2) << "\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    ParsedArgs parsed = parse_args(std::move(args), out, err);
    if (parsed.exit_code) return *parsed.exit_code;
    CliConfig& cfg = parsed.config;

    if (cfg.term_x == "-" && !read_stdin_term(in, "term-x", cfg.term_x, err)) {
        return kExitUsage;
    }
    if (cfg.term_y == "-" && !read_stdin_term(in, "term-y", cfg.term_y, err)) {
        return kExitUsage;
    }

    std::optional<Term> x;
    std::optional<Term> y;
    try {
        x = parse_term(cfg.term_x);
    } catch (const ParseError& e) {
        err << kProgram << ": term-x: parse error at " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        y = parse_term(cfg.term_y);
    } catch (const ParseError& e) {
        err << kProgram << ": term-y: parse error at " << e.what() << "\n";
        return kExitUsage;
    }

    const UnificationTable table = build_table(*x, *y);
    const UnifyConfig unify_cfg{cfg.occur_check, cfg.depth_limit};
    const UnifyOutcome outcome =
        unify(table, table.root_y(), table.root_x(), unify_cfg);

    if (cfg.output_format == OutputFormat::Json) {
        write_json(cfg, table, outcome, out);
    } else {
        if (cfg.show_table) out << table_to_tsv(table);
        if (outcome.ok()) {
            out << to_text(outcome.mgu());
        } else {
            out << "fail: " << cause_name(outcome.cause()) << "\n";
        }
    }
    return outcome.ok() ? kExitSuccess : kExitUnifyFailure;
}

}  // namespace ut::cli

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "support/generators.hpp"
#include "ut/oracle.hpp"
#include "ut/parser.hpp"
#include "ut/printer.hpp"
#include "ut/table.hpp"
#include "ut/unify.hpp"

using namespace ut;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
    bool pass = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }

    void note(const std::string& info) {
        if (!detail.empty()) detail += "; ";
        detail += info;
    }
};

int g_failures = 0;

void criterion(const std::string& name, const std::function<void(Check&)>& body) {
    Check check;
    const auto start = Clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.expect(false, std::string("exception: ") + e.what());
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    std::printf("%s  %-20s %6lld ms%s%s\n", check.pass ? "PASS" : "FAIL",
                name.c_str(), static_cast<long long>(elapsed.count()),
                check.detail.empty() ? "" : "  -- ", check.detail.c_str());
    if (!check.pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

UnificationTable worked_table() {
    return build_table(parse_term("p(Z,h(Z,W),f(W))"),
                       parse_term("p(f(X),h(Y,f(a)),Y)"));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open()) throw std::runtime_error("cannot open " + path);
    std::ostringstream contents;
    contents << in.rdbuf();
    return contents.str();
}

std::size_t count_nested(const Term& t, const std::string& functor) {
    std::size_t n = 0;
    const Term* cur = &t;
    while (cur->is_compound() && cur->name() == functor) {
        ++n;
        cur = &cur->args()[0];
    }
    return n;
}

Term chain(std::size_t n) {
    Term t = Term::constant("a");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> arg;
        arg.push_back(std::move(t));  // initializer lists would deep-copy
        t = Term::compound("f", std::move(arg));
    }
    return t;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli_args(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

// Shared between criteria 3 and 4: the balance / termination guards
// inside the loop raise logic_error, so one oracle-equivalence run
// also certifies the stacks stayed level.
struct PropertyRunStats {
    bool ran = false;
    std::size_t pairs = 0;
    std::size_t successes = 0;
    std::size_t clashes = 0;
    std::size_t occur_violations = 0;
    std::size_t disagreements = 0;
    std::size_t inequivalent = 0;
    std::size_t guard_trips = 0;
    double seconds = 0.0;
};

PropertyRunStats g_property;

void run_property_corpus() {
    const auto start = Clock::now();
    testing::TermGenerator gen(20240817);
    g_property.ran = true;
    for (g_property.pairs = 0; g_property.pairs < 10'000; ++g_property.pairs) {
        const auto [x, y] = gen.pair();
        const UnificationTable t = build_table(x, y);
        const UnifyConfig cfg{true, t.size() + 2};
        const OracleResult reference = oracle_unify(x, y);
        bool engine_ok = false;
        try {
            const UnifyOutcome engine = unify(t, t.root_y(), t.root_x(), cfg);
            engine_ok = engine.ok();
            if (engine.ok() != reference.ok()) {
                ++g_property.disagreements;
            } else if (engine.ok()) {
                ++g_property.successes;
                OracleSubstitution engine_map;
                for (const SubstitutionEntry& e : engine.mgu().entries) {
                    engine_map.emplace(e.name, e.value);
                }
                const bool engine_unifies = apply_substitution(engine_map, x) ==
                                            apply_substitution(engine_map, y);
                const bool oracle_unifies = apply_substitution(*reference.mgu, x) ==
                                            apply_substitution(*reference.mgu, y);
                const bool equivalent =
                    equivalent_mgus(engine_map, *reference.mgu, x, y);
                if (!engine_unifies || !oracle_unifies || !equivalent ||
                    engine.mgu().any_truncated()) {
                    ++g_property.inequivalent;
                }
            }
        } catch (const std::logic_error&) {
            ++g_property.guard_trips;
        }
        if (!engine_ok && reference.ok() == false) {
            if (reference.failure == OracleFailure::Clash) {
                ++g_property.clashes;
            } else {
                ++g_property.occur_violations;
            }
        }
    }
    g_property.seconds = seconds_since(start);
}

}  // namespace

int main() {
    criterion("golden-table", [](Check& c) {
        const auto start = Clock::now();
        const UnificationTable t = worked_table();
        const std::string golden =
            read_file(std::string(UNITABLE_TEST_DATA_DIR) + "/golden_table.tsv");
        c.expect(t.size() == 12, "expected 12 entries");
        c.expect(table_to_tsv(t) == golden, "TSV dump differs from golden file");
        c.expect(seconds_since(start) < 1.0, "exceeded 1 s");
    });

    criterion("golden-mgu", [](Check& c) {
        const auto start = Clock::now();
        const UnificationTable t = worked_table();
        const UnifyOutcome outcome = unify(t, 6, 11);
        c.expect(outcome.ok(), "unify failed");
        if (outcome.ok()) {
            c.expect(to_text(outcome.mgu()) ==
                         "Y=f(f(a))\nX=f(a)\nW=f(a)\nZ=f(f(a))\n",
                     "substitution differs");
        }
        c.expect(seconds_since(start) < 1.0, "exceeded 1 s");
    });

    criterion("oracle-equivalence", [](Check& c) {
        run_property_corpus();
        c.expect(g_property.pairs == 10'000, "short run");
        c.expect(g_property.disagreements == 0, "success/failure disagreement");
        c.expect(g_property.inequivalent == 0, "substitutions not equivalent");
        c.expect(g_property.seconds < 60.0, "exceeded 60 s");
        c.note("pairs=" + std::to_string(g_property.pairs) +
               " success=" + std::to_string(g_property.successes) +
               " clash=" + std::to_string(g_property.clashes) +
               " occur=" + std::to_string(g_property.occur_violations));
    });

    criterion("stack-balance", [](Check& c) {
        c.expect(g_property.ran, "property corpus did not run");
        c.expect(g_property.guard_trips == 0,
                 "balance/termination guard fired " +
                     std::to_string(g_property.guard_trips) + " times");
        c.note("|Sx|=|Sy| checked every iteration of " +
               std::to_string(g_property.pairs) + " runs");
    });

    criterion("cyclic-safety", [](Check& c) {
        const auto start = Clock::now();
        const Term x = parse_term("f(X)");
        const Term y = parse_term("X");
        const UnifyOutcome loose = unify_terms(x, y);
        c.expect(loose.ok(), "expected success without occur check");
        if (loose.ok()) {
            const SubstitutionEntry* entry = loose.mgu().find("X");
            c.expect(entry != nullptr, "X missing from substitution");
            if (entry) {
                c.expect(entry->truncated, "truncation flag not set");
                c.expect(count_nested(entry->value, "f") == 10,
                         "expected exactly 10 levels at default depth");
            }
        }
        const UnifyOutcome strict = unify_terms(x, y, {.occur_check = true});
        c.expect(!strict.ok(), "occur check did not fail");
        if (!strict.ok()) {
            c.expect(std::holds_alternative<OccurViolation>(strict.cause()),
                     "expected an occur violation cause");
        }
        c.expect(seconds_since(start) < 1.0, "exceeded 1 s");
    });

    criterion("parser-round-trip", [](Check& c) {
        testing::TermGenerator gen(4242, {.max_depth = 6, .max_arity = 4});
        std::size_t failures = 0;
        for (int iter = 0; iter < 10'000; ++iter) {
            const Term t = gen.term();
            if (parse_term(print_term(t)) != t) ++failures;
        }
        c.expect(failures == 0, std::to_string(failures) + " round-trip failures");
        c.note("terms=10000");
    });

    criterion("cli-contract", [](Check& c) {
        const CliRun worked =
            run_cli_args({"p(Z,h(Z,W),f(W))", "p(f(X),h(Y,f(a)),Y)"});
        c.expect(worked.code == 0, "worked example exit code");
        c.expect(worked.out == "Y=f(f(a))\nX=f(a)\nW=f(a)\nZ=f(f(a))\n",
                 "worked example text output");

        c.expect(run_cli_args({"f(a)", "f(b)"}).code == 1, "clash exit code");
        c.expect(run_cli_args({"f(X", "a"}).code == 2, "parse error exit code");
        c.expect(run_cli_args({"only-one"}).code == 2, "usage exit code");

        const CliRun json_run = run_cli_args(
            {"--json", "--table", "p(Z,h(Z,W),f(W))", "p(f(X),h(Y,f(a)),Y)"});
        bool json_ok = true;
        try {
            const nlohmann::json doc = nlohmann::json::parse(json_run.out);
            json_ok = doc.at("result") == "success" && doc.at("mgu").size() == 4 &&
                      doc.at("table").size() == 12 &&
                      doc.at("truncated") == false;
        } catch (const std::exception&) {
            json_ok = false;
        }
        c.expect(json_ok, "JSON output malformed");
    });

    criterion("perf-chain-10k", [](Check& c) {
        const Term left = chain(10'000);
        const Term right = chain(10'000);
        const auto start = Clock::now();
        const UnifyOutcome outcome = unify_terms(left, right);
        const double elapsed = seconds_since(start);
        c.expect(outcome.ok(), "chains did not unify");
        if (outcome.ok()) c.expect(outcome.mgu().empty(), "expected empty MGU");
        c.expect(elapsed < 1.0, "exceeded 1 s");
        c.note("depth=10000");
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}

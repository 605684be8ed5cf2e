#include <benchmark/benchmark.h>

#include <string>
#include <utility>

#include "ut/parser.hpp"
#include "ut/table.hpp"
#include "ut/unify.hpp"

namespace {

ut::Term chain(std::size_t n) {
    ut::Term t = ut::Term::constant("a");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<ut::Term> arg;
        arg.push_back(std::move(t));  // initializer lists would deep-copy
        t = ut::Term::compound("f", std::move(arg));
    }
    return t;
}

std::string chain_text(std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) out += "f(";
    out += "a";
    out.append(n, ')');
    return out;
}

void BM_ParseChain(benchmark::State& state) {
    const std::string text = chain_text(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ut::parse_term(text));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ParseChain)->Range(64, 8192)->Complexity(benchmark::oN);

void BM_BuildTableChain(benchmark::State& state) {
    const ut::Term left = chain(static_cast<std::size_t>(state.range(0)));
    const ut::Term right = chain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ut::build_table(left, right));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTableChain)->Range(64, 8192)->Complexity(benchmark::oN);

void BM_UnifyChain(benchmark::State& state) {
    const ut::Term left = chain(static_cast<std::size_t>(state.range(0)));
    const ut::Term right = chain(static_cast<std::size_t>(state.range(0)));
    const ut::UnificationTable table = ut::build_table(left, right);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ut::unify(table, table.root_y(), table.root_x()));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_UnifyChain)->Range(64, 8192)->Complexity(benchmark::oN);

void BM_UnifyWorkedExample(benchmark::State& state) {
    const ut::UnificationTable table =
        ut::build_table(ut::parse_term("p(Z,h(Z,W),f(W))"),
                        ut::parse_term("p(f(X),h(Y,f(a)),Y)"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ut::unify(table, table.root_y(), table.root_x()));
    }
}
BENCHMARK(BM_UnifyWorkedExample);

}  // namespace

BENCHMARK_MAIN();

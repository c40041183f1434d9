/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */

#include <benchmark/benchmark.h>

#include "tres/clause.hpp"
#include "tres/formula.hpp"
#include "tres/graph.hpp"
#include "tres/prover.hpp"
#include "tres/resolution.hpp"
#include "tres/temporal.hpp"
#include "tres/translator.hpp"

#include <string>
#include <utility>
#include <vector>

namespace {

const std::string kInduction = "(F p & G (p -> X p)) -> F G p";

const std::string kStepRefutation = "start => f\n"
                                    "f => X x\n"
                                    "start => ~x | ~a | b\n"
                                    "true => X (~x | ~a | b)\n"
                                    "f => X a\n"
                                    "f => X ~b\n";

/// A ring of n step clauses p0 -> p1 -> ... -> p0, each state also forcing
/// q, so the loop search has to merge the whole ring for eventuality ~q.
std::vector<std::pair<std::size_t, tres::SnfClause>> ring_steps(int n) {
  std::vector<std::pair<std::size_t, tres::SnfClause>> steps;
  for (int i = 0; i < n; ++i) {
    const std::string from = "p" + std::to_string(i);
    const std::string to = "p" + std::to_string((i + 1) % n);
    steps.emplace_back(steps.size() + 1,
                       tres::SnfClause::step(
                           {tres::Literal{tres::PropSymbol{from}, true}},
                           {tres::Literal{tres::PropSymbol{to}, true}}));
    steps.emplace_back(steps.size() + 1,
                       tres::SnfClause::step(
                           {tres::Literal{tres::PropSymbol{from}, true}},
                           {tres::Literal{tres::PropSymbol{"q"}, true}}));
  }
  return steps;
}

void bm_parse_print(benchmark::State& state) {
  for (auto _ : state) {
    const tres::FormulaPtr f = tres::parse_formula(kInduction);
    benchmark::DoNotOptimize(tres::print_formula(f));
  }
}
BENCHMARK(bm_parse_print);

void bm_translate(benchmark::State& state) {
  const tres::FormulaPtr f =
      tres::push_negations(tres::negate(tres::parse_formula(kInduction)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tres::tau0(f));
  }
}
BENCHMARK(bm_translate);

void bm_saturate(benchmark::State& state) {
  const tres::ClauseSet cs = tres::parse_clause_set(kStepRefutation);
  for (auto _ : state) {
    tres::ResolutionEngine engine;
    for (const tres::SnfClause& clause : cs.clauses())
      engine.add_clause(clause, tres::RuleName::Given, {});
    benchmark::DoNotOptimize(engine.saturate());
  }
}
BENCHMARK(bm_saturate);

void bm_find_loops(benchmark::State& state) {
  const auto steps = ring_steps(static_cast<int>(state.range(0)));
  const tres::Literal ev{tres::PropSymbol{"q"}, false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tres::find_loops(steps, ev));
  }
}
BENCHMARK(bm_find_loops)->Arg(3)->Arg(5)->Arg(7);

void bm_behaviour_graph(benchmark::State& state) {
  const tres::AugmentedClauseSet aug = tres::augment(
      tres::tau0(tres::push_negations(
                     tres::negate(tres::parse_formula(kInduction))))
          .clauses);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tres::reduce_graph(tres::build_graph(aug.base)));
  }
}
BENCHMARK(bm_behaviour_graph);

void bm_prove_induction(benchmark::State& state) {
  const tres::FormulaPtr f = tres::parse_formula(kInduction);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tres::prove(f, tres::ProveMode::Validity));
  }
}
BENCHMARK(bm_prove_induction);

} // namespace

BENCHMARK_MAIN();

/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testsupport.hpp"
#include "tres/prover.hpp"

#include <string>
#include <vector>

using namespace tres;

namespace {

Verdict prove_text(const std::string& text, ProveMode mode,
                   const ProverLimits& limits = {}) {
  return prove(parse_formula(text), mode, limits);
}

} // namespace

TEST_CASE("fixed verdicts") {
  CHECK(prove_text("p", ProveMode::Satisfiability).status ==
        ProverStatus::Satisfiable);
  CHECK(prove_text("p & ~p", ProveMode::Satisfiability).status ==
        ProverStatus::Unsatisfiable);
  CHECK(prove_text("p -> p", ProveMode::Validity).status ==
        ProverStatus::Valid);
  CHECK(prove_text("p", ProveMode::Validity).status ==
        ProverStatus::NotValid);
  CHECK(prove_text("(p U q) -> F q", ProveMode::Validity).status ==
        ProverStatus::Valid);
  CHECK(prove_text("G p & F ~p", ProveMode::Satisfiability).status ==
        ProverStatus::Unsatisfiable);

  ClauseSet cs;
  cs.insert(SnfClause::initial({test::lit("p")}));
  CHECK(prove_clause_set(cs).status == ProverStatus::Satisfiable);
}

TEST_CASE("status labels") {
  CHECK(status_label(ProverStatus::Valid) == "valid");
  CHECK(status_label(ProverStatus::NotValid) == "not valid");
  CHECK(status_label(ProverStatus::Satisfiable) == "satisfiable");
  CHECK(status_label(ProverStatus::Unsatisfiable) == "unsatisfiable");
}

TEST_CASE("a refutation ends in the empty initial clause") {
  const std::vector<std::string> unsat{"p & ~p", "G p & F ~p",
                                       "p & X ~p & G (p <-> X p)"};
  for (const std::string& text : unsat) {
    const Verdict v = prove_text(text, ProveMode::Satisfiability);
    REQUIRE(v.status == ProverStatus::Unsatisfiable);
    REQUIRE_FALSE(v.trace.empty());
    CHECK(print_clause(v.trace.back().clause) == "start => false");
  }
}

TEST_CASE("the always-versus-eventually refutation cites one loop") {
  const Verdict v = prove_text("G a & F ~a", ProveMode::Satisfiability);
  REQUIRE(v.status == ProverStatus::Unsatisfiable);
  REQUIRE(v.loops.size() == 1);
  const LoopRecord& record = v.loops[0];
  CHECK(record.eventuality == test::lit("a", false));
  REQUIRE(record.loop_formula.size() == 1);
  REQUIRE(record.loop_formula[0].size() == 1);
  CHECK(record.loop_formula[0][0].positive);
  CHECK(record.members.size() == 2);
  CHECK(v.stats.loop_searches >= 1);
  CHECK(v.stats.temporal_resolvents > 0);
}

TEST_CASE("the induction example resolves two eventualities") {
  const Verdict v = prove_text("(F p & G (p -> X p)) -> F G p",
                               ProveMode::Validity);
  REQUIRE(v.status == ProverStatus::Valid);
  REQUIRE(v.loops.size() == 2);
  CHECK(v.loops[0].eventuality.positive !=
        v.loops[1].eventuality.positive);
  CHECK(v.stats.loop_searches >= 2);
}

TEST_CASE("statistics describe the run") {
  const Verdict v = prove_text("G (p -> X p) & p", ProveMode::Satisfiability);
  CHECK(v.status == ProverStatus::Satisfiable);
  CHECK(v.stats.clauses_recorded == v.trace.size());
  CHECK(v.stats.wall_seconds >= 0.0);
  CHECK(v.translation.input_len >= 1);
  CHECK(v.translation.clause_count <= 1 + 11 * v.translation.input_len);
}

TEST_CASE("clause-set inputs enter the trace as given") {
  ClauseSet cs = parse_clause_set("start => p\np => X q\n");
  const Verdict v = prove_clause_set(cs);
  REQUIRE(v.trace.size() >= 2);
  CHECK(v.trace[0].rule == RuleName::Given);
  CHECK(v.trace[1].rule == RuleName::Given);
  CHECK(v.translation.clause_count == 0);
}

TEST_CASE("proving twice yields byte-identical traces") {
  const std::vector<std::string> corpus{
      "p",
      "G a & F ~a",
      "(F p & G (p -> X p)) -> F G p",
      "(p U q) -> (q | (p & X (p U q)))",
      "G (p -> q) & p & G (q -> X p)",
  };
  for (const std::string& text : corpus) {
    for (ProveMode mode : {ProveMode::Satisfiability, ProveMode::Validity}) {
      const Verdict a = prove_text(text, mode);
      const Verdict b = prove_text(text, mode);
      CHECK(a.status == b.status);
      CHECK(print_trace(a.trace) == print_trace(b.trace));
    }
  }
}

TEST_CASE("cross-checking against the behaviour graph") {
  SUBCASE("fixed inputs") {
    const CrossCheckReport sat = cross_check(parse_formula("p"));
    CHECK(sat.agree);
    CHECK(sat.oracle_satisfiable);
    const CrossCheckReport unsat =
        cross_check(parse_formula("G a & F ~a"));
    CHECK(unsat.agree);
    CHECK_FALSE(unsat.oracle_satisfiable);
    const CrossCheckReport valid = cross_check(
        parse_formula("(p U q) -> F q"), ProveMode::Validity);
    CHECK(valid.agree);
    CHECK_FALSE(valid.oracle_satisfiable);
  }
  SUBCASE("random formulas") {
    test::Rng rng(20240901);
    const std::vector<std::string> props{"p", "q"};
    for (int i = 0; i < 60; ++i) {
      const FormulaPtr f = test::random_formula(rng, 6, props);
      CAPTURE(print_formula(f));
      const CrossCheckReport r = cross_check(f);
      CHECK(r.agree);
    }
  }
}

TEST_CASE("prover traces replay from their recorded parents") {
  test::Rng rng(20240902);
  const std::vector<std::string> props{"p", "q"};
  int replayed = 0;
  for (int i = 0; i < 40; ++i) {
    const FormulaPtr f = test::random_formula(rng, 7, props);
    const ProveMode mode =
        i % 2 == 0 ? ProveMode::Satisfiability : ProveMode::Validity;
    const Verdict v = prove(f, mode);
    const auto issues = test::replay(v, test::waiting_for(f, mode));
    CAPTURE(print_formula(f));
    for (const auto& issue : issues) {
      CAPTURE(issue.id);
      CAPTURE(issue.note);
      CHECK(false);
    }
    if (issues.empty()) ++replayed;
  }
  CHECK(replayed == 40);
}

TEST_CASE("resource caps surface as errors, not verdicts") {
  const ProverLimits tight{16, 2, 12};
  CHECK_THROWS_AS(prove_text("G a & F ~a", ProveMode::Satisfiability, tight),
                  ResourceLimitError);
}

/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testsupport.hpp"
#include "tres/clause.hpp"
#include "tres/graph.hpp"
#include "tres/resolution.hpp"

#include <string>
#include <vector>

using namespace tres;
using test::lit;

TEST_CASE("simplification contracts and discards valid clauses") {
  // Duplicate literals collapse.
  const SnfClause dup = SnfClause::initial({lit("a"), lit("a"), lit("b")});
  CHECK(print_clause(*simplify(dup)) == "start => a | b");
  // A complementary right-hand pair makes the clause valid.
  CHECK_FALSE(simplify(SnfClause::initial({lit("a"), lit("a", false)})));
  CHECK_FALSE(
      simplify(SnfClause::step({lit("x")}, {lit("a"), lit("a", false)})));
  CHECK_FALSE(simplify(SnfClause::step({lit("x")}, {}, true)));
  // A contradictory left-hand side makes a step or sometime clause valid.
  CHECK_FALSE(
      simplify(SnfClause::step({lit("x"), lit("x", false)}, {lit("a")})));
  CHECK_FALSE(simplify(
      SnfClause::sometime({lit("x"), lit("x", false)}, lit("a"))));
  // Useful clauses pass through canonicalized.
  const SnfClause keep = SnfClause::step({lit("b"), lit("a")}, {lit("c")});
  CHECK(print_clause(*simplify(keep)) == "a & b => X c");
}

TEST_CASE("subsumption needs matching kinds and inclusions") {
  const SnfClause wide = SnfClause::initial({lit("a"), lit("b")});
  const SnfClause narrow = SnfClause::initial({lit("a")});
  CHECK(subsumes(wide, narrow));
  CHECK_FALSE(subsumes(narrow, wide));
  const SnfClause s1 = SnfClause::step({lit("x")}, {lit("a"), lit("b")});
  const SnfClause s2 =
      SnfClause::step({lit("x"), lit("y")}, {lit("a"), lit("b")});
  CHECK(subsumes(s2, s1)); // fewer assumptions, same conclusion
  CHECK_FALSE(subsumes(s1, s2));
  CHECK_THROWS_AS(subsumes(wide, s1), std::invalid_argument);
  const SnfClause ev1 = SnfClause::sometime({lit("x")}, lit("a"));
  const SnfClause ev2 = SnfClause::sometime({}, lit("a"));
  CHECK(subsumes(ev1, ev2));
  CHECK_THROWS_AS(
      subsumes(ev1, SnfClause::sometime({lit("x")}, lit("b"))),
      std::invalid_argument);
}

TEST_CASE("resolution rules combine clauses on one pivot") {
  const SnfClause i1 = SnfClause::initial({lit("a"), lit("b")});
  const SnfClause i2 = SnfClause::initial({lit("a", false), lit("c")});
  CHECK(print_clause(initial_resolve(i1, i2, PropSymbol{"a"})) ==
        "start => b | c");
  CHECK_THROWS_AS(initial_resolve(i1, i2, PropSymbol{"b"}),
                  std::invalid_argument);
  const SnfClause s1 = SnfClause::step({lit("x")}, {lit("a")});
  const SnfClause s2 =
      SnfClause::step({lit("y")}, {lit("a", false), lit("b")});
  CHECK(print_clause(step_resolve(s1, s2, PropSymbol{"a"})) ==
        "x & y => X b");
  // Resolving away the whole right-hand side leaves X false.
  const SnfClause s3 = SnfClause::step({lit("y")}, {lit("a", false)});
  const SnfClause empty = step_resolve(s1, s3, PropSymbol{"a"});
  CHECK(empty.rhs.is_false());
  const auto [init, step] = rewrite_false(empty);
  CHECK(print_clause(init) == "start => ~x | ~y");
  CHECK(print_clause(step) == "true => X (~x | ~y)");
  CHECK_THROWS_AS(rewrite_false(s1), std::invalid_argument);
}

TEST_CASE("merged step clauses union their parts") {
  const MergedStepClause a = MergedStepClause::from_step(
      SnfClause::step({lit("x")}, {lit("a"), lit("b")}), 3);
  const MergedStepClause b = MergedStepClause::from_step(
      SnfClause::step({lit("y")}, {lit("a")}), 7);
  const MergedStepClause m = merge(a, b);
  CHECK(m.lhs == std::vector<Literal>{lit("x"), lit("y")});
  CHECK(m.rhs_cnf ==
        std::vector<std::vector<Literal>>{{lit("a")}});  // {a,b} ⊇ {a}
  CHECK(m.sources == std::vector<std::size_t>{3, 7});
  CHECK(merge(a, b) == merge(b, a));
}

TEST_CASE("canonical form drops tautological and redundant disjuncts") {
  const auto cnf = canonical_cnf({{lit("b"), lit("a")},
                                  {lit("a"), lit("a", false)},
                                  {lit("a"), lit("b"), lit("c")},
                                  {lit("a"), lit("b")}});
  CHECK(cnf == std::vector<std::vector<Literal>>{{lit("a"), lit("b")}});
}

TEST_CASE("the engine refutes a contradictory initial pair") {
  ResolutionEngine e;
  e.add_clause(SnfClause::initial({lit("p")}), RuleName::Given, {});
  e.add_clause(SnfClause::initial({lit("p", false)}), RuleName::Given, {});
  CHECK(e.saturate() == SaturationStatus::Refuted);
  CHECK(e.refuted());
  const ProofStep& last = e.trace().back();
  CHECK(last.clause.kind == ClauseKind::Initial);
  CHECK(last.clause.rhs.is_false());
  CHECK(last.parents == std::vector<std::size_t>{1, 2});
}

TEST_CASE("duplicates and subsumed clauses never enter the active set") {
  ResolutionEngine e;
  e.add_clause(SnfClause::initial({lit("a"), lit("b")}), RuleName::Given,
               {});
  // An exact duplicate is dropped silently.
  CHECK_FALSE(
      e.add_clause(SnfClause::initial({lit("b"), lit("a")}),
                   RuleName::Given, {}));
  // A stronger clause deletes the weaker one.
  const auto id = e.add_clause(SnfClause::initial({lit("a")}),
                               RuleName::Given, {});
  REQUIRE(id.has_value());
  const auto live = e.live(ClauseKind::Initial);
  REQUIRE(live.size() == 1);
  CHECK(live[0].first == *id);
  // A weaker clause arriving later is dropped.
  CHECK_FALSE(e.add_clause(SnfClause::initial({lit("a"), lit("c")}),
                           RuleName::Given, {}));
}

TEST_CASE("a next-state contradiction rewrites into two clauses") {
  ResolutionEngine e;
  e.add_clause(SnfClause::step({lit("x")}, {lit("a")}), RuleName::Given, {});
  e.add_clause(SnfClause::step({lit("y")}, {lit("a", false)}),
               RuleName::Given, {});
  CHECK(e.saturate() == SaturationStatus::Saturated);
  bool saw_initial = false, saw_step = false;
  for (const auto& [id, c] : e.live()) {
    if (print_clause(c) == "start => ~x | ~y") saw_initial = true;
    if (print_clause(c) == "true => X (~x | ~y)") saw_step = true;
    // The X false intermediate must not stay live.
    CHECK_FALSE(c.rhs.is_false());
  }
  CHECK(saw_initial);
  CHECK(saw_step);
}

TEST_CASE("representatives stand in for clauses lost to subsumption") {
  ResolutionEngine e;
  e.add_clause(SnfClause::step({lit("a")}, {lit("b"), lit("x")}),
               RuleName::Given, {});
  e.add_clause(SnfClause::step({}, {lit("x", false)}), RuleName::Given, {});
  e.add_clause(SnfClause::step({lit("p")}, {lit("q"), lit("r")}),
               RuleName::Given, {});
  e.add_clause(SnfClause::step({lit("s")}, {lit("q", false)}),
               RuleName::Given, {});
  CHECK(e.saturate() == SaturationStatus::Saturated);

  // a => X (b | x) resolves with true => X ~x to a => X b, which subsumes
  // it, so the representative set reports the stronger survivor in its
  // place.
  std::vector<std::string> reps;
  for (const auto& [id, c] : e.representatives(ClauseKind::Step))
    reps.push_back(print_clause(c));
  CHECK(std::count(reps.begin(), reps.end(), "a => X b") == 1);
  CHECK(std::count(reps.begin(), reps.end(), "a => X (b | x)") == 0);
  CHECK(std::count(reps.begin(), reps.end(), "true => X ~x") == 1);

  // p & s => X r is live but replaced nothing, so it stays outside the
  // representative set.
  std::vector<std::string> live;
  for (const auto& [id, c] : e.live(ClauseKind::Step))
    live.push_back(print_clause(c));
  CHECK(std::count(live.begin(), live.end(), "p & s => X r") == 1);
  CHECK(std::count(reps.begin(), reps.end(), "p & s => X r") == 0);
}

TEST_CASE("saturation is deterministic") {
  test::Rng rng(20240818);
  const std::vector<std::string> symbols{"a", "b", "c"};
  for (int i = 0; i < 50; ++i) {
    const ClauseSet cs = test::random_clause_set(rng, symbols, 8);
    const SaturationResult r1 = saturate(cs);
    const SaturationResult r2 = saturate(cs);
    CHECK(print_trace(r1.trace) == print_trace(r2.trace));
    CHECK((r1.status == r2.status));
  }
}

TEST_CASE("saturation preserves the oracle verdict") {
  test::Rng rng(20240819);
  const std::vector<std::string> symbols{"a", "b"};
  for (int i = 0; i < 60; ++i) {
    ClauseSet cs = test::random_clause_set(rng, symbols, 6);
    // Keep only initial and step clauses so the graph needs no
    // eventuality bookkeeping beyond what saturation understands.
    ClauseSet flat;
    for (const SnfClause& c : cs.clauses())
      if (c.kind != ClauseKind::Sometime) flat.insert(c);
    for (const PropSymbol& s : cs.symbol_universe()) flat.note_symbol(s);

    ResolutionEngine e;
    for (const SnfClause& c : flat.clauses())
      e.add_clause(c, RuleName::Given, {});
    const SaturationStatus status = e.saturate();

    const bool sat_before = is_satisfiable(flat);
    if (status == SaturationStatus::Refuted) {
      CHECK_FALSE(sat_before);
    } else {
      ClauseSet after = e.live_set();
      for (const PropSymbol& s : flat.symbol_universe())
        after.note_symbol(s);
      CHECK(is_satisfiable(after) == sat_before);
    }
  }
}

TEST_CASE("traces replay from their parents") {
  test::Rng rng(20240820);
  const std::vector<std::string> symbols{"a", "b", "c"};
  int replayed = 0;
  for (int i = 0; i < 40; ++i) {
    const ClauseSet cs = test::random_clause_set(rng, symbols, 8);
    Verdict v;
    try {
      v = prove_clause_set(cs);
    } catch (const ResourceLimitError&) {
      // Saturation of a random set can exceed the loop-search width cap;
      // a capped run has no verdict to replay.
      continue;
    }
    ++replayed;
    const std::map<Literal, PropSymbol> waiting = augment(cs).waiting;
    const auto issues = test::replay(v, waiting);
    for (const auto& issue : issues) {
      CAPTURE(issue.id);
      CAPTURE(issue.note);
      CHECK(false);
    }
    CHECK(issues.empty());
  }
  CHECK(replayed >= 30);
}

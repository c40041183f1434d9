/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */

#include "tres/prover.hpp"

#include "tres/graph.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <utility>

namespace tres {

std::string status_label(ProverStatus s) {
  switch (s) {
  case ProverStatus::Valid:
    return "valid";
  case ProverStatus::NotValid:
    return "not valid";
  case ProverStatus::Satisfiable:
    return "satisfiable";
  case ProverStatus::Unsatisfiable:
    return "unsatisfiable";
  }
  return "unsatisfiable"; // unreachable
}

namespace {

/// Ids of the step clauses a loop conjunction stands for: the sources of
/// the first loop member whose left-hand side equals the conjunction.
std::vector<std::size_t> loop_member_ids(const Loop& loop) {
  std::vector<std::size_t> ids;
  for (const std::vector<Literal>& conj : loop.loop_formula) {
    for (const MergedStepClause& m : loop.members) {
      if (m.lhs == conj) {
        ids.insert(ids.end(), m.sources.begin(), m.sources.end());
        break;
      }
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

/// The main loop: saturate, then try the eventualities round-robin until
/// one yields a loop whose resolvents add something new, and repeat.
/// Returns true when a refutation was found, false on a fixpoint.
bool refute(ResolutionEngine& engine, const AugmentationPlan& plan,
            const ProverLimits& limits, ProverStats& stats,
            std::vector<LoopRecord>& loops) {
  std::size_t next = 0; // round-robin start position
  for (;;) {
    if (engine.saturate() == SaturationStatus::Refuted)
      return true;
    if (plan.eventualities.empty())
      return false;

    bool progressed = false;
    for (std::size_t k = 0; k < plan.eventualities.size() && !progressed;
         ++k) {
      const std::size_t pick = (next + k) % plan.eventualities.size();
      const Literal& ev = plan.eventualities[pick];

      ++stats.loop_searches;
      // The search enumerates subsets, so it is fed the step-clause
      // representatives rather than every live step: a step resolvent is
      // entailed by the merge of the clauses it came from, which the
      // subset search forms anyway, so nothing is lost and the candidate
      // count stays small on sets whose saturation would otherwise flood
      // it.  Sets still wider than the cap fall back to the grouped
      // search, which computes the same loop formula from combinations of
      // distinct left-hand sides.
      const std::vector<std::pair<std::size_t, SnfClause>> steps =
          engine.representatives(ClauseKind::Step);
      std::optional<Loop> loop =
          steps.size() <= limits.loop_width
              ? find_loops(steps, ev, limits.loop_width,
                           limits.entailment_symbols)
              : find_loops_grouped(steps, ev, limits.loop_width,
                                   limits.entailment_symbols);
      if (!loop)
        continue;

      const std::vector<std::size_t> member_ids = loop_member_ids(*loop);
      std::size_t added = 0;
      for (const auto& [sid, sc] : engine.live(ClauseKind::Sometime)) {
        if (!(sc.eventuality == ev))
          continue;
        std::vector<std::size_t> parents = member_ids;
        parents.push_back(sid);
        std::sort(parents.begin(), parents.end());
        for (const SnfClause& r :
             loop_resolvents(sc, *loop, plan.waiting.at(ev))) {
          if (engine.add_clause(r, RuleName::TemporalRes, parents))
            ++added;
        }
      }
      stats.temporal_resolvents += added;
      if (added > 0) {
        loops.push_back(LoopRecord{ev, loop->loop_formula, member_ids});
        next = (pick + 1) % plan.eventualities.size();
        progressed = true;
      }
    }
    if (!progressed)
      return false;
  }
}

struct LoadedEngine {
  ResolutionEngine engine;
  AugmentationPlan plan;
};

/// Feeds a clause set into a fresh engine under the given rule label and
/// appends the augmentation clauses.
LoadedEngine load(const ClauseSet& cs, RuleName rule) {
  LoadedEngine le;
  std::vector<std::pair<std::size_t, SnfClause>> sometimes;
  for (const SnfClause& c : cs.clauses()) {
    std::optional<std::size_t> id = le.engine.add_clause(c, rule, {});
    if (id && c.kind == ClauseKind::Sometime)
      sometimes.emplace_back(*id, c);
  }
  le.plan = plan_augmentation(sometimes, cs);
  for (const AugmentationEmission& e : le.plan.emissions)
    le.engine.add_clause(e.clause, RuleName::Augmentation, e.parents);
  return le;
}

Verdict run(LoadedEngine le, bool validity, const ProverLimits& limits,
            TranslationReport report) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  v.translation = report;
  const bool refuted =
      refute(le.engine, le.plan, limits, v.stats, v.loops);
  if (validity)
    v.status = refuted ? ProverStatus::Valid : ProverStatus::NotValid;
  else
    v.status =
        refuted ? ProverStatus::Unsatisfiable : ProverStatus::Satisfiable;
  v.trace = le.engine.trace();
  v.stats.clauses_recorded = v.trace.size();
  v.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return v;
}

} // namespace

Verdict prove(const FormulaPtr& f, ProveMode mode,
              const ProverLimits& limits) {
  const FormulaPtr w =
      mode == ProveMode::Validity ? push_negations(negate(f)) : f;
  TranslationResult tr = tau0(w);
  return run(load(tr.clauses, RuleName::Translation),
             mode == ProveMode::Validity, limits, tr.report);
}

Verdict prove_clause_set(const ClauseSet& cs, const ProverLimits& limits) {
  return run(load(cs, RuleName::Given), false, limits, TranslationReport{});
}

CrossCheckReport cross_check(const FormulaPtr& f, ProveMode mode,
                             const ProverLimits& limits) {
  CrossCheckReport r;
  r.prover = prove(f, mode, limits);
  const FormulaPtr w =
      mode == ProveMode::Validity ? push_negations(negate(f)) : f;
  const AugmentedClauseSet aug = augment(tau0(w).clauses);
  r.oracle_satisfiable = is_satisfiable(aug.base, limits.oracle_symbols);
  const bool prover_sat = r.prover.status == ProverStatus::Satisfiable ||
                          r.prover.status == ProverStatus::NotValid;
  r.agree = prover_sat == r.oracle_satisfiable;
  return r;
}

} // namespace tres

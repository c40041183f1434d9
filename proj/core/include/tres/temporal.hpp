/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file temporal.hpp
 * Augmentation with waiting propositions, propositional entailment, the
 * naive loop search over merged step clauses, and loop resolvents.
 */

#ifndef TRES_TEMPORAL_HPP
#define TRES_TEMPORAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tres/clause.hpp"
#include "tres/formula.hpp"
#include "tres/limits.hpp"
#include "tres/resolution.hpp"

namespace tres {

/// One clause the augmentation wants added, with the ids of the sometime
/// clauses that justify it (usable as trace parents).
struct AugmentationEmission {
  SnfClause clause;
  std::vector<std::size_t> parents;
};

/// The full augmentation for a set of sometime clauses.  `eventualities`
/// lists the distinct eventuality literals in first-appearance order, which
/// is also the order the prover cycles through them.
struct AugmentationPlan {
  std::vector<AugmentationEmission> emissions;
  std::map<Literal, PropSymbol> waiting;
  std::vector<Literal> eventualities;
};

/// Computes the augmentation clauses for the given sometime clauses (with
/// their ids).  For each eventuality l a waiting symbol w is chosen: an
/// existing clause w => X (l | w) in `existing` with a waiting-origin w is
/// reused (this makes augmentation idempotent), otherwise a fresh _wN name
/// not clashing with the symbol universe is invented.  Per eventuality, in
/// first-appearance order, the plan emits for each of its sometime clauses
/// C => F l the pair start => ~C | l | w and true => X (~C | l | w), and
/// then the single clause w => X (l | w).
AugmentationPlan plan_augmentation(
    const std::vector<std::pair<std::size_t, SnfClause>>& sometime_clauses,
    const ClauseSet& existing);

/// An SNF clause set together with its waiting symbols.
struct AugmentedClauseSet {
  ClauseSet base;
  std::map<Literal, PropSymbol> waiting;
};

/// Adds the augmentation clauses to a copy of cs.  Idempotent: augmenting
/// an already augmented set reuses its waiting symbols and adds nothing.
AugmentedClauseSet augment(const ClauseSet& cs);

/// True iff every valuation satisfying `hypothesis` satisfies `conclusion`,
/// decided by enumerating all valuations of the symbols occurring in either
/// formula.  Both formulas must be propositional (no temporal connectives,
/// no Start).  Throws ResourceLimitError when the combined symbol count
/// exceeds max_symbols.
bool propositional_entails(const FormulaPtr& hypothesis,
                           const FormulaPtr& conclusion,
                           std::size_t max_symbols = kDefaultEntailmentCap);

/// A loop in ~l: merged step clauses A_i => X B_i with B_i entailing ~l and
/// B_i entailing the disjunction of all the A_j.  `loop_formula` is that
/// disjunction in a normalized form: the distinct member left-hand sides
/// with contradictory conjunctions dropped, conjunctions subsumed by a
/// smaller one dropped, and the rest sorted.
struct Loop {
  std::vector<MergedStepClause> members;
  Literal eventuality;
  std::vector<std::vector<Literal>> loop_formula;
};

/// The normalization find_loops applies to its surviving members: the
/// distinct left-hand sides with contradictory conjunctions dropped,
/// conjunctions that strictly contain another kept one dropped, and the
/// remainder sorted.
std::vector<std::vector<Literal>>
normalized_loop_formula(const std::vector<MergedStepClause>& members);

/// The naive loop search: forms every non-empty combination of the given
/// step clauses (by increasing size), keeps those whose merged next-state
/// side entails the complement of `eventuality`, and then repeatedly
/// deletes candidates whose next-state side fails to entail the disjunction
/// of the remaining left-hand sides.  Returns the surviving candidates as
/// the maximal loop, or nullopt when none survive.  Candidates that merge
/// to the same clause are collapsed to the first (smallest) combination,
/// so member `sources` cite the cheapest derivation.  Throws
/// ResourceLimitError when there are more than width_cap steps or more
/// than entailment_cap distinct symbols.
std::optional<Loop>
find_loops(const std::vector<std::pair<std::size_t, SnfClause>>& steps,
           const Literal& eventuality,
           std::size_t width_cap = kDefaultLoopWidthCap,
           std::size_t entailment_cap = kDefaultEntailmentCap);

/// find_loops with clauses collapsed by left-hand side, for sets too wide
/// to enumerate clause-by-clause.  Within a combination, adding a clause
/// whose left-hand side is already covered leaves the combined left-hand
/// side unchanged and only strengthens the next-state side, so the set of
/// surviving left-hand sides, and with it the loop formula, is the same as
/// an uncapped find_loops would compute; only the cited members differ
/// (each carries every clause its left-hand side admits).  Enumeration is
/// over subsets of distinct left-hand sides, with clauses whose left-hand
/// side is true joining every combination, so the cap applies to the
/// number of distinct left-hand sides instead of the clause count.
std::optional<Loop> find_loops_grouped(
    const std::vector<std::pair<std::size_t, SnfClause>>& steps,
    const Literal& eventuality, std::size_t group_cap = kDefaultLoopWidthCap,
    std::size_t entailment_cap = kDefaultEntailmentCap);

/// The loop resolvents for a sometime clause C => F l against a loop in ~l
/// with waiting symbol w: per loop-formula conjunction A_i, the clauses
/// start => ~C | l | ~A_i and true => X (~C | l | ~A_i), followed by
/// w => X (l | ~A_i) for each conjunction.  Results are canonicalized and
/// simplified; clauses the simplifier removes are omitted.
std::vector<SnfClause> loop_resolvents(const SnfClause& sometime,
                                       const Loop& loop,
                                       const PropSymbol& waiting);

} // namespace tres

#endif

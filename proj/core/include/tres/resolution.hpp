/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file resolution.hpp
 * Step resolution: the binary resolution rules on SNF clauses,
 * simplification, subsumption, clause merging, and the saturation
 * engine with its proof trace.
 */

#ifndef TRES_RESOLUTION_HPP
#define TRES_RESOLUTION_HPP

#include "tres/clause.hpp"

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tres {

/// Inference rules a proof step can be justified by.
enum class RuleName {
  Given,        // input clause of a saturation run
  Translation,  // emitted by the normal-form translation
  Augmentation, // waiting-proposition clause
  InitialRes,   // resolution between two initial clauses
  StepRes,      // resolution between two step clauses
  RewriteFalse, // rewrite of lhs => X false into its two constraints
  Simplify,     // reserved: simplification happens inside every step
  Subsume,      // reserved: subsumed clauses are deleted, not recorded
  TemporalRes   // loop resolvent
};

/// Display label used in trace serialization, e.g. "Step Resolution".
std::string rule_label(RuleName r);

/// One recorded inference.  The stored clause is already simplified, so
/// replaying the rule on the parents and simplifying reproduces it.
struct ProofStep {
  std::size_t id = 0;                // 1-based, in derivation order
  SnfClause clause;
  RuleName rule = RuleName::Given;
  std::vector<std::size_t> parents;  // ascending, all smaller than id
};

using Trace = std::vector<ProofStep>;

/// Serializes one step as `N. <clause> [parents rule]`.
std::string print_step(const ProofStep& s);

/// Serializes a whole trace, one step per line.
std::string print_trace(const Trace& t);

/// Applies the contraction rules to a fixpoint: duplicate literals are
/// removed by canonicalization, a complementary pair on a step left-hand
/// side makes the clause valid, and a complementary pair (or the
/// constant true) on an initial or next-state right-hand side does the
/// same.  Returns the contracted clause, or nothing when the clause is
/// valid and can be discarded.
std::optional<SnfClause> simplify(const SnfClause& c);

/// True when `by` subsumes `c`: both literal-set inclusions hold, so `c`
/// carries no information beyond `by`.  The clauses must have the same
/// kind, and sometime clauses the same eventuality; throws
/// std::invalid_argument otherwise.
bool subsumes(const SnfClause& c, const SnfClause& by);

/// Resolves two initial clauses on `pivot`, which must occur with
/// opposite polarities in the two right-hand sides (throws
/// std::invalid_argument otherwise).  The result is not simplified.
SnfClause initial_resolve(const SnfClause& c1, const SnfClause& c2,
                          const PropSymbol& pivot);

/// Resolves two step clauses on `pivot` in their next-state sides,
/// conjoining the left-hand sides.  Same error contract as
/// initial_resolve; the result is not simplified.
SnfClause step_resolve(const SnfClause& c1, const SnfClause& c2,
                       const PropSymbol& pivot);

/// Rewrites `A => X false` into the equivalent pair
/// (start => ~A, true => X ~A).  Pre: a step clause with empty
/// right-hand side; throws std::invalid_argument otherwise.
std::pair<SnfClause, SnfClause> rewrite_false(const SnfClause& c);

/// Canonicalizes a conjunction of disjunctions: each disjunct sorted and
/// deduplicated, tautological disjuncts dropped, duplicate and superset
/// disjuncts removed, result sorted.
std::vector<std::vector<Literal>>
canonical_cnf(std::vector<std::vector<Literal>> cnf);

/// A conjunction of step clauses: lhs => X (rhs_cnf as a conjunction of
/// disjunctions).  Built transiently by the loop search; `sources` are
/// the trace ids of the step clauses combined.
struct MergedStepClause {
  std::vector<Literal> lhs;                  // canonical conjunction
  std::vector<std::vector<Literal>> rhs_cnf; // canonical (see canonical_cnf)
  std::vector<std::size_t> sources;          // ascending trace ids

  static MergedStepClause from_step(const SnfClause& c, std::size_t id);
};

bool operator==(const MergedStepClause& a, const MergedStepClause& b);

/// The merged-SNF combination rule: unions of left-hand sides, sources,
/// and next-state constraint sets.
MergedStepClause merge(const MergedStepClause& a, const MergedStepClause& b);

enum class SaturationStatus { Refuted, Saturated };

/// A saturation engine over SNF clauses.  Clauses enter through
/// add_clause, which simplifies, discards duplicates and subsumed
/// clauses, rewrites next-state contradictions, and records every kept
/// clause as a proof step.  saturate() then exhausts the resolution
/// rules with a given-clause loop.  The engine persists across calls,
/// so a driver can interleave external additions with saturation while
/// the trace ids keep growing.
class ResolutionEngine {
public:
  /// Simplifies and inserts a clause, recording it under `rule` with the
  /// given parents.  Returns the assigned id, or nothing when the clause
  /// was dropped (valid, already seen, or subsumed).  Inserting
  /// `start => false` marks the engine refuted.
  std::optional<std::size_t> add_clause(const SnfClause& c, RuleName rule,
                                        std::vector<std::size_t> parents);

  /// Runs the given-clause loop until refutation or fixpoint.
  SaturationStatus saturate();

  bool refuted() const { return refuted_; }

  const Trace& trace() const { return trace_; }

  /// The clause recorded under `id` (1-based).
  const SnfClause& clause_of(std::size_t id) const;

  /// Live (non-deleted) clauses with their ids, in id order; optionally
  /// restricted to one kind.
  std::vector<std::pair<std::size_t, SnfClause>> live() const;
  std::vector<std::pair<std::size_t, SnfClause>>
  live(ClauseKind kind) const;

  /// The live clauses as a ClauseSet, in id order.
  ClauseSet live_set() const;

  /// Live stand-ins for the non-resolvent clauses of one kind: every
  /// clause that entered through add_clause or a rewrite, mapped through
  /// the subsumption record to whatever live clause replaced it.  A
  /// resolvent is entailed by the combination of the clauses it was
  /// derived from, so this set carries the full strength of the live set
  /// while staying no larger than the input.
  std::vector<std::pair<std::size_t, SnfClause>>
  representatives(ClauseKind kind) const;

private:
  std::optional<std::size_t> process_new(const SnfClause& c, RuleName rule,
                                         std::vector<std::size_t> parents);
  void resolve_pair(std::size_t id1, std::size_t id2);

  Trace trace_;                      // step i has id i+1
  std::vector<char> deleted_;        // aligned with trace_
  std::vector<std::size_t> replaced_by_;  // subsumer id, 0 when none
  std::set<SnfClause> seen_;         // every clause ever recorded
  std::deque<std::size_t> passive_;  // ids waiting to become given
  std::vector<std::size_t> active_;  // ids already given, in pop order
  bool refuted_ = false;
};

struct SaturationResult {
  SaturationStatus status = SaturationStatus::Saturated;
  ClauseSet final_set;
  Trace trace;
};

/// Saturates a standalone clause set: the clauses enter as Given steps
/// in set order and the engine runs to refutation or fixpoint.
SaturationResult saturate(const ClauseSet& cs);

} // namespace tres

#endif // TRES_RESOLUTION_HPP

/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file prover.hpp
 * The end-to-end decision procedure: translate (or accept clauses),
 * augment, and alternate step-resolution saturation with temporal
 * resolution until refutation or a fixpoint.
 */

#ifndef TRES_PROVER_HPP
#define TRES_PROVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tres/clause.hpp"
#include "tres/formula.hpp"
#include "tres/limits.hpp"
#include "tres/resolution.hpp"
#include "tres/temporal.hpp"
#include "tres/translator.hpp"

namespace tres {

enum class ProverStatus { Valid, NotValid, Satisfiable, Unsatisfiable };

/// Human-readable verdict ("valid", "not valid", "satisfiable",
/// "unsatisfiable").
std::string status_label(ProverStatus s);

struct ProverStats {
  std::size_t clauses_recorded = 0;
  std::size_t loop_searches = 0;
  std::size_t temporal_resolvents = 0;
  double wall_seconds = 0.0;
};

/// One progressing application of temporal resolution: the eventuality
/// resolved, the normalized loop formula, and the ids of the step clauses
/// merged into the cited loop members.
struct LoopRecord {
  Literal eventuality;
  std::vector<std::vector<Literal>> loop_formula;
  std::vector<std::size_t> members;
};

struct ProverLimits {
  std::size_t loop_width = kDefaultLoopWidthCap;
  std::size_t entailment_symbols = kDefaultEntailmentCap;
  std::size_t oracle_symbols = kDefaultOracleCap;
};

enum class ProveMode { Satisfiability, Validity };

struct Verdict {
  ProverStatus status = ProverStatus::Satisfiable;
  Trace trace;
  ProverStats stats;
  std::vector<LoopRecord> loops;
  TranslationReport translation; // all zero when the input was a clause set
};

/// Decides f.  Validity mode refutes the pushed-inward negation of f;
/// satisfiability mode translates f as given.  The trace starts with the
/// translation clauses, then the augmentation clauses, then every derived
/// clause in order.  Throws ResourceLimitError when a loop search exceeds
/// the configured caps.
Verdict prove(const FormulaPtr& f, ProveMode mode,
              const ProverLimits& limits = {});

/// Decides satisfiability of an SNF clause set (the clauses enter the
/// trace as given, then augmentation and the main loop run as in prove).
Verdict prove_clause_set(const ClauseSet& cs, const ProverLimits& limits = {});

struct CrossCheckReport {
  Verdict prover;
  bool oracle_satisfiable = false;
  bool agree = false;
};

/// Runs the resolution prover and the behaviour-graph oracle on the same
/// augmented translation and reports whether the verdicts agree.
CrossCheckReport cross_check(const FormulaPtr& f,
                             ProveMode mode = ProveMode::Satisfiability,
                             const ProverLimits& limits = {});

} // namespace tres

#endif

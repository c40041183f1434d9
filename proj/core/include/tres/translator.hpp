/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file translator.hpp
 * Translation of arbitrary formulae into separated normal form (SNF).
 *
 * The translation anchors the input to the first moment with a fresh
 * symbol and then rewrites one proof obligation `x => body` at a time
 * until every emitted clause is an initial, step, or sometime clause.
 * Renaming symbols are `_r0, _r1, ...` in obligation-processing order,
 * so translating the same formula twice yields identical output.
 */

#ifndef TRES_TRANSLATOR_HPP
#define TRES_TRANSLATOR_HPP

#include "tres/clause.hpp"
#include "tres/formula.hpp"

#include <cstddef>
#include <vector>

namespace tres {

/// Size accounting for one translation run.  The clause and fresh-symbol
/// counts obey linear bounds in the input measure `len`.
struct TranslationReport {
  std::size_t input_len = 0;        // len of the input formula
  std::size_t clause_count = 0;     // <= 1 + 11 * input_len
  std::size_t fresh_prop_count = 0; // <= 1 + 4 * input_len
};

struct TranslationResult {
  ClauseSet clauses;
  TranslationReport report;
};

/// An outstanding rewrite obligation `lhs => body`, universally
/// quantified over time.
struct Obligation {
  PropSymbol lhs;
  FormulaPtr body;
};

/// Output of applying a single rewrite rule: clauses that are already in
/// normal form plus the residual obligations still to be processed.
struct Tau1Result {
  std::vector<SnfClause> clauses;
  std::vector<Obligation> obligations;
};

/// One translation session.  Owns the fresh-symbol counter; distinct
/// sessions are fully independent.
class Translator {
public:
  /// Applies exactly one rewrite rule to the obligation.  The body must
  /// be free of the `start` connective.  Throws std::invalid_argument on
  /// a malformed obligation (unreachable for parser-produced formulae).
  Tau1Result tau1_step(const Obligation& ob);

  /// Allocates the next renaming symbol `_rN`.
  PropSymbol fresh_symbol();

  int fresh_count() const { return counter_; }

private:
  int counter_ = 0;
};

/// Translates a start-free formula into an equisatisfiable SNF clause
/// set.  Valid-clause shapes such as `start => true` produced by the
/// constant rules are retained here; the resolution engine's
/// simplification discards them.
TranslationResult tau0(const FormulaPtr& w);

} // namespace tres

#endif // TRES_TRANSLATOR_HPP

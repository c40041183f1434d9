/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file clause.hpp
 * Clauses of the separated normal form and ordered, deduplicated clause
 * sets, together with the clause text format.
 *
 * A problem in normal form is a conjunction of clauses, each implicitly
 * surrounded by G(...):
 *   initial clauses   start => l1 | ... | ln
 *   step clauses      k1 & ... & km => X (l1 | ... | ln)
 *   sometime clauses  k1 & ... & km => F l
 */

#ifndef TRES_CLAUSE_HPP
#define TRES_CLAUSE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tres/formula.hpp"

namespace tres {

/// Conjunction of literals (a clause left-hand side).  The empty
/// conjunction is `true`; `is_false` marks the unsatisfiable conjunction
/// produced when simplification collapses complementary literals.
struct Conjunction {
  std::vector<Literal> lits; // sorted, unique
  bool is_false = false;

  bool is_true() const { return !is_false && lits.empty(); }

  friend bool operator==(const Conjunction& a, const Conjunction& b) {
    return a.is_false == b.is_false && a.lits == b.lits;
  }
  friend bool operator<(const Conjunction& a, const Conjunction& b) {
    if (a.is_false != b.is_false) return b.is_false;
    return a.lits < b.lits;
  }
};

/// Disjunction of literals (a clause right-hand side).  The empty
/// disjunction is `false`; `is_true` marks the valid disjunction produced
/// by the constant translation rules or by collapsing complementary
/// literals.
struct Disjunction {
  std::vector<Literal> lits; // sorted, unique
  bool is_true = false;

  bool is_false() const { return !is_true && lits.empty(); }

  friend bool operator==(const Disjunction& a, const Disjunction& b) {
    return a.is_true == b.is_true && a.lits == b.lits;
  }
  friend bool operator<(const Disjunction& a, const Disjunction& b) {
    if (a.is_true != b.is_true) return b.is_true;
    return a.lits < b.lits;
  }
};

/// Sorts and deduplicates literals; complementary pairs are kept (the
/// simplification rules, not the representation, decide their fate).
std::vector<Literal> canonical_literals(std::vector<Literal> lits);

/// True when a canonical literal vector contains both a symbol and its
/// negation (complementary literals sort adjacently).
bool has_complementary_pair(const std::vector<Literal>& lits);

Conjunction make_conjunction(std::vector<Literal> lits);
Disjunction make_disjunction(std::vector<Literal> lits);

enum class ClauseKind { Initial, Step, Sometime };

/// One normal-form clause.  `lhs` is unused (empty, meaning `start`) for
/// initial clauses; `rhs` is unused for sometime clauses, whose right-hand
/// side is the single literal `eventuality`.
struct SnfClause {
  ClauseKind kind = ClauseKind::Initial;
  Conjunction lhs;
  Disjunction rhs;
  Literal eventuality;

  static SnfClause initial(std::vector<Literal> rhs, bool rhs_true = false);
  static SnfClause step(std::vector<Literal> lhs, std::vector<Literal> rhs,
                        bool rhs_true = false);
  static SnfClause sometime(std::vector<Literal> lhs, Literal ev);

  friend bool operator==(const SnfClause& a, const SnfClause& b);
  friend bool operator<(const SnfClause& a, const SnfClause& b);
};

/// All proposition symbols occurring in the clause.
std::vector<PropSymbol> clause_symbols(const SnfClause& c);

/// The clause as a formula, G-quantified, suitable for `evaluate`:
/// initial clauses become G(start -> rhs), step clauses
/// G(lhs -> X rhs), sometime clauses G(lhs -> F l).
FormulaPtr clause_to_formula(const SnfClause& c);

/// Renders one clause in the clause text format, e.g.
/// "start => a | ~b", "a & b => X (c | ~d)", "a => F ~p".
std::string print_clause(const SnfClause& c);

/// An insertion-ordered set of clauses.  Duplicate clauses (after literal
/// canonicalization) are ignored on insert.  The symbol universe tracks
/// every symbol occurring in any inserted clause; `fresh_counter` is the
/// translation's renaming-symbol counter.
class ClauseSet {
public:
  bool insert(const SnfClause& c); // false if already present
  bool contains(const SnfClause& c) const;

  const std::vector<SnfClause>& clauses() const { return clauses_; }
  const std::set<PropSymbol>& symbol_universe() const { return universe_; }

  void note_symbol(const PropSymbol& s) { universe_.insert(s); }

  int fresh_counter = 0;

  friend bool operator==(const ClauseSet& a, const ClauseSet& b) {
    return a.clauses_ == b.clauses_;
  }

private:
  std::vector<SnfClause> clauses_;
  std::map<SnfClause, std::size_t> index_;
  std::set<PropSymbol> universe_;
};

/// Parses the clause text format: one clause per line, '#' line comments,
/// blank lines ignored.  Left-hand sides are `start`, `true`, or a
/// conjunction of literals; right-hand sides are a literal disjunction
/// (initial), `X` of a literal disjunction (step), or `F` of a literal
/// (sometime).  Throws ParseError on malformed input.
ClauseSet parse_clause_set(std::string_view text);

/// Renders a clause set in the clause text format, one clause per line.
std::string print_clause_set(const ClauseSet& cs);

} // namespace tres

#endif

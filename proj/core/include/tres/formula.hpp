/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file formula.hpp
 * Proposition symbols, literals, the connective tree, lasso models and
 * bounded evaluation, plus the concrete text syntax (parser and printer).
 */

#ifndef TRES_FORMULA_HPP
#define TRES_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tres {

/// Where a proposition symbol came from.  User symbols are written by the
/// caller; renaming symbols are invented by the normal-form translation;
/// waiting symbols are invented by augmentation.  Identity and ordering of
/// symbols are by name only; the origin is bookkeeping.
enum class SymbolOrigin { User, Renaming, Waiting };

struct PropSymbol {
  std::string name;
  SymbolOrigin origin = SymbolOrigin::User;

  friend bool operator==(const PropSymbol& a, const PropSymbol& b) {
    return a.name == b.name;
  }
  friend bool operator!=(const PropSymbol& a, const PropSymbol& b) {
    return !(a == b);
  }
  friend bool operator<(const PropSymbol& a, const PropSymbol& b) {
    return a.name < b.name;
  }
};

/// A proposition symbol or its negation.  The canonical literal order is by
/// symbol name, positive before negative.
struct Literal {
  PropSymbol symbol;
  bool positive = true;

  Literal complement() const { return Literal{symbol, !positive}; }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.positive == b.positive && a.symbol == b.symbol;
  }
  friend bool operator!=(const Literal& a, const Literal& b) {
    return !(a == b);
  }
  friend bool operator<(const Literal& a, const Literal& b) {
    if (a.symbol.name != b.symbol.name) return a.symbol.name < b.symbol.name;
    return a.positive && !b.positive; // positive sorts first
  }
};

/// Connectives of the logic.  Start is the nullary connective that holds
/// exactly in the first moment; it is used internally by clauses and never
/// produced by the parser.
enum class Connective {
  True,
  False,
  Start,
  Prop,
  Not,
  And,
  Or,
  Implies,
  Next,      // X
  Sometime,  // F
  Always,    // G
  Until,     // U
  Unless     // W (weak until)
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula tree.  Unary connectives use `left`; `symbol` is
/// meaningful only for Prop nodes.
class Formula {
public:
  Connective kind;
  PropSymbol symbol;
  FormulaPtr left;
  FormulaPtr right;

  static FormulaPtr truth();
  static FormulaPtr falsity();
  static FormulaPtr start();
  static FormulaPtr prop(PropSymbol s);
  static FormulaPtr prop(std::string name,
                         SymbolOrigin origin = SymbolOrigin::User);
  static FormulaPtr literal(const Literal& l);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr next(FormulaPtr f);
  static FormulaPtr sometime(FormulaPtr f);
  static FormulaPtr always(FormulaPtr f);
  static FormulaPtr until(FormulaPtr a, FormulaPtr b);
  static FormulaPtr unless(FormulaPtr a, FormulaPtr b);

private:
  Formula(Connective k, PropSymbol s, FormulaPtr l, FormulaPtr r)
      : kind(k), symbol(std::move(s)), left(std::move(l)),
        right(std::move(r)) {}
};

/// Structural equality of formula trees.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

/// Number of nodes in the tree.
int node_count(const FormulaPtr& f);

/// Structural negation: returns Not(f) without any simplification.
FormulaPtr negate(const FormulaPtr& f);

/// Pushes negations inward: removes double negations, expands negated
/// conjunctions, disjunctions and implications, and moves negation through
/// next, sometime and always.  A negated until or unless is kept in place
/// (the normal-form translation removes those directly) with its operands
/// rewritten.  In the result, Not applies only to propositions, to until or
/// unless subformulas, and to Start.
FormulaPtr push_negations(const FormulaPtr& f);

/// Collects the names of all proposition symbols occurring in f.
std::set<std::string> symbols_of(const FormulaPtr& f);

/// True for a proposition or a negated proposition.
bool is_literal(const FormulaPtr& f);

/// True for a non-empty disjunction whose disjuncts are all literals; a
/// lone literal counts as the one-disjunct case.
bool is_literal_disjunction(const FormulaPtr& f);

/// Converts a literal-shaped formula to a Literal.  Throws
/// std::invalid_argument otherwise.
Literal to_literal(const FormulaPtr& f);

/// Renaming-aware length measure.  It counts the operator occurrences the
/// normal-form translation has to remove: literals, literal disjunctions,
/// boolean constants, eventualities of a literal and next-states of a
/// literal disjunction all weigh one, and every other (possibly negated)
/// operator adds one to the weight of its immediate subformulas, with
/// negations distributed over the operands.  The translation emits at most
/// 1 + 11*len(f) clauses and invents at most 1 + 4*len(f) fresh symbols.
/// Pre: f contains no Start.
int len(const FormulaPtr& f);

/// A model state: the set of proposition names that are true.  Absent names
/// are false.
using Valuation = std::set<std::string>;

/// An ultimately periodic model: the prefix states followed by the loop
/// states repeated forever.  The loop must be non-empty.
struct LassoModel {
  std::vector<Valuation> prefix;
  std::vector<Valuation> loop;

  std::size_t period_start() const { return prefix.size(); }
  const Valuation& state(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return loop[(i - prefix.size()) % loop.size()];
  }
};

/// Evaluates f in model m at position i.  Temporal operators are decided by
/// scanning a window of prefix-length + 2 * loop-length states starting at
/// i, which is sufficient because the model is ultimately periodic.
/// Pre: m.loop is non-empty.
bool evaluate(const LassoModel& m, std::size_t i, const FormulaPtr& f);

/// Raised by the parser on malformed input; `position` is a byte offset.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

struct ParseOptions {
  /// Identifiers beginning with "_r" or "_w" are reserved for generated
  /// symbols and rejected in user input; clause files produced by the tool
  /// legitimately contain them and parse with this flag set.
  bool allow_reserved = false;
};

/// Parses the concrete syntax.  Connectives: ~ & | -> <->, X F G U W, with
/// precedence (tightest first) ~/X/F/G, U/W (right associative), &, |,
/// ->/<-> (right associative).  '#' starts a line comment.  A <-> B is
/// parsed as (A -> B) & (B -> A).
FormulaPtr parse_formula(std::string_view text, const ParseOptions& = {});

/// Prints a Start-free formula in the concrete syntax with minimal
/// parentheses; parse_formula(print_formula(f)) reproduces f exactly.
std::string print_formula(const FormulaPtr& f);

/// Renders a single literal ("p" or "~p").
std::string print_literal(const Literal& l);

} // namespace tres

#endif

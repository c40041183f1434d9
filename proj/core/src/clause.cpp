/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file clause.cpp
 * Clause canonicalization, clause sets, and the clause text format.
 */

#include "tres/clause.hpp"

#include <algorithm>
#include <sstream>

namespace tres {

std::vector<Literal> canonical_literals(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

bool has_complementary_pair(const std::vector<Literal>& lits) {
  for (std::size_t i = 0; i + 1 < lits.size(); ++i)
    if (lits[i].symbol == lits[i + 1].symbol &&
        lits[i].positive != lits[i + 1].positive)
      return true;
  return false;
}

Conjunction make_conjunction(std::vector<Literal> lits) {
  return Conjunction{canonical_literals(std::move(lits)), false};
}

Disjunction make_disjunction(std::vector<Literal> lits) {
  return Disjunction{canonical_literals(std::move(lits)), false};
}

SnfClause SnfClause::initial(std::vector<Literal> rhs, bool rhs_true) {
  SnfClause c;
  c.kind = ClauseKind::Initial;
  c.rhs = rhs_true ? Disjunction{{}, true}
                   : make_disjunction(std::move(rhs));
  return c;
}

SnfClause SnfClause::step(std::vector<Literal> lhs, std::vector<Literal> rhs,
                          bool rhs_true) {
  SnfClause c;
  c.kind = ClauseKind::Step;
  c.lhs = make_conjunction(std::move(lhs));
  c.rhs = rhs_true ? Disjunction{{}, true}
                   : make_disjunction(std::move(rhs));
  return c;
}

SnfClause SnfClause::sometime(std::vector<Literal> lhs, Literal ev) {
  SnfClause c;
  c.kind = ClauseKind::Sometime;
  c.lhs = make_conjunction(std::move(lhs));
  c.eventuality = ev;
  return c;
}

bool operator==(const SnfClause& a, const SnfClause& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
  case ClauseKind::Initial:
    return a.rhs == b.rhs;
  case ClauseKind::Step:
    return a.lhs == b.lhs && a.rhs == b.rhs;
  case ClauseKind::Sometime:
    return a.lhs == b.lhs && a.eventuality == b.eventuality;
  }
  return false;
}

bool operator<(const SnfClause& a, const SnfClause& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  switch (a.kind) {
  case ClauseKind::Initial:
    return a.rhs < b.rhs;
  case ClauseKind::Step:
    if (!(a.lhs == b.lhs)) return a.lhs < b.lhs;
    return a.rhs < b.rhs;
  case ClauseKind::Sometime:
    if (!(a.lhs == b.lhs)) return a.lhs < b.lhs;
    return a.eventuality < b.eventuality;
  }
  return false;
}

std::vector<PropSymbol> clause_symbols(const SnfClause& c) {
  std::vector<PropSymbol> out;
  for (const Literal& l : c.lhs.lits) out.push_back(l.symbol);
  if (c.kind == ClauseKind::Sometime) {
    out.push_back(c.eventuality.symbol);
  } else {
    for (const Literal& l : c.rhs.lits) out.push_back(l.symbol);
  }
  return out;
}

namespace {

FormulaPtr conjunction_to_formula(const Conjunction& c) {
  if (c.is_false) return Formula::falsity();
  if (c.lits.empty()) return Formula::truth();
  FormulaPtr f = Formula::literal(c.lits.front());
  for (std::size_t i = 1; i < c.lits.size(); ++i)
    f = Formula::conj(f, Formula::literal(c.lits[i]));
  return f;
}

FormulaPtr disjunction_to_formula(const Disjunction& d) {
  if (d.is_true) return Formula::truth();
  if (d.lits.empty()) return Formula::falsity();
  FormulaPtr f = Formula::literal(d.lits.front());
  for (std::size_t i = 1; i < d.lits.size(); ++i)
    f = Formula::disj(f, Formula::literal(d.lits[i]));
  return f;
}

} // namespace

FormulaPtr clause_to_formula(const SnfClause& c) {
  FormulaPtr body;
  switch (c.kind) {
  case ClauseKind::Initial:
    body = Formula::implies(Formula::start(), disjunction_to_formula(c.rhs));
    break;
  case ClauseKind::Step:
    body = Formula::implies(conjunction_to_formula(c.lhs),
                            Formula::next(disjunction_to_formula(c.rhs)));
    break;
  case ClauseKind::Sometime:
    body = Formula::implies(
        conjunction_to_formula(c.lhs),
        Formula::sometime(Formula::literal(c.eventuality)));
    break;
  }
  return Formula::always(body);
}

namespace {

std::string print_disjunction(const Disjunction& d, bool parenthesize) {
  if (d.is_true) return "true";
  if (d.lits.empty()) return "false";
  std::string out;
  for (std::size_t i = 0; i < d.lits.size(); ++i) {
    if (i) out += " | ";
    out += print_literal(d.lits[i]);
  }
  if (parenthesize && d.lits.size() > 1) return "(" + out + ")";
  return out;
}

std::string print_lhs(const Conjunction& c) {
  if (c.is_false) return "false";
  if (c.lits.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < c.lits.size(); ++i) {
    if (i) out += " & ";
    out += print_literal(c.lits[i]);
  }
  return out;
}

} // namespace

std::string print_clause(const SnfClause& c) {
  switch (c.kind) {
  case ClauseKind::Initial:
    return "start => " + print_disjunction(c.rhs, false);
  case ClauseKind::Step:
    return print_lhs(c.lhs) + " => X " + print_disjunction(c.rhs, true);
  case ClauseKind::Sometime:
    return print_lhs(c.lhs) + " => F " + print_literal(c.eventuality);
  }
  return "";
}

bool ClauseSet::insert(const SnfClause& c) {
  auto [it, fresh] = index_.try_emplace(c, clauses_.size());
  if (!fresh) return false;
  clauses_.push_back(c);
  for (const PropSymbol& s : clause_symbols(c)) universe_.insert(s);
  return true;
}

bool ClauseSet::contains(const SnfClause& c) const {
  return index_.count(c) != 0;
}

// ---------------------------------------------------------------------------
// Clause text format
// ---------------------------------------------------------------------------

namespace {

/// Splits a formula into its disjuncts; returns false when some disjunct is
/// not a literal.
bool flatten_literal_disjunction(const FormulaPtr& f,
                                 std::vector<Literal>& out) {
  if (f->kind == Connective::Or)
    return flatten_literal_disjunction(f->left, out) &&
           flatten_literal_disjunction(f->right, out);
  if (f->kind == Connective::Prop) {
    out.push_back(Literal{f->symbol, true});
    return true;
  }
  if (f->kind == Connective::Not && f->left->kind == Connective::Prop) {
    out.push_back(Literal{f->left->symbol, false});
    return true;
  }
  return false;
}

bool flatten_literal_conjunction(const FormulaPtr& f,
                                 std::vector<Literal>& out) {
  if (f->kind == Connective::And)
    return flatten_literal_conjunction(f->left, out) &&
           flatten_literal_conjunction(f->right, out);
  if (f->kind == Connective::Prop) {
    out.push_back(Literal{f->symbol, true});
    return true;
  }
  if (f->kind == Connective::Not && f->left->kind == Connective::Prop) {
    out.push_back(Literal{f->left->symbol, false});
    return true;
  }
  return false;
}

SnfClause parse_clause_line(const std::string& line, std::size_t line_no) {
  auto fail = [&](const std::string& msg) -> SnfClause {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg, 0);
  };

  std::size_t arrow = line.find("=>");
  if (arrow == std::string::npos)
    return fail("expected '=>' in clause");
  std::string lhs_text = line.substr(0, arrow);
  std::string rhs_text = line.substr(arrow + 2);

  // Trim the left-hand side so the `start` keyword can be recognized.
  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    std::size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) return std::string();
    return s.substr(b, e - b + 1);
  };
  lhs_text = trim(lhs_text);
  rhs_text = trim(rhs_text);
  if (rhs_text.empty()) return fail("empty right-hand side");

  ParseOptions opts;
  opts.allow_reserved = true;

  const bool is_initial = (lhs_text == "start");
  std::vector<Literal> lhs_lits;
  if (!is_initial) {
    if (lhs_text.empty()) return fail("empty left-hand side");
    FormulaPtr lhs;
    try {
      lhs = parse_formula(lhs_text, opts);
    } catch (const ParseError& e) {
      return fail(std::string("left-hand side: ") + e.what());
    }
    if (lhs->kind != Connective::True &&
        !flatten_literal_conjunction(lhs, lhs_lits))
      return fail("left-hand side must be 'start', 'true', or a "
                  "conjunction of literals");
  }

  FormulaPtr rhs;
  try {
    rhs = parse_formula(rhs_text, opts);
  } catch (const ParseError& e) {
    return fail(std::string("right-hand side: ") + e.what());
  }

  if (rhs->kind == Connective::Sometime) {
    if (is_initial) return fail("'start' cannot own an eventuality");
    FormulaPtr body = rhs->left;
    if (body->kind == Connective::Prop)
      return SnfClause::sometime(std::move(lhs_lits),
                                 Literal{body->symbol, true});
    if (body->kind == Connective::Not && body->left->kind == Connective::Prop)
      return SnfClause::sometime(std::move(lhs_lits),
                                 Literal{body->left->symbol, false});
    return fail("eventuality must be a single literal");
  }

  if (rhs->kind == Connective::Next) {
    if (is_initial) return fail("'start' cannot precede a next-state side");
    FormulaPtr body = rhs->left;
    if (body->kind == Connective::True)
      return SnfClause::step(std::move(lhs_lits), {}, true);
    if (body->kind == Connective::False)
      return SnfClause::step(std::move(lhs_lits), {});
    std::vector<Literal> rhs_lits;
    if (!flatten_literal_disjunction(body, rhs_lits))
      return fail("next-state side must be a disjunction of literals");
    return SnfClause::step(std::move(lhs_lits), std::move(rhs_lits));
  }

  // No temporal operator: an initial clause.
  if (!is_initial)
    return fail("a clause without X or F must have the 'start' left-hand "
                "side");
  if (rhs->kind == Connective::True) return SnfClause::initial({}, true);
  if (rhs->kind == Connective::False) return SnfClause::initial({});
  std::vector<Literal> rhs_lits;
  if (!flatten_literal_disjunction(rhs, rhs_lits))
    return fail("right-hand side must be a disjunction of literals");
  return SnfClause::initial(std::move(rhs_lits));
}

} // namespace

ClauseSet parse_clause_set(std::string_view text) {
  ClauseSet cs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
    if (blank) continue;
    cs.insert(parse_clause_line(line, line_no));
  }
  return cs;
}

std::string print_clause_set(const ClauseSet& cs) {
  std::string out;
  for (const SnfClause& c : cs.clauses()) {
    out += print_clause(c);
    out += '\n';
  }
  return out;
}

} // namespace tres

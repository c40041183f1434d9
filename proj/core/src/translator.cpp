/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file translator.cpp
 * The rewrite system turning formulae into SNF clauses.
 *
 * Each obligation `x => body` is dispatched on the main connective of
 * the body.  Classical connectives are unfolded in place, complex
 * arguments of temporal connectives are renamed with fresh symbols, and
 * temporal connectives over literals are unwound into their fixpoint
 * clauses.  Literal disjunctions and boolean constants hit the base
 * rules, which emit the final initial and step clauses.
 */

#include "tres/translator.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace tres {

namespace {

/// Applies the classical constant rewrites at the root until stable:
/// not true -> false, not false -> true, not not A -> A.
FormulaPtr peel(FormulaPtr f) {
  for (;;) {
    if (f->kind != Connective::Not) return f;
    const FormulaPtr& inner = f->left;
    if (inner->kind == Connective::True) return Formula::falsity();
    if (inner->kind == Connective::False) return Formula::truth();
    if (inner->kind == Connective::Not) {
      f = inner->left;
      continue;
    }
    return f;
  }
}

/// Negation with the root rewrites already applied, so no double
/// negation or negated constant is ever constructed.
FormulaPtr smart_neg(const FormulaPtr& f) {
  return peel(Formula::negation(f));
}

/// Collects the disjuncts of an arbitrarily nested disjunction in
/// left-to-right order, peeling each one first.
void collect_disjuncts(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  FormulaPtr g = peel(f);
  if (g->kind == Connective::Or) {
    collect_disjuncts(g->left, out);
    collect_disjuncts(g->right, out);
  } else {
    out.push_back(g);
  }
}

Literal pos(const PropSymbol& s) { return Literal{s, true}; }
Literal neg(const PropSymbol& s) { return Literal{s, false}; }

/// Base rule for x => D with D a disjunction of literals: the pair
/// start => ~x | D and true => X (~x | D).
void emit_base(const PropSymbol& x, std::vector<Literal> d, Tau1Result& res) {
  d.insert(d.begin(), neg(x));
  res.clauses.push_back(SnfClause::initial(d));
  res.clauses.push_back(SnfClause::step({}, std::move(d)));
}

} // namespace

PropSymbol Translator::fresh_symbol() {
  return PropSymbol{"_r" + std::to_string(counter_++),
                    SymbolOrigin::Renaming};
}

Tau1Result Translator::tau1_step(const Obligation& ob) {
  Tau1Result res;
  const PropSymbol& x = ob.lhs;
  FormulaPtr body = peel(ob.body);

  switch (body->kind) {
  case Connective::Start:
    throw std::invalid_argument("tau1: obligation body contains 'start'");

  case Connective::True:
    res.clauses.push_back(SnfClause::initial({}, true));
    res.clauses.push_back(SnfClause::step({}, {}, true));
    return res;

  case Connective::False:
    res.clauses.push_back(SnfClause::initial({neg(x)}));
    res.clauses.push_back(SnfClause::step({}, {neg(x)}));
    return res;

  case Connective::Prop:
    emit_base(x, {to_literal(body)}, res);
    return res;

  case Connective::And:
    res.obligations.push_back({x, body->left});
    res.obligations.push_back({x, body->right});
    return res;

  case Connective::Implies:
    res.obligations.push_back(
        {x, Formula::disj(smart_neg(body->left), body->right)});
    return res;

  case Connective::Or: {
    std::vector<FormulaPtr> parts;
    collect_disjuncts(body, parts);
    std::vector<FormulaPtr> kept;
    for (const FormulaPtr& p : parts) {
      if (p->kind == Connective::True) {
        res.obligations.push_back({x, Formula::truth()});
        return res;
      }
      if (p->kind == Connective::False) continue;
      kept.push_back(p);
    }
    if (kept.empty()) {
      res.obligations.push_back({x, Formula::falsity()});
      return res;
    }
    if (kept.size() == 1 && !is_literal(kept.front())) {
      res.obligations.push_back({x, kept.front()});
      return res;
    }
    bool all_literals = true;
    std::size_t rename_at = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (!is_literal(kept[i])) {
        all_literals = false;
        rename_at = i;
        break;
      }
    }
    if (all_literals) {
      std::vector<Literal> d;
      for (const FormulaPtr& p : kept) d.push_back(to_literal(p));
      emit_base(x, std::move(d), res);
      return res;
    }
    // Rename the leftmost non-literal disjunct with a fresh symbol.
    PropSymbol y = fresh_symbol();
    FormulaPtr renamed = kept[rename_at];
    kept[rename_at] = Formula::prop(y);
    FormulaPtr d = kept.front();
    for (std::size_t i = 1; i < kept.size(); ++i)
      d = Formula::disj(d, kept[i]);
    res.obligations.push_back({x, d});
    res.obligations.push_back({y, renamed});
    return res;
  }

  case Connective::Next: {
    const FormulaPtr& a = body->left;
    if (is_literal_disjunction(a)) {
      std::vector<FormulaPtr> parts;
      collect_disjuncts(a, parts);
      std::vector<Literal> d;
      for (const FormulaPtr& p : parts) d.push_back(to_literal(p));
      res.clauses.push_back(SnfClause::step({pos(x)}, std::move(d)));
      return res;
    }
    PropSymbol y = fresh_symbol();
    res.clauses.push_back(SnfClause::step({pos(x)}, {pos(y)}));
    res.obligations.push_back({y, a});
    return res;
  }

  case Connective::Sometime: {
    const FormulaPtr& a = body->left;
    if (is_literal(a)) {
      res.clauses.push_back(SnfClause::sometime({pos(x)}, to_literal(a)));
      return res;
    }
    PropSymbol y = fresh_symbol();
    res.clauses.push_back(SnfClause::sometime({pos(x)}, pos(y)));
    res.obligations.push_back({y, a});
    return res;
  }

  case Connective::Always: {
    const FormulaPtr& a = body->left;
    if (is_literal(a)) {
      // Unwind the fixpoint: x => a now, and a fresh y carrying a into
      // every later moment.
      PropSymbol y = fresh_symbol();
      res.obligations.push_back({x, a});
      res.obligations.push_back({x, Formula::prop(y)});
      res.clauses.push_back(SnfClause::step({pos(y)}, {to_literal(a)}));
      res.clauses.push_back(SnfClause::step({pos(y)}, {pos(y)}));
      return res;
    }
    PropSymbol y = fresh_symbol();
    res.obligations.push_back({x, Formula::always(Formula::prop(y))});
    res.obligations.push_back({y, a});
    return res;
  }

  case Connective::Until:
  case Connective::Unless: {
    const FormulaPtr& a = body->left;
    const FormulaPtr& b = body->right;
    const bool is_until = body->kind == Connective::Until;
    if (!is_literal(a)) {
      PropSymbol y = fresh_symbol();
      FormulaPtr yp = Formula::prop(y);
      res.obligations.push_back(
          {x, is_until ? Formula::until(yp, b) : Formula::unless(yp, b)});
      res.obligations.push_back({y, a});
      return res;
    }
    if (!is_literal(b)) {
      PropSymbol y = fresh_symbol();
      FormulaPtr yp = Formula::prop(y);
      res.obligations.push_back(
          {x, is_until ? Formula::until(a, yp) : Formula::unless(a, yp)});
      res.obligations.push_back({y, b});
      return res;
    }
    // Both arguments literal: unwind.  Until additionally promises the
    // right argument eventually happens.
    Literal l = to_literal(a);
    Literal m = to_literal(b);
    PropSymbol y = fresh_symbol();
    if (is_until) res.clauses.push_back(SnfClause::sometime({pos(x)}, m));
    res.obligations.push_back({x, Formula::disj(a, b)});
    res.obligations.push_back({x, Formula::disj(Formula::prop(y), b)});
    res.clauses.push_back(SnfClause::step({pos(y)}, {l, m}));
    res.clauses.push_back(SnfClause::step({pos(y)}, {pos(y), m}));
    return res;
  }

  case Connective::Not: {
    const FormulaPtr& inner = body->left;
    switch (inner->kind) {
    case Connective::Prop:
      emit_base(x, {to_literal(body)}, res);
      return res;

    case Connective::And:
      res.obligations.push_back(
          {x, Formula::disj(smart_neg(inner->left),
                            smart_neg(inner->right))});
      return res;

    case Connective::Or:
      res.obligations.push_back({x, smart_neg(inner->left)});
      res.obligations.push_back({x, smart_neg(inner->right)});
      return res;

    case Connective::Implies:
      res.obligations.push_back({x, inner->left});
      res.obligations.push_back({x, smart_neg(inner->right)});
      return res;

    case Connective::Next: {
      const FormulaPtr& a = inner->left;
      if (is_literal(a)) {
        // Short-cut: X distributes over negation, and X of a literal is
        // already normal form.
        res.clauses.push_back(
            SnfClause::step({pos(x)}, {to_literal(a).complement()}));
        return res;
      }
      PropSymbol y = fresh_symbol();
      res.clauses.push_back(SnfClause::step({pos(x)}, {pos(y)}));
      res.obligations.push_back({y, smart_neg(a)});
      return res;
    }

    case Connective::Always: {
      PropSymbol y = fresh_symbol();
      res.clauses.push_back(SnfClause::sometime({pos(x)}, pos(y)));
      res.obligations.push_back({y, smart_neg(inner->left)});
      return res;
    }

    case Connective::Sometime: {
      PropSymbol y = fresh_symbol();
      res.obligations.push_back({x, Formula::always(Formula::prop(y))});
      res.obligations.push_back({y, smart_neg(inner->left)});
      return res;
    }

    case Connective::Until:
    case Connective::Unless: {
      // Three fresh symbols: y for the negated right argument, z for the
      // negated left argument, and v abbreviating their conjunction.
      PropSymbol y = fresh_symbol();
      PropSymbol v = fresh_symbol();
      PropSymbol z = fresh_symbol();
      FormulaPtr yp = Formula::prop(y);
      FormulaPtr vp = Formula::prop(v);
      FormulaPtr zp = Formula::prop(z);
      const bool was_until = inner->kind == Connective::Until;
      res.obligations.push_back(
          {x, was_until ? Formula::unless(yp, vp) : Formula::until(yp, vp)});
      res.obligations.push_back({y, smart_neg(inner->right)});
      res.obligations.push_back({v, Formula::conj(yp, zp)});
      res.obligations.push_back({z, smart_neg(inner->left)});
      return res;
    }

    case Connective::Start:
      throw std::invalid_argument("tau1: obligation body contains 'start'");
    case Connective::True:
    case Connective::False:
    case Connective::Not:
      break; // removed by peel; fall through to the failure below
    }
    throw std::invalid_argument("tau1: no rule matches the obligation");
  }
  }
  throw std::invalid_argument("tau1: no rule matches the obligation");
}

TranslationResult tau0(const FormulaPtr& w) {
  Translator tr;
  TranslationResult out;
  out.report.input_len = static_cast<std::size_t>(len(w));

  // Anchor the formula to the first moment.
  PropSymbol anchor = tr.fresh_symbol();
  out.clauses.insert(SnfClause::initial({Literal{anchor, true}}));

  std::deque<Obligation> work;
  work.push_back({anchor, w});
  while (!work.empty()) {
    Obligation ob = std::move(work.front());
    work.pop_front();
    Tau1Result r = tr.tau1_step(ob);
    for (const SnfClause& c : r.clauses) out.clauses.insert(c);
    for (Obligation& o : r.obligations) work.push_back(std::move(o));
  }

  out.clauses.fresh_counter = tr.fresh_count();
  out.report.clause_count = out.clauses.clauses().size();
  out.report.fresh_prop_count = static_cast<std::size_t>(tr.fresh_count());
  return out;
}

} // namespace tres

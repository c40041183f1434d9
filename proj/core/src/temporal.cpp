/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file temporal.cpp
 * Augmentation, propositional entailment, loop search, loop resolvents.
 *
 * Entailment questions are decided over explicit truth tables: a formula
 * maps to a bit vector with one bit per valuation of the relevant symbol
 * set.  The loop search reuses those bit vectors; the two side conditions
 * become bitwise subset tests, so each candidate combination costs a few
 * word operations instead of a fresh entailment enumeration.
 */

#include "tres/temporal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace tres {

AugmentationPlan plan_augmentation(
    const std::vector<std::pair<std::size_t, SnfClause>>& sometime_clauses,
    const ClauseSet& existing) {
  AugmentationPlan plan;
  for (const auto& [id, c] : sometime_clauses) {
    (void)id;
    if (c.kind != ClauseKind::Sometime)
      throw std::invalid_argument("plan_augmentation: clause is not a "
                                  "sometime clause");
    if (std::find(plan.eventualities.begin(), plan.eventualities.end(),
                  c.eventuality) == plan.eventualities.end())
      plan.eventualities.push_back(c.eventuality);
  }

  std::set<std::string> taken;
  for (const PropSymbol& s : existing.symbol_universe()) taken.insert(s.name);

  // Reuse the waiting symbol of an existing w => X (l | w) clause, so a
  // second augmentation finds the first one's symbols instead of stacking
  // new ones.
  auto existing_waiting = [&existing](const Literal& l) {
    for (const SnfClause& c : existing.clauses()) {
      if (c.kind != ClauseKind::Step) continue;
      if (c.lhs.lits.size() != 1 || c.rhs.lits.size() != 2) continue;
      const Literal& w = c.lhs.lits[0];
      if (!w.positive || w.symbol.origin != SymbolOrigin::Waiting) continue;
      const Literal wpos{w.symbol, true};
      if ((c.rhs.lits[0] == l && c.rhs.lits[1] == wpos) ||
          (c.rhs.lits[0] == wpos && c.rhs.lits[1] == l))
        return std::optional<PropSymbol>(w.symbol);
    }
    return std::optional<PropSymbol>();
  };

  int counter = 0;
  for (const Literal& l : plan.eventualities) {
    std::optional<PropSymbol> w = existing_waiting(l);
    if (!w) {
      std::string name;
      do {
        name = "_w" + std::to_string(counter++);
      } while (taken.count(name));
      taken.insert(name);
      w = PropSymbol{name, SymbolOrigin::Waiting};
    }
    plan.waiting.emplace(l, *w);
  }

  for (const Literal& l : plan.eventualities) {
    const Literal w{plan.waiting.at(l), true};
    std::vector<std::size_t> ids;
    for (const auto& [id, c] : sometime_clauses) {
      if (!(c.eventuality == l)) continue;
      ids.push_back(id);
      std::vector<Literal> rhs;
      for (const Literal& cl : c.lhs.lits) rhs.push_back(cl.complement());
      rhs.push_back(l);
      rhs.push_back(w);
      plan.emissions.push_back({SnfClause::initial(rhs), {id}});
      plan.emissions.push_back({SnfClause::step({}, rhs), {id}});
    }
    plan.emissions.push_back({SnfClause::step({w}, {l, w}), ids});
  }
  return plan;
}

AugmentedClauseSet augment(const ClauseSet& cs) {
  std::vector<std::pair<std::size_t, SnfClause>> sometime_clauses;
  const std::vector<SnfClause>& all = cs.clauses();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].kind == ClauseKind::Sometime)
      sometime_clauses.emplace_back(i + 1, all[i]);

  AugmentationPlan plan = plan_augmentation(sometime_clauses, cs);
  AugmentedClauseSet out;
  out.base = cs;
  for (const AugmentationEmission& e : plan.emissions) out.base.insert(e.clause);
  out.waiting = plan.waiting;
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

/// One bit per valuation of a fixed symbol set.  Valuation v assigns true
/// to symbol i iff bit n-1-i of v is set, so the all-true valuation is the
/// numerically largest.
struct TruthSpace {
  std::vector<std::string> symbols;
  std::size_t n;
  std::size_t total;
  std::size_t words;
  std::uint64_t last_mask;

  explicit TruthSpace(const std::set<std::string>& syms)
      : symbols(syms.begin(), syms.end()), n(symbols.size()),
        total(std::size_t{1} << n), words((total + 63) / 64) {
    const std::size_t rem = total % 64;
    last_mask = rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
  }

  Bits zeros() const { return Bits(words, 0); }

  Bits ones() const {
    Bits b(words, ~std::uint64_t{0});
    b.back() &= last_mask;
    return b;
  }

  Bits literal_bits(const Literal& l) const {
    const std::size_t i =
        std::lower_bound(symbols.begin(), symbols.end(), l.symbol.name) -
        symbols.begin();
    Bits b(words, 0);
    for (std::size_t v = 0; v < total; ++v) {
      const bool truth = (v >> (n - 1 - i)) & 1;
      if (truth == l.positive) b[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    return b;
  }
};

void and_into(Bits& acc, const Bits& other) {
  for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= other[w];
}

void or_into(Bits& acc, const Bits& other) {
  for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= other[w];
}

bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}

/// a entails b as valuation sets: a is a subset of b.
bool subset_bits(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

Bits conjunction_bits(const Conjunction& c, const TruthSpace& ts) {
  if (c.is_false) return ts.zeros();
  Bits acc = ts.ones();
  for (const Literal& l : c.lits) and_into(acc, ts.literal_bits(l));
  return acc;
}

Bits disjunction_bits(const Disjunction& d, const TruthSpace& ts) {
  if (d.is_true) return ts.ones();
  Bits acc = ts.zeros();
  for (const Literal& l : d.lits) or_into(acc, ts.literal_bits(l));
  return acc;
}

Bits formula_bits(const FormulaPtr& f, const TruthSpace& ts) {
  switch (f->kind) {
  case Connective::True:
    return ts.ones();
  case Connective::False:
    return ts.zeros();
  case Connective::Prop:
    return ts.literal_bits(Literal{f->symbol, true});
  case Connective::Not: {
    Bits b = formula_bits(f->left, ts);
    for (std::uint64_t& w : b) w = ~w;
    b.back() &= ts.last_mask;
    return b;
  }
  case Connective::And: {
    Bits b = formula_bits(f->left, ts);
    and_into(b, formula_bits(f->right, ts));
    return b;
  }
  case Connective::Or: {
    Bits b = formula_bits(f->left, ts);
    or_into(b, formula_bits(f->right, ts));
    return b;
  }
  case Connective::Implies: {
    Bits b = formula_bits(f->left, ts);
    for (std::uint64_t& w : b) w = ~w;
    b.back() &= ts.last_mask;
    or_into(b, formula_bits(f->right, ts));
    return b;
  }
  default:
    throw std::invalid_argument(
        "propositional_entails: formula has a temporal connective");
  }
}

} // namespace

bool propositional_entails(const FormulaPtr& hypothesis,
                           const FormulaPtr& conclusion,
                           std::size_t max_symbols) {
  std::set<std::string> syms = symbols_of(hypothesis);
  std::set<std::string> more = symbols_of(conclusion);
  syms.insert(more.begin(), more.end());
  if (syms.size() > max_symbols)
    throw ResourceLimitError("entailment over " +
                             std::to_string(syms.size()) +
                             " symbols exceeds the cap of " +
                             std::to_string(max_symbols));
  TruthSpace ts(syms);
  const Bits hb = formula_bits(hypothesis, ts);
  const Bits cb = formula_bits(conclusion, ts);
  for (std::size_t w = 0; w < hb.size(); ++w)
    if (hb[w] & ~cb[w]) return false;
  return true;
}

std::vector<std::vector<Literal>>
normalized_loop_formula(const std::vector<MergedStepClause>& members) {
  std::vector<std::vector<Literal>> conjs;
  for (const MergedStepClause& m : members)
    if (std::find(conjs.begin(), conjs.end(), m.lhs) == conjs.end())
      conjs.push_back(m.lhs);
  conjs.erase(std::remove_if(conjs.begin(), conjs.end(),
                             [](const std::vector<Literal>& c) {
                               return has_complementary_pair(c);
                             }),
              conjs.end());
  std::vector<std::vector<Literal>> kept;
  for (const std::vector<Literal>& c : conjs) {
    bool redundant = false;
    for (const std::vector<Literal>& other : conjs)
      if (other != c &&
          std::includes(c.begin(), c.end(), other.begin(), other.end())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::optional<Loop>
find_loops(const std::vector<std::pair<std::size_t, SnfClause>>& steps,
           const Literal& eventuality, std::size_t width_cap,
           std::size_t entailment_cap) {
  if (steps.size() > width_cap)
    throw ResourceLimitError("loop search over " +
                             std::to_string(steps.size()) +
                             " step clauses exceeds the width cap of " +
                             std::to_string(width_cap));
  if (steps.empty()) return std::nullopt;

  std::set<std::string> syms;
  for (const auto& [id, c] : steps) {
    (void)id;
    if (c.kind != ClauseKind::Step)
      throw std::invalid_argument("find_loops: clause is not a step clause");
    for (const PropSymbol& s : clause_symbols(c)) syms.insert(s.name);
  }
  syms.insert(eventuality.symbol.name);
  if (syms.size() > entailment_cap)
    throw ResourceLimitError("loop search over " +
                             std::to_string(syms.size()) +
                             " symbols exceeds the entailment cap of " +
                             std::to_string(entailment_cap));

  const TruthSpace ts(syms);
  const std::size_t k = steps.size();
  std::vector<Bits> lhs_bits, rhs_bits;
  lhs_bits.reserve(k);
  rhs_bits.reserve(k);
  for (const auto& [id, c] : steps) {
    (void)id;
    lhs_bits.push_back(conjunction_bits(c.lhs, ts));
    rhs_bits.push_back(disjunction_bits(c.rhs, ts));
  }
  const Bits l_bits = ts.literal_bits(eventuality);

  // Even the combination of all clauses has the weakest next-state side of
  // none; if that side fails the first condition, every combination does.
  Bits all_and = ts.ones();
  for (const Bits& b : rhs_bits) and_into(all_and, b);
  if (intersects(all_and, l_bits)) return std::nullopt;

  struct Candidate {
    MergedStepClause merged;
    Bits lhs_mask;
    Bits rhs_mask;
    bool alive = true;
  };
  std::vector<Candidate> candidates;
  std::set<std::pair<std::vector<Literal>, std::vector<std::vector<Literal>>>>
      seen;

  std::vector<std::uint32_t> order;
  order.reserve((std::size_t{1} << k) - 1);
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << k); ++m)
    order.push_back(m);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     return std::popcount(a) < std::popcount(b);
                   });

  for (const std::uint32_t m : order) {
    Bits rhs_and = ts.ones();
    for (std::uint32_t rest = m; rest; rest &= rest - 1)
      and_into(rhs_and, rhs_bits[std::countr_zero(rest)]);
    if (intersects(rhs_and, l_bits)) continue;

    std::optional<MergedStepClause> mc;
    Bits lhs_and = ts.ones();
    for (std::uint32_t rest = m; rest; rest &= rest - 1) {
      const std::size_t i = std::countr_zero(rest);
      MergedStepClause part =
          MergedStepClause::from_step(steps[i].second, steps[i].first);
      mc = mc ? merge(*mc, part) : part;
      and_into(lhs_and, lhs_bits[i]);
    }
    if (!seen.insert({mc->lhs, mc->rhs_cnf}).second) continue;
    candidates.push_back(
        {std::move(*mc), std::move(lhs_and), std::move(rhs_and)});
  }
  if (candidates.empty()) return std::nullopt;

  bool changed = true;
  while (changed) {
    changed = false;
    Bits lhs_or = ts.zeros();
    for (const Candidate& c : candidates)
      if (c.alive) or_into(lhs_or, c.lhs_mask);
    for (Candidate& c : candidates)
      if (c.alive && !subset_bits(c.rhs_mask, lhs_or)) {
        c.alive = false;
        changed = true;
      }
  }

  Loop loop;
  loop.eventuality = eventuality;
  for (const Candidate& c : candidates)
    if (c.alive) loop.members.push_back(c.merged);
  if (loop.members.empty()) return std::nullopt;
  loop.loop_formula = normalized_loop_formula(loop.members);
  return loop;
}

std::optional<Loop> find_loops_grouped(
    const std::vector<std::pair<std::size_t, SnfClause>>& steps,
    const Literal& eventuality, std::size_t group_cap,
    std::size_t entailment_cap) {
  if (steps.empty()) return std::nullopt;

  std::set<std::string> syms;
  for (const auto& [id, c] : steps) {
    (void)id;
    if (c.kind != ClauseKind::Step)
      throw std::invalid_argument(
          "find_loops_grouped: clause is not a step clause");
    for (const PropSymbol& s : clause_symbols(c)) syms.insert(s.name);
  }
  syms.insert(eventuality.symbol.name);
  if (syms.size() > entailment_cap)
    throw ResourceLimitError("loop search over " +
                             std::to_string(syms.size()) +
                             " symbols exceeds the entailment cap of " +
                             std::to_string(entailment_cap));

  // Clauses with left-hand side true join every combination for free;
  // the rest are grouped by left-hand side.
  std::map<std::vector<Literal>, std::vector<std::size_t>> by_lhs;
  std::vector<std::size_t> unconditional;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].second.lhs.lits.empty())
      unconditional.push_back(i);
    else
      by_lhs[steps[i].second.lhs.lits].push_back(i);
  }
  if (by_lhs.size() > group_cap)
    throw ResourceLimitError("loop search over " +
                             std::to_string(by_lhs.size()) +
                             " distinct step conditions exceeds the width "
                             "cap of " +
                             std::to_string(group_cap));

  const TruthSpace ts(syms);
  const Bits l_bits = ts.literal_bits(eventuality);

  struct Group {
    std::vector<std::size_t> indices;
    Bits lhs_mask;
    Bits rhs_mask;
  };
  Bits base_rhs = ts.ones();
  for (const std::size_t i : unconditional)
    and_into(base_rhs, disjunction_bits(steps[i].second.rhs, ts));
  std::vector<Group> groups;
  groups.reserve(by_lhs.size());
  for (const auto& [lhs, indices] : by_lhs) {
    Group g{indices, ts.ones(), ts.ones()};
    for (const Literal& l : lhs) and_into(g.lhs_mask, ts.literal_bits(l));
    for (const std::size_t i : indices)
      and_into(g.rhs_mask, disjunction_bits(steps[i].second.rhs, ts));
    groups.push_back(std::move(g));
  }

  // Even the combination of all clauses has the weakest next-state side of
  // none; if that side fails the first condition, every combination does.
  Bits all_and = base_rhs;
  for (const Group& g : groups) and_into(all_and, g.rhs_mask);
  if (intersects(all_and, l_bits)) return std::nullopt;

  struct Candidate {
    MergedStepClause merged;
    Bits lhs_mask;
    Bits rhs_mask;
    bool alive = true;
  };
  std::vector<Candidate> candidates;
  std::set<std::pair<std::vector<Literal>, std::vector<std::vector<Literal>>>>
      seen;

  const std::size_t d = groups.size();
  std::vector<std::uint32_t> order;
  order.reserve(std::size_t{1} << d);
  for (std::uint32_t m = unconditional.empty() ? 1 : 0;
       m < (std::uint32_t{1} << d); ++m)
    order.push_back(m);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     return std::popcount(a) < std::popcount(b);
                   });

  for (const std::uint32_t m : order) {
    Bits rhs_and = base_rhs;
    Bits lhs_and = ts.ones();
    for (std::uint32_t rest = m; rest; rest &= rest - 1) {
      const Group& g = groups[std::countr_zero(rest)];
      and_into(rhs_and, g.rhs_mask);
      and_into(lhs_and, g.lhs_mask);
    }
    if (intersects(rhs_and, l_bits)) continue;

    std::vector<std::size_t> indices = unconditional;
    for (std::uint32_t rest = m; rest; rest &= rest - 1) {
      const Group& g = groups[std::countr_zero(rest)];
      indices.insert(indices.end(), g.indices.begin(), g.indices.end());
    }
    std::sort(indices.begin(), indices.end());
    std::optional<MergedStepClause> mc;
    for (const std::size_t i : indices) {
      MergedStepClause part =
          MergedStepClause::from_step(steps[i].second, steps[i].first);
      mc = mc ? merge(*mc, part) : part;
    }
    if (!seen.insert({mc->lhs, mc->rhs_cnf}).second) continue;
    candidates.push_back(
        {std::move(*mc), std::move(lhs_and), std::move(rhs_and)});
  }
  if (candidates.empty()) return std::nullopt;

  bool changed = true;
  while (changed) {
    changed = false;
    Bits lhs_or = ts.zeros();
    for (const Candidate& c : candidates)
      if (c.alive) or_into(lhs_or, c.lhs_mask);
    for (Candidate& c : candidates)
      if (c.alive && !subset_bits(c.rhs_mask, lhs_or)) {
        c.alive = false;
        changed = true;
      }
  }

  Loop loop;
  loop.eventuality = eventuality;
  for (const Candidate& c : candidates)
    if (c.alive) loop.members.push_back(c.merged);
  if (loop.members.empty()) return std::nullopt;
  loop.loop_formula = normalized_loop_formula(loop.members);
  return loop;
}

std::vector<SnfClause> loop_resolvents(const SnfClause& sometime,
                                       const Loop& loop,
                                       const PropSymbol& waiting) {
  if (sometime.kind != ClauseKind::Sometime)
    throw std::invalid_argument("loop_resolvents: need a sometime clause");
  if (!(loop.eventuality == sometime.eventuality))
    throw std::invalid_argument(
        "loop_resolvents: loop eventuality differs from the clause's");

  const Literal l = sometime.eventuality;
  std::vector<Literal> neg_c;
  for (const Literal& cl : sometime.lhs.lits) neg_c.push_back(cl.complement());

  std::vector<SnfClause> out;
  auto keep = [&out](const SnfClause& c) {
    if (std::optional<SnfClause> s = simplify(c)) out.push_back(*s);
  };

  for (const std::vector<Literal>& conj : loop.loop_formula) {
    std::vector<Literal> rhs = neg_c;
    rhs.push_back(l);
    for (const Literal& a : conj) rhs.push_back(a.complement());
    keep(SnfClause::initial(rhs));
    keep(SnfClause::step({}, rhs));
  }
  for (const std::vector<Literal>& conj : loop.loop_formula) {
    std::vector<Literal> rhs{l};
    for (const Literal& a : conj) rhs.push_back(a.complement());
    keep(SnfClause::step({Literal{waiting, true}}, rhs));
  }
  return out;
}

} // namespace tres

/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */

#include "testsupport.hpp"

#include "tres/resolution.hpp"
#include "tres/translator.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace tres::test {

Literal lit(const std::string& name, bool positive) {
  return Literal{PropSymbol{name}, positive};
}

// --- formula generation -----------------------------------------------

namespace {

const Connective kUnary[] = {Connective::Not, Connective::Next,
                             Connective::Sometime, Connective::Always};
const Connective kBinary[] = {Connective::And, Connective::Or,
                              Connective::Implies, Connective::Until,
                              Connective::Unless};

FormulaPtr build(Connective k, FormulaPtr a, FormulaPtr b = nullptr) {
  switch (k) {
  case Connective::Not: return Formula::negation(std::move(a));
  case Connective::Next: return Formula::next(std::move(a));
  case Connective::Sometime: return Formula::sometime(std::move(a));
  case Connective::Always: return Formula::always(std::move(a));
  case Connective::And: return Formula::conj(std::move(a), std::move(b));
  case Connective::Or: return Formula::disj(std::move(a), std::move(b));
  case Connective::Implies:
    return Formula::implies(std::move(a), std::move(b));
  case Connective::Until: return Formula::until(std::move(a), std::move(b));
  case Connective::Unless:
    return Formula::unless(std::move(a), std::move(b));
  default: throw std::invalid_argument("build: not a connective");
  }
}

std::size_t pick(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

} // namespace

FormulaPtr random_formula(Rng& rng, int max_nodes,
                          const std::vector<std::string>& props,
                          bool temporal) {
  if (max_nodes <= 1 || pick(rng, 4) == 0) {
    if (pick(rng, 10) == 0)
      return pick(rng, 2) == 0 ? Formula::truth() : Formula::falsity();
    return Formula::prop(props[pick(rng, props.size())]);
  }
  const std::size_t unary_count = temporal ? 4 : 1;
  const std::size_t binary_count = temporal ? 5 : 3;
  if (pick(rng, 2) == 0) {
    const Connective k = kUnary[pick(rng, unary_count)];
    return build(k, random_formula(rng, max_nodes - 1, props, temporal));
  }
  const Connective k = kBinary[pick(rng, binary_count)];
  const int budget = max_nodes - 1;
  const int left = 1 + static_cast<int>(pick(rng, std::max(1, budget - 1)));
  return build(k, random_formula(rng, left, props, temporal),
               random_formula(rng, budget - left, props, temporal));
}

std::vector<FormulaPtr>
enumerate_formulas(int max_nodes, const std::vector<std::string>& props) {
  // by_size[s] holds every formula with exactly s nodes.
  std::vector<std::vector<FormulaPtr>> by_size(max_nodes + 1);
  for (const std::string& p : props)
    if (max_nodes >= 1) by_size[1].push_back(Formula::prop(p));
  for (int s = 2; s <= max_nodes; ++s) {
    for (Connective k : kUnary)
      for (const FormulaPtr& a : by_size[s - 1])
        by_size[s].push_back(build(k, a));
    for (Connective k : kBinary)
      for (int ls = 1; ls <= s - 2; ++ls)
        for (const FormulaPtr& a : by_size[ls])
          for (const FormulaPtr& b : by_size[s - 1 - ls])
            by_size[s].push_back(build(k, a, b));
  }
  std::vector<FormulaPtr> all;
  for (const auto& bucket : by_size)
    all.insert(all.end(), bucket.begin(), bucket.end());
  return all;
}

FormulaPtr random_tautology(Rng& rng, const std::vector<std::string>& props) {
  const FormulaPtr h = random_formula(rng, 4, props, false);
  const FormulaPtr g = random_formula(rng, 4, props, false);
  switch (pick(rng, 7)) {
  case 0: return Formula::disj(h, Formula::negation(h));
  case 1: return Formula::implies(h, h);
  case 2: return Formula::negation(Formula::conj(h, Formula::negation(h)));
  case 3: return Formula::implies(Formula::conj(h, g), h);
  case 4: return Formula::implies(h, Formula::implies(g, h));
  case 5: // Peirce's law
    return Formula::implies(Formula::implies(Formula::implies(h, g), h), h);
  default:
    return Formula::disj(Formula::implies(h, g), Formula::implies(g, h));
  }
}

bool propositional_tautology(const FormulaPtr& f) {
  const std::set<std::string> names = symbols_of(f);
  const std::vector<std::string> syms(names.begin(), names.end());
  if (syms.size() > 16)
    throw std::invalid_argument("propositional_tautology: too many symbols");
  for (std::uint32_t v = 0; v < (1u << syms.size()); ++v) {
    Valuation val;
    for (std::size_t i = 0; i < syms.size(); ++i)
      if ((v >> i) & 1) val.insert(syms[i]);
    const LassoModel m{{}, {val}};
    if (!evaluate(m, 0, f)) return false;
  }
  return true;
}

// --- models -------------------------------------------------------------

LassoModel random_model(Rng& rng, const std::vector<std::string>& props,
                        std::size_t max_prefix, std::size_t max_loop) {
  auto state = [&] {
    Valuation v;
    for (const std::string& p : props)
      if (pick(rng, 2) == 0) v.insert(p);
    return v;
  };
  LassoModel m;
  const std::size_t prefix = pick(rng, max_prefix + 1);
  const std::size_t loop = 1 + pick(rng, max_loop);
  for (std::size_t i = 0; i < prefix; ++i) m.prefix.push_back(state());
  for (std::size_t i = 0; i < loop; ++i) m.loop.push_back(state());
  return m;
}

bool naive_evaluate(const LassoModel& m, std::size_t i, const FormulaPtr& f) {
  const std::size_t window = m.prefix.size() + 2 * m.loop.size();
  switch (f->kind) {
  case Connective::True: return true;
  case Connective::False: return false;
  case Connective::Start: return i == 0;
  case Connective::Prop: return m.state(i).count(f->symbol.name) != 0;
  case Connective::Not: return !naive_evaluate(m, i, f->left);
  case Connective::And:
    return naive_evaluate(m, i, f->left) && naive_evaluate(m, i, f->right);
  case Connective::Or:
    return naive_evaluate(m, i, f->left) || naive_evaluate(m, i, f->right);
  case Connective::Implies:
    return !naive_evaluate(m, i, f->left) || naive_evaluate(m, i, f->right);
  case Connective::Next: return naive_evaluate(m, i + 1, f->left);
  case Connective::Sometime:
    for (std::size_t k = i; k < i + window; ++k)
      if (naive_evaluate(m, k, f->left)) return true;
    return false;
  case Connective::Always:
    for (std::size_t k = i; k < i + window; ++k)
      if (!naive_evaluate(m, k, f->left)) return false;
    return true;
  case Connective::Until:
    for (std::size_t k = i; k < i + window; ++k) {
      if (naive_evaluate(m, k, f->right)) return true;
      if (!naive_evaluate(m, k, f->left)) return false;
    }
    return false;
  case Connective::Unless:
    for (std::size_t k = i; k < i + window; ++k) {
      if (naive_evaluate(m, k, f->right)) return true;
      if (!naive_evaluate(m, k, f->left)) return false;
    }
    return true; // left held throughout the window
  }
  return false; // unreachable
}

std::optional<LassoModel> bounded_lasso(const ClauseSet& cs,
                                        std::size_t max_states) {
  std::vector<std::string> syms;
  for (const PropSymbol& s : cs.symbol_universe()) syms.push_back(s.name);
  if (syms.size() > 3)
    throw std::invalid_argument("bounded_lasso: universe too large");
  const std::size_t vals = std::size_t{1} << syms.size();

  std::vector<FormulaPtr> goals;
  for (const SnfClause& c : cs.clauses())
    goals.push_back(clause_to_formula(c));

  auto valuation = [&](std::size_t v) {
    Valuation val;
    for (std::size_t i = 0; i < syms.size(); ++i)
      if ((v >> i) & 1) val.insert(syms[i]);
    return val;
  };

  for (std::size_t total = 1; total <= max_states; ++total) {
    std::vector<std::size_t> seq(total, 0);
    for (;;) {
      for (std::size_t loop_len = 1; loop_len <= total; ++loop_len) {
        LassoModel m;
        for (std::size_t i = 0; i + loop_len < total; ++i)
          m.prefix.push_back(valuation(seq[i]));
        for (std::size_t i = total - loop_len; i < total; ++i)
          m.loop.push_back(valuation(seq[i]));
        bool ok = true;
        for (const FormulaPtr& g : goals)
          if (!evaluate(m, 0, g)) {
            ok = false;
            break;
          }
        if (ok) return m;
      }
      // next sequence in base `vals`
      std::size_t pos = 0;
      while (pos < total && ++seq[pos] == vals) {
        seq[pos] = 0;
        ++pos;
      }
      if (pos == total) break;
    }
  }
  return std::nullopt;
}

// --- clause generation ----------------------------------------------------

namespace {

std::vector<Literal> random_literals(Rng& rng,
                                     const std::vector<std::string>& symbols,
                                     std::size_t count) {
  std::vector<Literal> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(lit(symbols[pick(rng, symbols.size())], pick(rng, 2) == 0));
  return out;
}

} // namespace

std::vector<std::pair<std::size_t, SnfClause>>
random_step_clauses(Rng& rng, const std::vector<std::string>& symbols,
                    std::size_t max_clauses) {
  std::vector<std::pair<std::size_t, SnfClause>> out;
  const std::size_t count = 1 + pick(rng, max_clauses);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Literal> lhs =
        pick(rng, 5) == 0 ? std::vector<Literal>{}
                          : random_literals(rng, symbols, 1 + pick(rng, 2));
    const bool rhs_true = pick(rng, 10) == 0;
    std::vector<Literal> rhs =
        rhs_true ? std::vector<Literal>{}
                 : random_literals(rng, symbols, 1 + pick(rng, 3));
    out.emplace_back(i + 1, SnfClause::step(std::move(lhs), std::move(rhs),
                                            rhs_true));
  }
  return out;
}

ClauseSet random_clause_set(Rng& rng, const std::vector<std::string>& symbols,
                            std::size_t max_clauses) {
  ClauseSet cs;
  const std::size_t count = 1 + pick(rng, max_clauses);
  for (std::size_t i = 0; i < count; ++i) {
    switch (pick(rng, 4)) {
    case 0:
      cs.insert(SnfClause::initial(
          random_literals(rng, symbols, 1 + pick(rng, 3))));
      break;
    case 1:
      cs.insert(SnfClause::sometime(
          pick(rng, 3) == 0 ? std::vector<Literal>{}
                            : random_literals(rng, symbols, 1),
          lit(symbols[pick(rng, symbols.size())], pick(rng, 2) == 0)));
      break;
    default: {
      std::vector<Literal> lhs =
          pick(rng, 4) == 0 ? std::vector<Literal>{}
                            : random_literals(rng, symbols, 1 + pick(rng, 2));
      cs.insert(SnfClause::step(std::move(lhs),
                                random_literals(rng, symbols,
                                                1 + pick(rng, 3))));
      break;
    }
    }
  }
  return cs;
}

// --- independent loop oracle -----------------------------------------------

std::vector<std::vector<Literal>>
normalize_dnf(std::vector<std::vector<Literal>> dnf) {
  std::vector<std::vector<Literal>> out;
  for (std::vector<Literal>& conj : dnf) {
    std::vector<Literal> c = canonical_literals(std::move(conj));
    if (!has_complementary_pair(c)) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<std::vector<Literal>> kept;
  for (const std::vector<Literal>& c : out) {
    bool superset = false;
    for (const std::vector<Literal>& other : out)
      if (other.size() < c.size() &&
          std::includes(c.begin(), c.end(), other.begin(), other.end())) {
        superset = true;
        break;
      }
    if (!superset) kept.push_back(c);
  }
  return kept;
}

namespace {

FormulaPtr conjunction_formula(const std::vector<Literal>& lits) {
  FormulaPtr f = Formula::truth();
  for (std::size_t i = 0; i < lits.size(); ++i) {
    FormulaPtr l = Formula::literal(lits[i]);
    f = i == 0 ? l : Formula::conj(std::move(f), std::move(l));
  }
  return f;
}

FormulaPtr disjunction_formula(const Disjunction& d) {
  if (d.is_true) return Formula::truth();
  FormulaPtr f = Formula::falsity();
  for (std::size_t i = 0; i < d.lits.size(); ++i) {
    FormulaPtr l = Formula::literal(d.lits[i]);
    f = i == 0 ? l : Formula::disj(std::move(f), std::move(l));
  }
  return f;
}

} // namespace

std::optional<std::vector<std::vector<Literal>>>
brute_force_loop(const std::vector<std::pair<std::size_t, SnfClause>>& steps,
                 const Literal& eventuality) {
  struct Candidate {
    std::vector<Literal> lhs;
    FormulaPtr rhs;
    bool alive = true;
  };
  const FormulaPtr not_l = Formula::literal(eventuality.complement());

  std::vector<Candidate> cands;
  const std::size_t n = steps.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Literal> lhs;
    FormulaPtr rhs = Formula::truth();
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1)) continue;
      const SnfClause& c = steps[i].second;
      if (c.kind != ClauseKind::Step)
        throw std::invalid_argument("brute_force_loop: not a step clause");
      lhs.insert(lhs.end(), c.lhs.lits.begin(), c.lhs.lits.end());
      rhs = Formula::conj(std::move(rhs), disjunction_formula(c.rhs));
    }
    if (!propositional_entails(rhs, not_l)) continue;
    cands.push_back(Candidate{canonical_literals(std::move(lhs)), rhs, true});
  }

  // Greatest fixpoint, deleting one failing candidate at a time.
  bool changed = true;
  while (changed) {
    changed = false;
    FormulaPtr any_lhs = Formula::falsity();
    bool first = true;
    for (const Candidate& c : cands) {
      if (!c.alive) continue;
      FormulaPtr conj = conjunction_formula(c.lhs);
      any_lhs = first ? conj : Formula::disj(std::move(any_lhs), conj);
      first = false;
    }
    for (Candidate& c : cands) {
      if (!c.alive) continue;
      if (!propositional_entails(c.rhs, any_lhs)) {
        c.alive = false;
        changed = true;
        break;
      }
    }
  }

  std::vector<std::vector<Literal>> dnf;
  for (const Candidate& c : cands)
    if (c.alive) dnf.push_back(c.lhs);
  if (dnf.empty()) return std::nullopt;
  return normalize_dnf(std::move(dnf));
}

// --- matching and replay ----------------------------------------------------

namespace {

SnfClause rename_clause(const SnfClause& c,
                        const std::map<std::string, std::string>& map) {
  auto ren = [&](const Literal& l) {
    return Literal{PropSymbol{map.at(l.symbol.name), l.symbol.origin},
                   l.positive};
  };
  auto ren_all = [&](const std::vector<Literal>& lits) {
    std::vector<Literal> out;
    for (const Literal& l : lits) out.push_back(ren(l));
    return out;
  };
  switch (c.kind) {
  case ClauseKind::Initial:
    return SnfClause::initial(ren_all(c.rhs.lits), c.rhs.is_true);
  case ClauseKind::Step:
    return SnfClause::step(ren_all(c.lhs.lits), ren_all(c.rhs.lits),
                           c.rhs.is_true);
  case ClauseKind::Sometime:
    return SnfClause::sometime(ren_all(c.lhs.lits), ren(c.eventuality));
  }
  throw std::invalid_argument("rename_clause: bad kind");
}

} // namespace

bool bijectively_equal(const ClauseSet& a, const ClauseSet& b) {
  std::vector<std::string> from, to;
  for (const PropSymbol& s : a.symbol_universe()) from.push_back(s.name);
  for (const PropSymbol& s : b.symbol_universe()) to.push_back(s.name);
  if (from.size() != to.size() ||
      a.clauses().size() != b.clauses().size())
    return false;

  std::set<SnfClause> want(b.clauses().begin(), b.clauses().end());
  std::sort(to.begin(), to.end());
  do {
    std::map<std::string, std::string> map;
    for (std::size_t i = 0; i < from.size(); ++i) map[from[i]] = to[i];
    std::set<SnfClause> got;
    for (const SnfClause& c : a.clauses()) got.insert(rename_clause(c, map));
    if (got == want) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

std::vector<ReplayIssue> replay(const Verdict& v,
                                const std::map<Literal, PropSymbol>& waiting) {
  std::vector<ReplayIssue> issues;
  auto fail = [&](std::size_t id, std::string note) {
    issues.push_back(ReplayIssue{id, std::move(note)});
  };
  auto clause_at = [&](std::size_t id) -> const SnfClause& {
    return v.trace[id - 1].clause;
  };

  for (const ProofStep& s : v.trace) {
    bool parents_ok = true;
    for (std::size_t p : s.parents)
      if (p == 0 || p >= s.id) parents_ok = false;
    if (!parents_ok) {
      fail(s.id, "parent does not precede the step");
      continue;
    }
    switch (s.rule) {
    case RuleName::Given:
    case RuleName::Translation:
    case RuleName::Augmentation:
      break; // premises, nothing to replay
    case RuleName::InitialRes:
    case RuleName::StepRes: {
      if (s.parents.size() != 2) {
        fail(s.id, "resolution step without two parents");
        break;
      }
      const SnfClause& c1 = clause_at(s.parents[0]);
      const SnfClause& c2 = clause_at(s.parents[1]);
      bool matched = false;
      for (const Literal& l : c1.rhs.lits) {
        const auto& other = c2.rhs.lits;
        if (!std::binary_search(other.begin(), other.end(), l.complement()))
          continue;
        const SnfClause r = s.rule == RuleName::InitialRes
                                ? initial_resolve(c1, c2, l.symbol)
                                : step_resolve(c1, c2, l.symbol);
        const std::optional<SnfClause> simp = simplify(r);
        if (simp && *simp == s.clause) {
          matched = true;
          break;
        }
      }
      if (!matched) fail(s.id, "no pivot reproduces the resolvent");
      break;
    }
    case RuleName::RewriteFalse: {
      if (s.parents.size() != 1) {
        fail(s.id, "rewrite step without one parent");
        break;
      }
      const auto [c1, c2] = rewrite_false(clause_at(s.parents[0]));
      const std::optional<SnfClause> s1 = simplify(c1);
      const std::optional<SnfClause> s2 = simplify(c2);
      if (!((s1 && *s1 == s.clause) || (s2 && *s2 == s.clause)))
        fail(s.id, "rewrite does not reproduce the clause");
      break;
    }
    case RuleName::TemporalRes: {
      bool matched = false;
      for (const LoopRecord& rec : v.loops) {
        if (!std::includes(s.parents.begin(), s.parents.end(),
                           rec.members.begin(), rec.members.end()))
          continue;
        // The one parent outside the member list is the sometime clause.
        std::vector<std::size_t> rest;
        std::set_difference(s.parents.begin(), s.parents.end(),
                            rec.members.begin(), rec.members.end(),
                            std::back_inserter(rest));
        if (rest.size() != 1) continue;
        const SnfClause& sc = clause_at(rest[0]);
        if (sc.kind != ClauseKind::Sometime ||
            sc.eventuality != rec.eventuality)
          continue;
        const Loop loop{{}, rec.eventuality, rec.loop_formula};
        for (const SnfClause& r :
             loop_resolvents(sc, loop, waiting.at(rec.eventuality)))
          if (r == s.clause) {
            matched = true;
            break;
          }
        if (matched) break;
      }
      if (!matched) fail(s.id, "no loop record reproduces the resolvent");
      break;
    }
    default:
      fail(s.id, "unexpected rule in trace");
      break;
    }
  }
  return issues;
}

std::map<Literal, PropSymbol> waiting_for(const FormulaPtr& f,
                                          ProveMode mode) {
  const FormulaPtr w = mode == ProveMode::Validity
                           ? push_negations(negate(f))
                           : f;
  return augment(tau0(w).clauses).waiting;
}

// --- graph reference ----------------------------------------------------

ReducedShape shape_of(const BehaviourGraph& g) {
  ReducedShape shape;
  for (const BehaviourNode& n : g.nodes)
    shape.nodes.insert(NodeKey{n.vmask, n.emask});
  for (std::size_t i : g.initial) {
    const BehaviourNode& n = g.nodes[i];
    shape.initial.insert(NodeKey{n.vmask, n.emask});
  }
  return shape;
}

ReducedShape sequential_reduce(const BehaviourGraph& g) {
  const std::size_t count = g.nodes.size();
  const std::size_t n = g.symbols.size();
  std::vector<char> alive(count, 1);

  auto satisfies = [&](std::size_t node, std::size_t ev) {
    const Literal& l = g.eventualities[ev];
    std::size_t idx = 0;
    while (g.symbols[idx] != l.symbol.name) ++idx;
    const bool value = (g.nodes[node].vmask >> (n - 1 - idx)) & 1;
    return value == l.positive;
  };

  std::vector<std::vector<std::size_t>> preds(count);
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t v : g.successors[u]) preds[v].push_back(u);

  auto deletable = [&](std::size_t u) {
    bool has_succ = false;
    for (std::size_t v : g.successors[u])
      if (alive[v]) {
        has_succ = true;
        break;
      }
    if (!has_succ) return true;
    for (std::size_t j = 0; j < g.eventualities.size(); ++j) {
      if (!((g.nodes[u].emask >> j) & 1)) continue;
      // Backward closure of the alive nodes satisfying the eventuality.
      std::vector<char> reach(count, 0);
      std::deque<std::size_t> work;
      for (std::size_t x = 0; x < count; ++x)
        if (alive[x] && satisfies(x, j)) {
          reach[x] = 1;
          work.push_back(x);
        }
      while (!work.empty()) {
        const std::size_t x = work.front();
        work.pop_front();
        for (std::size_t p : preds[x])
          if (alive[p] && !reach[p]) {
            reach[p] = 1;
            work.push_back(p);
          }
      }
      if (!reach[u]) return true;
    }
    return false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t u = 0; u < count; ++u) {
      if (!alive[u]) continue;
      if (deletable(u)) {
        alive[u] = 0;
        changed = true;
        break; // one deletion at a time
      }
    }
  }

  ReducedShape shape;
  for (std::size_t u = 0; u < count; ++u)
    if (alive[u])
      shape.nodes.insert(NodeKey{g.nodes[u].vmask, g.nodes[u].emask});
  for (std::size_t u : g.initial)
    if (alive[u])
      shape.initial.insert(NodeKey{g.nodes[u].vmask, g.nodes[u].emask});
  return shape;
}

} // namespace tres::test

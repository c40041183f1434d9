/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file resolution.cpp
 * The step-resolution calculus and the saturation engine.
 *
 * The engine runs a given-clause loop: clauses wait on a passive stack,
 * the most recently added clause is popped first, joins the active
 * list, and resolves against every active clause in insertion order,
 * one resolvent per pivot in symbol-name order.  Depth-first selection
 * chases each fresh resolvent before returning to older clauses, which
 * keeps refutation traces close to hand derivations.  Every new clause
 * is simplified, checked against all clauses ever recorded (exact
 * duplicates are dropped), forward-subsumption checked against the
 * live set, and then used to delete the live clauses it subsumes.  A
 * step clause with next-state side false is recorded, rewritten into
 * its two constraint clauses, and retired.  Deriving `start => false`
 * stops everything at once.
 */

#include "tres/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace tres {

std::string rule_label(RuleName r) {
  switch (r) {
  case RuleName::Given: return "Given";
  case RuleName::Translation: return "Translation";
  case RuleName::Augmentation: return "Augmentation";
  case RuleName::InitialRes: return "(Initial) Step Resolution";
  case RuleName::StepRes: return "Step Resolution";
  case RuleName::RewriteFalse: return "Rewriting";
  case RuleName::Simplify: return "Simplification";
  case RuleName::Subsume: return "Subsumption";
  case RuleName::TemporalRes: return "Temporal Resolution";
  }
  return "";
}

std::string print_step(const ProofStep& s) {
  std::string out = std::to_string(s.id) + ". " + print_clause(s.clause) + " [";
  for (std::size_t i = 0; i < s.parents.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.parents[i]);
  }
  if (!s.parents.empty()) out += " ";
  out += rule_label(s.rule) + "]";
  return out;
}

std::string print_trace(const Trace& t) {
  std::string out;
  for (const ProofStep& s : t) {
    out += print_step(s);
    out += '\n';
  }
  return out;
}

namespace {

/// a is a subset of b; both canonical.
bool subset(const std::vector<Literal>& a, const std::vector<Literal>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Disjunction inclusion with the constant-true flag: by implies c.
bool disjunction_leq(const Disjunction& by, const Disjunction& c) {
  if (c.is_true) return true;
  if (by.is_true) return false;
  return subset(by.lits, c.lits);
}

/// Conjunction inclusion with the constant-false flag: c implies by.
bool conjunction_geq(const Conjunction& c, const Conjunction& by) {
  if (c.is_false) return true;
  if (by.is_false) return false;
  return subset(by.lits, c.lits);
}

} // namespace

std::optional<SnfClause> simplify(const SnfClause& c) {
  switch (c.kind) {
  case ClauseKind::Initial:
    if (c.rhs.is_true || has_complementary_pair(c.rhs.lits))
      return std::nullopt;
    return c;
  case ClauseKind::Step:
    if (c.lhs.is_false || has_complementary_pair(c.lhs.lits))
      return std::nullopt;
    if (c.rhs.is_true || has_complementary_pair(c.rhs.lits))
      return std::nullopt;
    return c;
  case ClauseKind::Sometime:
    if (c.lhs.is_false || has_complementary_pair(c.lhs.lits))
      return std::nullopt;
    return c;
  }
  return c;
}

bool subsumes(const SnfClause& c, const SnfClause& by) {
  if (c.kind != by.kind)
    throw std::invalid_argument("subsumes: clause kinds differ");
  switch (c.kind) {
  case ClauseKind::Initial:
    return disjunction_leq(by.rhs, c.rhs);
  case ClauseKind::Step:
    return conjunction_geq(c.lhs, by.lhs) && disjunction_leq(by.rhs, c.rhs);
  case ClauseKind::Sometime:
    if (!(c.eventuality == by.eventuality))
      throw std::invalid_argument("subsumes: eventualities differ");
    return conjunction_geq(c.lhs, by.lhs);
  }
  return false;
}

namespace {

/// Removes the pivot literals and unions the remaining right-hand
/// sides.  Throws when the pivot does not occur with opposite
/// polarities.
std::vector<Literal> resolve_rhs(const Disjunction& r1, const Disjunction& r2,
                                 const PropSymbol& pivot) {
  bool pol1 = false, pol2 = false, found1 = false, found2 = false;
  for (const Literal& l : r1.lits)
    if (l.symbol == pivot) {
      found1 = true;
      pol1 = l.positive;
    }
  for (const Literal& l : r2.lits)
    if (l.symbol == pivot) {
      found2 = true;
      pol2 = l.positive;
    }
  if (!found1 || !found2 || pol1 == pol2)
    throw std::invalid_argument(
        "resolve: pivot does not occur with opposite polarities");
  std::vector<Literal> out;
  for (const Literal& l : r1.lits)
    if (!(l.symbol == pivot)) out.push_back(l);
  for (const Literal& l : r2.lits)
    if (!(l.symbol == pivot)) out.push_back(l);
  return out;
}

} // namespace

SnfClause initial_resolve(const SnfClause& c1, const SnfClause& c2,
                          const PropSymbol& pivot) {
  if (c1.kind != ClauseKind::Initial || c2.kind != ClauseKind::Initial)
    throw std::invalid_argument("initial_resolve: need two initial clauses");
  return SnfClause::initial(resolve_rhs(c1.rhs, c2.rhs, pivot));
}

SnfClause step_resolve(const SnfClause& c1, const SnfClause& c2,
                       const PropSymbol& pivot) {
  if (c1.kind != ClauseKind::Step || c2.kind != ClauseKind::Step)
    throw std::invalid_argument("step_resolve: need two step clauses");
  std::vector<Literal> lhs = c1.lhs.lits;
  lhs.insert(lhs.end(), c2.lhs.lits.begin(), c2.lhs.lits.end());
  return SnfClause::step(std::move(lhs), resolve_rhs(c1.rhs, c2.rhs, pivot));
}

std::pair<SnfClause, SnfClause> rewrite_false(const SnfClause& c) {
  if (c.kind != ClauseKind::Step || c.rhs.is_true || !c.rhs.lits.empty())
    throw std::invalid_argument(
        "rewrite_false: need a step clause with next-state side false");
  std::vector<Literal> negated;
  for (const Literal& l : c.lhs.lits) negated.push_back(l.complement());
  return {SnfClause::initial(negated), SnfClause::step({}, negated)};
}

std::vector<std::vector<Literal>>
canonical_cnf(std::vector<std::vector<Literal>> cnf) {
  std::vector<std::vector<Literal>> out;
  for (std::vector<Literal>& cl : cnf) {
    std::vector<Literal> c = canonical_literals(std::move(cl));
    if (!has_complementary_pair(c)) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<std::vector<Literal>> kept;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < out.size() && !redundant; ++j)
      if (j != i && out[j].size() < out[i].size() && subset(out[j], out[i]))
        redundant = true;
    if (!redundant) kept.push_back(out[i]);
  }
  return kept;
}

MergedStepClause MergedStepClause::from_step(const SnfClause& c,
                                             std::size_t id) {
  if (c.kind != ClauseKind::Step)
    throw std::invalid_argument("from_step: need a step clause");
  MergedStepClause m;
  m.lhs = c.lhs.lits;
  if (!c.rhs.is_true) m.rhs_cnf = canonical_cnf({c.rhs.lits});
  m.sources = {id};
  return m;
}

bool operator==(const MergedStepClause& a, const MergedStepClause& b) {
  return a.lhs == b.lhs && a.rhs_cnf == b.rhs_cnf && a.sources == b.sources;
}

MergedStepClause merge(const MergedStepClause& a, const MergedStepClause& b) {
  MergedStepClause m;
  std::vector<Literal> lhs = a.lhs;
  lhs.insert(lhs.end(), b.lhs.begin(), b.lhs.end());
  m.lhs = canonical_literals(std::move(lhs));
  std::vector<std::vector<Literal>> cnf = a.rhs_cnf;
  cnf.insert(cnf.end(), b.rhs_cnf.begin(), b.rhs_cnf.end());
  m.rhs_cnf = canonical_cnf(std::move(cnf));
  m.sources = a.sources;
  m.sources.insert(m.sources.end(), b.sources.begin(), b.sources.end());
  std::sort(m.sources.begin(), m.sources.end());
  m.sources.erase(std::unique(m.sources.begin(), m.sources.end()),
                  m.sources.end());
  return m;
}

std::optional<std::size_t>
ResolutionEngine::add_clause(const SnfClause& c, RuleName rule,
                             std::vector<std::size_t> parents) {
  return process_new(c, rule, std::move(parents));
}

std::optional<std::size_t>
ResolutionEngine::process_new(const SnfClause& raw, RuleName rule,
                              std::vector<std::size_t> parents) {
  if (refuted_) return std::nullopt;
  std::optional<SnfClause> simplified = simplify(raw);
  if (!simplified) return std::nullopt;
  SnfClause c = std::move(*simplified);
  std::sort(parents.begin(), parents.end());

  const bool contradiction = c.kind == ClauseKind::Initial &&
                             !c.rhs.is_true && c.rhs.lits.empty();
  auto compatible = [&c](const SnfClause& other) {
    if (other.kind != c.kind) return false;
    if (c.kind == ClauseKind::Sometime)
      return other.eventuality == c.eventuality;
    return true;
  };

  if (!contradiction) {
    if (seen_.count(c)) return std::nullopt;
    for (std::size_t i = 0; i < trace_.size(); ++i)
      if (!deleted_[i] && compatible(trace_[i].clause) &&
          subsumes(c, trace_[i].clause))
        return std::nullopt;
  }

  const std::size_t id = trace_.size() + 1;
  trace_.push_back(ProofStep{id, c, rule, std::move(parents)});
  deleted_.push_back(0);
  replaced_by_.push_back(0);
  seen_.insert(c);
  if (contradiction) {
    refuted_ = true;
    return id;
  }

  for (std::size_t i = 0; i + 1 < trace_.size(); ++i)
    if (!deleted_[i] && compatible(trace_[i].clause) &&
        subsumes(trace_[i].clause, c)) {
      deleted_[i] = 1;
      replaced_by_[i] = id;
    }

  passive_.push_back(id);

  if (c.kind == ClauseKind::Step && !c.rhs.is_true && c.rhs.lits.empty()) {
    // A next-state contradiction: its left-hand side may never hold.
    auto [as_initial, as_step] = rewrite_false(c);
    process_new(as_initial, RuleName::RewriteFalse, {id});
    process_new(as_step, RuleName::RewriteFalse, {id});
    deleted_[id - 1] = 1;
  }
  return id;
}

void ResolutionEngine::resolve_pair(std::size_t id1, std::size_t id2) {
  const SnfClause a = trace_[id1 - 1].clause;
  const SnfClause b = trace_[id2 - 1].clause;
  if (a.kind != b.kind || a.kind == ClauseKind::Sometime) return;

  // Right-hand sides are canonical and tautology-free, so each symbol
  // occurs at most once per side and the pivots come out name-sorted.
  std::vector<PropSymbol> pivots;
  for (const Literal& l : a.rhs.lits) {
    Literal want = l.complement();
    if (std::binary_search(b.rhs.lits.begin(), b.rhs.lits.end(), want))
      pivots.push_back(l.symbol);
  }

  const RuleName rule = a.kind == ClauseKind::Initial ? RuleName::InitialRes
                                                      : RuleName::StepRes;
  for (const PropSymbol& p : pivots) {
    if (refuted_ || deleted_[id1 - 1] || deleted_[id2 - 1]) return;
    SnfClause r = a.kind == ClauseKind::Initial ? initial_resolve(a, b, p)
                                                : step_resolve(a, b, p);
    process_new(r, rule, {id1, id2});
  }
}

SaturationStatus ResolutionEngine::saturate() {
  while (!refuted_ && !passive_.empty()) {
    const std::size_t given = passive_.back();
    passive_.pop_back();
    if (deleted_[given - 1]) continue;
    active_.push_back(given);
    for (std::size_t k = 0; k + 1 < active_.size(); ++k) {
      if (refuted_ || deleted_[given - 1]) break;
      const std::size_t other = active_[k];
      if (deleted_[other - 1]) continue;
      resolve_pair(other, given);
    }
  }
  return refuted_ ? SaturationStatus::Refuted : SaturationStatus::Saturated;
}

const SnfClause& ResolutionEngine::clause_of(std::size_t id) const {
  if (id == 0 || id > trace_.size())
    throw std::out_of_range("clause_of: no such step id");
  return trace_[id - 1].clause;
}

std::vector<std::pair<std::size_t, SnfClause>> ResolutionEngine::live() const {
  std::vector<std::pair<std::size_t, SnfClause>> out;
  for (std::size_t i = 0; i < trace_.size(); ++i)
    if (!deleted_[i]) out.emplace_back(i + 1, trace_[i].clause);
  return out;
}

std::vector<std::pair<std::size_t, SnfClause>>
ResolutionEngine::live(ClauseKind kind) const {
  std::vector<std::pair<std::size_t, SnfClause>> out;
  for (std::size_t i = 0; i < trace_.size(); ++i)
    if (!deleted_[i] && trace_[i].clause.kind == kind)
      out.emplace_back(i + 1, trace_[i].clause);
  return out;
}

ClauseSet ResolutionEngine::live_set() const {
  ClauseSet cs;
  for (std::size_t i = 0; i < trace_.size(); ++i)
    if (!deleted_[i]) cs.insert(trace_[i].clause);
  return cs;
}

std::vector<std::pair<std::size_t, SnfClause>>
ResolutionEngine::representatives(ClauseKind kind) const {
  std::set<std::size_t> ids;
  for (std::size_t i = 0; i < trace_.size(); ++i) {
    if (trace_[i].clause.kind != kind) continue;
    if (trace_[i].rule == RuleName::StepRes ||
        trace_[i].rule == RuleName::InitialRes)
      continue;
    // Subsumer ids only grow, so the chain ends at a live clause unless
    // the last holder was dissolved by the next-state-false rewrite; its
    // rewrite products stand in for it and are walked in their own right.
    std::size_t at = i;
    while (deleted_[at] && replaced_by_[at] != 0)
      at = replaced_by_[at] - 1;
    if (!deleted_[at]) ids.insert(at + 1);
  }
  std::vector<std::pair<std::size_t, SnfClause>> out;
  out.reserve(ids.size());
  for (std::size_t id : ids) out.emplace_back(id, trace_[id - 1].clause);
  return out;
}

SaturationResult saturate(const ClauseSet& cs) {
  ResolutionEngine engine;
  for (const SnfClause& c : cs.clauses())
    engine.add_clause(c, RuleName::Given, {});
  SaturationResult out;
  out.status = engine.saturate();
  out.final_set = engine.live_set();
  out.trace = engine.trace();
  return out;
}

} // namespace tres

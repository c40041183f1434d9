/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file graph.cpp
 * Behaviour graph construction, reduction, and model extraction.
 *
 * Construction walks the reachable state space with a worklist.  The per-
 * valuation data (which step clauses fire, which successor valuations the
 * fired clauses allow, which eventualities fire or are satisfied) depends
 * only on the valuation, so it is cached in arrays indexed by valuation
 * mask; successor-valuation sets are bit vectors over the valuation space.
 */

#include "tres/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace tres {

namespace {

/// Per-valuation successor constraints and eventuality masks.
struct ValuationTables {
  std::size_t n = 0;
  std::uint32_t nvals = 1;
  std::size_t words = 1;
  // allowed[v] has bit v' set when v' satisfies every step clause fired
  // by v.
  std::vector<std::vector<std::uint64_t>> allowed;
  std::vector<std::uint32_t> fired_ev;     // eventualities fired by v
  std::vector<std::uint32_t> satisfied_ev; // eventuality literals true in v
  std::vector<char> initial_ok;            // v satisfies all initial clauses
};

bool literal_true(std::uint32_t vmask, std::size_t symbol_index,
                  std::size_t n, bool positive) {
  const bool value = (vmask >> (n - 1 - symbol_index)) & 1;
  return value == positive;
}

ValuationTables build_tables(const ClauseSet& cs,
                             const std::vector<std::string>& symbols,
                             const std::vector<Literal>& eventualities) {
  ValuationTables t;
  t.n = symbols.size();
  t.nvals = std::uint32_t{1} << t.n;
  t.words = (t.nvals + 63) / 64;

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < symbols.size(); ++i) index.emplace(symbols[i], i);

  auto lit_true = [&](std::uint32_t v, const Literal& l) {
    return literal_true(v, index.at(l.symbol.name), t.n, l.positive);
  };
  auto conj_true = [&](std::uint32_t v, const Conjunction& c) {
    if (c.is_false) return false;
    for (const Literal& l : c.lits)
      if (!lit_true(v, l)) return false;
    return true;
  };
  auto disj_true = [&](std::uint32_t v, const Disjunction& d) {
    if (d.is_true) return true;
    for (const Literal& l : d.lits)
      if (lit_true(v, l)) return true;
    return false;
  };

  // Valuation sets of the step-clause next-state sides.
  std::vector<const SnfClause*> steps, initials, sometimes;
  for (const SnfClause& c : cs.clauses()) {
    if (c.kind == ClauseKind::Step) steps.push_back(&c);
    else if (c.kind == ClauseKind::Initial) initials.push_back(&c);
    else sometimes.push_back(&c);
  }
  std::vector<std::vector<std::uint64_t>> rhs_sets(steps.size());
  for (std::size_t s = 0; s < steps.size(); ++s) {
    rhs_sets[s].assign(t.words, 0);
    for (std::uint32_t v = 0; v < t.nvals; ++v)
      if (disj_true(v, steps[s]->rhs))
        rhs_sets[s][v / 64] |= std::uint64_t{1} << (v % 64);
  }

  std::vector<std::uint64_t> all(t.words, ~std::uint64_t{0});
  if (t.nvals % 64 != 0)
    all.back() = (std::uint64_t{1} << (t.nvals % 64)) - 1;

  t.allowed.assign(t.nvals, {});
  t.fired_ev.assign(t.nvals, 0);
  t.satisfied_ev.assign(t.nvals, 0);
  t.initial_ok.assign(t.nvals, 0);

  std::map<Literal, std::size_t> ev_index;
  for (std::size_t j = 0; j < eventualities.size(); ++j)
    ev_index.emplace(eventualities[j], j);

  for (std::uint32_t v = 0; v < t.nvals; ++v) {
    std::vector<std::uint64_t> acc = all;
    for (std::size_t s = 0; s < steps.size(); ++s)
      if (conj_true(v, steps[s]->lhs))
        for (std::size_t w = 0; w < t.words; ++w) acc[w] &= rhs_sets[s][w];
    t.allowed[v] = std::move(acc);

    for (const SnfClause* c : sometimes)
      if (conj_true(v, c->lhs))
        t.fired_ev[v] |= std::uint32_t{1} << ev_index.at(c->eventuality);
    for (std::size_t j = 0; j < eventualities.size(); ++j)
      if (lit_true(v, eventualities[j]))
        t.satisfied_ev[v] |= std::uint32_t{1} << j;

    bool ok = true;
    for (const SnfClause* c : initials)
      if (!disj_true(v, c->rhs)) {
        ok = false;
        break;
      }
    t.initial_ok[v] = ok;
  }
  return t;
}

} // namespace

Valuation BehaviourGraph::valuation_of(std::size_t node) const {
  Valuation out;
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if ((nodes[node].vmask >> (symbols.size() - 1 - i)) & 1)
      out.insert(symbols[i]);
  return out;
}

std::vector<Literal> BehaviourGraph::outstanding_of(std::size_t node) const {
  std::vector<Literal> out;
  for (std::size_t j = 0; j < eventualities.size(); ++j)
    if ((nodes[node].emask >> j) & 1) out.push_back(eventualities[j]);
  return out;
}

BehaviourGraph build_graph(const ClauseSet& cs, std::size_t max_symbols) {
  BehaviourGraph g;
  for (const PropSymbol& s : cs.symbol_universe()) g.symbols.push_back(s.name);
  if (g.symbols.size() > max_symbols)
    throw ResourceLimitError("behaviour graph over " +
                             std::to_string(g.symbols.size()) +
                             " symbols exceeds the cap of " +
                             std::to_string(max_symbols));

  std::set<Literal> evs;
  for (const SnfClause& c : cs.clauses())
    if (c.kind == ClauseKind::Sometime) evs.insert(c.eventuality);
  g.eventualities.assign(evs.begin(), evs.end());

  const ValuationTables t = build_tables(cs, g.symbols, g.eventualities);

  // Reachability walk over (vmask, emask) pairs.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> seen;
  std::vector<BehaviourNode> found;
  std::vector<char> is_initial;
  std::deque<std::size_t> work;

  auto visit = [&seen, &found, &is_initial,
                &work](std::uint32_t v, std::uint32_t e) {
    auto [it, fresh] = seen.emplace(std::make_pair(v, e), found.size());
    if (fresh) {
      found.push_back(BehaviourNode{v, e});
      is_initial.push_back(0);
      work.push_back(it->second);
    }
    return it->second;
  };

  for (std::uint32_t v = 0; v < t.nvals; ++v)
    if (t.initial_ok[v]) is_initial[visit(v, t.fired_ev[v])] = 1;

  std::vector<std::vector<std::size_t>> succ_tmp;
  succ_tmp.resize(found.size());
  while (!work.empty()) {
    const std::size_t u = work.front();
    work.pop_front();
    const std::uint32_t v = found[u].vmask;
    const std::uint32_t carried = found[u].emask & ~t.satisfied_ev[v];
    std::vector<std::size_t> targets;
    const std::vector<std::uint64_t>& allowed = t.allowed[v];
    for (std::size_t w = 0; w < t.words; ++w) {
      std::uint64_t bits = allowed[w];
      while (bits) {
        const std::uint32_t v2 =
            static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        targets.push_back(visit(v2, carried | t.fired_ev[v2]));
      }
    }
    if (succ_tmp.size() < found.size()) succ_tmp.resize(found.size());
    succ_tmp[u] = std::move(targets);
  }
  succ_tmp.resize(found.size());

  // Canonical order: more true symbols first, then by eventuality mask.
  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  const std::uint32_t full = t.nvals - 1;
  auto key = [&found, full](std::size_t i) {
    return std::make_pair(~found[i].vmask & full, found[i].emask);
  };
  std::sort(perm.begin(), perm.end(),
            [&key](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

  g.nodes.resize(found.size());
  g.successors.resize(found.size());
  for (std::size_t old = 0; old < found.size(); ++old) {
    g.nodes[rank[old]] = found[old];
    std::vector<std::size_t> s;
    s.reserve(succ_tmp[old].size());
    for (std::size_t v2 : succ_tmp[old]) s.push_back(rank[v2]);
    std::sort(s.begin(), s.end());
    g.successors[rank[old]] = std::move(s);
    if (is_initial[old]) g.initial.push_back(rank[old]);
  }
  std::sort(g.initial.begin(), g.initial.end());
  return g;
}

BehaviourGraph reduce_graph(const BehaviourGraph& g) {
  const std::size_t count = g.nodes.size();
  const std::size_t n = g.symbols.size();
  std::vector<char> alive(count, 1);

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(g.symbols[i], i);
  auto satisfies = [&](std::size_t node, const Literal& l) {
    return literal_true(g.nodes[node].vmask, index.at(l.symbol.name), n,
                        l.positive);
  };

  std::vector<std::vector<std::size_t>> preds(count);
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t v : g.successors[u]) preds[v].push_back(u);

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<char> kill(count, 0);

    for (std::size_t u = 0; u < count; ++u) {
      if (!alive[u]) continue;
      bool has_succ = false;
      for (std::size_t v : g.successors[u])
        if (alive[v]) {
          has_succ = true;
          break;
        }
      if (!has_succ) kill[u] = 1;
    }

    for (std::size_t j = 0; j < g.eventualities.size(); ++j) {
      const Literal& l = g.eventualities[j];
      // Backward closure of the live nodes whose valuation satisfies l.
      std::vector<char> reach(count, 0);
      std::deque<std::size_t> work;
      for (std::size_t u = 0; u < count; ++u)
        if (alive[u] && satisfies(u, l)) {
          reach[u] = 1;
          work.push_back(u);
        }
      while (!work.empty()) {
        const std::size_t v = work.front();
        work.pop_front();
        for (std::size_t p : preds[v])
          if (alive[p] && !reach[p]) {
            reach[p] = 1;
            work.push_back(p);
          }
      }
      for (std::size_t u = 0; u < count; ++u)
        if (alive[u] && ((g.nodes[u].emask >> j) & 1) && !satisfies(u, l) &&
            !reach[u])
          kill[u] = 1;
    }

    for (std::size_t u = 0; u < count; ++u)
      if (alive[u] && kill[u]) {
        alive[u] = 0;
        changed = true;
      }
  }

  BehaviourGraph out;
  out.symbols = g.symbols;
  out.eventualities = g.eventualities;
  std::vector<std::size_t> rank(count, 0);
  for (std::size_t u = 0; u < count; ++u) {
    if (!alive[u]) continue;
    rank[u] = out.nodes.size();
    out.nodes.push_back(g.nodes[u]);
  }
  out.successors.resize(out.nodes.size());
  for (std::size_t u = 0; u < count; ++u) {
    if (!alive[u]) continue;
    std::vector<std::size_t> s;
    for (std::size_t v : g.successors[u])
      if (alive[v]) s.push_back(rank[v]);
    out.successors[rank[u]] = std::move(s);
  }
  for (std::size_t u : g.initial)
    if (alive[u]) out.initial.push_back(rank[u]);
  return out;
}

bool is_satisfiable(const ClauseSet& cs, std::size_t max_symbols) {
  return !reduce_graph(build_graph(cs, max_symbols)).empty();
}

namespace {

/// Breadth-first path from `from` to the least nearest node satisfying
/// eventualities[j]; returns the node sequence after `from`.
std::vector<std::size_t> discharge_path(const BehaviourGraph& g,
                                        std::size_t from,
                                        const Literal& l,
                                        std::size_t symbol_index) {
  const std::size_t count = g.nodes.size();
  const std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(count, npos);
  std::vector<std::size_t> dist(count, npos);
  std::deque<std::size_t> work{from};
  dist[from] = 0;

  auto sat = [&](std::size_t u) {
    return literal_true(g.nodes[u].vmask, symbol_index, g.symbols.size(),
                        l.positive);
  };

  while (!work.empty()) {
    const std::size_t u = work.front();
    work.pop_front();
    for (std::size_t v : g.successors[u])
      if (dist[v] == npos) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        work.push_back(v);
      }
  }

  std::size_t best = npos;
  for (std::size_t u = 0; u < count; ++u) {
    if (dist[u] == npos || !sat(u)) continue;
    if (best == npos || dist[u] < dist[best] ||
        (dist[u] == dist[best] && u < best))
      best = u;
  }
  if (best == npos)
    throw std::invalid_argument(
        "extract_model: graph is not reduced (unfulfillable eventuality)");

  std::vector<std::size_t> path;
  for (std::size_t u = best; u != from; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

} // namespace

LassoModel extract_model(const BehaviourGraph& g) {
  if (g.empty())
    throw std::invalid_argument("extract_model: the graph is empty");
  if (g.initial.empty())
    throw std::invalid_argument("extract_model: no initial node");
  for (const std::vector<std::size_t>& s : g.successors)
    if (s.empty())
      throw std::invalid_argument(
          "extract_model: graph is not reduced (terminal node)");

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.symbols.size(); ++i)
    index.emplace(g.symbols[i], i);

  const std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> started_segment(g.nodes.size(), npos);
  std::vector<std::vector<std::size_t>> segments;
  std::size_t current = g.initial.front();

  for (;;) {
    if (started_segment[current] != npos) {
      const std::size_t first_loop_segment = started_segment[current];
      LassoModel m;
      for (std::size_t s = 0; s < segments.size(); ++s)
        for (std::size_t u : segments[s]) {
          if (s < first_loop_segment) m.prefix.push_back(g.valuation_of(u));
          else m.loop.push_back(g.valuation_of(u));
        }
      return m;
    }
    started_segment[current] = segments.size();

    std::vector<std::size_t> path{current};
    const std::uint32_t outstanding = g.nodes[current].emask;
    for (std::size_t j = 0; j < g.eventualities.size(); ++j) {
      if (!((outstanding >> j) & 1)) continue;
      const Literal& l = g.eventualities[j];
      const std::size_t si = index.at(l.symbol.name);
      bool done = false;
      for (std::size_t u : path)
        if (literal_true(g.nodes[u].vmask, si, g.symbols.size(),
                         l.positive)) {
          done = true;
          break;
        }
      if (done) continue;
      std::vector<std::size_t> ext = discharge_path(g, path.back(), l, si);
      path.insert(path.end(), ext.begin(), ext.end());
    }

    current = g.successors[path.back()].front();
    segments.push_back(std::move(path));
  }
}

std::string to_dot(const BehaviourGraph& g) {
  std::string out = "digraph behaviour {\n  rankdir=LR;\n";
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    std::string label;
    for (std::size_t i = 0; i < g.symbols.size(); ++i) {
      if (!label.empty()) label += " ";
      if (!((g.nodes[u].vmask >> (g.symbols.size() - 1 - i)) & 1))
        label += "~";
      label += g.symbols[i];
    }
    label += " |";
    for (const Literal& l : g.outstanding_of(u)) label += " " + print_literal(l);
    out += "  n" + std::to_string(u) + " [label=\"" + label + "\"";
    if (std::binary_search(g.initial.begin(), g.initial.end(), u))
      out += " peripheries=2";
    out += "];\n";
  }
  for (std::size_t u = 0; u < g.nodes.size(); ++u)
    for (std::size_t v : g.successors[u])
      out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

} // namespace tres

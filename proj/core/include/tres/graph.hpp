/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file graph.hpp
 * The behaviour graph: an explicit semantic decision procedure used as an
 * independent oracle.  A node pairs a valuation of the whole symbol
 * universe with the set of outstanding eventualities; the graph is built
 * from the initial nodes, reduced by deleting terminal nodes and nodes
 * with unfulfillable eventualities, and is empty exactly when the clause
 * set is unsatisfiable.  A non-empty reduced graph yields a lasso model.
 */

#ifndef TRES_GRAPH_HPP
#define TRES_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tres/clause.hpp"
#include "tres/formula.hpp"
#include "tres/limits.hpp"

namespace tres {

/// One behaviour-graph node.  Bit n-1-i of vmask holds the truth value of
/// symbols[i] (so the all-true valuation has the largest mask); bit j of
/// emask marks eventualities[j] as outstanding.
struct BehaviourNode {
  std::uint32_t vmask = 0;
  std::uint32_t emask = 0;

  friend bool operator==(const BehaviourNode& a, const BehaviourNode& b) {
    return a.vmask == b.vmask && a.emask == b.emask;
  }
};

/// The reachable behaviour graph of a clause set.  Nodes are stored in a
/// canonical order (valuations with more true symbols first, then by
/// outstanding-eventuality mask); successor lists and the initial list are
/// ascending node indices.
struct BehaviourGraph {
  std::vector<std::string> symbols;
  std::vector<Literal> eventualities;
  std::vector<BehaviourNode> nodes;
  std::vector<std::vector<std::size_t>> successors;
  std::vector<std::size_t> initial;

  bool empty() const { return nodes.empty(); }

  /// The set of symbol names true at a node.
  Valuation valuation_of(std::size_t node) const;

  /// The outstanding eventualities of a node, in canonical literal order.
  std::vector<Literal> outstanding_of(std::size_t node) const;
};

/// Builds the reachable behaviour graph.  Initial nodes are the valuations
/// satisfying every initial clause, paired with the eventualities their
/// sometime clauses fire.  From a node (V,E), the step clauses fired by V
/// constrain the successor valuations V'; each successor node carries the
/// members of E not satisfied by V plus the eventualities fired by V'.
/// Throws ResourceLimitError when the symbol universe exceeds max_symbols.
BehaviourGraph build_graph(const ClauseSet& cs,
                           std::size_t max_symbols = kDefaultOracleCap);

/// Deletes, until a fixpoint, nodes without successors and nodes holding
/// an outstanding eventuality that no reachable valuation satisfies.
/// Deletions are applied in batch rounds; the fixpoint does not depend on
/// the order.
BehaviourGraph reduce_graph(const BehaviourGraph& g);

/// True iff the reduced behaviour graph of cs is non-empty.
bool is_satisfiable(const ClauseSet& cs,
                    std::size_t max_symbols = kDefaultOracleCap);

/// Extracts an ultimately periodic model from a non-empty reduced graph by
/// chaining path segments that each discharge all outstanding
/// eventualities of their start node, until a segment start repeats.
/// Deterministic: eventualities are discharged in canonical literal order,
/// path extensions take a breadth-first shortest path to the least
/// satisfying node, and each next segment starts at the least successor.
/// Throws std::invalid_argument when the graph is empty or visibly
/// unreduced.
LassoModel extract_model(const BehaviourGraph& g);

/// Renders the graph in DOT format: node labels show the valuation and the
/// outstanding eventualities separated by a bar; initial nodes are drawn
/// with a double border.
std::string to_dot(const BehaviourGraph& g);

} // namespace tres

#endif

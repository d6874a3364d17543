#pragma once

#include <string>
#include <vector>

#include "sepder/derivation.hpp"
#include "sepder/graph.hpp"

namespace sepder {

enum class NodeOrigin { minimal, augmented, generated };

struct SeparatorNode {
  std::vector<int> t_set;  // sorted; a separator, possibly non-minimal
  std::vector<int> c_set;  // sorted; union of components of g - t_set
  NodeOrigin origin = NodeOrigin::minimal;

  bool same_pair(const SeparatorNode& o) const { return t_set == o.t_set && c_set == o.c_set; }
  // "[3,4],{2}" label used in DOT output and reports
  std::string label() const;
};

class SeparatorPoset {
 public:
  SeparatorPoset() = default;
  SeparatorPoset(Graph g, std::vector<SeparatorNode> nodes);

  const Graph& graph() const { return g_; }
  const std::vector<SeparatorNode>& nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }

  bool contains(const std::vector<int>& t, const std::vector<int>& c) const;

  // Order by inclusion of components: a <= b iff a and b are the same
  // node or c_set(a) is strictly contained in c_set(b). Comparing by
  // bare containment is not antisymmetric (distinct separators can cut
  // off the same component), so equality is restricted to equal pairs.
  static bool leq(const SeparatorNode& a, const SeparatorNode& b);

  // Hasse diagram; origin rendered as style (minimal=solid,
  // generated=italic, augmented=bold).
  std::string dot() const;

 private:
  Graph g_;
  std::vector<SeparatorNode> nodes_;
};

// All (T, C) with T a minimal separator and C a component of g - T.
// Complete graphs give an empty poset.
SeparatorPoset build_poset(const Graph& g);

// Prefix chain of (T, C) under the given ordering v_1..v_k of C:
// C_i = {v_1..v_i}, T_i = union of N(v_j) minus C_i. Element k is the
// pair itself when C is a full component (then T_k = T).
std::vector<SeparatorNode> descending_chain(const Graph& g, const std::vector<int>& t_set,
                                            const std::vector<int>& c_set,
                                            const std::vector<int>& ordering);

struct CompletenessResult {
  bool complete = false;
  // minimal-poset elements that fail to top a full-length chain
  std::vector<SeparatorNode> missing;
};

// Closes q under the complement and generation rules (bounded search:
// part lists of size <= 3, |T| <= max degree, components confined to
// minimal-poset components), then demands that every (T,C) of the
// minimal poset tops a chain with component sizes 1..|C|.
CompletenessResult is_complete(const Graph& g, const SeparatorPoset& q);

// The pure hypothesis test: parts indexed 1-based, split into A and B;
// true iff the union of A-components minus the union of B-components is
// exactly the target component and all part separators lie inside the
// target separator.
bool generation_rule(const Graph& g, const SeparatorNode& target,
                     const std::vector<SeparatorNode>& parts, const std::vector<int>& a_idx,
                     const std::vector<int>& b_idx);

// (T, rest of the graph outside T and C); throws when that rest is empty.
SeparatorNode complement_rule(const Graph& g, const SeparatorNode& node);

// Three steps: start from the full poset; augment with descending-chain
// elements until a chosen minimum-cardinality separator has complete
// chains for all its components; then drop, per other minimal separator,
// one node that sits on no chain of the chosen separator, as long as
// completeness survives.
SeparatorPoset heuristic_minimal_poset(const Graph& g);

// Derivation attached to a poset node.
Derivation node_derivation(const Graph& g, const SeparatorNode& node);

}  // namespace sepder

#include "sepder/genset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sepder {

GenSetReport assemble_generators(const Graph& g, const SeparatorPoset& q) {
  if (!g.is_connected())
    throw std::invalid_argument("assemble_generators: graph must be connected");
  GenSetReport rep;
  rep.poset = q;
  if (g.is_complete()) {
    for (int k = 0; k < g.n; ++k) rep.generators.push_back(theta_power(k, g.n));
  } else {
    if (!is_complete(g, q).complete)
      throw std::invalid_argument("assemble_generators: poset is not complete");
    const int kappa = connectivity(g);
    bool drop_top_theta = false;
    for (const auto& sep : minimal_separators(g)) {
      if (static_cast<int>(sep.t_set.size()) != kappa) break;  // ordered by size
      bool all_present = true;
      for (const auto& comp : sep.components) {
        if (!q.contains(sep.t_set, comp)) {
          all_present = false;
          break;
        }
      }
      if (all_present) {
        drop_top_theta = true;
        break;
      }
    }
    for (int k = 0; k < kappa; ++k) rep.generators.push_back(theta_power(k, g.n));
    if (!drop_top_theta) rep.generators.push_back(theta_power(kappa, g.n));
    for (const auto& nd : q.nodes()) rep.generators.push_back(node_derivation(g, nd));
  }
  rep.degree_sequence = degree_sequence(rep.generators);
  rep.bounds = bounds_report(g, rep.degree_sequence.back());
  return rep;
}

std::vector<Derivation> tree_basis(const Graph& g) {
  if (!g.is_tree()) throw std::invalid_argument("tree_basis: graph is not a tree");
  std::vector<Derivation> gens;
  gens.push_back(theta_power(0, g.n));
  if (g.n == 1) return gens;
  if (g.n == 2) {
    // Single edge: the cut "separator" {2} leaves nothing on the far
    // side, so build the weighted row directly.
    gens.push_back(separator_derivation_formula(2, {2}, {1}));
    return gens;
  }
  int root = 1;
  for (int v = 2; v <= g.n; ++v) {
    if (g.degree(v) > g.degree(root)) root = v;
  }
  for (const auto& comp : connected_components(g, {root}))
    gens.push_back(theta_sep(g, {root}, comp));
  for (int v = 1; v <= g.n; ++v) {
    if (v == root || g.degree(v) < 2) continue;
    for (const auto& comp : connected_components(g, {v})) {
      if (std::binary_search(comp.begin(), comp.end(), root)) continue;
      gens.push_back(theta_sep(g, {v}, comp));
    }
  }
  return gens;
}

std::vector<int> degree_sequence(const std::vector<Derivation>& gens) {
  std::vector<int> degs;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_homogeneous())
      throw std::invalid_argument("degree_sequence: generator " + std::to_string(i + 1) +
                                  " is not homogeneous");
    degs.push_back(gens[i].pdeg());
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

DegreeBounds bounds_report(const Graph& g, int d) {
  DegreeBounds b;
  b.d = d;
  b.c_minus_1 = clique_number(g) - 1;
  b.delta = g.max_degree();
  b.t_max = 0;
  for (const auto& sep : minimal_separators(g))
    b.t_max = std::max(b.t_max, static_cast<int>(sep.t_set.size()));
  b.c_ok = b.c_minus_1 <= d;
  b.t_ok = b.t_max <= d;
  b.delta_ok = d <= b.delta;
  return b;
}

std::vector<int> predicted_subsequence(const Graph& g) {
  std::vector<int> pred;
  const int kappa = g.n == 1 ? 0 : connectivity(g);
  for (int k = 0; k <= kappa; ++k) pred.push_back(k);
  for (const auto& sep : minimal_separators(g)) {
    const int m = static_cast<int>(sep.t_set.size());
    // Only components seeing all of T force a degree-|T| generator; one
    // seeing a proper subset N(C) takes a weighted derivation from the
    // smaller separator N(C) instead.
    const size_t full = full_component_masks(g, vec_to_mask(sep.t_set, g.n)).size();
    for (size_t c = 1; c < full; ++c) pred.push_back(m);
  }
  std::sort(pred.begin(), pred.end());
  return pred;
}

bool subsequence_check(const Graph& g, const std::vector<int>& seq) {
  std::map<int, int> have;
  for (int d : seq) ++have[d];
  for (int d : predicted_subsequence(g)) {
    auto it = have.find(d);
    if (it == have.end() || it->second == 0) return false;
    --it->second;
  }
  return true;
}

}  // namespace sepder

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sepder {

// Vertex sets are bitmasks: vertex v (1-based) occupies bit v-1.
using Mask = std::uint64_t;

int mask_size(Mask m);
std::vector<int> mask_to_vec(Mask m);
Mask vec_to_mask(const std::vector<int>& v, int n);
// "{2,3}" rendering used in poset labels and reports.
std::string set_str(const std::vector<int>& v);

// Simple undirected graph on vertices 1..n. Edges are normalized to i<j,
// deduplicated and sorted; adjacency masks are kept in sync.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Mask> adj;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  bool has_edge(int i, int j) const;
  int degree(int v) const { return mask_size(adj[v - 1]); }
  int max_degree() const;
  Mask vertex_mask() const { return n == 64 ? ~Mask(0) : ((Mask(1) << n) - 1); }
  bool is_complete() const;
  bool is_connected() const;
  bool is_tree() const;
  std::string edge_list_str() const;
};

struct GraphParseError : std::runtime_error {
  enum Kind { malformed, out_of_range, loop_edge };
  Kind kind;
  GraphParseError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// format is "edge_list" (header "n <count>", one "i j" pair per line,
// blank lines and #-comments skipped, duplicate edges collapsed) or
// "graph6" (standard short form, n <= 62).
Graph parse_graph(const std::string& text, const std::string& format);

// Components of the graph induced on vertex_mask minus removed, each
// returned as a mask, ordered by smallest contained vertex.
std::vector<Mask> component_masks(const Graph& g, Mask removed);
std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   const std::vector<int>& removed);

// Neighbourhood of the set s outside s.
Mask nbr_of_set(const Graph& g, Mask s);

struct Separator {
  std::vector<int> t_set;
  std::vector<std::vector<int>> components;  // all components of G - T
  bool is_minimal = false;
};

// All minimal vertex separators, ordered by (|T|, lexicographic T). A
// separator is minimal when at least two components of G - T see all of T.
std::vector<Separator> minimal_separators(const Graph& g);

// Components C of G - t with N(C) = t exactly.
std::vector<Mask> full_component_masks(const Graph& g, Mask t);

// Vertex connectivity; n-1 for complete graphs. Throws on n < 2 or a
// disconnected input.
int connectivity(const Graph& g);

int clique_number(const Graph& g);

struct ChordalityResult {
  bool chordal = false;
  std::vector<int> peo;  // perfect elimination order, empty iff not chordal
};

// Maximum cardinality search plus verification of the resulting order.
ChordalityResult is_chordal(const Graph& g);

}  // namespace sepder

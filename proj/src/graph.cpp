#include "sepder/graph.hpp"

#include <algorithm>
#include <sstream>

namespace sepder {

int mask_size(Mask m) { return __builtin_popcountll(m); }

std::vector<int> mask_to_vec(Mask m) {
  std::vector<int> out;
  while (m) {
    int b = __builtin_ctzll(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

Mask vec_to_mask(const std::vector<int>& v, int n) {
  Mask m = 0;
  for (int x : v) {
    if (x < 1 || x > n) throw std::out_of_range("vertex out of range");
    m |= Mask(1) << (x - 1);
  }
  return m;
}

std::string set_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "}";
  return os.str();
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1 || n > 62) throw GraphParseError(GraphParseError::out_of_range, "vertex count out of supported range (1..62)");
  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  for (auto& [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw GraphParseError(GraphParseError::out_of_range, "edge endpoint out of range");
    if (a == b) throw GraphParseError(GraphParseError::loop_edge, "loop edge not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [a, b] : edges) {
    g.adj[a - 1] |= Mask(1) << (b - 1);
    g.adj[b - 1] |= Mask(1) << (a - 1);
  }
  g.edges = std::move(edges);
  return g;
}

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || i > n || j < 1 || j > n || i == j) return false;
  return (adj[i - 1] >> (j - 1)) & 1;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 1; v <= n; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_complete() const {
  return static_cast<long long>(edges.size()) == static_cast<long long>(n) * (n - 1) / 2;
}

bool Graph::is_connected() const {
  if (n == 0) return false;
  return component_masks(*this, 0).size() == 1;
}

bool Graph::is_tree() const {
  return is_connected() && static_cast<int>(edges.size()) == n - 1;
}

std::string Graph::edge_list_str() const {
  std::ostringstream os;
  os << "n " << n << "\n";
  for (const auto& [a, b] : edges) os << a << " " << b << "\n";
  return os.str();
}

namespace {

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "n" || n < 1)
        throw GraphParseError(GraphParseError::malformed, "expected header line 'n <count>'");
      std::string rest;
      if (ls >> rest) throw GraphParseError(GraphParseError::malformed, "trailing tokens after header");
      continue;
    }
    int a, b;
    if (!(ls >> a >> b)) throw GraphParseError(GraphParseError::malformed, "expected edge line 'i j'");
    std::string rest;
    if (ls >> rest) throw GraphParseError(GraphParseError::malformed, "trailing tokens after edge");
    edges.emplace_back(a, b);
  }
  if (n < 0) throw GraphParseError(GraphParseError::malformed, "empty graph description");
  return Graph::from_edges(n, std::move(edges));
}

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.empty()) throw GraphParseError(GraphParseError::malformed, "empty graph6 string");
  int c0 = static_cast<unsigned char>(s[0]);
  if (c0 == 126)
    throw GraphParseError(GraphParseError::out_of_range, "graph6 long form (n > 62) not supported");
  if (c0 < 63 || c0 > 125) throw GraphParseError(GraphParseError::malformed, "invalid graph6 byte");
  int n = c0 - 63;
  if (n < 1) throw GraphParseError(GraphParseError::malformed, "graph6 order must be at least 1");
  long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(s.size()) != 1 + nbytes)
    throw GraphParseError(GraphParseError::malformed, "graph6 length mismatch");
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i, ++bit) {
      int byte = static_cast<unsigned char>(s[1 + bit / 6]);
      if (byte < 63 || byte > 126) throw GraphParseError(GraphParseError::malformed, "invalid graph6 byte");
      int v = byte - 63;
      if ((v >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace

Graph parse_graph(const std::string& text, const std::string& format) {
  if (format == "edge_list") return parse_edge_list(text);
  if (format == "graph6") return parse_graph6(text);
  throw GraphParseError(GraphParseError::malformed, "unknown graph format: " + format);
}

std::vector<Mask> component_masks(const Graph& g, Mask removed) {
  std::vector<Mask> comps;
  Mask left = g.vertex_mask() & ~removed;
  while (left) {
    Mask seed = left & (~left + 1);
    Mask comp = seed;
    Mask frontier = seed;
    while (frontier) {
      Mask next = 0;
      Mask f = frontier;
      while (f) {
        int v = __builtin_ctzll(f);
        f &= f - 1;
        next |= g.adj[v] & left & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   const std::vector<int>& removed) {
  Mask rm = vec_to_mask(removed, g.n);
  std::vector<std::vector<int>> out;
  for (Mask m : component_masks(g, rm)) out.push_back(mask_to_vec(m));
  return out;
}

Mask nbr_of_set(const Graph& g, Mask s) {
  Mask nb = 0;
  Mask t = s;
  while (t) {
    int v = __builtin_ctzll(t);
    t &= t - 1;
    nb |= g.adj[v];
  }
  return nb & ~s;
}

std::vector<Mask> full_component_masks(const Graph& g, Mask t) {
  std::vector<Mask> full;
  for (Mask c : component_masks(g, t)) {
    if (nbr_of_set(g, c) == t) full.push_back(c);
  }
  return full;
}

std::vector<Separator> minimal_separators(const Graph& g) {
  if (g.n > 22) throw std::invalid_argument("minimal_separators: graph too large for exhaustive scan");
  std::vector<std::pair<std::vector<int>, Mask>> found;
  Mask all = g.vertex_mask();
  for (Mask t = 1; t < all; ++t) {
    if ((t & all) != t) continue;
    if (full_component_masks(g, t).size() >= 2) found.emplace_back(mask_to_vec(t), t);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Separator> out;
  for (const auto& [tv, tm] : found) {
    Separator s;
    s.t_set = tv;
    for (Mask c : component_masks(g, tm)) s.components.push_back(mask_to_vec(c));
    s.is_minimal = true;
    out.push_back(std::move(s));
  }
  return out;
}

int connectivity(const Graph& g) {
  if (g.n < 2) throw std::invalid_argument("connectivity: need at least two vertices");
  if (!g.is_connected()) throw std::invalid_argument("connectivity: graph is disconnected");
  if (g.is_complete()) return g.n - 1;
  auto seps = minimal_separators(g);
  int k = g.n;
  for (const auto& s : seps) k = std::min(k, static_cast<int>(s.t_set.size()));
  return k;
}

namespace {

void max_clique_rec(const Graph& g, Mask cand, int size, int& best) {
  if (size + mask_size(cand) <= best) return;
  if (!cand) {
    best = std::max(best, size);
    return;
  }
  while (cand) {
    if (size + mask_size(cand) <= best) return;
    int v = __builtin_ctzll(cand);
    cand &= cand - 1;
    max_clique_rec(g, cand & g.adj[v], size + 1, best);
  }
}

}  // namespace

int clique_number(const Graph& g) {
  if (g.n == 0) return 0;
  int best = 0;
  max_clique_rec(g, g.vertex_mask(), 0, best);
  return best;
}

ChordalityResult is_chordal(const Graph& g) {
  int n = g.n;
  std::vector<int> weight(n, 0), order;
  std::vector<char> numbered(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!numbered[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
    }
    numbered[pick] = 1;
    order.push_back(pick);
    Mask nb = g.adj[pick];
    while (nb) {
      int u = __builtin_ctzll(nb);
      nb &= nb - 1;
      if (!numbered[u]) ++weight[u];
    }
  }
  // elimination order is the reverse of the search order; verify it
  std::vector<int> peo(order.rbegin(), order.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  for (int i = 0; i < n; ++i) {
    int v = peo[i];
    Mask later = 0;
    Mask nb = g.adj[v];
    while (nb) {
      int u = __builtin_ctzll(nb);
      nb &= nb - 1;
      if (pos[u] > i) later |= Mask(1) << u;
    }
    if (!later) continue;
    int first = -1;
    Mask t = later;
    while (t) {
      int u = __builtin_ctzll(t);
      t &= t - 1;
      if (first < 0 || pos[u] < pos[first]) first = u;
    }
    Mask rest = later & ~(Mask(1) << first);
    if ((rest & ~g.adj[first]) != 0) return {false, {}};
  }
  std::vector<int> peo1;
  for (int v : peo) peo1.push_back(v + 1);
  return {true, peo1};
}

}  // namespace sepder

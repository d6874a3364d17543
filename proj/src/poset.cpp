#include "sepder/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sepder {

namespace {

bool node_key_less(const SeparatorNode& a, const SeparatorNode& b) {
  if (a.t_set.size() != b.t_set.size()) return a.t_set.size() < b.t_set.size();
  if (a.t_set != b.t_set) return a.t_set < b.t_set;
  return a.c_set < b.c_set;
}

void validate_node(const Graph& g, SeparatorNode& nd) {
  auto norm = [&](std::vector<int>& v, const char* what) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty()) throw std::invalid_argument(std::string("poset node: empty ") + what);
    if (v.front() < 1 || v.back() > g.n)
      throw std::invalid_argument(std::string("poset node: vertex out of range in ") + what);
  };
  norm(nd.t_set, "separator");
  norm(nd.c_set, "component set");
  Mask t = vec_to_mask(nd.t_set, g.n);
  Mask c = vec_to_mask(nd.c_set, g.n);
  if (t & c) throw std::invalid_argument("poset node " + nd.label() + ": sets overlap");
  if (nbr_of_set(g, c) & ~t)
    throw std::invalid_argument("poset node " + nd.label() +
                                ": component set not closed off by the separator");
}

// Worklist element for the rule closure; sets as masks.
struct CEl {
  Mask t, c;
};

bool under_tops(Mask c, const std::vector<Mask>& tops) {
  for (Mask top : tops) {
    if ((c & ~top) == 0) return true;
  }
  return false;
}

// el index -> true when a chain with component sizes 1..|c| ends at el,
// using only the supplied elements. A link is usable only when the
// predecessor's separator sits inside the successor's separator plus
// the step vertex; that containment is what lets the chain carry
// polynomial weights upward one vertex at a time.
std::vector<char> chain_reachable(const std::vector<CEl>& els) {
  std::vector<size_t> order(els.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return mask_size(els[a].c) < mask_size(els[b].c);
  });
  std::vector<char> ok(els.size(), 0);
  for (size_t oi : order) {
    const int r = mask_size(els[oi].c);
    if (r == 1) {
      ok[oi] = 1;
      continue;
    }
    for (size_t j = 0; j < els.size(); ++j) {
      if (!ok[j] || mask_size(els[j].c) != r - 1) continue;
      if (els[j].c & ~els[oi].c) continue;
      if (els[j].t & ~(els[oi].t | (els[oi].c & ~els[j].c))) continue;
      ok[oi] = 1;
      break;
    }
  }
  return ok;
}

// Bounded closure of a node set under the complement and generation
// rules. Each element's plain derivation lies in the span of the seed
// derivations and the guaranteed theta powers; wt additionally
// certifies the whole polynomially weighted family of the element.
// Weights come from three sources: single-vertex elements take any
// multiple, chains push weights up one vertex difference at a time,
// and once every component of some minimum-cardinality separator
// carries weights, the component sum over it recovers every theta
// power, which in turn upgrades complements.
struct Closure {
  std::vector<CEl> els;
  std::vector<char> wt;
};

// Evidence that the target's weighted family is covered: an element
// with the same component set, a separator inside the target's, and
// weights available.
bool topped(const Closure& cl, Mask t, Mask c) {
  for (size_t i = 0; i < cl.els.size(); ++i) {
    if (cl.wt[i] && cl.els[i].c == c && (cl.els[i].t & ~t) == 0) return true;
  }
  return false;
}

Closure rule_closure(const Graph& g, const std::vector<SeparatorNode>& start,
                     const std::vector<Mask>& top_cs) {
  const int delta = g.max_degree();
  const Mask all = g.vertex_mask();
  const bool connected = g.n >= 2 && component_masks(g, 0).size() == 1;
  const int kappa = connected ? connectivity(g) : 0;
  std::vector<std::pair<Mask, std::vector<Mask>>> pivots;
  if (connected) {
    for (const auto& sep : minimal_separators(g)) {
      if (static_cast<int>(sep.t_set.size()) != kappa) continue;
      Mask t = vec_to_mask(sep.t_set, g.n);
      pivots.emplace_back(t, component_masks(g, t));
    }
  }
  Closure cl;
  std::map<std::pair<Mask, Mask>, size_t> index;
  for (const auto& nd : start) {
    Mask t = vec_to_mask(nd.t_set, g.n), c = vec_to_mask(nd.c_set, g.n);
    if (index.emplace(std::make_pair(t, c), cl.els.size()).second) {
      cl.els.push_back({t, c});
      cl.wt.push_back(mask_size(c) == 1 ? 1 : 0);
    }
  }
  // Existing or freshly added element index; SIZE_MAX when rejected.
  // Bounded search: generated separators stay within the max degree
  // and component sets inside some minimal-poset component.
  auto add = [&](Mask t, Mask c) -> size_t {
    if (!c || (t & c) || (t | c) == all) return SIZE_MAX;
    auto it = index.find({t, c});
    if (it != index.end()) return it->second;
    if (mask_size(t) > delta) return SIZE_MAX;
    if (!under_tops(c, top_cs)) return SIZE_MAX;
    const size_t id = cl.els.size();
    index.emplace(std::make_pair(t, c), id);
    cl.els.push_back({t, c});
    cl.wt.push_back(mask_size(c) == 1 ? 1 : 0);
    return id;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<char> ok = chain_reachable(cl.els);
    for (size_t i = 0; i < cl.els.size(); ++i) {
      if (ok[i] && !cl.wt[i]) {
        cl.wt[i] = 1;
        changed = true;
      }
    }
    bool high_thetas = false;
    for (const auto& pv : pivots) {
      bool full = true;
      for (Mask c : pv.second) {
        if (!topped(cl, pv.first, c)) {
          full = false;
          break;
        }
      }
      if (full) {
        high_thetas = true;
        break;
      }
    }
    const size_t e = cl.els.size();
    for (size_t i = 0; i < e; ++i) {
      // The complement identity spends theta powers up to |t|; only
      // theta_0..theta_kappa are guaranteed until a minimum separator
      // carries full weights.
      if (!high_thetas && mask_size(cl.els[i].t) > kappa) continue;
      const Mask rest = all & ~(cl.els[i].t | cl.els[i].c);
      if (!rest) continue;
      const size_t id = add(cl.els[i].t, rest);
      if (id == SIZE_MAX) continue;
      if (id >= e) changed = true;
      if (high_thetas && cl.wt[i] && !cl.wt[id]) {
        cl.wt[id] = 1;
        changed = true;
      }
    }
    // Part lists of size at most 3, every A/B split with A nonempty.
    std::vector<size_t> part(3);
    for (size_t i = 0; i < e; ++i) {
      for (size_t j = i; j < e; ++j) {
        for (size_t k = j; k < e; ++k) {
          part[0] = i;
          part[1] = j;
          part[2] = k;
          const int s = (i == j && j == k) ? 1 : (j == k || i == j) ? 2 : 3;
          std::vector<size_t> ids(part.begin(), part.begin() + 1);
          if (s >= 2) ids.push_back(j == i ? k : j);
          if (s == 3) ids.push_back(k);
          for (unsigned split = 1; split < (1u << s); ++split) {
            Mask support = 0, tu = 0;
            for (int b = 0; b < s; ++b) {
              support |= cl.els[ids[b]].c;
              tu |= cl.els[ids[b]].t;
            }
            // Each vertex entry is counted once per containing A part
            // minus once per containing B part; the combination is a
            // separator derivation only if every count is 0 or 1.
            Mask cp = 0;
            bool bad = false;
            for (Mask m = support; m;) {
              const Mask bit = m & (~m + 1);
              m ^= bit;
              int cnt = 0;
              for (int b = 0; b < s; ++b) {
                if (cl.els[ids[b]].c & bit) cnt += (split & (1u << b)) ? 1 : -1;
              }
              if (cnt == 1) {
                cp |= bit;
              } else if (cnt != 0) {
                bad = true;
                break;
              }
            }
            if (bad || !cp) continue;
            Mask tp = tu | nbr_of_set(g, cp);
            if (tp & cp) continue;
            // A part whose separator sits strictly inside the
            // target's enters with a polynomial weight, so it must
            // carry weights itself.
            bool parts_wt = true;
            for (int b = 0; b < s; ++b) {
              if (cl.wt[ids[b]]) continue;
              parts_wt = false;
              if (cl.els[ids[b]].t != tp) {
                bad = true;
                break;
              }
            }
            if (bad) continue;
            const size_t id = add(tp, cp);
            if (id == SIZE_MAX) continue;
            if (id >= e) changed = true;
            if (parts_wt && !cl.wt[id]) {
              cl.wt[id] = 1;
              changed = true;
            }
          }
        }
      }
    }
  }
  return cl;
}

bool in_minimal_poset(const Graph& g, Mask t, Mask c) {
  auto comps = component_masks(g, t);
  if (std::find(comps.begin(), comps.end(), c) == comps.end()) return false;
  return full_component_masks(g, t).size() >= 2;
}

}  // namespace

std::string SeparatorNode::label() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < t_set.size(); ++i) {
    if (i) os << ',';
    os << t_set[i];
  }
  os << "]," << set_str(c_set);
  return os.str();
}

SeparatorPoset::SeparatorPoset(Graph g, std::vector<SeparatorNode> nodes)
    : g_(std::move(g)), nodes_(std::move(nodes)) {
  for (auto& nd : nodes_) validate_node(g_, nd);
  std::stable_sort(nodes_.begin(), nodes_.end(), node_key_less);
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end(),
                           [](const SeparatorNode& a, const SeparatorNode& b) {
                             return a.same_pair(b);
                           }),
               nodes_.end());
}

bool SeparatorPoset::contains(const std::vector<int>& t, const std::vector<int>& c) const {
  for (const auto& nd : nodes_) {
    if (nd.t_set == t && nd.c_set == c) return true;
  }
  return false;
}

bool SeparatorPoset::leq(const SeparatorNode& a, const SeparatorNode& b) {
  if (a.same_pair(b)) return true;
  return std::includes(b.c_set.begin(), b.c_set.end(), a.c_set.begin(), a.c_set.end()) &&
         a.c_set != b.c_set;
}

std::string SeparatorPoset::dot() const {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const char* style = nodes_[i].origin == NodeOrigin::minimal     ? "solid"
                        : nodes_[i].origin == NodeOrigin::augmented ? "bold"
                                                                    : "italic";
    os << "  n" << i << " [label=\"" << nodes_[i].label() << "\", style=" << style << "];\n";
  }
  for (size_t i = 0; i < nodes_.size(); ++i) {
    for (size_t j = 0; j < nodes_.size(); ++j) {
      if (i == j || !leq(nodes_[i], nodes_[j]) || nodes_[i].same_pair(nodes_[j])) continue;
      bool cover = true;
      for (size_t k = 0; k < nodes_.size() && cover; ++k) {
        if (k == i || k == j) continue;
        if (leq(nodes_[i], nodes_[k]) && leq(nodes_[k], nodes_[j]) &&
            !nodes_[k].same_pair(nodes_[i]) && !nodes_[k].same_pair(nodes_[j]))
          cover = false;
      }
      if (cover) os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

SeparatorPoset build_poset(const Graph& g) {
  std::vector<SeparatorNode> nodes;
  for (const auto& sep : minimal_separators(g)) {
    for (const auto& comp : sep.components) {
      nodes.push_back({sep.t_set, comp, NodeOrigin::minimal});
    }
  }
  return SeparatorPoset(g, std::move(nodes));
}

std::vector<SeparatorNode> descending_chain(const Graph& g, const std::vector<int>& t_set,
                                            const std::vector<int>& c_set,
                                            const std::vector<int>& ordering) {
  SeparatorNode probe{t_set, c_set, NodeOrigin::minimal};
  validate_node(g, probe);
  std::vector<int> sorted_ord = ordering;
  std::sort(sorted_ord.begin(), sorted_ord.end());
  if (sorted_ord != probe.c_set)
    throw std::invalid_argument("descending chain: ordering is not a permutation of the component set");
  std::vector<SeparatorNode> chain;
  Mask cmask = 0, nbrs = 0;
  for (size_t i = 0; i < ordering.size(); ++i) {
    const int v = ordering[i];
    cmask |= Mask(1) << (v - 1);
    nbrs |= g.adj[v - 1];
    Mask tmask = nbrs & ~cmask;
    SeparatorNode nd{mask_to_vec(tmask), mask_to_vec(cmask),
                     in_minimal_poset(g, tmask, cmask) ? NodeOrigin::minimal
                                                       : NodeOrigin::augmented};
    chain.push_back(std::move(nd));
  }
  return chain;
}

CompletenessResult is_complete(const Graph& g, const SeparatorPoset& q) {
  auto seps = minimal_separators(g);
  std::vector<Mask> tops;
  for (const auto& sep : seps) {
    for (const auto& comp : sep.components) tops.push_back(vec_to_mask(comp, g.n));
  }
  auto cl = rule_closure(g, q.nodes(), tops);
  CompletenessResult res;
  for (const auto& sep : seps) {
    Mask t = vec_to_mask(sep.t_set, g.n);
    for (const auto& comp : sep.components) {
      Mask c = vec_to_mask(comp, g.n);
      if (!topped(cl, t, c)) res.missing.push_back({sep.t_set, comp, NodeOrigin::minimal});
    }
  }
  res.complete = res.missing.empty();
  return res;
}

bool generation_rule(const Graph& g, const SeparatorNode& target,
                     const std::vector<SeparatorNode>& parts, const std::vector<int>& a_idx,
                     const std::vector<int>& b_idx) {
  if (parts.empty()) throw std::invalid_argument("generation rule: empty part list");
  std::vector<char> used(parts.size(), 0);
  auto take = [&](const std::vector<int>& idx) {
    for (int i : idx) {
      if (i < 1 || i > static_cast<int>(parts.size()))
        throw std::invalid_argument("generation rule: part index out of range");
      if (used[i - 1]) throw std::invalid_argument("generation rule: part index repeated");
      used[i - 1] = 1;
    }
  };
  take(a_idx);
  take(b_idx);
  if (std::find(used.begin(), used.end(), 0) != used.end())
    throw std::invalid_argument("generation rule: A and B must split the whole part list");
  Mask ca = 0, cb = 0, tu = 0;
  for (int i : a_idx) {
    ca |= vec_to_mask(parts[i - 1].c_set, g.n);
    tu |= vec_to_mask(parts[i - 1].t_set, g.n);
  }
  for (int i : b_idx) {
    cb |= vec_to_mask(parts[i - 1].c_set, g.n);
    tu |= vec_to_mask(parts[i - 1].t_set, g.n);
  }
  Mask target_c = vec_to_mask(target.c_set, g.n);
  Mask target_t = vec_to_mask(target.t_set, g.n);
  return (ca & ~cb) == target_c && (tu & ~target_t) == 0;
}

SeparatorNode complement_rule(const Graph& g, const SeparatorNode& node) {
  SeparatorNode probe = node;
  validate_node(g, probe);
  Mask rest = g.vertex_mask() &
              ~(vec_to_mask(probe.t_set, g.n) | vec_to_mask(probe.c_set, g.n));
  if (!rest) throw std::invalid_argument("complement rule: nothing outside the node");
  return {probe.t_set, mask_to_vec(rest), NodeOrigin::generated};
}

SeparatorPoset heuristic_minimal_poset(const Graph& g) {
  if (g.is_complete())
    throw std::invalid_argument("heuristic poset: complete graphs have no separators");
  auto seps = minimal_separators(g);
  // Pivot separator: minimum cardinality, then most components, then
  // lexicographically smallest.
  size_t pivot = 0;
  for (size_t i = 1; i < seps.size(); ++i) {
    const auto &a = seps[i], &b = seps[pivot];
    if (a.t_set.size() != b.t_set.size()) {
      if (a.t_set.size() < b.t_set.size()) pivot = i;
    } else if (a.components.size() != b.components.size()) {
      if (a.components.size() > b.components.size()) pivot = i;
    } else if (a.t_set < b.t_set) {
      pivot = i;
    }
  }
  const auto& tmin = seps[pivot];
  Mask tmin_mask = vec_to_mask(tmin.t_set, g.n);

  std::vector<SeparatorNode> nodes;
  std::vector<Mask> tops;
  std::set<std::pair<Mask, Mask>> present;
  for (const auto& sep : seps) {
    Mask t = vec_to_mask(sep.t_set, g.n);
    for (const auto& comp : sep.components) {
      Mask c = vec_to_mask(comp, g.n);
      nodes.push_back({sep.t_set, comp, NodeOrigin::minimal});
      tops.push_back(c);
      present.insert({t, c});
    }
  }

  // Step 2: augment with descending-chain elements until the
  // accumulated poset is complete. Pivot components come first; other
  // minimal-poset elements only once the pivot needs nothing more.
  while (true) {
    auto cl = rule_closure(g, nodes, tops);
    std::vector<SeparatorNode> cands;
    std::set<std::pair<Mask, Mask>> cand_seen;
    auto collect = [&](const std::vector<int>& t_set, const std::vector<int>& comp) {
      Mask t = vec_to_mask(t_set, g.n);
      Mask c = vec_to_mask(comp, g.n);
      if (topped(cl, t, c)) return;
      for (auto& nd : descending_chain(g, t_set, comp, comp)) {
        std::pair<Mask, Mask> key{vec_to_mask(nd.t_set, g.n), vec_to_mask(nd.c_set, g.n)};
        if (present.count(key) || !cand_seen.insert(key).second) continue;
        nd.origin = NodeOrigin::augmented;
        cands.push_back(std::move(nd));
      }
    };
    for (const auto& comp : tmin.components) collect(tmin.t_set, comp);
    if (cands.empty()) {
      for (const auto& sep : seps) {
        if (sep.t_set == tmin.t_set) continue;
        for (const auto& comp : sep.components) collect(sep.t_set, comp);
      }
    }
    if (cands.empty()) break;
    auto best = std::min_element(cands.begin(), cands.end(), node_key_less);
    present.insert({vec_to_mask(best->t_set, g.n), vec_to_mask(best->c_set, g.n)});
    nodes.push_back(*best);
  }

  // Mark nodes that sit on a chain of some pivot component, using the
  // accumulated nodes only.
  std::vector<CEl> qels;
  for (const auto& nd : nodes)
    qels.push_back({vec_to_mask(nd.t_set, g.n), vec_to_mask(nd.c_set, g.n)});
  auto qok = chain_reachable(qels);
  std::vector<char> marked(nodes.size(), 0);
  {
    std::vector<Mask> tmin_comps;
    for (const auto& comp : tmin.components) tmin_comps.push_back(vec_to_mask(comp, g.n));
    for (size_t i = 0; i < qels.size(); ++i) {
      if (!qok[i] || (qels[i].t & ~tmin_mask)) continue;
      for (Mask c : tmin_comps) {
        if (qels[i].c == c) marked[i] = 1;
      }
    }
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t i = 0; i < qels.size(); ++i) {
        if (marked[i]) continue;
        if (!qok[i]) continue;
        const int r = mask_size(qels[i].c);
        for (size_t j = 0; j < qels.size(); ++j) {
          if (marked[j] && mask_size(qels[j].c) == r + 1 && (qels[i].c & ~qels[j].c) == 0) {
            marked[i] = 1;
            grew = true;
            break;
          }
        }
      }
    }
  }

  // Step 3: per non-pivot separator, drop one unmarked node when
  // completeness survives the removal.
  for (const auto& sep : seps) {
    if (sep.t_set == tmin.t_set) continue;
    std::vector<size_t> cand_idx;
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].t_set == sep.t_set && !marked[i]) cand_idx.push_back(i);
    }
    std::sort(cand_idx.begin(), cand_idx.end(), [&](size_t a, size_t b) {
      if (nodes[a].c_set.size() != nodes[b].c_set.size())
        return nodes[a].c_set.size() < nodes[b].c_set.size();
      return nodes[a].c_set < nodes[b].c_set;
    });
    for (size_t idx : cand_idx) {
      std::vector<SeparatorNode> trimmed;
      for (size_t i = 0; i < nodes.size(); ++i) {
        if (i != idx) trimmed.push_back(nodes[i]);
      }
      if (is_complete(g, SeparatorPoset(g, trimmed)).complete) {
        std::vector<char> kept;
        for (size_t i = 0; i < nodes.size(); ++i) {
          if (i != idx) kept.push_back(marked[i]);
        }
        nodes = std::move(trimmed);
        marked = std::move(kept);
        break;
      }
    }
  }

  return SeparatorPoset(g, std::move(nodes));
}

Derivation node_derivation(const Graph& g, const SeparatorNode& node) {
  return theta_sep_union(g, node.t_set, node.c_set);
}

}  // namespace sepder

#pragma once

#include <vector>

#include "sepder/derivation.hpp"
#include "sepder/poset.hpp"

namespace sepder {

enum class CertLevel { uncertified, generates_up_to_P, minimal_up_to_P };

// Degree bound checks: clique number minus one and the largest minimal
// separator from below, max degree from above.
struct DegreeBounds {
  int c_minus_1 = 0;
  int t_max = 0;
  int delta = 0;
  int d = 0;
  bool c_ok = false;
  bool t_ok = false;
  bool delta_ok = false;
  bool all_ok() const { return c_ok && t_ok && delta_ok; }
};

struct GenSetReport {
  std::vector<Derivation> generators;
  std::vector<int> degree_sequence;  // ascending pdeg multiset
  DegreeBounds bounds;               // with d = top of degree_sequence
  CertLevel certified = CertLevel::uncertified;
  SeparatorPoset poset;
  int cutoff = -1;  // degree cap used when a certification ran
};

// Theta powers plus one derivation per poset node. theta_kappa is
// dropped when a minimum-cardinality separator has all its components
// in q: summing those node derivations recovers it modulo lower theta
// powers. Complete graphs bypass the poset and return theta_0..theta_{l-1}.
GenSetReport assemble_generators(const Graph& g, const SeparatorPoset& q);

// theta_0, every component of a root cut vertex, and for the other
// internal vertices every component not containing the root. Exactly l
// derivations forming a basis.
std::vector<Derivation> tree_basis(const Graph& g);

std::vector<int> degree_sequence(const std::vector<Derivation>& gens);

DegreeBounds bounds_report(const Graph& g, int d);

// Degrees forced into every generating set: 0..kappa plus, per minimal
// separator T, one copy of |T| for every full component beyond the first.
std::vector<int> predicted_subsequence(const Graph& g);

// Multiset containment of the forced degrees in seq.
bool subsequence_check(const Graph& g, const std::vector<int>& seq);

}  // namespace sepder

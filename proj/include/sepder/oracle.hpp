#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sepder/derivation.hpp"
#include "sepder/graph.hpp"
#include "sepder/linalg.hpp"

namespace sepder {

struct VerifyResult {
  bool generates = false;
  int first_failure = -1;  // smallest degree where the span falls short
  // one entry per degree 0..P: (degree, module dimension, span dimension)
  std::vector<std::array<int, 3>> table;
};

struct MinimalResult {
  std::vector<int> degrees;  // ascending, one entry per minimal generator
  std::vector<Derivation> generators;
};

// Basis of one graded slice as rows of rational coefficients over the
// monomial basis of each coordinate; row count equals the slice dimension
// and every row decodes to a member derivation.
struct GradedBasis {
  int degree = 0;
  std::vector<linalg::QRow> coeff_matrix;
};

// Degreewise linear-algebra certification for the derivation module of a
// connected graph. Everything is exact; answers are cached per degree.
class Oracle {
 public:
  explicit Oracle(Graph g);

  const Graph& graph() const { return g_; }

  // Dimension of the degree-p slice of the derivation module.
  int module_dimension(int p);

  // Dimension of the degree-p slice of the submodule generated by gens.
  // Every generator must be a homogeneous member.
  int span_dimension(const std::vector<Derivation>& gens, int p);

  // Compares span against module for every degree 0..P; P must be at
  // least the max degree of the graph.
  VerifyResult verify_generation(const std::vector<Derivation>& gens, int P);

  // Degrees of a minimal homogeneous generating set, with explicit
  // generators realizing them, certified degree by degree up to P.
  MinimalResult minimal_degree_sequence(int P);

  // Indices (0-based) of generators lying in the span of the others.
  std::vector<int> find_redundant(const std::vector<Derivation>& gens, int P);

  GradedBasis graded_basis(int p);

  // Turns a coefficient row back into the derivation it encodes.
  Derivation decode_row(const linalg::QRow& v, int p, const std::string& name) const;

 private:
  Graph g_;
  std::map<int, int> dim_cache_;

  int cols_at(int p) const;
  std::vector<linalg::QRow> membership_rows(int p) const;
  std::vector<linalg::QRow> span_rows(const std::vector<Derivation>& gens, int p) const;
  linalg::QRow derivation_row(const Derivation& d, const Monomial& shift, int p) const;
  Derivation row_to_derivation(const linalg::QRow& v, int p, const std::string& name) const;
  void check_generators(const std::vector<Derivation>& gens) const;
};

// Stateless wrappers for one-shot queries.
int module_dimension(const Graph& g, int p);
int span_dimension(const Graph& g, const std::vector<Derivation>& gens, int p);
VerifyResult verify_generation(const Graph& g, const std::vector<Derivation>& gens, int P);
MinimalResult minimal_degree_sequence(const Graph& g, int P);
std::vector<int> find_redundant(const Graph& g, const std::vector<Derivation>& gens, int P);
GradedBasis graded_basis(const Graph& g, int p);

// Default certification cutoff: max degree plus two.
int default_cutoff(const Graph& g);

}  // namespace sepder

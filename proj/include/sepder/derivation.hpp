#pragma once

#include <string>
#include <vector>

#include "sepder/graph.hpp"
#include "sepder/multipoly.hpp"
#include "sepder/unipoly.hpp"

namespace sepder {

struct DerivationLabel {
  enum Kind { theta_k, sep, sep_poly, sigma, phi, custom };
  Kind kind = custom;
  int index = -1;             // exponent for theta_k, vertex for sigma/phi
  std::vector<int> t, c;      // separator data for sep and sep_poly
  std::string weight;         // printable weight polynomial for sep_poly
  std::string text;           // free-form name for custom

  std::string str() const;
};

// Polynomial vector field sum_i coeff_i * d/dx_i; entry i-1 of coeffs
// multiplies d/dx_i.
struct Derivation {
  std::vector<MultiPoly> coeffs;
  DerivationLabel label;

  int nvars() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  bool is_homogeneous() const;
  // Common degree of the nonzero entries; -1 for the zero derivation,
  // throws when entries mix degrees.
  int pdeg() const;
  // Image of a polynomial under the derivation.
  MultiPoly apply(const MultiPoly& f) const;
  // "[c1, c2, ..., cl]" with canonical polynomial rendering per entry.
  std::string row_str() const;
};

// Product of x_i - x_j over the edges of g; the defining form of the
// arrangement attached to the graph.
MultiPoly defining_polynomial(const Graph& g);

// theta_k = sum_i x_i^k d/dx_i.
Derivation theta_power(int k, int nvars);

// sum over i in C of prod over t in T of (x_i - x_t) d/dx_i, without
// validity checks; the building block the checked constructors share.
Derivation separator_derivation_formula(int nvars, const std::vector<int>& t_set,
                                        const std::vector<int>& c_set);

// Same shape with entries p(x_i); p must be divisible by the separator
// factor prod (y - x_t).
Derivation separator_derivation_formula(int nvars, const std::vector<int>& t_set,
                                        const std::vector<int>& c_set, const UniPolyOverS& p);

// Checked: t_set must separate g with c_set one component of g - t_set.
Derivation theta_sep(const Graph& g, const std::vector<int>& t_set, const std::vector<int>& c_set);

// Checked: additionally accepts a weight p in S[y] divisible by the
// separator factor.
Derivation theta_sep_poly(const Graph& g, const std::vector<int>& t_set,
                          const std::vector<int>& c_set, const UniPolyOverS& p);

// Like theta_sep but c_set may be any nonempty union of components of
// g - t_set; descending chains produce such unions.
Derivation theta_sep_union(const Graph& g, const std::vector<int>& t_set,
                           const std::vector<int>& c_set);

// prod over j in N(i) of (x_i - x_j) d/dx_i.
Derivation sigma_neighbourhood(const Graph& g, int i);

// Entry k holds prod over j < i of (x_k - x_j); phi_1 = theta_0.
Derivation phi(int i, int nvars);

// True when the derivation preserves the ideal of every edge form of g.
bool is_member(const Graph& g, const Derivation& d);

struct SaitoResult {
  bool is_basis = false;
  Rational scalar = 0;  // det / defining polynomial when is_basis
};

// Determinant test for a candidate basis: needs exactly n derivations,
// all members; basis iff det of the coefficient matrix is a nonzero
// scalar multiple of the defining polynomial.
SaitoResult saito_check(const Graph& g, const std::vector<Derivation>& ds);

}  // namespace sepder

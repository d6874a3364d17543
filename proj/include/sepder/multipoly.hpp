#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sepder/monomial.hpp"
#include "sepder/rational.hpp"

namespace sepder {

// Multivariate polynomial over Q[x1..xn]. Terms are kept sorted in
// descending graded-lex order with nonzero coefficients; two equal
// polynomials always compare byte-identical after rendering.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int var, int nvars);  // var is 1-based
  // x_i - x_j, the building block of every arrangement form here.
  static MultiPoly var_diff(int i, int j, int nvars);
  static MultiPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  const Term& leading_term() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  Rational coeff(const Monomial& m) const;

  // Substitutes x_i := x_j (1-based). Monomials map to monomials, so this
  // stays sparse; it is how membership constraints are generated.
  MultiPoly substitute_equal(int i, int j) const;

  // Exact division; throws if the divisor does not divide this polynomial.
  MultiPoly divided_by(const MultiPoly& d) const;
  bool divisible_by(const MultiPoly& d) const;

  // Canonical rendering: "x1^2*x3 - 2*x2", "3/2*x1 + 1", "0".
  std::string str() const;

 private:
  int nvars_;
  std::vector<Term> terms_;

  void normalize();
};

MultiPoly operator*(const Rational& c, const MultiPoly& p);

// Power x_i^k as a convenience for the Euler-type derivations.
MultiPoly var_power(int var, int k, int nvars);

}  // namespace sepder

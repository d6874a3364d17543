#pragma once

#include <string>
#include <vector>

#include "sepder/multipoly.hpp"

namespace sepder {

// Polynomial in an auxiliary variable y whose coefficients live in
// Q[x1..xn]. Entry j of coeffs() multiplies y^j. Evaluating at y = x_i
// produces the per-vertex entry of a weighted separator derivation.
class UniPolyOverS {
 public:
  explicit UniPolyOverS(int nvars) : nvars_(nvars) {}
  UniPolyOverS(int nvars, std::vector<MultiPoly> coeffs);

  static UniPolyOverS zero(int nvars) { return UniPolyOverS(nvars); }
  static UniPolyOverS one(int nvars);
  static UniPolyOverS y_power(int nvars, int k);
  static UniPolyOverS constant(int nvars, const MultiPoly& c);
  // prod over t in roots of (y - x_t); the unweighted separator factor.
  static UniPolyOverS root_product(int nvars, const std::vector<int>& roots);

  int nvars() const { return nvars_; }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree_in_y() const { return static_cast<int>(coeffs_.size()) - 1; }

  UniPolyOverS operator+(const UniPolyOverS& o) const;
  UniPolyOverS operator-(const UniPolyOverS& o) const;
  UniPolyOverS operator*(const UniPolyOverS& o) const;

  bool operator==(const UniPolyOverS& o) const {
    return nvars_ == o.nvars_ && coeffs_ == o.coeffs_;
  }

  // Substitute y := x_i (1-based).
  MultiPoly eval_at_var(int i) const;

  // Remainder of division by d, whose leading y-coefficient must be a
  // nonzero constant. Divisibility tests for weighted derivations reduce
  // to this because the separator factor is monic in y.
  UniPolyOverS remainder_by_monic(const UniPolyOverS& d) const;

  // "(x1 - x2)*y^2 + y + x3" style rendering with y kept symbolic.
  std::string str() const;

 private:
  int nvars_;
  std::vector<MultiPoly> coeffs_;  // trailing zero coefficients trimmed

  void trim();
};

}  // namespace sepder

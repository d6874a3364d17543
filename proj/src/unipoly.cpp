#include "sepder/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace sepder {

void UniPolyOverS::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPolyOverS::UniPolyOverS(int nvars, std::vector<MultiPoly> coeffs)
    : nvars_(nvars), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.nvars() != nvars_) throw std::invalid_argument("UniPolyOverS: coefficient width mismatch");
  }
  trim();
}

UniPolyOverS UniPolyOverS::one(int nvars) {
  return UniPolyOverS(nvars, {MultiPoly::constant(nvars, 1)});
}

UniPolyOverS UniPolyOverS::y_power(int nvars, int k) {
  if (k < 0) throw std::invalid_argument("y_power: negative exponent");
  std::vector<MultiPoly> cs(k + 1, MultiPoly::zero(nvars));
  cs[k] = MultiPoly::constant(nvars, 1);
  return UniPolyOverS(nvars, std::move(cs));
}

UniPolyOverS UniPolyOverS::constant(int nvars, const MultiPoly& c) {
  return UniPolyOverS(nvars, {c});
}

UniPolyOverS UniPolyOverS::root_product(int nvars, const std::vector<int>& roots) {
  UniPolyOverS p = one(nvars);
  for (int t : roots) {
    UniPolyOverS factor(nvars, {-MultiPoly::variable(t, nvars), MultiPoly::constant(nvars, 1)});
    p = p * factor;
  }
  return p;
}

UniPolyOverS UniPolyOverS::operator+(const UniPolyOverS& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("UniPolyOverS add: width mismatch");
  std::vector<MultiPoly> cs(std::max(coeffs_.size(), o.coeffs_.size()), MultiPoly::zero(nvars_));
  for (size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] += o.coeffs_[i];
  return UniPolyOverS(nvars_, std::move(cs));
}

UniPolyOverS UniPolyOverS::operator-(const UniPolyOverS& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("UniPolyOverS sub: width mismatch");
  std::vector<MultiPoly> cs(std::max(coeffs_.size(), o.coeffs_.size()), MultiPoly::zero(nvars_));
  for (size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] -= o.coeffs_[i];
  return UniPolyOverS(nvars_, std::move(cs));
}

UniPolyOverS UniPolyOverS::operator*(const UniPolyOverS& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("UniPolyOverS mul: width mismatch");
  if (coeffs_.empty() || o.coeffs_.empty()) return UniPolyOverS(nvars_);
  std::vector<MultiPoly> cs(coeffs_.size() + o.coeffs_.size() - 1, MultiPoly::zero(nvars_));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      cs[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return UniPolyOverS(nvars_, std::move(cs));
}

MultiPoly UniPolyOverS::eval_at_var(int i) const {
  MultiPoly r = MultiPoly::zero(nvars_);
  MultiPoly xi = MultiPoly::variable(i, nvars_);
  MultiPoly pw = MultiPoly::constant(nvars_, 1);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    r += coeffs_[j] * pw;
    pw *= xi;
  }
  return r;
}

UniPolyOverS UniPolyOverS::remainder_by_monic(const UniPolyOverS& d) const {
  if (nvars_ != d.nvars_) throw std::invalid_argument("remainder_by_monic: width mismatch");
  if (d.is_zero()) throw std::invalid_argument("remainder_by_monic: division by zero");
  const MultiPoly& lead = d.coeffs_.back();
  if (lead.degree() != 0) throw std::invalid_argument("remainder_by_monic: divisor not monic in y");
  Rational lc = lead.leading_term().second;
  std::vector<MultiPoly> rem = coeffs_;
  int dd = d.degree_in_y();
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    MultiPoly q = rem.back() * (Rational(1) / lc);
    int shift = static_cast<int>(rem.size()) - 1 - dd;
    for (int j = 0; j <= dd; ++j) rem[shift + j] -= q * d.coeffs_[j];
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    if (static_cast<int>(rem.size()) - 1 == dd + shift) {
      throw std::logic_error("remainder_by_monic: degree did not drop");
    }
  }
  return UniPolyOverS(nvars_, std::move(rem));
}

std::string UniPolyOverS::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = static_cast<int>(coeffs_.size()) - 1; j >= 0; --j) {
    if (coeffs_[j].is_zero()) continue;
    if (!first) os << " + ";
    std::string c = coeffs_[j].str();
    bool needs_paren = c.find(' ') != std::string::npos;
    if (j == 0) {
      os << c;
    } else {
      if (c != "1") {
        os << (needs_paren ? "(" + c + ")" : c) << "*";
      }
      os << "y";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return os.str();
}

}  // namespace sepder

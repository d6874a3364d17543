#include "sepder/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sepder {

namespace {

struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

}  // namespace

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_cmp(a.first, b.first) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    t.second.canonicalize();
    if (!out.empty() && grlex_cmp(out.back().first, t.first) == 0) {
      out.back().second += t.second;
      if (sgn(out.back().second) == 0) out.pop_back();
    } else if (sgn(t.second) != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (sgn(c) != 0) p.terms_.emplace_back(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int var, int nvars) {
  if (var < 1 || var > nvars) throw std::invalid_argument("variable: index out of range");
  MultiPoly p(nvars);
  Monomial m(nvars, 0);
  m[var - 1] = 1;
  p.terms_.emplace_back(std::move(m), Rational(1));
  return p;
}

MultiPoly MultiPoly::var_diff(int i, int j, int nvars) {
  return variable(i, nvars) - variable(j, nvars);
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
  MultiPoly p(nvars);
  for (const auto& t : terms) {
    if (static_cast<int>(t.first.size()) != nvars)
      throw std::invalid_argument("from_terms: monomial width mismatch");
  }
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.front().first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.front().first) == total_degree(terms_.back().first);
}

const MultiPoly::Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
  return terms_.front();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("poly add: variable count mismatch");
  MultiPoly r(nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grlex_cmp(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (sgn(s) != 0) r.terms_.emplace_back(terms_[i].first, s);
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("poly mul: variable count mismatch");
  std::map<Monomial, Rational, GrlexDesc> acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = mono_mul(a.first, b.first);
      Rational c = a.second * b.second;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second += c;
      }
    }
  }
  MultiPoly r(nvars_);
  r.terms_.reserve(acc.size());
  for (auto& kv : acc) {
    if (sgn(kv.second) != 0) r.terms_.emplace_back(kv.first, kv.second);
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  if (sgn(c) == 0) return MultiPoly(nvars_);
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

Rational MultiPoly::coeff(const Monomial& m) const {
  for (const auto& t : terms_) {
    int c = grlex_cmp(t.first, m);
    if (c == 0) return t.second;
    if (c < 0) break;
  }
  return Rational(0);
}

MultiPoly MultiPoly::substitute_equal(int i, int j) const {
  if (i < 1 || i > nvars_ || j < 1 || j > nvars_)
    throw std::invalid_argument("substitute_equal: index out of range");
  MultiPoly r(nvars_);
  r.terms_ = terms_;
  if (i == j) return r;
  for (auto& t : r.terms_) {
    t.first[j - 1] += t.first[i - 1];
    t.first[i - 1] = 0;
  }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::divided_by(const MultiPoly& d) const {
  if (nvars_ != d.nvars_) throw std::invalid_argument("poly div: variable count mismatch");
  if (d.is_zero()) throw std::invalid_argument("poly div: division by zero");
  MultiPoly rem(*this);
  MultiPoly quot(nvars_);
  const auto& dl = d.leading_term();
  while (!rem.is_zero()) {
    const auto& rl = rem.leading_term();
    if (!mono_divides(dl.first, rl.first))
      throw std::invalid_argument("poly div: not exactly divisible");
    MultiPoly::Term qt(mono_div(rl.first, dl.first), rl.second / dl.second);
    MultiPoly qterm(nvars_);
    qterm.terms_.push_back(qt);
    quot += qterm;
    rem -= qterm * d;
  }
  return quot;
}

bool MultiPoly::divisible_by(const MultiPoly& d) const {
  if (d.is_zero()) return is_zero();
  MultiPoly rem(*this);
  const auto& dl = d.leading_term();
  while (!rem.is_zero()) {
    const auto& rl = rem.leading_term();
    if (!mono_divides(dl.first, rl.first)) return false;
    MultiPoly qterm(nvars_);
    qterm.terms_.emplace_back(mono_div(rl.first, dl.first), rl.second / dl.second);
    rem -= qterm * d;
  }
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational a = abs(t.second);
    bool neg = sgn(t.second) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    bool is_const = total_degree(t.first) == 0;
    if (is_const) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << mono_str(t.first);
    }
    first = false;
  }
  return os.str();
}

MultiPoly var_power(int var, int k, int nvars) {
  if (k < 0) throw std::invalid_argument("var_power: negative exponent");
  MultiPoly p(nvars);
  Monomial m(nvars, 0);
  m[var - 1] = k;
  return MultiPoly::from_terms(nvars, {{m, Rational(1)}});
}

}  // namespace sepder

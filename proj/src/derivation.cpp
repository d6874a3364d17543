#include "sepder/derivation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sepder/polymatrix.hpp"

namespace sepder {

std::string DerivationLabel::str() const {
  std::ostringstream os;
  switch (kind) {
    case theta_k:
      os << "theta_" << index;
      break;
    case sep:
      os << "theta[" << set_str(t) << "," << set_str(c) << "]";
      break;
    case sep_poly:
      os << "theta[" << set_str(t) << "," << set_str(c) << ";p=" << weight << "]";
      break;
    case sigma:
      os << "sigma_" << index;
      break;
    case phi:
      os << "phi_" << index;
      break;
    case custom:
      os << text;
      break;
  }
  return os.str();
}

bool Derivation::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Derivation::is_homogeneous() const {
  int d = -1;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return false;
    if (d < 0) d = c.degree();
    if (c.degree() != d) return false;
  }
  return true;
}

int Derivation::pdeg() const {
  int d = -1;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) throw std::invalid_argument("pdeg: entry not homogeneous");
    if (d >= 0 && c.degree() != d)
      throw std::invalid_argument("pdeg: entries of mixed degrees");
    d = c.degree();
  }
  return d;
}

MultiPoly Derivation::apply(const MultiPoly& f) const {
  int n = nvars();
  if (f.nvars() != n) throw std::invalid_argument("apply: variable count mismatch");
  MultiPoly out = MultiPoly::zero(n);
  for (const auto& [mono, coef] : f.terms()) {
    for (int i = 0; i < n; ++i) {
      if (mono[i] == 0 || coeffs[i].is_zero()) continue;
      Monomial m = mono;
      m[i] -= 1;
      MultiPoly part = MultiPoly::from_terms(n, {{m, coef * mono[i]}});
      out += part * coeffs[i];
    }
  }
  return out;
}

std::string Derivation::row_str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ", ";
    os << coeffs[i].str();
  }
  os << "]";
  return os.str();
}

MultiPoly defining_polynomial(const Graph& g) {
  MultiPoly q = MultiPoly::constant(g.n, 1);
  for (const auto& [a, b] : g.edges) q *= MultiPoly::var_diff(a, b, g.n);
  return q;
}

Derivation theta_power(int k, int nvars) {
  if (k < 0) throw std::invalid_argument("theta_power: negative exponent");
  Derivation d;
  d.coeffs.reserve(nvars);
  for (int i = 1; i <= nvars; ++i) d.coeffs.push_back(var_power(i, k, nvars));
  d.label.kind = DerivationLabel::theta_k;
  d.label.index = k;
  return d;
}

Derivation separator_derivation_formula(int nvars, const std::vector<int>& t_set,
                                        const std::vector<int>& c_set) {
  return separator_derivation_formula(nvars, t_set, c_set,
                                      UniPolyOverS::root_product(nvars, t_set));
}

Derivation separator_derivation_formula(int nvars, const std::vector<int>& t_set,
                                        const std::vector<int>& c_set,
                                        const UniPolyOverS& p) {
  UniPolyOverS factor = UniPolyOverS::root_product(nvars, t_set);
  if (!p.remainder_by_monic(factor).is_zero())
    throw std::invalid_argument("weight polynomial not divisible by the separator factor");
  Derivation d;
  d.coeffs.assign(nvars, MultiPoly::zero(nvars));
  for (int i : c_set) {
    if (i < 1 || i > nvars) throw std::out_of_range("component vertex out of range");
    d.coeffs[i - 1] = p.eval_at_var(i);
  }
  std::vector<int> t = t_set, c = c_set;
  std::sort(t.begin(), t.end());
  std::sort(c.begin(), c.end());
  d.label.kind = DerivationLabel::sep;
  d.label.t = std::move(t);
  d.label.c = std::move(c);
  return d;
}

namespace {

// c_set must be a nonempty union of components of g - t_set; when
// single_component is set it must be exactly one of them.
void check_separator_pair(const Graph& g, const std::vector<int>& t_set,
                          const std::vector<int>& c_set, bool single_component) {
  if (t_set.empty()) throw std::invalid_argument("separator set is empty");
  if (c_set.empty()) throw std::invalid_argument("component set is empty");
  Mask t = vec_to_mask(t_set, g.n);
  Mask c = vec_to_mask(c_set, g.n);
  if (t & c) throw std::invalid_argument("separator and component overlap");
  auto comps = component_masks(g, t);
  if (single_component) {
    if (std::find(comps.begin(), comps.end(), c) == comps.end())
      throw std::invalid_argument("set is not a component of the graph minus the separator");
    if (comps.size() < 2) throw std::invalid_argument("set does not separate the graph");
    return;
  }
  Mask covered = 0;
  for (Mask k : comps) {
    if (c & k) {
      if ((c & k) != k)
        throw std::invalid_argument("set is not a union of components of the graph minus the separator");
      covered |= k;
    }
  }
  if (covered != c)
    throw std::invalid_argument("set is not a union of components of the graph minus the separator");
  if (covered == (g.vertex_mask() & ~t))
    throw std::invalid_argument("set does not separate the graph");
}

}  // namespace

Derivation theta_sep(const Graph& g, const std::vector<int>& t_set,
                     const std::vector<int>& c_set) {
  check_separator_pair(g, t_set, c_set, true);
  return separator_derivation_formula(g.n, t_set, c_set);
}

Derivation theta_sep_poly(const Graph& g, const std::vector<int>& t_set,
                          const std::vector<int>& c_set, const UniPolyOverS& p) {
  check_separator_pair(g, t_set, c_set, true);
  Derivation d = separator_derivation_formula(g.n, t_set, c_set, p);
  d.label.kind = DerivationLabel::sep_poly;
  d.label.weight = p.str();
  return d;
}

Derivation theta_sep_union(const Graph& g, const std::vector<int>& t_set,
                           const std::vector<int>& c_set) {
  check_separator_pair(g, t_set, c_set, false);
  return separator_derivation_formula(g.n, t_set, c_set);
}

Derivation sigma_neighbourhood(const Graph& g, int i) {
  if (i < 1 || i > g.n) throw std::out_of_range("sigma_neighbourhood: vertex out of range");
  MultiPoly prod = MultiPoly::constant(g.n, 1);
  for (int j : mask_to_vec(g.adj[i - 1])) prod *= MultiPoly::var_diff(i, j, g.n);
  Derivation d;
  d.coeffs.assign(g.n, MultiPoly::zero(g.n));
  d.coeffs[i - 1] = prod;
  d.label.kind = DerivationLabel::sigma;
  d.label.index = i;
  return d;
}

Derivation phi(int i, int nvars) {
  if (i < 1 || i > nvars) throw std::out_of_range("phi: index out of range");
  Derivation d;
  d.coeffs.reserve(nvars);
  for (int k = 1; k <= nvars; ++k) {
    MultiPoly prod = MultiPoly::constant(nvars, 1);
    for (int j = 1; j < i; ++j) prod *= MultiPoly::var_diff(k, j, nvars);
    d.coeffs.push_back(prod);
  }
  d.label.kind = DerivationLabel::phi;
  d.label.index = i;
  return d;
}

bool is_member(const Graph& g, const Derivation& d) {
  if (d.nvars() != g.n) throw std::invalid_argument("is_member: variable count mismatch");
  for (const auto& [a, b] : g.edges) {
    MultiPoly img = d.coeffs[a - 1] - d.coeffs[b - 1];
    // divisibility by x_a - x_b amounts to vanishing under x_a := x_b
    if (!img.substitute_equal(a, b).is_zero()) return false;
  }
  return true;
}

SaitoResult saito_check(const Graph& g, const std::vector<Derivation>& ds) {
  if (static_cast<int>(ds.size()) != g.n)
    throw std::invalid_argument("saito_check: need exactly one derivation per vertex");
  for (size_t j = 0; j < ds.size(); ++j) {
    if (ds[j].nvars() != g.n) throw std::invalid_argument("saito_check: variable count mismatch");
    if (!is_member(g, ds[j]))
      throw std::invalid_argument("saito_check: derivation " + std::to_string(j + 1) +
                                  " is not a member");
  }
  std::vector<std::vector<MultiPoly>> m(g.n, std::vector<MultiPoly>(g.n, MultiPoly::zero(g.n)));
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) m[i][j] = ds[j].coeffs[i];
  }
  MultiPoly det = det_poly_matrix(m);
  if (det.is_zero()) return {false, 0};
  MultiPoly q = defining_polynomial(g);
  if (det.degree() != q.degree()) return {false, 0};
  if (grlex_cmp(det.leading_term().first, q.leading_term().first) != 0) return {false, 0};
  Rational c = det.leading_term().second / q.leading_term().second;
  if (det != q * c) return {false, 0};
  return {true, c};
}

}  // namespace sepder

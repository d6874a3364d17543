#include "sepder/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sepder {

Oracle::Oracle(Graph g) : g_(std::move(g)) {
  if (!g_.is_connected()) throw std::invalid_argument("oracle: graph must be connected");
}

int Oracle::cols_at(int p) const {
  return g_.n * static_cast<int>(monomials_of_degree(g_.n, p).size());
}

// Membership of sum c_i d/dx_i demands, for each edge (a,b), that
// c_a - c_b vanish under x_a := x_b. Expanding over the monomial basis
// gives one row per (edge, monomial with zero exponent at a); entries
// are +-1 and index the unknown coefficients z_{vertex, monomial}.
std::vector<linalg::QRow> Oracle::membership_rows(int p) const {
  const auto& monos = monomials_of_degree(g_.n, p);
  int dim_s = static_cast<int>(monos.size());
  std::vector<linalg::QRow> rows;
  for (const auto& [a, b] : g_.edges) {
    for (const auto& target : monos) {
      if (target[a - 1] != 0) continue;
      int s = target[b - 1];
      linalg::QRow row;
      row.reserve(2 * (s + 1));
      Monomial m = target;
      for (int t = 0; t <= s; ++t) {
        m[a - 1] = t;
        m[b - 1] = s - t;
        int r = mono_rank(m);
        row.emplace_back((a - 1) * dim_s + r, Rational(1));
        row.emplace_back((b - 1) * dim_s + r, Rational(-1));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

int Oracle::module_dimension(int p) {
  if (p < 0) throw std::invalid_argument("module_dimension: negative degree");
  auto it = dim_cache_.find(p);
  if (it != dim_cache_.end()) return it->second;
  int dim = cols_at(p) - linalg::exact_rank(cols_at(p), membership_rows(p));
  dim_cache_.emplace(p, dim);
  return dim;
}

linalg::QRow Oracle::derivation_row(const Derivation& d, const Monomial& shift, int p) const {
  int dim_s = static_cast<int>(monomials_of_degree(g_.n, p).size());
  linalg::QRow row;
  for (int i = 0; i < g_.n; ++i) {
    for (const auto& [mono, coef] : d.coeffs[i].terms()) {
      Monomial m = mono_mul(mono, shift);
      row.emplace_back(i * dim_s + mono_rank(m), coef);
    }
  }
  std::sort(row.begin(), row.end(),
            [](const linalg::QEntry& x, const linalg::QEntry& y) { return x.first < y.first; });
  return row;
}

void Oracle::check_generators(const std::vector<Derivation>& gens) const {
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].nvars() != g_.n)
      throw std::invalid_argument("generator " + std::to_string(i + 1) + ": variable count mismatch");
    if (gens[i].is_zero())
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is zero");
    if (!gens[i].is_homogeneous())
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is not homogeneous");
    if (!is_member(g_, gens[i]))
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is not a member");
  }
}

std::vector<linalg::QRow> Oracle::span_rows(const std::vector<Derivation>& gens, int p) const {
  std::vector<linalg::QRow> rows;
  for (const auto& d : gens) {
    int dd = d.pdeg();
    if (dd > p) continue;
    for (const auto& shift : monomials_of_degree(g_.n, p - dd)) {
      rows.push_back(derivation_row(d, shift, p));
    }
  }
  return rows;
}

int Oracle::span_dimension(const std::vector<Derivation>& gens, int p) {
  if (p < 0) throw std::invalid_argument("span_dimension: negative degree");
  check_generators(gens);
  return linalg::exact_rank(cols_at(p), span_rows(gens, p));
}

VerifyResult Oracle::verify_generation(const std::vector<Derivation>& gens, int P) {
  if (P < g_.max_degree())
    throw std::invalid_argument("verify_generation: cutoff below the max degree of the graph");
  check_generators(gens);
  VerifyResult res;
  res.generates = true;
  for (int p = 0; p <= P; ++p) {
    int md = module_dimension(p);
    int sd = linalg::exact_rank(cols_at(p), span_rows(gens, p));
    res.table.push_back({p, md, sd});
    if (sd != md && res.first_failure < 0) {
      res.generates = false;
      res.first_failure = p;
    }
  }
  return res;
}

Derivation Oracle::row_to_derivation(const linalg::QRow& v, int p, const std::string& name) const {
  const auto& monos = monomials_of_degree(g_.n, p);
  int dim_s = static_cast<int>(monos.size());
  std::vector<std::vector<MultiPoly::Term>> terms(g_.n);
  for (const auto& [col, val] : v) {
    terms[col / dim_s].emplace_back(monos[col % dim_s], val);
  }
  Derivation d;
  d.coeffs.reserve(g_.n);
  for (int i = 0; i < g_.n; ++i) d.coeffs.push_back(MultiPoly::from_terms(g_.n, terms[i]));
  d.label.kind = DerivationLabel::custom;
  d.label.text = name;
  return d;
}

MinimalResult Oracle::minimal_degree_sequence(int P) {
  if (P < g_.max_degree())
    throw std::invalid_argument("minimal_degree_sequence: cutoff below the max degree of the graph");
  MinimalResult res;
  for (int p = 0; p <= P; ++p) {
    int md = module_dimension(p);
    auto srows = span_rows(res.generators, p);
    int sd = linalg::exact_rank(cols_at(p), srows);
    if (sd == md) continue;
    // extend an echelon of the current span by kernel vectors of the
    // membership matrix; each extension is a fresh minimal generator
    linalg::IncrementalSpan span(cols_at(p));
    for (auto& r : srows) span.insert(std::move(r));
    int want = md - sd;
    int found = 0;
    for (auto& k : linalg::kernel_basis(cols_at(p), membership_rows(p))) {
      if (found == want) break;
      linalg::QRow vec = k;
      if (span.insert(std::move(k))) {
        ++found;
        std::ostringstream name;
        name << "gen(deg " << p << ", #" << (res.degrees.size() + 1) << ")";
        res.degrees.push_back(p);
        res.generators.push_back(row_to_derivation(vec, p, name.str()));
      }
    }
    if (found != want) throw std::logic_error("minimal_degree_sequence: extension shortfall");
  }
  return res;
}

GradedBasis Oracle::graded_basis(int p) {
  if (p < 0) throw std::invalid_argument("graded_basis: negative degree");
  GradedBasis gb;
  gb.degree = p;
  gb.coeff_matrix = linalg::kernel_basis(cols_at(p), membership_rows(p));
  return gb;
}

Derivation Oracle::decode_row(const linalg::QRow& v, int p, const std::string& name) const {
  return row_to_derivation(v, p, name);
}

std::vector<int> Oracle::find_redundant(const std::vector<Derivation>& gens, int P) {
  check_generators(gens);
  for (const auto& d : gens) {
    if (d.pdeg() > P)
      throw std::invalid_argument("find_redundant: generator degree exceeds cutoff");
  }
  std::vector<int> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<Derivation> others;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    int p = gens[i].pdeg();
    auto rows = span_rows(others, p);
    int base = linalg::exact_rank(cols_at(p), rows);
    rows.push_back(derivation_row(gens[i], Monomial(g_.n, 0), p));
    int ext = linalg::exact_rank(cols_at(p), rows);
    if (ext == base) out.push_back(static_cast<int>(i));
  }
  return out;
}

int module_dimension(const Graph& g, int p) { return Oracle(g).module_dimension(p); }

int span_dimension(const Graph& g, const std::vector<Derivation>& gens, int p) {
  return Oracle(g).span_dimension(gens, p);
}

VerifyResult verify_generation(const Graph& g, const std::vector<Derivation>& gens, int P) {
  return Oracle(g).verify_generation(gens, P);
}

MinimalResult minimal_degree_sequence(const Graph& g, int P) {
  return Oracle(g).minimal_degree_sequence(P);
}

std::vector<int> find_redundant(const Graph& g, const std::vector<Derivation>& gens, int P) {
  return Oracle(g).find_redundant(gens, P);
}

GradedBasis graded_basis(const Graph& g, int p) { return Oracle(g).graded_basis(p); }

int default_cutoff(const Graph& g) { return g.max_degree() + 2; }

}  // namespace sepder

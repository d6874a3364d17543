#include "sepder/monomial.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sepder {

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("grlex_cmp: variable count mismatch");
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mono_mul: variable count mismatch");
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  if (!mono_divides(a, b)) throw std::invalid_argument("mono_div: not divisible");
  Monomial r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

std::string mono_str(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (m[i] > 1) os << "^" << m[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void gen_monomials(int nvars, int p, Monomial& cur, int pos, std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = p;
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = p; e >= 0; --e) {
    cur[pos] = e;
    gen_monomials(nvars, p - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

const std::vector<Monomial>& monomials_of_degree(int nvars, int p) {
  if (nvars < 1 || p < 0) throw std::invalid_argument("monomials_of_degree: bad arguments");
  static std::map<std::pair<int, int>, std::vector<Monomial>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(nvars, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Monomial> out;
  out.reserve(static_cast<size_t>(binom(nvars + p - 1, nvars - 1)));
  Monomial cur(nvars, 0);
  gen_monomials(nvars, p, cur, 0, out);
  return cache.emplace(key, std::move(out)).first->second;
}

int mono_rank(const Monomial& m) {
  int n = static_cast<int>(m.size());
  int p = total_degree(m);
  std::int64_t rank = 0;
  for (int i = 0; i < n - 1; ++i) {
    // monomials whose exponent at position i exceeds m[i] come earlier
    rank += binom(n - i + p - m[i] - 2, n - i - 1);
    p -= m[i];
  }
  return static_cast<int>(rank);
}

}  // namespace sepder

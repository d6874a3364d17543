#include "sepder/polymatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepder {

MultiPoly det_poly_matrix(const std::vector<std::vector<MultiPoly>>& m) {
  size_t n = m.size();
  if (n == 0) throw std::invalid_argument("det_poly_matrix: empty matrix");
  int nvars = -1;
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("det_poly_matrix: matrix not square");
    for (const auto& e : row) {
      if (nvars < 0) nvars = e.nvars();
      if (e.nvars() != nvars) throw std::invalid_argument("det_poly_matrix: variable count mismatch");
    }
  }
  std::vector<std::vector<MultiPoly>> a = m;
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(nvars, 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly::zero(nvars);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num.is_zero() ? num : num.divided_by(prev);
      }
      a[i][k] = MultiPoly::zero(nvars);
    }
    prev = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

std::vector<std::vector<int>> monomial_transversals(const std::vector<Monomial>& monos) {
  std::vector<std::uint64_t> supports;
  int nvars = 0;
  for (const auto& m : monos) {
    nvars = std::max(nvars, static_cast<int>(m.size()));
    std::uint64_t s = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) s |= std::uint64_t(1) << i;
    }
    if (s == 0) return {};  // a constant monomial cannot be hit
    supports.push_back(s);
  }
  if (supports.empty()) return {{}};
  if (nvars > 22) throw std::invalid_argument("monomial_transversals: too many variables");
  std::uint64_t universe = 0;
  for (auto s : supports) universe |= s;
  auto hits_all = [&](std::uint64_t t) {
    for (auto s : supports) {
      if (!(s & t)) return false;
    }
    return true;
  };
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t t = 1; t <= universe; ++t) {
    if ((t & universe) != t) continue;
    if (!hits_all(t)) continue;
    bool min = true;
    std::uint64_t w = t;
    while (w && min) {
      std::uint64_t bit = w & (~w + 1);
      w &= w - 1;
      if (hits_all(t & ~bit)) min = false;
    }
    if (min) minimal.push_back(t);
  }
  std::vector<std::vector<int>> out;
  for (auto t : minimal) {
    std::vector<int> v;
    std::uint64_t w = t;
    while (w) {
      v.push_back(__builtin_ctzll(w) + 1);
      w &= w - 1;
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace sepder

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sepder/linalg.hpp"
#include "sepder/monomial.hpp"
#include "sepder/multipoly.hpp"
#include "sepder/polymatrix.hpp"
#include "sepder/unipoly.hpp"

using namespace sepder;

namespace {

MultiPoly random_poly(std::mt19937& rng, int nvars, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> coef(-4, 4), expo(0, maxdeg);
  MultiPoly p = MultiPoly::zero(nvars);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(nvars, 0);
    for (int i = 0; i < nvars; ++i) m[i] = expo(rng);
    int c = coef(rng);
    if (c == 0) c = 1;
    p = p + MultiPoly::constant(nvars, c) * MultiPoly::from_terms(nvars, {{m, Rational(1)}});
  }
  return p;
}

}  // namespace

TEST_CASE("monomial order is graded lexicographic descending") {
  const auto& m2 = monomials_of_degree(3, 2);
  CHECK(m2.size() == 6);
  CHECK(m2.front() == Monomial{2, 0, 0});
  CHECK(m2.back() == Monomial{0, 0, 2});
  for (size_t i = 0; i + 1 < m2.size(); ++i) CHECK(grlex_cmp(m2[i], m2[i + 1]) > 0);
  // degree dominates the tie-break
  CHECK(grlex_cmp({0, 0, 2}, {1, 0, 0}) > 0);
  CHECK_THROWS(grlex_cmp({1, 0}, {1, 0, 0}));
}

TEST_CASE("mono_rank inverts the degree-slice listing") {
  for (int n : {1, 2, 3, 4}) {
    for (int p : {0, 1, 2, 3, 5}) {
      const auto& monos = monomials_of_degree(n, p);
      for (size_t i = 0; i < monos.size(); ++i) CHECK(mono_rank(monos[i]) == (int)i);
    }
  }
}

TEST_CASE("monomial arithmetic") {
  Monomial a{2, 1, 0}, b{0, 1, 1};
  CHECK(mono_mul(a, b) == Monomial{2, 2, 1});
  CHECK(mono_divides(b, mono_mul(a, b)));
  CHECK_FALSE(mono_divides(a, b));
  CHECK(mono_div(mono_mul(a, b), a) == b);
  CHECK(mono_str(a) == "x1^2*x2");
  CHECK(mono_str(Monomial{0, 0, 0}) == "1");
}

TEST_CASE("polynomial rendering is canonical") {
  MultiPoly x1 = MultiPoly::variable(1, 3), x2 = MultiPoly::variable(2, 3);
  MultiPoly p = x1 * x1 * MultiPoly::variable(3, 3) - MultiPoly::constant(3, 2) * x2;
  CHECK(p.str() == "x1^2*x3 - 2*x2");
  CHECK(MultiPoly::zero(3).str() == "0");
  MultiPoly half = MultiPoly::constant(2, Rational(3) / 2) * MultiPoly::variable(1, 2) +
                   MultiPoly::constant(2, 1);
  CHECK(half.str() == "3/2*x1 + 1");
}

TEST_CASE("ring identities on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly a = random_poly(rng, 3, 3, 3);
    MultiPoly b = random_poly(rng, 3, 3, 3);
    MultiPoly c = random_poly(rng, 3, 2, 2);
    CHECK(((a + b) * c).str() == (a * c + b * c).str());
    CHECK((a - a).is_zero());
    CHECK((a * b).str() == (b * a).str());
  }
}

TEST_CASE("substitute_equal merges variables") {
  MultiPoly d = MultiPoly::var_diff(1, 2, 3);  // x1 - x2
  CHECK(d.substitute_equal(1, 2).is_zero());
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly f = random_poly(rng, 3, 3, 3);
    CHECK((d * f).substitute_equal(1, 2).is_zero());
  }
}

TEST_CASE("exact division") {
  MultiPoly a = MultiPoly::var_diff(1, 3, 3);
  MultiPoly b = MultiPoly::var_diff(2, 3, 3);
  MultiPoly prod = a * b;
  CHECK(prod.divisible_by(a));
  CHECK(prod.divided_by(a).str() == b.str());
  CHECK_FALSE(prod.divisible_by(MultiPoly::variable(1, 3)));
  CHECK_THROWS(prod.divided_by(MultiPoly::variable(1, 3)));
}

TEST_CASE("homogeneity and degree") {
  MultiPoly p = MultiPoly::variable(1, 2) * MultiPoly::variable(2, 2);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  MultiPoly q = p + MultiPoly::variable(1, 2);
  CHECK_FALSE(q.is_homogeneous());
  CHECK(MultiPoly::zero(2).degree() == -1);
}

TEST_CASE("univariate layer expands root products") {
  UniPolyOverS rp = UniPolyOverS::root_product(3, {1, 2});  // (y-x1)(y-x2)
  // y^2 - (x1+x2) y + x1 x2
  REQUIRE(rp.degree_in_y() == 2);
  CHECK(rp.coeffs()[2].str() == "1");
  CHECK(rp.coeffs()[1].str() == "-x1 - x2");
  CHECK(rp.coeffs()[0].str() == "x1*x2");
  MultiPoly at3 = rp.eval_at_var(3);
  CHECK(at3.str() == (MultiPoly::var_diff(3, 1, 3) * MultiPoly::var_diff(3, 2, 3)).str());
}

TEST_CASE("monic remainder detects divisibility") {
  UniPolyOverS d = UniPolyOverS::root_product(3, {1, 3});
  UniPolyOverS q =
      UniPolyOverS::y_power(3, 1) + UniPolyOverS::constant(3, MultiPoly::variable(2, 3));
  UniPolyOverS p = q * d;
  CHECK(p.remainder_by_monic(d).is_zero());
  UniPolyOverS bad = p + UniPolyOverS::constant(3, MultiPoly::constant(3, 1));
  CHECK_FALSE(bad.remainder_by_monic(d).is_zero());
}

TEST_CASE("determinants of polynomial matrices") {
  // Vandermonde rows 1, x_i, x_i^2
  std::vector<std::vector<MultiPoly>> m(3, std::vector<MultiPoly>(3, MultiPoly::zero(3)));
  for (int i = 0; i < 3; ++i) {
    MultiPoly xi = MultiPoly::variable(i + 1, 3);
    m[i][0] = MultiPoly::constant(3, 1);
    m[i][1] = xi;
    m[i][2] = xi * xi;
  }
  MultiPoly det = det_poly_matrix(m);
  MultiPoly expect = MultiPoly::var_diff(2, 1, 3) * MultiPoly::var_diff(3, 1, 3) *
                     MultiPoly::var_diff(3, 2, 3);
  CHECK(det.str() == expect.str());

  // duplicated row kills it
  m[2] = m[1];
  CHECK(det_poly_matrix(m).is_zero());
}

TEST_CASE("bareiss agrees with cofactor expansion on random 4x4") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<std::vector<MultiPoly>> m(4, std::vector<MultiPoly>(4, MultiPoly::zero(2)));
    for (auto& row : m) {
      for (auto& e : row) {
        e = MultiPoly::constant(2, coef(rng)) +
            MultiPoly::constant(2, coef(rng)) * MultiPoly::variable(1, 2) +
            MultiPoly::constant(2, coef(rng)) * MultiPoly::variable(2, 2);
      }
    }
    // cofactor expansion along the first row
    MultiPoly cof = MultiPoly::zero(2);
    for (int j = 0; j < 4; ++j) {
      std::vector<std::vector<MultiPoly>> minor;
      for (int r = 1; r < 4; ++r) {
        std::vector<MultiPoly> row;
        for (int c = 0; c < 4; ++c) {
          if (c != j) row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      MultiPoly term = m[0][j] * det_poly_matrix(minor);
      cof = (j % 2 == 0) ? cof + term : cof - term;
    }
    CHECK(det_poly_matrix(m).str() == cof.str());
  }
}

TEST_CASE("monomial transversals") {
  // supports {1,2} and {1,3}: either hit 1, or hit both 2 and 3
  std::vector<Monomial> monos{{1, 1, 0}, {1, 0, 2}};
  auto tr = monomial_transversals(monos);
  REQUIRE(tr.size() == 2);
  CHECK(tr[0] == std::vector<int>{1});
  CHECK(tr[1] == std::vector<int>{2, 3});
  // a constant monomial cannot be covered
  CHECK(monomial_transversals({{0, 0, 0}}).empty());
  // no monomials: the empty transversal
  auto none = monomial_transversals({});
  REQUIRE(none.size() == 1);
  CHECK(none[0].empty());
}

TEST_CASE("exact rank matches dense elimination on random sparse systems") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dim(1, 8), val(-3, 3);
  std::uniform_real_distribution<double> fill(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    std::vector<linalg::QRow> sparse;
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols, 0));
    for (int r = 0; r < rows; ++r) {
      linalg::QRow row;
      for (int c = 0; c < cols; ++c) {
        if (fill(rng) < 0.5) continue;
        int v = val(rng);
        if (v == 0) continue;
        row.emplace_back(c, Rational(v));
        dense[r][c] = v;
      }
      sparse.push_back(std::move(row));
    }
    CHECK(linalg::exact_rank(cols, sparse) == linalg::rational_rank(dense));
  }
}

TEST_CASE("overflow escalation preserves rank") {
  // entries around 2^62 force the big-integer path
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> val(1, 1000000000L);
  for (int trial = 0; trial < 5; ++trial) {
    int nr = 5, nc = 5;
    std::vector<linalg::QRow> sparse;
    std::vector<std::vector<Rational>> dense(nr, std::vector<Rational>(nc, 0));
    for (int r = 0; r < nr; ++r) {
      linalg::QRow row;
      for (int c = 0; c < nc; ++c) {
        BigInt big = BigInt(val(rng)) * BigInt(val(rng));
        Rational q(big);
        row.emplace_back(c, q);
        dense[r][c] = q;
      }
      sparse.push_back(std::move(row));
    }
    CHECK(linalg::exact_rank(nc, sparse) == linalg::rational_rank(dense));
  }
}

TEST_CASE("kernel vectors annihilate the rows") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> dim(2, 7), val(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    std::vector<linalg::QRow> mat;
    for (int r = 0; r < rows; ++r) {
      linalg::QRow row;
      for (int c = 0; c < cols; ++c) {
        int v = val(rng);
        if (v) row.emplace_back(c, Rational(v));
      }
      mat.push_back(std::move(row));
    }
    auto kernel = linalg::kernel_basis(cols, mat);
    CHECK((int)kernel.size() == cols - linalg::exact_rank(cols, mat));
    for (const auto& k : kernel) {
      std::vector<Rational> kd(cols, 0);
      for (const auto& [c, v] : k) kd[c] = v;
      for (const auto& row : mat) {
        Rational dot = 0;
        for (const auto& [c, v] : row) dot += v * kd[c];
        CHECK(dot == 0);
      }
    }
    // kernel vectors are independent
    CHECK(linalg::exact_rank(cols, kernel) == (int)kernel.size());
  }
}

TEST_CASE("incremental span tracks rank and membership") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> val(-2, 2);
  const int cols = 6;
  for (int trial = 0; trial < 20; ++trial) {
    linalg::IncrementalSpan span(cols);
    std::vector<linalg::QRow> inserted;
    for (int step = 0; step < 10; ++step) {
      linalg::QRow row;
      for (int c = 0; c < cols; ++c) {
        int v = val(rng);
        if (v) row.emplace_back(c, Rational(v));
      }
      bool grew = span.insert(linalg::QRow(row));
      if (grew) inserted.push_back(row);
      CHECK(span.rank() == linalg::exact_rank(cols, inserted));
      CHECK(span.contains(row));
    }
  }
}

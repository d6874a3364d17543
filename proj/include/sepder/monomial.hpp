#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sepder {

// Exponent vector over variables x1..xn (index 0 holds the exponent of x1).
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// Graded lexicographic comparison: higher total degree wins, ties broken by
// the leftmost differing exponent (larger exponent first). Returns -1, 0, 1.
int grlex_cmp(const Monomial& a, const Monomial& b);

Monomial mono_mul(const Monomial& a, const Monomial& b);

// Componentwise divisibility a | b.
bool mono_divides(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& b, const Monomial& a);

// "x1^2*x3", "1" for the empty monomial.
std::string mono_str(const Monomial& m);

// All monomials of total degree p in nvars variables, listed in descending
// graded-lex order. Cached per (nvars, p); the returned reference stays valid
// for the lifetime of the process.
const std::vector<Monomial>& monomials_of_degree(int nvars, int p);

// Position of m inside monomials_of_degree(nvars, deg(m)), computed
// combinatorially without a table lookup.
int mono_rank(const Monomial& m);

// C(n, k) as int64; callers stay far below overflow at desk scale.
std::int64_t binom(int n, int k);

}  // namespace sepder

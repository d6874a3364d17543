#pragma once

#include <vector>

#include "sepder/multipoly.hpp"

namespace sepder {

// Exact determinant of a square polynomial matrix via fraction-free
// elimination (divisions are exact at every step). Throws on a ragged or
// empty matrix.
MultiPoly det_poly_matrix(const std::vector<std::vector<MultiPoly>>& m);

// Inclusion-minimal sets of variables meeting the support of every listed
// monomial, ordered by (size, lexicographic). Variables are 1-based.
std::vector<std::vector<int>> monomial_transversals(const std::vector<Monomial>& monos);

}  // namespace sepder

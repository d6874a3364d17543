#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sepder/rational.hpp"

namespace sepder {
namespace linalg {

// Sparse row: (column, value) pairs sorted by column, values nonzero.
using QEntry = std::pair<int, Rational>;
using QRow = std::vector<QEntry>;

// Exact rank of the matrix whose rows are given. Rows are split into
// column-connected components first; each component is eliminated with
// fraction-free integer arithmetic (64-bit words, escalating to bignums
// only when a component overflows).
int exact_rank(int ncols, const std::vector<QRow>& rows);

// Basis of the right kernel {v : A v = 0}. Vectors come back as sorted
// sparse rows; their count equals ncols - exact_rank.
std::vector<QRow> kernel_basis(int ncols, const std::vector<QRow>& rows);

// Rank of a dense rational matrix; convenience wrapper over exact_rank.
int rational_rank(const std::vector<std::vector<Rational>>& m);

// Row-echelon span maintained incrementally. Pivots are chosen as the
// smallest column index, so membership tests are deterministic.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(int ncols) : ncols_(ncols) {}

  // Returns true when v was independent of the current span (rank grew).
  bool insert(QRow v);
  bool contains(QRow v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int ncols_;
  std::map<int, QRow> rows_;  // pivot column -> row with that pivot scaled to 1

  QRow reduce(QRow v) const;
};

}  // namespace linalg
}  // namespace sepder

#include "sepder/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace sepder {
namespace linalg {

namespace {

using i64 = long long;
using i128 = __int128;

struct Overflow {};

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i64 kMaxWord = 0x7fffffffffffffffLL;

// Small arithmetic shims so one elimination routine serves both the
// word-sized fast path and the bignum fallback.
struct WordOps {
  using Value = i64;
  using Wide = i128;
  static Wide widen(Value v) { return v; }
  static Wide mul(Value a, Value b) { return static_cast<i128>(a) * b; }
  static Wide gcd(Wide a, Wide b) { return gcd128(a, b); }
  static Value narrow(Wide v) {
    if (v > kMaxWord || v < -kMaxWord) throw Overflow{};
    return static_cast<i64>(v);
  }
  static bool is_unit(Value v) { return v == 1 || v == -1; }
};

struct BigOps {
  using Value = BigInt;
  using Wide = BigInt;
  static Wide widen(const Value& v) { return v; }
  static Wide mul(const Value& a, const Value& b) { return a * b; }
  static Wide gcd(const Wide& a, const Wide& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static Value narrow(Wide v) { return v; }
  static bool is_unit(const Value& v) { return v == 1 || v == -1; }
};

template <typename Ops>
class Eliminator {
 public:
  using Value = typename Ops::Value;
  using Wide = typename Ops::Wide;
  using Row = std::vector<std::pair<int, Value>>;

  Eliminator(int ncols, std::vector<Row> rows, bool keep_retired)
      : ncols_(ncols),
        rows_(std::move(rows)),
        keep_retired_(keep_retired),
        dead_(rows_.size(), 0),
        colcount_(ncols, 0),
        colrows_(ncols),
        buckets_(ncols + 1) {
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) {
        dead_[r] = 1;
        continue;
      }
      normalize(rows_[r]);
      for (const auto& e : rows_[r]) {
        ++colcount_[e.first];
        colrows_[e.first].push_back(static_cast<int>(r));
      }
      push_bucket(static_cast<int>(r));
    }
  }

  int run() {
    while (true) {
      auto [pr, pc] = pick_pivot();
      if (pr < 0) break;
      eliminate(pr, pc);
    }
    return rank_;
  }

  // (row at retirement, pivot column), in retirement order.
  std::vector<std::pair<Row, int>> take_retired() { return std::move(retired_); }

 private:
  int ncols_;
  std::vector<Row> rows_;
  bool keep_retired_;
  std::vector<char> dead_;
  std::vector<int> colcount_;
  std::vector<std::vector<int>> colrows_;
  std::vector<std::vector<int>> buckets_;  // index = nnz, lazy entries
  std::vector<std::pair<Row, int>> retired_;
  int rank_ = 0;
  size_t cursor_ = 1;

  static void normalize(Row& r) {
    if (r.empty()) return;
    Wide g = Ops::widen(r[0].second);
    for (size_t i = 1; i < r.size() && g != 1; ++i) g = Ops::gcd(g, Ops::widen(r[i].second));
    if (g < 0) g = -g;
    bool flip = r[0].second < 0;
    if (g == 1 && !flip) return;
    for (auto& e : r) {
      Wide v = Ops::widen(e.second);
      if (g != 1) v /= g;
      if (flip) v = -v;
      e.second = Ops::narrow(v);
    }
  }

  void push_bucket(int r) {
    size_t nnz = rows_[r].size();
    if (nnz == 0) return;
    buckets_[nnz].push_back(r);
    if (nnz < cursor_) cursor_ = nnz;
  }

  bool row_has(int r, int c, Value* out) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<int, Value>& e, int col) { return e.first < col; });
    if (it == row.end() || it->first != c) return false;
    if (out) *out = it->second;
    return true;
  }

  std::pair<int, int> pick_pivot() {
    constexpr int kCandidates = 24;
    int found = 0;
    int best_r = -1, best_c = -1;
    bool best_unit = false;
    double best_cost = 0;
    for (size_t b = cursor_; b < buckets_.size() && found < kCandidates; ++b) {
      auto& bucket = buckets_[b];
      size_t w = 0;
      for (size_t i = 0; i < bucket.size(); ++i) {
        int r = bucket[i];
        if (dead_[r] || rows_[r].size() != b) continue;  // stale
        bucket[w++] = r;
        if (found >= kCandidates) continue;
        ++found;
        for (const auto& e : rows_[r]) {
          bool unit = Ops::is_unit(e.second);
          double cost = static_cast<double>(rows_[r].size() - 1) *
                        static_cast<double>(colcount_[e.first] - 1);
          if (best_r < 0 || (unit && !best_unit) || (unit == best_unit && cost < best_cost)) {
            best_r = r;
            best_c = e.first;
            best_unit = unit;
            best_cost = cost;
          }
        }
      }
      bucket.resize(w);
      if (found == 0 && w == 0 && b == cursor_) ++cursor_;
    }
    return {best_r, best_c};
  }

  void eliminate(int pr, int pc) {
    Row pivot = rows_[pr];  // frozen copy; updates touch other rows only
    Value pval = 0;
    row_has(pr, pc, &pval);
    auto& touched = colrows_[pc];
    for (size_t i = 0; i < touched.size(); ++i) {
      int r = touched[i];
      if (r == pr || dead_[r]) continue;
      Value aval;
      if (!row_has(r, pc, &aval)) continue;  // stale or already combined
      combine(r, pivot, pc, pval, aval);
    }
    touched.clear();
    // retire the pivot row
    dead_[pr] = 1;
    for (const auto& e : rows_[pr]) --colcount_[e.first];
    ++rank_;
    if (keep_retired_) {
      retired_.emplace_back(std::move(rows_[pr]), pc);
    }
    rows_[pr].clear();
    rows_[pr].shrink_to_fit();
  }

  // rows_[r] := (pval * rows_[r] - aval * pivot) / content, pc eliminated.
  void combine(int r, const Row& pivot, int pc, const Value& pval, const Value& aval) {
    const Row& old = rows_[r];
    std::vector<std::pair<int, Wide>> tmp;
    tmp.reserve(old.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < old.size() || j < pivot.size()) {
      int ci = i < old.size() ? old[i].first : ncols_;
      int cj = j < pivot.size() ? pivot[j].first : ncols_;
      int c = std::min(ci, cj);
      Wide v = 0;
      if (ci == c) v += Ops::mul(pval, old[i++].second);
      if (cj == c) v -= Ops::mul(aval, pivot[j++].second);
      if (c != pc && v != 0) tmp.emplace_back(c, v);
    }
    Row next;
    next.reserve(tmp.size());
    if (!tmp.empty()) {
      Wide g = tmp[0].second;
      for (size_t k = 1; k < tmp.size() && !(g == 1 || g == -1); ++k) g = Ops::gcd(g, tmp[k].second);
      if (g < 0) g = -g;
      bool flip = tmp[0].second < 0;
      for (auto& e : tmp) {
        Wide v = e.second;
        if (g != 1) v /= g;
        if (flip) v = -v;
        next.emplace_back(e.first, Ops::narrow(v));
      }
    }
    // bookkeeping diffs between old and next
    i = 0;
    j = 0;
    while (i < old.size() || j < next.size()) {
      int ci = i < old.size() ? old[i].first : ncols_;
      int cj = j < next.size() ? next[j].first : ncols_;
      if (ci < cj) {
        --colcount_[ci];
        ++i;
      } else if (cj < ci) {
        ++colcount_[cj];
        colrows_[cj].push_back(r);
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
    rows_[r] = std::move(next);
    if (rows_[r].empty()) {
      dead_[r] = 1;
    } else {
      push_bucket(r);
    }
  }
};

// One column-connected component, with columns remapped to 0..k-1.
struct Component {
  std::vector<int> cols;                                    // global ids, sorted
  std::vector<std::vector<std::pair<int, BigInt>>> rows;    // local column ids
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

// Clears denominators row by row and divides out integer content.
std::vector<std::pair<int, BigInt>> to_integer_row(const QRow& q) {
  std::vector<std::pair<int, Rational>> row(q.begin(), q.end());
  std::sort(row.begin(), row.end(),
            [](const QEntry& a, const QEntry& b) { return a.first < b.first; });
  std::vector<std::pair<int, Rational>> merged;
  for (auto& e : row) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(e);
    }
  }
  BigInt lcm = 1;
  for (auto& e : merged) {
    e.second.canonicalize();
    if (sgn(e.second) == 0) continue;
    BigInt den = e.second.get_den();
    BigInt g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<std::pair<int, BigInt>> out;
  for (const auto& e : merged) {
    if (sgn(e.second) == 0) continue;
    BigInt v = e.second.get_num() * (lcm / e.second.get_den());
    out.emplace_back(e.first, v);
  }
  return out;
}

std::vector<Component> split_components(int ncols,
                                        const std::vector<QRow>& rows) {
  UnionFind uf(ncols);
  std::vector<std::vector<std::pair<int, BigInt>>> irows;
  irows.reserve(rows.size());
  for (const auto& q : rows) {
    auto ir = to_integer_row(q);
    if (ir.empty()) continue;
    for (size_t i = 1; i < ir.size(); ++i) uf.unite(ir[0].first, ir[i].first);
    irows.push_back(std::move(ir));
  }
  std::unordered_map<int, int> comp_of_root;
  std::vector<Component> comps;
  std::vector<std::vector<int>> rows_of_comp;
  for (size_t r = 0; r < irows.size(); ++r) {
    int root = uf.find(irows[r][0].first);
    auto it = comp_of_root.find(root);
    if (it == comp_of_root.end()) {
      it = comp_of_root.emplace(root, static_cast<int>(comps.size())).first;
      comps.emplace_back();
      rows_of_comp.emplace_back();
    }
    Component& comp = comps[it->second];
    rows_of_comp[it->second].push_back(static_cast<int>(r));
    for (const auto& e : irows[r]) comp.cols.push_back(e.first);
  }
  // local ids must be monotone in the global ids so rows stay sorted
  std::vector<int> local_id(ncols, -1);
  for (size_t k = 0; k < comps.size(); ++k) {
    Component& comp = comps[k];
    std::sort(comp.cols.begin(), comp.cols.end());
    comp.cols.erase(std::unique(comp.cols.begin(), comp.cols.end()), comp.cols.end());
    for (size_t i = 0; i < comp.cols.size(); ++i) local_id[comp.cols[i]] = static_cast<int>(i);
    for (int r : rows_of_comp[k]) {
      for (auto& e : irows[r]) e.first = local_id[e.first];
      comp.rows.push_back(std::move(irows[r]));
    }
  }
  return comps;
}

bool fits_word(const Component& comp) {
  for (const auto& r : comp.rows) {
    for (const auto& e : r) {
      if (!e.second.fits_slong_p()) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::pair<int, i64>>> to_word_rows(const Component& comp) {
  std::vector<std::vector<std::pair<int, i64>>> out;
  out.reserve(comp.rows.size());
  for (const auto& r : comp.rows) {
    std::vector<std::pair<int, i64>> row;
    row.reserve(r.size());
    for (const auto& e : r) row.emplace_back(e.first, e.second.get_si());
    out.push_back(std::move(row));
  }
  return out;
}

struct CompResult {
  int rank = 0;
  // echelon rows in retirement order with pivot columns, rational values
  std::vector<std::pair<QRow, int>> retired;
};

Rational to_rational(i64 v) { return Rational(static_cast<long>(v)); }
Rational to_rational(const BigInt& v) { return Rational(v); }

CompResult eliminate_component(const Component& comp, bool keep_retired) {
  CompResult res;
  auto harvest = [&](auto retired_rows) {
    for (auto& [row, pc] : retired_rows) {
      QRow qr;
      qr.reserve(row.size());
      for (auto& e : row) qr.emplace_back(e.first, to_rational(e.second));
      res.retired.emplace_back(std::move(qr), pc);
    }
  };
  int ncols = static_cast<int>(comp.cols.size());
  if (fits_word(comp)) {
    try {
      Eliminator<WordOps> e(ncols, to_word_rows(comp), keep_retired);
      res.rank = e.run();
      if (keep_retired) harvest(e.take_retired());
      return res;
    } catch (const Overflow&) {
      // fall through to the bignum pass on the original rows
      res = CompResult{};
    }
  }
  Eliminator<BigOps> e(ncols, comp.rows, keep_retired);
  res.rank = e.run();
  if (keep_retired) harvest(e.take_retired());
  return res;
}

}  // namespace

int exact_rank(int ncols, const std::vector<QRow>& rows) {
  if (ncols < 0) throw std::invalid_argument("exact_rank: negative column count");
  int rank = 0;
  for (const auto& comp : split_components(ncols, rows)) {
    rank += eliminate_component(comp, false).rank;
  }
  return rank;
}

std::vector<QRow> kernel_basis(int ncols, const std::vector<QRow>& rows) {
  if (ncols < 0) throw std::invalid_argument("kernel_basis: negative column count");
  std::vector<QRow> basis;
  std::vector<char> covered(ncols, 0);
  for (const auto& comp : split_components(ncols, rows)) {
    for (int c : comp.cols) covered[c] = 1;
    CompResult res = eliminate_component(comp, true);
    std::vector<char> is_pivot(comp.cols.size(), 0);
    for (const auto& [row, pc] : res.retired) is_pivot[pc] = 1;
    for (size_t f = 0; f < comp.cols.size(); ++f) {
      if (is_pivot[f]) continue;
      // back-substitute through the echelon rows, newest first
      std::unordered_map<int, Rational> v;
      v[static_cast<int>(f)] = 1;
      for (auto it = res.retired.rbegin(); it != res.retired.rend(); ++it) {
        const QRow& row = it->first;
        int pc = it->second;
        Rational s = 0, pval = 0;
        for (const auto& e : row) {
          if (e.first == pc) {
            pval = e.second;
            continue;
          }
          auto vi = v.find(e.first);
          if (vi != v.end()) s += e.second * vi->second;
        }
        if (sgn(s) != 0) v[pc] = -s / pval;
      }
      QRow out;
      out.reserve(v.size());
      for (const auto& [lc, val] : v) {
        if (sgn(val) != 0) out.emplace_back(comp.cols[lc], val);
      }
      std::sort(out.begin(), out.end(),
                [](const QEntry& a, const QEntry& b) { return a.first < b.first; });
      basis.push_back(std::move(out));
    }
  }
  // columns absent from every row contribute unit kernel vectors
  for (int c = 0; c < ncols; ++c) {
    if (!covered[c]) basis.push_back({{c, Rational(1)}});
  }
  return basis;
}

int rational_rank(const std::vector<std::vector<Rational>>& m) {
  int ncols = 0;
  for (const auto& r : m) ncols = std::max(ncols, static_cast<int>(r.size()));
  std::vector<QRow> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    QRow row;
    for (size_t c = 0; c < r.size(); ++c) {
      if (sgn(r[c]) != 0) row.emplace_back(static_cast<int>(c), r[c]);
    }
    rows.push_back(std::move(row));
  }
  return exact_rank(ncols, rows);
}

QRow IncrementalSpan::reduce(QRow v) const {
  std::sort(v.begin(), v.end(), [](const QEntry& a, const QEntry& b) { return a.first < b.first; });
  while (!v.empty()) {
    int lead = v.front().first;
    auto it = rows_.find(lead);
    if (it == rows_.end()) return v;
    Rational c = v.front().second;
    // v -= c * pivot row (pivot coefficient is 1)
    QRow out;
    out.reserve(v.size() + it->second.size());
    size_t i = 0, j = 0;
    const QRow& p = it->second;
    while (i < v.size() || j < p.size()) {
      int ci = i < v.size() ? v[i].first : ncols_;
      int cj = j < p.size() ? p[j].first : ncols_;
      if (ci < cj) {
        out.push_back(v[i++]);
      } else if (cj < ci) {
        out.emplace_back(cj, -c * p[j++].second);
      } else {
        Rational s = v[i].second - c * p[j].second;
        if (sgn(s) != 0) out.emplace_back(ci, s);
        ++i;
        ++j;
      }
    }
    v = std::move(out);
  }
  return v;
}

bool IncrementalSpan::insert(QRow v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational lead = v.front().second;
  for (auto& e : v) e.second /= lead;
  int pc = v.front().first;
  rows_.emplace(pc, std::move(v));
  return true;
}

bool IncrementalSpan::contains(QRow v) const { return reduce(std::move(v)).empty(); }

}  // namespace linalg
}  // namespace sepder

#include "walg/sparse.hpp"

#include <algorithm>

#include "walg/errors.hpp"

namespace walg {

SparseMat::SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw UsageError("SparseMat: negative dimension");
}

SparseMat SparseMat::identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
  return m;
}

SparseMat SparseMat::fromRows(const std::vector<Vec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  SparseMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw UsageError("SparseMat::fromRows: ragged rows");
    for (int j = 0; j < c; ++j)
      if (!rows[i][j].isZero()) m.entries_[{i, j}] = rows[i][j];
  }
  return m;
}

void SparseMat::check(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw UsageError("SparseMat: index out of bounds");
}

Rat SparseMat::at(int r, int c) const {
  check(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rat(0) : it->second;
}

void SparseMat::set(int r, int c, const Rat& v) {
  check(r, c);
  if (v.isZero())
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMat::add(int r, int c, const Rat& v) { set(r, c, at(r, c) + v); }

Vec SparseMat::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw UsageError("SparseMat::apply: dimension mismatch");
  Vec y(rows_, Rat(0));
  for (const auto& [rc, v] : entries_) y[rc.first] += v * x[rc.second];
  return y;
}

Vec SparseMat::row(int r) const {
  if (r < 0 || r >= rows_) throw UsageError("SparseMat::row: index out of bounds");
  Vec out(cols_, Rat(0));
  auto it = entries_.lower_bound({r, 0});
  for (; it != entries_.end() && it->first.first == r; ++it)
    out[it->first.second] = it->second;
  return out;
}

SparseMat SparseMat::transpose() const {
  SparseMat t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
  return t;
}

namespace {

// Scales a row to integer entries by the lcm of denominators.
void clearDenominators(Vec& row) {
  mpz_class l = 1;
  for (const Rat& x : row)
    if (!x.isZero()) l = intLcm(l, x.denominator());
  if (l == 1) return;
  Rat f{mpz_class(l)};
  for (Rat& x : row)
    if (!x.isZero()) x *= f;
}

}  // namespace

Echelon rowReduce(std::vector<Vec> rows, int cols) {
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw UsageError("rowReduce: ragged rows");
    clearDenominators(r);
  }
  const int nr = static_cast<int>(rows.size());

  // Fraction-free forward elimination (Bareiss): entries stay integral,
  // bounded by minors of the cleared input, and the p*x - m*y over prev
  // divisions are exact.  Pivot is always the least row index with a
  // nonzero entry in the current column.  Entries left of the current
  // column are zero for every row at or below the pivot row, so updates
  // start at the pivot column.
  Rat prev(1);
  int pr = 0;
  std::vector<int> pivots;
  for (int col = 0; col < cols && pr < nr; ++col) {
    int sel = -1;
    for (int r = pr; r < nr; ++r)
      if (!rows[r][col].isZero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[pr], rows[sel]);
    const Rat p = rows[pr][col];
    for (int r = pr + 1; r < nr; ++r) {
      const Rat m = rows[r][col];
      for (int j = col; j < cols; ++j) {
        if (rows[r][j].isZero() && (m.isZero() || rows[pr][j].isZero())) continue;
        Rat t = p * rows[r][j] - m * rows[pr][j];
        rows[r][j] = prev.isOne() ? std::move(t) : t / prev;
      }
    }
    prev = p;
    pivots.push_back(col);
    ++pr;
  }

  // Rational back-substitution to reduced form.
  Echelon e;
  e.rank = pr;
  for (int r = pr - 1; r >= 0; --r) {
    int pc = pivots[r];
    Rat inv = Rat(1) / rows[r][pc];
    for (int j = pc; j < cols; ++j)
      if (!rows[r][j].isZero()) rows[r][j] *= inv;
    for (int r2 = 0; r2 < r; ++r2) {
      const Rat m = rows[r2][pc];
      if (m.isZero()) continue;
      for (int j = pc; j < cols; ++j)
        if (!rows[r][j].isZero()) rows[r2][j] -= m * rows[r][j];
    }
  }
  for (int r = 0; r < pr; ++r) {
    e.rows.push_back(std::move(rows[r]));
    e.pivotCols.push_back(pivots[r]);
  }
  return e;
}

std::optional<Vec> solve(const SparseMat& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw UsageError("solve: dimension mismatch between A and b");
  const int n = a.rows(), m = a.cols();
  std::vector<Vec> rows(n, Vec(m + 1, Rat(0)));
  for (const auto& [rc, v] : a.entries()) rows[rc.first][rc.second] = v;
  for (int i = 0; i < n; ++i) rows[i][m] = b[i];

  Echelon e = rowReduce(std::move(rows), m + 1);
  Vec x(m, Rat(0));
  for (int r = 0; r < e.rank; ++r) {
    if (e.pivotCols[r] == m) return std::nullopt;  // 0 = 1 row: inconsistent
    x[e.pivotCols[r]] = e.rows[r][m];
  }
  return x;
}

std::vector<Vec> kernel(const SparseMat& a) {
  const int n = a.rows(), m = a.cols();
  std::vector<Vec> rows(n, Vec(m, Rat(0)));
  for (const auto& [rc, v] : a.entries()) rows[rc.first][rc.second] = v;
  Echelon e = rowReduce(std::move(rows), m);

  std::vector<bool> isPivot(m, false);
  for (int c : e.pivotCols) isPivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m; ++c) {
    if (isPivot[c]) continue;
    Vec v(m, Rat(0));
    v[c] = Rat(1);
    for (int r = 0; r < e.rank; ++r) v[e.pivotCols[r]] = -e.rows[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const SparseMat& a) {
  const int n = a.rows(), m = a.cols();
  std::vector<Vec> rows(n, Vec(m, Rat(0)));
  for (const auto& [rc, v] : a.entries()) rows[rc.first][rc.second] = v;
  return rowReduce(std::move(rows), m).rank;
}

std::vector<Vec> trailingEchelon(std::vector<Vec> vs) {
  if (vs.empty()) return {};
  // Gaussian elimination pivoting on the trailing coordinate: each span
  // member is reduced until its trailing index is new, then normalized.
  std::vector<Vec> basis;
  auto trailing = [&](const Vec& v) {
    for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j)
      if (!v[j].isZero()) return j;
    return -1;
  };
  std::map<int, Vec> byTrail;  // trailing index -> normalized vector
  std::vector<Vec> work = std::move(vs);
  while (!work.empty()) {
    Vec v = std::move(work.back());
    work.pop_back();
    for (;;) {
      int t = trailing(v);
      if (t < 0) break;
      auto it = byTrail.find(t);
      if (it == byTrail.end()) {
        Rat inv = Rat(1) / v[t];
        for (auto& x : v) x *= inv;
        byTrail.emplace(t, std::move(v));
        break;
      }
      const Rat m = v[t];
      for (int j = 0; j <= t; ++j) v[j] -= m * it->second[j];
    }
  }
  // Reduce every vector against the others so each trailing coordinate
  // appears in exactly one basis vector.
  for (auto& [t, v] : byTrail) {
    for (const auto& [t2, w] : byTrail) {
      if (t2 >= t) break;
      const Rat m = v[t2];
      if (m.isZero()) continue;
      for (int j = 0; j <= t2; ++j) v[j] -= m * w[j];
    }
  }
  for (auto& [t, v] : byTrail) {
    (void)t;
    basis.push_back(std::move(v));
  }
  return basis;
}

Expressor::Expressor(const std::vector<Vec>& columns) {
  k_ = static_cast<int>(columns.size());
  n_ = k_ == 0 ? 0 : static_cast<int>(columns[0].size());
  // RREF of [A | I]; rows of the right block record the row transform, so
  // solving A c = x reduces to applying it to x.
  std::vector<Vec> rows(n_, Vec(k_ + n_, Rat(0)));
  for (int j = 0; j < k_; ++j) {
    if (static_cast<int>(columns[j].size()) != n_)
      throw UsageError("Expressor: ragged columns");
    for (int i = 0; i < n_; ++i) rows[i][j] = columns[j][i];
  }
  for (int i = 0; i < n_; ++i) rows[i][k_ + i] = Rat(1);
  Echelon e = rowReduce(std::move(rows), k_ + n_);
  reduced_ = std::move(e.rows);
  pivotCols_ = std::move(e.pivotCols);
  rank_ = 0;
  for (int c : pivotCols_)
    if (c < k_) ++rank_;
}

std::optional<Vec> Expressor::express(const Vec& x) const {
  if (static_cast<int>(x.size()) != n_) throw UsageError("Expressor: dimension mismatch");
  Vec c(k_, Rat(0));
  for (std::size_t r = 0; r < reduced_.size(); ++r) {
    Rat acc(0);
    for (int i = 0; i < n_; ++i) {
      const Rat& t = reduced_[r][k_ + i];
      if (!t.isZero() && !x[i].isZero()) acc += t * x[i];
    }
    if (pivotCols_[r] < k_) {
      c[pivotCols_[r]] = acc;
    } else if (!acc.isZero()) {
      return std::nullopt;  // transform row annihilates span(A) but not x
    }
  }
  return c;
}

}  // namespace walg

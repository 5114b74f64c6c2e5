#ifndef WALG_SPARSE_HPP
#define WALG_SPARSE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

using Vec = std::vector<Rat>;

/// Sparse rational matrix.  No zero entries are stored; indices are
/// checked.  Values are immutable in practice: construction fills the
/// map, after which only const access is used.
class SparseMat {
 public:
  SparseMat() : rows_(0), cols_(0) {}
  SparseMat(int rows, int cols);

  static SparseMat identity(int n);
  static SparseMat fromRows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }

  Rat at(int r, int c) const;
  void set(int r, int c, const Rat& v);
  void add(int r, int c, const Rat& v);

  const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }

  Vec apply(const Vec& x) const;
  Vec row(int r) const;
  SparseMat transpose() const;

 private:
  void check(int r, int c) const;
  int rows_, cols_;
  std::map<std::pair<int, int>, Rat> entries_;
};

/// Reduced row echelon data.  Forward elimination is fraction-free
/// (Bareiss, after clearing row denominators) with least-row-index
/// pivoting; the final pass normalizes to rational RREF.  The result is
/// therefore a function of the input alone: identical across runs.
struct Echelon {
  std::vector<Vec> rows;       // nonzero RREF rows, pivot order
  std::vector<int> pivotCols;  // pivot column of each row
  int rank = 0;
};

Echelon rowReduce(std::vector<Vec> rows, int cols);

/// Least-index solution of A x = b (free variables set to zero), or
/// nullopt when the system is inconsistent.
std::optional<Vec> solve(const SparseMat& a, const Vec& b);

/// Basis of the null space in reduced column-echelon normalization,
/// ordered by free-column position.  Empty when A is injective.
std::vector<Vec> kernel(const SparseMat& a);

int rank(const SparseMat& a);

/// Unique basis of span(vs) in which every vector has a distinct
/// trailing (largest-index) nonzero coordinate, that coordinate equals 1
/// and is zero in all other basis vectors.  Sorted by trailing index.
/// With coordinates listed in ascending filtration order this yields a
/// filtration-adapted basis: the span's intersection with the first k
/// coordinates is spanned by the vectors whose trailing index is < k.
std::vector<Vec> trailingEchelon(std::vector<Vec> vs);

/// Expresses vectors in the span of a fixed list of columns; caches the
/// elimination so repeated queries are cheap.
class Expressor {
 public:
  explicit Expressor(const std::vector<Vec>& columns);
  /// Coefficients c with sum c_i * columns_i = x, or nullopt.
  std::optional<Vec> express(const Vec& x) const;
  int rank() const { return rank_; }

 private:
  int n_ = 0, k_ = 0, rank_ = 0;
  std::vector<Vec> reduced_;    // RREF rows of [A | I]
  std::vector<int> pivotCols_;  // within the first k_ columns, or >= k_
};

}  // namespace walg

#endif

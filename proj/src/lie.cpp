#include "walg/lie.hpp"

#include <algorithm>

#include "walg/errors.hpp"

namespace walg {

Vec LieAlgebraData::bracketVec(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw UsageError("bracketVec: dimension mismatch");
  Vec out(dim, Rat(0));
  for (int i = 0; i < dim; ++i) {
    if (x[i].isZero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].isZero()) continue;
      const Rat c = x[i] * y[j];
      for (const auto& [k, v] : bracket[i][j]) out[k] += c * v;
    }
  }
  return out;
}

Rat LieAlgebraData::formPair(const Vec& x, const Vec& y) const {
  Rat acc(0);
  for (const auto& [rc, v] : form.entries()) acc += x[rc.first] * v * y[rc.second];
  return acc;
}

SparseMat LieAlgebraData::adMatrix(const Vec& x) const {
  SparseMat m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = bracketVec(x, basisVec(j));
    for (int i = 0; i < dim; ++i)
      if (!col[i].isZero()) m.set(i, j, col[i]);
  }
  return m;
}

Vec LieAlgebraData::basisVec(int i) const {
  Vec v(dim, Rat(0));
  v[i] = Rat(1);
  return v;
}

bool LieAlgebraData::checkAntisymmetry() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j) {
      auto ij = bracket[i][j];
      for (const auto& [k, v] : bracket[j][i]) {
        auto it = ij.find(k);
        if (it == ij.end() ? !v.isZero() : it->second != -v) return false;
        if (it != ij.end()) ij.erase(it);
      }
      for (const auto& [k, v] : ij)
        if (!v.isZero()) return false;
    }
  return true;
}

bool LieAlgebraData::checkJacobi() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      for (int k = j; k < dim; ++k) {
        Vec a = bracketVec(basisVec(i), bracketVec(basisVec(j), basisVec(k)));
        Vec b = bracketVec(basisVec(j), bracketVec(basisVec(k), basisVec(i)));
        Vec c = bracketVec(basisVec(k), bracketVec(basisVec(i), basisVec(j)));
        for (int t = 0; t < dim; ++t)
          if (!(a[t] + b[t] + c[t]).isZero()) return false;
      }
  return true;
}

bool LieAlgebraData::checkInvariance() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = j; k < dim; ++k) {
        Rat lhs = formPair(bracketVec(basisVec(i), basisVec(j)), basisVec(k));
        Rat rhs = formPair(basisVec(j), bracketVec(basisVec(i), basisVec(k)));
        if (!(lhs + rhs).isZero()) return false;
      }
  return true;
}

namespace {

Rat traceProduct(const SparseMat& a, const SparseMat& b) {
  // tr(ab) = sum a_ij b_ji
  Rat acc(0);
  for (const auto& [rc, v] : a.entries()) {
    Rat w = b.at(rc.second, rc.first);
    if (!w.isZero()) acc += v * w;
  }
  return acc;
}

std::string idxLabel(const std::string& head, int i, int j, int n) {
  if (n <= 9) return head + std::to_string(i) + std::to_string(j);
  return head + std::to_string(i) + "_" + std::to_string(j);
}

LieAlgebraData assemble(char type, int rank, int n, std::vector<SparseMat> basis,
                        std::vector<std::string> labels) {
  LieAlgebraData g;
  g.typeTag = type;
  g.rank = rank;
  g.dim = static_cast<int>(basis.size());
  g.repDim = n;
  g.basisLabels = std::move(labels);
  g.repBasis = std::move(basis);

  // Coordinatization of n x n matrices over the basis, shared by the
  // bracket table construction below.
  std::vector<Vec> cols;
  for (const auto& m : g.repBasis) {
    Vec col(n * n, Rat(0));
    for (const auto& [rc, v] : m.entries()) col[rc.first * n + rc.second] = v;
    cols.push_back(std::move(col));
  }
  Expressor ex(cols);
  if (ex.rank() != g.dim) throw ConsistencyError("classical basis is dependent");

  auto coords = [&](const SparseMat& m) {
    Vec col(n * n, Rat(0));
    for (const auto& [rc, v] : m.entries()) col[rc.first * n + rc.second] = v;
    auto c = ex.express(col);
    if (!c) throw ConsistencyError("bracket left the algebra");
    return *c;
  };

  auto matMul = [n](const SparseMat& a, const SparseMat& b) {
    SparseMat c(n, n);
    for (const auto& [rc, v] : a.entries()) {
      for (int j = 0; j < n; ++j) {
        Rat w = b.at(rc.second, j);
        if (!w.isZero()) c.add(rc.first, j, v * w);
      }
    }
    return c;
  };

  g.bracket.assign(g.dim, std::vector<std::map<int, Rat>>(g.dim));
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      if (i == j) continue;
      SparseMat ab = matMul(g.repBasis[i], g.repBasis[j]);
      SparseMat ba = matMul(g.repBasis[j], g.repBasis[i]);
      Vec c = [&] {
        SparseMat comm(n, n);
        for (const auto& [rc, v] : ab.entries()) comm.add(rc.first, rc.second, v);
        for (const auto& [rc, v] : ba.entries()) comm.add(rc.first, rc.second, -v);
        return coords(comm);
      }();
      for (int k = 0; k < g.dim; ++k)
        if (!c[k].isZero()) g.bracket[i][j][k] = c[k];
    }

  g.form = SparseMat(g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = i; j < g.dim; ++j) {
      Rat t = traceProduct(g.repBasis[i], g.repBasis[j]);
      if (!t.isZero()) {
        g.form.set(i, j, t);
        if (i != j) g.form.set(j, i, t);
      }
    }
  if (walg::rank(g.form) != g.dim) throw ConsistencyError("trace form is degenerate");
  return g;
}

SparseMat elem(int n, int i, int j, const Rat& v) {
  SparseMat m(n, n);
  m.set(i - 1, j - 1, v);
  return m;
}

LieAlgebraData buildSl(int rank) {
  const int n = rank + 1;
  std::vector<SparseMat> basis;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      basis.push_back(elem(n, i, j, Rat(1)));
      labels.push_back(idxLabel("E", i, j, n));
    }
  for (int k = 1; k < n; ++k) {
    SparseMat h(n, n);
    h.set(k - 1, k - 1, Rat(1));
    h.set(k, k, Rat(-1));
    basis.push_back(h);
    labels.push_back("H" + std::to_string(k));
  }
  return assemble('A', rank, n, std::move(basis), std::move(labels));
}

// Split orthogonal algebra for the antidiagonal symmetric form:
// X^T S + S X = 0 with S(i, m+1-i) = 1.
LieAlgebraData buildSo(char type, int rank, int m) {
  auto sigma = [m](int i) { return m + 1 - i; };
  std::vector<SparseMat> basis;
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (j == sigma(i)) continue;  // E_ij - E_{s(j)s(i)} vanishes there
      int di = sigma(j), dj = sigma(i);
      if (std::pair(i, j) > std::pair(di, dj)) continue;  // dedupe the pair
      SparseMat x(m, m);
      x.set(i - 1, j - 1, Rat(1));
      x.add(di - 1, dj - 1, Rat(-1));
      basis.push_back(std::move(x));
      labels.push_back(idxLabel("M", i, j, m));
    }
  return assemble(type, rank, m, std::move(basis), std::move(labels));
}

// Split symplectic algebra for the antidiagonal skew form:
// J(i, 2n+1-i) = 1 for i <= n, -1 for i > n.
LieAlgebraData buildSp(int rank) {
  const int m = 2 * rank;
  auto sigma = [m](int i) { return m + 1 - i; };
  auto eps = [rank](int i) { return i <= rank ? 1 : -1; };
  std::vector<SparseMat> basis;
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      int di = sigma(j), dj = sigma(i);
      if (std::pair(i, j) > std::pair(di, dj)) continue;
      SparseMat x(m, m);
      x.set(i - 1, j - 1, Rat(1));
      x.add(di - 1, dj - 1, Rat(-eps(i) * eps(j)));
      basis.push_back(std::move(x));
      labels.push_back(idxLabel("M", i, j, m));
    }
  return assemble('C', rank, m, std::move(basis), std::move(labels));
}

}  // namespace

LieAlgebraData buildClassical(char type, int rank) {
  if (rank < 1) throw UsageError("buildClassical: rank must be >= 1");
  switch (type) {
    case 'A':
      return buildSl(rank);
    case 'B':
      return buildSo('B', rank, 2 * rank + 1);
    case 'C':
      return buildSp(rank);
    case 'D':
      if (rank < 2) throw UsageError("buildClassical: type D needs rank >= 2");
      return buildSo('D', rank, 2 * rank);
    default:
      throw UsageError(std::string("buildClassical: unsupported type '") + type + "'");
  }
}

Vec coordinatizeMatrix(const LieAlgebraData& g, const std::vector<Vec>& matrix) {
  const int n = g.repDim;
  if (static_cast<int>(matrix.size()) != n)
    throw UsageError("coordinatizeMatrix: wrong matrix size");
  std::vector<Vec> cols;
  for (const auto& b : g.repBasis) {
    Vec col(n * n, Rat(0));
    for (const auto& [rc, v] : b.entries()) col[rc.first * n + rc.second] = v;
    cols.push_back(std::move(col));
  }
  Expressor ex(cols);
  Vec target(n * n, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n)
      throw UsageError("coordinatizeMatrix: ragged matrix");
    for (int j = 0; j < n; ++j) target[i * n + j] = matrix[i][j];
  }
  auto c = ex.express(target);
  if (!c) throw DomainError("coordinatizeMatrix: matrix is not in the algebra");
  return *c;
}

Vec partitionNilpotent(const LieAlgebraData& g, const std::vector<int>& parts) {
  if (g.typeTag != 'A') throw UsageError("partitionNilpotent: only for type A");
  const int n = g.repDim;
  int total = 0;
  for (int p : parts) {
    if (p < 1) throw UsageError("partitionNilpotent: parts must be positive");
    total += p;
  }
  if (total != n) throw UsageError("partitionNilpotent: partition does not sum to n");
  std::vector<Vec> mat(n, Vec(n, Rat(0)));
  int start = 0;
  for (int p : parts) {
    for (int i = 0; i < p - 1; ++i) mat[start + i][start + i + 1] = Rat(1);
    start += p;
  }
  return coordinatizeMatrix(g, mat);
}

namespace {

bool isZeroVec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.isZero(); });
}

SparseMat matPow2(const SparseMat& a) {
  const int n = a.rows();
  SparseMat c(n, n);
  for (const auto& [rc, v] : a.entries())
    for (int j = 0; j < n; ++j) {
      Rat w = a.at(rc.second, j);
      if (!w.isZero()) c.add(rc.first, j, v * w);
    }
  return c;
}

}  // namespace

SL2Triple jacobsonMorozov(const LieAlgebraData& g, const Vec& e) {
  if (static_cast<int>(e.size()) != g.dim) throw UsageError("jacobsonMorozov: bad vector");
  if (isZeroVec(e)) throw DomainError("jacobsonMorozov: e = 0");

  SparseMat ade = g.adMatrix(e);
  // nilpotency of ad(e): repeated squaring, index bounded by 2^8 >= dim
  {
    SparseMat p = ade;
    int steps = 0;
    while (p.nnz() != 0 && steps < 8) {
      p = matPow2(p);
      ++steps;
    }
    if (p.nnz() != 0) throw DomainError("jacobsonMorozov: e is not nilpotent");
  }

  // h lies in the image of ad(e): solve ad(e)^2 z = -2 e, h := [e, z].
  SparseMat ade2 = matPow2(ade);
  Vec rhs(g.dim);
  for (int i = 0; i < g.dim; ++i) rhs[i] = Rat(-2) * e[i];
  auto z = solve(ade2, rhs);
  if (!z) throw DomainError("jacobsonMorozov: no sl2 completion (is e nilpotent?)");
  Vec h = g.bracketVec(e, *z);

  // f from [e,f] = h, [h,f] = -2f, stacked into one least-index solve.
  SparseMat adh = g.adMatrix(h);
  SparseMat sys(2 * g.dim, g.dim);
  for (const auto& [rc, v] : ade.entries()) sys.set(rc.first, rc.second, v);
  for (const auto& [rc, v] : adh.entries()) sys.set(g.dim + rc.first, rc.second, v);
  for (int i = 0; i < g.dim; ++i) sys.add(g.dim + i, i, Rat(2));
  Vec b(2 * g.dim, Rat(0));
  for (int i = 0; i < g.dim; ++i) b[i] = h[i];
  auto f = solve(sys, b);
  if (!f) throw DomainError("jacobsonMorozov: no f completing the triple");

  SL2Triple t{e, h, *f};
  // exact verification of the triple identities
  Vec he = g.bracketVec(t.h, t.e);
  Vec hf = g.bracketVec(t.h, t.f);
  Vec ef = g.bracketVec(t.e, t.f);
  for (int i = 0; i < g.dim; ++i) {
    if (he[i] != Rat(2) * t.e[i] || hf[i] != Rat(-2) * t.f[i] || ef[i] != t.h[i])
      throw ConsistencyError("jacobsonMorozov: triple identities failed");
  }
  return t;
}

}  // namespace walg

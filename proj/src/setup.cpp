#include "walg/setup.hpp"

#include <algorithm>

#include "walg/errors.hpp"

namespace walg {

namespace {

bool isZeroVec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.isZero(); });
}

// Kernel of ad(x) restricted to the span of cols, as vectors in input
// coordinates.  cols must be linearly independent.
std::vector<Vec> restrictedKernel(const LieAlgebraData& g, const Vec& x,
                                  const std::vector<Vec>& cols) {
  if (cols.empty()) return {};
  SparseMat m(g.dim, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    Vec img = g.bracketVec(x, cols[j]);
    for (int i = 0; i < g.dim; ++i)
      if (!img[i].isZero()) m.set(i, j, img[i]);
  }
  std::vector<Vec> out;
  for (const Vec& k : kernel(m)) {
    Vec v(g.dim, Rat(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!k[j].isZero())
        for (int i = 0; i < g.dim; ++i) v[i] += k[j] * cols[j][i];
    out.push_back(std::move(v));
  }
  return out;
}

// Extends `have` to a basis of span(pool), greedily over pool order.
std::vector<Vec> extendBasis(const std::vector<Vec>& have, const std::vector<Vec>& pool) {
  std::vector<Vec> rows = have;
  std::vector<Vec> extension;
  int curRank = rowReduce(rows, rows.empty() ? 0 : static_cast<int>(rows[0].size())).rank;
  for (const Vec& cand : pool) {
    std::vector<Vec> trial = rows;
    trial.push_back(cand);
    int r = rowReduce(trial, static_cast<int>(cand.size())).rank;
    if (r > curRank) {
      rows.push_back(cand);
      extension.push_back(cand);
      curRank = r;
    }
  }
  return extension;
}

}  // namespace

int NilpotentSetup::weightOfVec(const Vec& v) const {
  Vec c = toAdapted(v);
  int w = 0;
  bool seen = false;
  for (int i = 0; i < dim(); ++i) {
    if (c[i].isZero()) continue;
    if (!seen) {
      w = weightOf[i];
      seen = true;
    } else if (weightOf[i] != w) {
      throw DomainError("vector is not ad(h')-homogeneous");
    }
  }
  if (!seen) throw DomainError("zero vector has no weight");
  return w;
}

Vec NilpotentSetup::toAdapted(const Vec& inputCoords) const {
  Expressor ex(adapted);
  auto c = ex.express(inputCoords);
  if (!c) throw ConsistencyError("adapted basis does not span");
  return *c;
}

Vec NilpotentSetup::fromAdapted(const Vec& adaptedCoords) const {
  Vec v(dim(), Rat(0));
  for (int i = 0; i < dim(); ++i)
    if (!adaptedCoords[i].isZero())
      for (int j = 0; j < dim(); ++j) v[j] += adaptedCoords[i] * adapted[i][j];
  return v;
}

NilpotentSetup buildSetup(const LieAlgebraData& g, const SL2Triple& triple,
                          std::optional<Vec> hPrimeOpt,
                          std::optional<std::vector<Vec>> yOverride) {
  NilpotentSetup s;
  s.algebra = g;
  s.triple = triple;
  s.hPrime = hPrimeOpt.value_or(triple.h);

  // h' conditions: [h',e] = 2e and [h',h] = 0.
  {
    Vec he = g.bracketVec(s.hPrime, triple.e);
    Vec hh = g.bracketVec(s.hPrime, triple.h);
    for (int i = 0; i < g.dim; ++i) {
      if (he[i] != Rat(2) * triple.e[i]) throw DomainError("h': [h',e] != 2e");
      if (!hh[i].isZero()) throw DomainError("h': [h',h] != 0");
    }
  }

  // Integer grading by ad(h') eigenspaces.
  SparseMat adh = g.adMatrix(s.hPrime);
  int total = 0;
  for (int w = -2 * g.dim; w <= 2 * g.dim && total < g.dim; ++w) {
    SparseMat shifted = adh;
    for (int i = 0; i < g.dim; ++i) shifted.add(i, i, Rat(-w));
    auto basis = kernel(shifted);
    if (!basis.empty()) {
      total += static_cast<int>(basis.size());
      s.grading[w] = std::move(basis);
    }
  }
  if (total != g.dim)
    throw DomainError("h': ad(h') is not diagonalizable with integer eigenvalues");

  // chi = <e, .> through the invariant form.
  s.chi.assign(g.dim, Rat(0));
  for (int i = 0; i < g.dim; ++i) s.chi[i] = g.formPair(triple.e, g.basisVec(i));

  // Symplectic form omega_chi on g(-1) and the lagrangian y.
  std::vector<Vec> gm1 = s.grading.count(-1) ? s.grading[-1] : std::vector<Vec>{};
  const int d1 = static_cast<int>(gm1.size());
  auto omega = [&](const Vec& a, const Vec& b) {
    return g.formPair(triple.e, g.bracketVec(a, b));
  };
  {
    SparseMat om(d1, d1);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j) {
        Rat v = omega(gm1[i], gm1[j]);
        if (!v.isZero()) om.set(i, j, v);
      }
    if (rank(om) != d1)
      throw ConsistencyError("omega_chi degenerate on g(-1): setup data is corrupt");
  }
  if (d1 % 2 != 0) throw ConsistencyError("dim g(-1) is odd");
  const int half = d1 / 2;

  if (yOverride) {
    s.y = *yOverride;
    if (static_cast<int>(s.y.size()) != half)
      throw DomainError("y override: wrong dimension for a lagrangian");
    std::vector<Vec> check = s.y;
    if (rowReduce(check, g.dim).rank != half) throw DomainError("y override: dependent set");
    for (const auto& u : s.y)
      for (const auto& v : s.y)
        if (!omega(u, v).isZero()) throw DomainError("y override: not isotropic");
    // containment in g(-1)
    Expressor ex(gm1);
    for (const auto& u : s.y)
      if (!ex.express(u)) throw DomainError("y override: not inside g(-1)");
  } else {
    // Greedy isotropic extension: first basis vector of the omega-orthogonal
    // of the current span, in the fixed order of the graded basis.
    std::vector<Vec> ysCoords;  // in gm1 coordinates
    while (static_cast<int>(s.y.size()) < half) {
      SparseMat rows(static_cast<int>(s.y.size()), d1);
      for (int r = 0; r < static_cast<int>(s.y.size()); ++r)
        for (int j = 0; j < d1; ++j) {
          Rat v = omega(s.y[r], gm1[j]);
          if (!v.isZero()) rows.set(r, j, v);
        }
      bool added = false;
      for (const Vec& cand : kernel(rows)) {
        std::vector<Vec> trial = ysCoords;
        trial.push_back(cand);
        if (rowReduce(trial, d1).rank == static_cast<int>(ysCoords.size()) + 1) {
          ysCoords.push_back(cand);
          Vec lifted(g.dim, Rat(0));
          for (int j = 0; j < d1; ++j)
            if (!cand[j].isZero())
              for (int i = 0; i < g.dim; ++i) lifted[i] += cand[j] * gm1[j][i];
          s.y.push_back(std::move(lifted));
          added = true;
          break;
        }
      }
      if (!added) throw ConsistencyError("greedy lagrangian extension got stuck");
    }
  }

  // m = (weights <= -2) + y, ascending weight; n adds the skew-orthogonal
  // complement of y (equal to y when y is lagrangian).
  for (const auto& [w, vecs] : s.grading) {
    if (w <= -2)
      for (const auto& v : vecs) s.mBasis.push_back(v);
  }
  std::vector<Vec> lower = s.mBasis;
  for (const auto& v : s.y) s.mBasis.push_back(v);
  {
    SparseMat rows(static_cast<int>(s.y.size()), d1);
    for (int r = 0; r < static_cast<int>(s.y.size()); ++r)
      for (int j = 0; j < d1; ++j) {
        Rat v = omega(s.y[r], gm1[j]);
        if (!v.isZero()) rows.set(r, j, v);
      }
    s.nBasis = lower;
    for (const Vec& k : kernel(rows)) {
      Vec lifted(g.dim, Rat(0));
      for (int j = 0; j < d1; ++j)
        if (!k[j].isZero())
          for (int i = 0; i < g.dim; ++i) lifted[i] += k[j] * gm1[j][i];
      s.nBasis.push_back(std::move(lifted));
    }
  }
  for (const auto& v : s.mBasis) s.mChi.push_back(g.formPair(triple.e, v));

  // Adapted basis.
  auto label = [&](const Vec& v, int idx) -> std::string {
    int nz = -1;
    for (int i = 0; i < g.dim; ++i) {
      if (v[i].isZero()) continue;
      if (nz >= 0) return "g" + std::to_string(idx);
      nz = i;
    }
    if (nz >= 0 && v[nz].isOne()) return g.basisLabels[nz];
    return "g" + std::to_string(idx);
  };

  std::vector<std::pair<Vec, int>> adaptedRaw;  // vector, weight
  for (const auto& [w, vecs] : s.grading) {
    if (w < -1) {
      for (const auto& v : vecs) adaptedRaw.push_back({v, w});
    } else if (w == -1) {
      for (const auto& v : s.y) adaptedRaw.push_back({v, w});
      for (const auto& v : extendBasis(s.y, vecs)) adaptedRaw.push_back({v, w});
    } else {
      std::vector<Vec> slice = restrictedKernel(g, triple.e, vecs);
      for (const auto& v : extendBasis(slice, vecs)) adaptedRaw.push_back({v, w});
      for (const auto& v : slice) adaptedRaw.push_back({v, w});
    }
  }
  // the h' admissibility condition: no centralizer-of-e vectors below 0
  for (const auto& [w, vecs] : s.grading)
    if (w < 0 && !restrictedKernel(g, triple.e, vecs).empty())
      throw DomainError("h': centralizer of e has a negative ad(h') eigenvalue");

  for (int i = 0; i < static_cast<int>(adaptedRaw.size()); ++i) {
    s.adapted.push_back(adaptedRaw[i].first);
    s.weightOf.push_back(adaptedRaw[i].second);
  }
  if (static_cast<int>(s.adapted.size()) != g.dim)
    throw ConsistencyError("adapted basis has wrong size");
  for (int i = 0; i < g.dim; ++i) s.adaptedLabels.push_back(label(s.adapted[i], i));
  s.mDim = static_cast<int>(s.mBasis.size());
  for (const auto& v : s.adapted) s.adChi.push_back(g.formPair(triple.e, v));

  // Slice indices, degrees, dual parametrization through ker ad(f).
  for (int i = 0; i < g.dim; ++i) {
    int w = s.weightOf[i];
    if (w < 0) continue;
    Vec img = g.bracketVec(triple.e, s.adapted[i]);
    if (isZeroVec(img)) {
      s.sliceIdx.push_back(i);
      s.sliceDegrees.push_back(w + 2);
    }
  }
  {
    int zdim = static_cast<int>(s.sliceIdx.size());
    if (2 * s.mDim + zdim != g.dim)
      throw ConsistencyError("dim m != (dim g - dim z(e)) / 2");
    s.sliceDual.resize(zdim);
    // group slice indices by weight and invert the pairing with ker ad(f)
    std::map<int, std::vector<int>> byWeight;  // weight -> positions in sliceIdx
    for (int p = 0; p < zdim; ++p) byWeight[s.weightOf[s.sliceIdx[p]]].push_back(p);
    for (const auto& [w, positions] : byWeight) {
      auto it = s.grading.find(-w);
      if (it == s.grading.end())
        throw ConsistencyError("missing opposite weight space for the slice");
      std::vector<Vec> zf = restrictedKernel(g, triple.f, it->second);
      if (zf.size() != positions.size())
        throw ConsistencyError("ker ad(f) and ker ad(e) weight blocks differ");
      const int b = static_cast<int>(positions.size());
      // Gram_{jk} = <zf_j, slice_k>; dual_k = sum_j c_{jk} zf_j with
      // Gram^T c = identity column k.
      SparseMat gram(b, b);
      for (int j = 0; j < b; ++j)
        for (int k = 0; k < b; ++k) {
          Rat v = g.formPair(zf[j], s.adapted[s.sliceIdx[positions[k]]]);
          if (!v.isZero()) gram.set(k, j, v);  // transposed placement
        }
      for (int k = 0; k < b; ++k) {
        Vec ek(b, Rat(0));
        ek[k] = Rat(1);
        auto c = solve(gram, ek);
        if (!c) throw ConsistencyError("slice pairing is degenerate");
        Vec dual(g.dim, Rat(0));
        for (int j = 0; j < b; ++j)
          if (!(*c)[j].isZero())
            for (int i2 = 0; i2 < g.dim; ++i2) dual[i2] += (*c)[j] * zf[j][i2];
        s.sliceDual[positions[k]] = std::move(dual);
      }
    }
  }

  // Structure constants in adapted coordinates.
  {
    Expressor ex(s.adapted);
    s.adBracket.assign(g.dim, std::vector<std::map<int, Rat>>(g.dim));
    for (int i = 0; i < g.dim; ++i)
      for (int j = 0; j < g.dim; ++j) {
        if (i == j) continue;
        Vec br = g.bracketVec(s.adapted[i], s.adapted[j]);
        if (isZeroVec(br)) continue;
        auto c = ex.express(br);
        if (!c) throw ConsistencyError("bracket escaped the adapted basis");
        for (int k = 0; k < g.dim; ++k)
          if (!(*c)[k].isZero()) s.adBracket[i][j][k] = (*c)[k];
      }
  }

  return s;
}

}  // namespace walg

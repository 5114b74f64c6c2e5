#include "walg/whittaker.hpp"

#include <algorithm>

#include "walg/errors.hpp"

namespace walg {

NCPoly reduceToQuotient(const WContext& ctx, const NCPoly& a) {
  const int m = ctx.mDim();
  NCPoly out;
  for (const auto& [w, c] : a.terms()) {
    Word word = w;
    Rat coeff = c;
    while (!word.empty() && word.back() < m) {
      coeff *= ctx.setup.adChi[word.back()];
      word.pop_back();
      if (coeff.isZero()) break;
    }
    out.addTerm(word, coeff);
  }
  return out;
}

bool isWhittaker(const WContext& ctx, const NCPoly& reducedRep) {
  for (int j = 0; j < ctx.mDim(); ++j) {
    NCPoly c = commutator(ctx.pbw, NCPoly::generator(j), reducedRep);
    if (!reduceToQuotient(ctx, c).isZero()) return false;
  }
  return true;
}

int QWindow::dimAtMost(int k) const {
  int n = 0;
  for (int d : degrees)
    if (d <= k) ++n;
  return n;
}

QWindow enumerateQ(const WContext& ctx, int maxDegree) {
  if (maxDegree < 0) throw UsageError("enumerateQ: negative degree bound");
  QWindow win;
  win.maxDegree = maxDegree;
  const int n = ctx.pbw.size();
  // Non-increasing words over the non-m generators; every such generator
  // has Kazhdan degree >= 1, so the enumeration is finite.
  Word cur;
  auto rec = [&](auto&& self, int maxIndex, int remaining) -> void {
    win.words.push_back(cur);
    for (int i = maxIndex; i >= ctx.mDim(); --i) {
      int d = ctx.pbw.kazhdanDeg(i);
      if (d > remaining) continue;
      cur.push_back(i);
      self(self, i, remaining - d);
      cur.pop_back();
    }
  };
  rec(rec, n - 1, maxDegree);
  std::sort(win.words.begin(), win.words.end(), [&](const Word& a, const Word& b) {
    int da = kazhdanDegreeWord(ctx.pbw, a), db = kazhdanDegreeWord(ctx.pbw, b);
    if (da != db) return da < db;
    return a < b;
  });
  for (int i = 0; i < static_cast<int>(win.words.size()); ++i) {
    win.degrees.push_back(kazhdanDegreeWord(ctx.pbw, win.words[i]));
    win.index.emplace(win.words[i], i);
  }
  return win;
}

Vec quotientCoords(const QWindow& win, const NCPoly& reducedRep) {
  Vec v(win.words.size(), Rat(0));
  for (const auto& [w, c] : reducedRep.terms()) {
    auto it = win.index.find(w);
    if (it == win.index.end())
      throw UsageError("quotientCoords: monomial outside the window");
    v[it->second] = c;
  }
  return v;
}

namespace {

NCPoly fromCoords(const QWindow& win, const Vec& v) {
  NCPoly p;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].isZero()) p.addTerm(win.words[i], v[i]);
  return p;
}

}  // namespace

WhittakerBasis whittakerBasis(const WContext& ctx, int k) {
  WhittakerBasis wb;
  wb.window = enumerateQ(ctx, k);
  const int dimQ = static_cast<int>(wb.window.words.size());
  const int m = ctx.mDim();

  // Stacked condition matrix: row block per m generator, one row per
  // output monomial; [xi_j, w] reduced lives in degree <= k - 1.
  SparseMat cond(m * dimQ, dimQ);
  for (int col = 0; col < dimQ; ++col) {
    NCPoly mono = NCPoly::monomial(wb.window.words[col], Rat(1));
    for (int j = 0; j < m; ++j) {
      NCPoly c = reduceToQuotient(ctx, commutator(ctx.pbw, NCPoly::generator(j), mono));
      for (const auto& [w, v] : c.terms()) {
        auto it = wb.window.index.find(w);
        if (it == wb.window.index.end())
          throw ConsistencyError("whittakerBasis: commutator escaped the window");
        cond.add(j * dimQ + it->second, col, v);
      }
    }
  }

  std::vector<Vec> null = kernel(cond);
  std::vector<Vec> adapted = trailingEchelon(std::move(null));
  for (const auto& v : adapted) {
    wb.vectors.push_back(fromCoords(wb.window, v));
    int top = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].isZero()) top = std::max(top, wb.window.degrees[i]);
    wb.topDegrees.push_back(top);
  }
  return wb;
}

Poly sliceSymbol(const WContext& ctx, const NCPoly& reducedRep, int k) {
  const int r = static_cast<int>(ctx.setup.sliceIdx.size());
  // generator i restricted to the slice is the linear form
  // sum_p <dual_p, b_i> t_p
  NCPoly top = kazhdanPart(ctx.pbw, reducedRep, k);
  Poly out(r);
  for (const auto& [w, c] : top.terms()) {
    Poly term = Poly::constant(r, c);
    for (int letter : w) {
      Poly lin(r);
      for (int p = 0; p < r; ++p) {
        Rat coefficient =
            ctx.setup.algebra.formPair(ctx.setup.sliceDual[p], ctx.setup.adapted[letter]);
        if (!coefficient.isZero()) lin += Poly::variable(r, p) * coefficient;
      }
      term = term * lin;
    }
    out += term;
  }
  return out;
}

namespace {

// Exponent tuples with sum_p e_p * degrees_p <= bound, ordered by
// (weighted degree, lex).
std::vector<std::vector<int>> enumerateExponents(const std::vector<int>& degrees, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(degrees.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == degrees.size()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0;; ++e) {
      int cost = e * degrees[pos];
      if (cost > remaining) break;
      cur[pos] = e;
      self(self, pos + 1, remaining - cost);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, bound);
  auto wdeg = [&](const std::vector<int>& e) {
    int d = 0;
    for (std::size_t p = 0; p < e.size(); ++p) d += e[p] * degrees[p];
    return d;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    int da = wdeg(a), db = wdeg(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

}  // namespace

WAlgebra WAlgebra::build(WContext ctx, int truncation) {
  const auto& degs = ctx.setup.sliceDegrees;
  const int r = static_cast<int>(degs.size());
  if (r == 0) throw UsageError("WAlgebra::build: empty slice");
  if (truncation < *std::max_element(degs.begin(), degs.end()))
    throw UsageError("WAlgebra::build: truncation below the largest slice degree");

  WhittakerBasis wb = whittakerBasis(ctx, truncation);

  // Graded dimension check against K[S] = polynomials in the slice
  // degrees.  A mismatch here means the computation is broken.
  WPresentation pres;
  pres.truncation = truncation;
  pres.genDegrees = degs;
  auto expected = enumerateExponents(degs, truncation);
  {
    std::map<int, int> expect, got;
    for (const auto& e : expected) {
      int d = 0;
      for (int p = 0; p < r; ++p) d += e[p] * degs[p];
      expect[d] += 1;
    }
    for (int t : wb.topDegrees) got[t] += 1;
    if (expect != got)
      throw ConsistencyError(
          "graded dimensions of the Whittaker space do not match the slice "
          "coordinate ring");
    pres.gradedDims = expect;
  }

  // Generators: the unique Whittaker vectors whose degree-d slice symbol
  // is exactly t_p, tail-reduced against all lower basis vectors.
  std::vector<int> trailingOf(wb.vectors.size());
  for (std::size_t i = 0; i < wb.vectors.size(); ++i) {
    Vec c = quotientCoords(wb.window, wb.vectors[i]);
    int t = -1;
    for (int j = 0; j < static_cast<int>(c.size()); ++j)
      if (!c[j].isZero()) t = j;
    trailingOf[i] = t;
  }
  for (int p = 0; p < r; ++p) {
    int d = degs[p];
    std::vector<int> candidates;
    for (std::size_t i = 0; i < wb.vectors.size(); ++i)
      if (wb.topDegrees[i] == d) candidates.push_back(static_cast<int>(i));
    // square system: candidate symbols against slice monomials of degree d
    std::vector<Expo> rowsIdx;
    std::vector<Poly> symbols;
    for (int i : candidates) symbols.push_back(sliceSymbol(ctx, wb.vectors[i], d));
    std::map<Expo, int> rowOf;
    for (const auto& s : symbols)
      for (const auto& [e, c] : s.terms())
        if (!rowOf.count(e)) {
          rowOf[e] = static_cast<int>(rowsIdx.size());
          rowsIdx.push_back(e);
        }
    Expo target(r, 0);
    target[p] = 1;
    if (!rowOf.count(target)) throw ConsistencyError("slice variable symbol missing");
    SparseMat sys(static_cast<int>(rowsIdx.size()), static_cast<int>(candidates.size()));
    for (int cc = 0; cc < static_cast<int>(candidates.size()); ++cc)
      for (const auto& [e, v] : symbols[cc].terms()) sys.add(rowOf[e], cc, v);
    Vec rhs(rowsIdx.size(), Rat(0));
    rhs[rowOf[target]] = Rat(1);
    auto sol = solve(sys, rhs);
    if (!sol) throw ConsistencyError("no Whittaker lift of a slice variable");
    Vec genCoords(wb.window.words.size(), Rat(0));
    for (int cc = 0; cc < static_cast<int>(candidates.size()); ++cc) {
      if ((*sol)[cc].isZero()) continue;
      Vec vc = quotientCoords(wb.window, wb.vectors[candidates[cc]]);
      for (std::size_t t = 0; t < genCoords.size(); ++t) genCoords[t] += (*sol)[cc] * vc[t];
    }
    // canonical lowest-degree tail: clear the trailing coordinates of all
    // lower-degree basis vectors
    for (std::size_t i = 0; i < wb.vectors.size(); ++i) {
      if (wb.topDegrees[i] >= d) continue;
      const Rat& c = genCoords[trailingOf[i]];
      if (c.isZero()) continue;
      Vec vc = quotientCoords(wb.window, wb.vectors[i]);
      Rat mult = c;
      for (std::size_t t = 0; t < genCoords.size(); ++t) genCoords[t] -= mult * vc[t];
    }
    pres.generators.push_back(fromCoords(wb.window, genCoords));
    pres.genLabels.push_back("X" + std::to_string(p + 1));
  }

  // Ordered generator monomials and their representatives in Q.
  pres.monomials = expected;
  std::vector<NCPoly> reps;
  std::vector<Vec> cols;
  for (const auto& e : expected) {
    NCPoly cur = NCPoly::one();
    for (int p = 0; p < r; ++p)
      for (int t = 0; t < e[p]; ++t)
        cur = reduceToQuotient(ctx, multiply(ctx.pbw, cur, pres.generators[p]));
    reps.push_back(cur);
    cols.push_back(quotientCoords(wb.window, cur));
  }
  Expressor ex(cols);
  if (ex.rank() != static_cast<int>(expected.size()))
    throw ConsistencyError("generator monomials are dependent inside the window");

  // Products of generators through the truncation.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (degs[i] + degs[j] > truncation) continue;
      NCPoly prod =
          reduceToQuotient(ctx, multiply(ctx.pbw, pres.generators[i], pres.generators[j]));
      auto coeffs = ex.express(quotientCoords(wb.window, prod));
      if (!coeffs) throw ConsistencyError("generator product escaped the monomial basis");
      std::map<std::vector<int>, Rat> expansion;
      for (std::size_t t = 0; t < coeffs->size(); ++t)
        if (!(*coeffs)[t].isZero()) expansion[expected[t]] = (*coeffs)[t];
      pres.products[{i, j}] = std::move(expansion);
    }

  return WAlgebra(std::move(ctx), std::move(pres), std::move(wb), std::move(reps),
                  std::move(ex));
}

std::optional<std::map<std::vector<int>, Rat>> WAlgebra::express(
    const NCPoly& reducedRep) const {
  auto coeffs = expressor_.express(quotientCoords(basis_.window, reducedRep));
  if (!coeffs) return std::nullopt;
  std::map<std::vector<int>, Rat> out;
  for (std::size_t t = 0; t < coeffs->size(); ++t)
    if (!(*coeffs)[t].isZero()) out[pres_.monomials[t]] = (*coeffs)[t];
  return out;
}

NCPoly WAlgebra::monomialRep(const std::vector<int>& expo) const {
  NCPoly cur = NCPoly::one();
  for (int p = 0; p < pres_.genCount(); ++p)
    for (int t = 0; t < expo[p]; ++t)
      cur = reduceToQuotient(ctx_, multiply(ctx_.pbw, cur, pres_.generators[p]));
  return cur;
}

std::optional<std::map<std::vector<int>, Rat>> WPresentation::commutatorPoly(int i,
                                                                             int j) const {
  auto a = products.find({i, j});
  auto b = products.find({j, i});
  if (a == products.end() || b == products.end()) return std::nullopt;
  std::map<std::vector<int>, Rat> out = a->second;
  for (const auto& [e, c] : b->second) {
    auto it = out.find(e);
    if (it == out.end()) {
      out[e] = -c;
    } else {
      it->second -= c;
      if (it->second.isZero()) out.erase(it);
    }
  }
  return out;
}

NCPoly casimirElement(const WContext& ctx) {
  const int n = ctx.pbw.size();
  // Gram matrix of the form over the adapted basis, inverted columnwise.
  SparseMat gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = ctx.setup.algebra.formPair(ctx.setup.adapted[i], ctx.setup.adapted[j]);
      if (!v.isZero()) gram.set(i, j, v);
    }
  NCPoly omega;
  for (int j = 0; j < n; ++j) {
    Vec ej(n, Rat(0));
    ej[j] = Rat(1);
    auto col = solve(gram, ej);
    if (!col) throw ConsistencyError("casimirElement: degenerate form");
    // omega += b_j * (sum_i inv_ij b_i)
    for (int i = 0; i < n; ++i) {
      if ((*col)[i].isZero()) continue;
      omega += normalForm(ctx.pbw, {j, i}, (*col)[i]);
    }
  }
  return omega;
}

CenterImage centerImage(const WAlgebra& w, const NCPoly& central) {
  const WContext& ctx = w.context();
  for (int i = 0; i < ctx.pbw.size(); ++i) {
    NCPoly c = commutator(ctx.pbw, NCPoly::generator(i), central);
    if (!c.isZero()) throw DomainError("centerImage: element is not central in U(g)");
  }
  NCPoly reduced = reduceToQuotient(ctx, central);
  if (!isWhittaker(ctx, reduced))
    throw ConsistencyError("centerImage: image is not a Whittaker vector");
  for (const auto& gen : w.presentation().generators) {
    NCPoly lhs = reduceToQuotient(ctx, multiply(ctx.pbw, reduced, gen));
    NCPoly rhs = reduceToQuotient(ctx, multiply(ctx.pbw, gen, reduced));
    if (!(lhs - rhs).isZero())
      throw ConsistencyError("centerImage: image does not commute with a generator");
  }
  auto expr = w.express(reduced);
  if (!expr) throw ConsistencyError("centerImage: image escaped the monomial basis");
  return CenterImage{reduced, *expr};
}

}  // namespace walg

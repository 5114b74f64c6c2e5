#include "walg/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "walg/errors.hpp"

namespace walg {

int MonomialOrder::compare(const Expo& a, const Expo& b) const {
  const int n = nvars();
  if (lex) {
    for (int i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  auto cmpBlock = [&](int from, int to) -> int {
    long da = 0, db = 0;
    for (int i = from; i < to; ++i) {
      da += static_cast<long>(a[i]) * weights[i];
      db += static_cast<long>(b[i]) * weights[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = to - 1; i >= from; --i)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // degrevlex tie-break
    return 0;
  };
  if (elimBlock > 0) {
    int c = cmpBlock(0, elimBlock);
    if (c != 0) return c;
    return cmpBlock(elimBlock, n);
  }
  return cmpBlock(0, n);
}

std::pair<Expo, Rat> leadingTerm(const MonomialOrder& ord, const Poly& p) {
  if (p.isZero()) throw UsageError("leadingTerm of zero");
  const Expo* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || ord.less(*best, e)) best = &e;
  return {*best, p.coeff(*best)};
}

namespace {

bool divides(const Expo& a, const Expo& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo quotientExpo(const Expo& num, const Expo& den) {
  Expo q(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) q[i] = num[i] - den[i];
  return q;
}

Expo lcmExpo(const Expo& a, const Expo& b) {
  Expo l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

long plainDegree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0L); }

}  // namespace

Poly reduceMod(const MonomialOrder& ord, Poly p, const std::vector<Poly>& basis) {
  std::vector<std::pair<Expo, Rat>> lts;
  lts.reserve(basis.size());
  for (const auto& b : basis) lts.push_back(leadingTerm(ord, b));
  Poly remainder(p.nvars());
  while (!p.isZero()) {
    auto [lt, lc] = leadingTerm(ord, p);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!divides(lts[i].first, lt)) continue;
      Rat factor = lc / lts[i].second;
      Poly sub = basis[i] * Poly::monomial(quotientExpo(lt, lts[i].first), factor);
      p -= sub;
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.addTerm(lt, lc);
      Poly single = Poly::monomial(lt, lc);
      p -= single;
    }
  }
  return remainder;
}

std::vector<Poly> buchberger(const MonomialOrder& ord, std::vector<Poly> gens) {
  std::vector<Poly> basis;
  for (auto& g : gens)
    if (!g.isZero()) basis.push_back(std::move(g));
  if (basis.empty()) return {};

  struct Pair {
    long sugar;
    long lcmDeg;
    int i, j;
    bool operator<(const Pair& o) const {
      return std::tie(sugar, lcmDeg, i, j) < std::tie(o.sugar, o.lcmDeg, o.i, o.j);
    }
  };
  auto sugarOf = [&](const Poly& p) {
    long s = 0;
    for (const auto& [e, c] : p.terms()) s = std::max(s, plainDegree(e));
    return s;
  };

  std::set<Pair> pairs;
  auto pushPairs = [&](int j) {
    auto ltj = leadingTerm(ord, basis[j]).first;
    for (int i = 0; i < j; ++i) {
      auto lti = leadingTerm(ord, basis[i]).first;
      Expo l = lcmExpo(lti, ltj);
      // coprime criterion: disjoint leading supports reduce to zero
      if (plainDegree(l) == plainDegree(lti) + plainDegree(ltj)) continue;
      long sugar = std::max(sugarOf(basis[i]) + plainDegree(l) - plainDegree(lti),
                            sugarOf(basis[j]) + plainDegree(l) - plainDegree(ltj));
      pairs.insert({sugar, plainDegree(l), i, j});
    }
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) pushPairs(j);

  while (!pairs.empty()) {
    Pair pr = *pairs.begin();
    pairs.erase(pairs.begin());
    auto [lti, lci] = leadingTerm(ord, basis[pr.i]);
    auto [ltj, lcj] = leadingTerm(ord, basis[pr.j]);
    Expo l = lcmExpo(lti, ltj);
    Poly spoly = basis[pr.i] * Poly::monomial(quotientExpo(l, lti), Rat(1) / lci) -
                 basis[pr.j] * Poly::monomial(quotientExpo(l, ltj), Rat(1) / lcj);
    Poly nf = reduceMod(ord, std::move(spoly), basis);
    if (!nf.isZero()) {
      basis.push_back(std::move(nf));
      pushPairs(static_cast<int>(basis.size()) - 1);
    }
  }

  // Interreduce to the unique reduced basis.
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Poly others(basis[0].nvars());
      std::vector<Poly> rest;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) rest.push_back(basis[j]);
      Poly nf = rest.empty() ? basis[i] : reduceMod(ord, basis[i], rest);
      if (!(nf == basis[i])) {
        changed = true;
        if (nf.isZero()) {
          basis.erase(basis.begin() + static_cast<long>(i));
          break;
        }
        basis[i] = std::move(nf);
      }
    }
    if (!changed) break;
  }
  for (auto& b : basis) {
    Rat lc = leadingTerm(ord, b).second;
    b *= Rat(1) / lc;
  }
  std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
    return ord.less(leadingTerm(ord, a).first, leadingTerm(ord, b).first);
  });
  return basis;
}

GradedIdeal makeIdeal(MonomialOrder order, std::vector<std::string> names,
                      std::vector<Poly> gens) {
  GradedIdeal ideal;
  ideal.order = std::move(order);
  ideal.varNames = std::move(names);
  ideal.basis = buchberger(ideal.order, std::move(gens));
  return ideal;
}

bool sameIdeal(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.order.weights != b.order.weights) return false;
  if (a.basis.size() != b.basis.size()) return false;
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    if (!(a.basis[i] == b.basis[i])) return false;
  return true;
}

GradedIdeal intersectIdeals(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.order.weights != b.order.weights)
    throw UsageError("intersectIdeals: mismatched ambients");
  const int n = a.order.nvars();
  // u-trick: eliminate u from u*A + (1-u)*B
  MonomialOrder elim;
  elim.weights.assign(n + 1, 1);
  for (int i = 0; i < n; ++i) elim.weights[i + 1] = a.order.weights[i];
  elim.elimBlock = 1;
  auto lift = [&](const Poly& p, bool withU, bool withOneMinusU) {
    Poly out(n + 1);
    for (const auto& [e, c] : p.terms()) {
      Expo shifted(n + 1, 0);
      for (int i = 0; i < n; ++i) shifted[i + 1] = e[i];
      if (withU) {
        Expo u = shifted;
        u[0] += 1;
        out.addTerm(u, c);
      }
      if (withOneMinusU) {
        out.addTerm(shifted, c);
        Expo u = shifted;
        u[0] += 1;
        out.addTerm(u, -c);
      }
    }
    return out;
  };
  std::vector<Poly> gens;
  for (const auto& p : a.basis) gens.push_back(lift(p, true, false));
  for (const auto& p : b.basis) gens.push_back(lift(p, false, true));
  auto gb = buchberger(elim, std::move(gens));
  std::vector<Poly> intersection;
  for (const auto& p : gb) {
    bool hasU = false;
    for (const auto& [e, c] : p.terms())
      if (e[0] > 0) hasU = true;
    if (hasU) continue;
    Poly proj(n);
    for (const auto& [e, c] : p.terms()) proj.addTerm(Expo(e.begin() + 1, e.end()), c);
    intersection.push_back(std::move(proj));
  }
  GradedIdeal out;
  out.order = a.order;
  out.varNames = a.varNames;
  out.basis = buchberger(out.order, std::move(intersection));
  return out;
}

std::vector<long> hilbertCounts(const GradedIdeal& ideal, int bound) {
  const int n = ideal.order.nvars();
  for (int w : ideal.order.weights)
    if (w <= 0) throw UsageError("hilbertCounts: weights must be positive");
  std::vector<Expo> lts;
  for (const auto& b : ideal.basis) lts.push_back(leadingTerm(ideal.order, b).first);
  std::vector<long> counts(bound + 1, 0);
  Expo cur(n, 0);
  auto rec = [&](auto&& self, int pos, int degree) -> void {
    if (pos == n) {
      bool standard = true;
      for (const auto& lt : lts)
        if (divides(lt, cur)) {
          standard = false;
          break;
        }
      if (standard) counts[degree] += 1;
      return;
    }
    for (int e = 0;; ++e) {
      int d = degree + e * ideal.order.weights[pos];
      if (d > bound) break;
      cur[pos] = e;
      self(self, pos + 1, d);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, 0);
  return counts;
}

VarietyReport varietyReport(const GradedIdeal& ideal, int bound) {
  VarietyReport rep;
  for (const auto& b : ideal.basis) rep.componentIdeal.push_back(b.str(ideal.varNames));

  // unit ideal: empty variety
  if (!ideal.basis.empty() && ideal.basis.size() == 1) {
    Expo zero(ideal.order.nvars(), 0);
    if (!ideal.basis[0].coeff(zero).isZero()) {
      rep.status = VarietyReport::Status::Exact;
      rep.dimension = -1;
      rep.multiplicity = Rat(0);
      rep.multiplicityIsLocalizationChecked = true;
      return rep;
    }
  }

  auto counts = hilbertCounts(ideal, bound);
  int maxW = 1;
  for (int w : ideal.order.weights) maxW = std::max(maxW, w);

  // zero-dimensional: a window of length maxW without standard monomials
  // certifies that none exist above it (divisors of standard monomials
  // are standard)
  {
    int lastNonzero = -1;
    for (int d = 0; d <= bound; ++d)
      if (counts[d] > 0) lastNonzero = d;
    if (lastNonzero + maxW <= bound) {
      rep.status = VarietyReport::Status::Exact;
      rep.dimension = 0;
      long total = 0;
      for (long c : counts) total += c;
      rep.multiplicity = Rat(total);
      rep.multiplicityIsLocalizationChecked = true;  // codimension count is exact
      return rep;
    }
  }

  // positive dimension: sample the cumulative function on a stride that
  // absorbs the weight periodicity and look for a stabilized difference
  // order
  long stride = 1;
  for (int w : ideal.order.weights) stride = std::lcm(stride, static_cast<long>(w));
  std::vector<Rat> samples;
  long cumulative = 0;
  std::vector<long> cum(bound + 1);
  for (int d = 0; d <= bound; ++d) {
    cumulative += counts[d];
    cum[d] = cumulative;
  }
  for (long d = bound % stride; d <= bound; d += stride)
    samples.push_back(Rat(cum[static_cast<int>(d)]));
  // Difference table: the smallest order whose differences stabilize on
  // the tail (last three samples equal) gives the growth degree.  Early
  // samples may sit below the quasi-polynomial range and are ignored.
  for (int r = 0; static_cast<int>(samples.size()) >= 3; ++r) {
    std::size_t sz = samples.size();
    if (samples[sz - 1] == samples[sz - 2] && samples[sz - 2] == samples[sz - 3]) {
      rep.status = VarietyReport::Status::Exact;
      rep.dimension = r;
      // normalized leading coefficient of the cumulative growth:
      // H(d) ~ (Delta / stride^r) * d^r / r!, reported times r!
      rep.multiplicity = samples.back();
      for (int t = 0; t < r; ++t) rep.multiplicity /= Rat(stride);
      rep.multiplicityIsLocalizationChecked = false;
      return rep;
    }
    std::vector<Rat> next;
    for (std::size_t i = 1; i < sz; ++i) next.push_back(samples[i] - samples[i - 1]);
    samples = std::move(next);
  }
  rep.status = VarietyReport::Status::Inconclusive;
  return rep;
}

GradedIdeal sliceRestrict(const NilpotentSetup& setup, const std::vector<Poly>& gensInG) {
  const int dim = setup.dim();
  const int r = static_cast<int>(setup.sliceIdx.size());
  std::vector<Poly> images;
  for (int i = 0; i < dim; ++i) {
    Poly im(r);
    Rat c0 = setup.algebra.formPair(setup.triple.e, setup.algebra.basisVec(i));
    if (!c0.isZero()) im += Poly::constant(r, c0);
    for (int p = 0; p < r; ++p) {
      Rat cp = setup.algebra.formPair(setup.sliceDual[p], setup.algebra.basisVec(i));
      if (!cp.isZero()) im += Poly::variable(r, p) * cp;
    }
    images.push_back(std::move(im));
  }
  std::vector<Poly> restricted;
  for (const auto& g : gensInG) {
    if (g.nvars() != dim) throw UsageError("sliceRestrict: generator over the wrong ambient");
    Poly s = g.substitute(images);
    if (!s.isZero()) restricted.push_back(std::move(s));
  }
  MonomialOrder ord;
  ord.weights = setup.sliceDegrees;
  std::vector<std::string> names;
  for (int p = 0; p < r; ++p) names.push_back("t" + std::to_string(p + 1));
  return makeIdeal(std::move(ord), std::move(names), std::move(restricted));
}

GradedIdeal grOfNCIdeal(const PBWContext& ctx, const LieAlgebraData& g,
                        const std::vector<NCPoly>& gens, int lengthBound) {
  for (const auto& gen : gens) {
    auto d = standardDegree(gen);
    if (d && *d > lengthBound) throw UsageError("grOfNCIdeal: bound below generator degree");
  }
  // Saturate the two-sided span within the length bound by repeated
  // one-letter multiplications, keeping an incremental echelon basis.
  std::map<Word, int> coordIndex;
  auto coordsOf = [&](const NCPoly& p) {
    for (const auto& [w, c] : p.terms())
      if (!coordIndex.count(w)) {
        int next = static_cast<int>(coordIndex.size());
        coordIndex[w] = next;
      }
    Vec v(coordIndex.size(), Rat(0));
    for (const auto& [w, c] : p.terms()) v[coordIndex.at(w)] = c;
    return v;
  };
  std::vector<NCPoly> span;
  std::vector<Vec> echelon;          // rows reduced against each other
  std::vector<int> pivots;           // leading coordinate per row
  auto tryInsert = [&](const NCPoly& p) -> bool {
    if (p.isZero()) return false;
    Vec v = coordsOf(p);
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      if (pivots[r] >= static_cast<int>(v.size())) continue;
      if (v[pivots[r]].isZero()) continue;
      Rat factor = v[pivots[r]] / echelon[r][pivots[r]];
      for (std::size_t i = 0; i < echelon[r].size(); ++i)
        if (!echelon[r][i].isZero()) v[i] -= factor * echelon[r][i];
    }
    int pivot = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].isZero()) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot < 0) return false;
    echelon.push_back(std::move(v));
    pivots.push_back(pivot);
    span.push_back(p);
    return true;
  };
  std::vector<NCPoly> frontier;
  for (const auto& gen : gens)
    if (tryInsert(gen)) frontier.push_back(gen);
  while (!frontier.empty()) {
    std::vector<NCPoly> next;
    for (const auto& x : frontier) {
      auto dx = standardDegree(x);
      if (!dx || *dx >= lengthBound) continue;
      for (int i = 0; i < ctx.size(); ++i) {
        NCPoly left = multiply(ctx, NCPoly::generator(i), x);
        if (tryInsert(left)) next.push_back(left);
        NCPoly right = multiply(ctx, x, NCPoly::generator(i));
        if (tryInsert(right)) next.push_back(right);
      }
    }
    frontier = std::move(next);
  }

  // Top standard-degree symbols, as commutative polynomials over the
  // basis coordinates of g.
  std::vector<Poly> symbols;
  for (const auto& p : span) {
    auto d = standardDegree(p);
    if (!d) continue;
    Poly sym(g.dim);
    for (const auto& [w, c] : p.terms()) {
      if (static_cast<int>(w.size()) != *d) continue;
      Expo e(g.dim, 0);
      for (int letter : w) e[letter] += 1;
      sym.addTerm(e, c);
    }
    symbols.push_back(std::move(sym));
  }
  MonomialOrder ord;
  ord.weights.assign(g.dim, 1);
  return makeIdeal(std::move(ord), g.basisLabels, std::move(symbols));
}

Poly traceSymbol(const LieAlgebraData& g, int k) {
  if (k < 1) throw UsageError("traceSymbol: k must be positive");
  const int n = g.repDim;
  const int d = g.dim;
  // Variables are the basis elements as linear functions on g* (the same
  // convention as symbols of U(g) elements), so the point with form
  // coordinates y_i = <x, b_i> has matrix sum_i (G^{-1} y)_i B_i.
  SparseMat gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rat v = g.form.at(i, j);
      if (!v.isZero()) gram.set(i, j, v);
    }
  using PolyMat = std::vector<std::vector<Poly>>;
  PolyMat m(n, std::vector<Poly>(n, Poly(d)));
  for (int j = 0; j < d; ++j) {
    Vec ej(d, Rat(0));
    ej[j] = Rat(1);
    auto col = solve(gram, ej);
    if (!col) throw ConsistencyError("traceSymbol: degenerate form");
    // coefficient polynomial of B_i picks up (G^{-1})_{ij} y_j
    for (int i = 0; i < d; ++i) {
      if ((*col)[i].isZero()) continue;
      for (const auto& [rc, v] : g.repBasis[i].entries())
        m[rc.first][rc.second] += Poly::variable(d, j) * ((*col)[i] * v);
    }
  }
  PolyMat acc = m;
  for (int t = 1; t < k; ++t) {
    PolyMat next(n, std::vector<Poly>(n, Poly(d)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          if (!acc[i][l].isZero() && !m[l][j].isZero()) next[i][j] += acc[i][l] * m[l][j];
    acc = std::move(next);
  }
  Poly tr(d);
  for (int i = 0; i < n; ++i) tr += acc[i][i];
  return tr;
}

}  // namespace walg

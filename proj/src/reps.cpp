#include "walg/reps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "walg/errors.hpp"

namespace walg {

namespace {

Poly relationToPoly(int nvars, const std::map<std::vector<int>, Rat>& expr) {
  Poly p(nvars);
  for (const auto& [e, c] : expr) p.addTerm(e, c);
  return p;
}

// Rational roots of a nonzero univariate polynomial (map degree ->
// coefficient), together with the unsolved remainder after dividing all
// rational roots out.
struct RootSplit {
  std::vector<Rat> roots;
  std::map<int, Rat> remainder;  // degree >= 1 when irrational factors remain
};

std::vector<mpz_class> positiveDivisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> divs;
  if (n == 0) return divs;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Rat evalUni(const std::map<int, Rat>& p, const Rat& x) {
  Rat acc(0);
  for (const auto& [d, c] : p) {
    Rat t = c;
    for (int i = 0; i < d; ++i) t *= x;
    acc += t;
  }
  return acc;
}

std::map<int, Rat> deflate(const std::map<int, Rat>& p, const Rat& root) {
  // synthetic division by (x - root)
  int deg = p.rbegin()->first;
  std::vector<Rat> coeffs(deg + 1, Rat(0));
  for (const auto& [d, c] : p) coeffs[d] = c;
  std::vector<Rat> q(deg, Rat(0));
  Rat carry = coeffs[deg];
  for (int d = deg - 1; d >= 0; --d) {
    q[d] = carry;
    carry = coeffs[d] + carry * root;
  }
  std::map<int, Rat> out;
  for (int d = 0; d < deg; ++d)
    if (!q[d].isZero()) out[d] = q[d];
  return out;
}

RootSplit rationalRoots(std::map<int, Rat> p) {
  RootSplit out;
  // strip zero roots
  while (!p.empty() && !p.count(0)) {
    std::map<int, Rat> shifted;
    for (const auto& [d, c] : p) shifted[d - 1] = c;
    p = std::move(shifted);
    out.roots.push_back(Rat(0));
  }
  for (;;) {
    if (p.empty() || p.rbegin()->first == 0) return out;
    // integer-coefficient model
    mpz_class den = 1;
    for (const auto& [d, c] : p) den = intLcm(den, c.denominator());
    mpz_class a0 = (p.at(0) * Rat(den)).numerator();
    mpz_class ad = (p.rbegin()->second * Rat(den)).numerator();
    bool found = false;
    for (const auto& pp : positiveDivisors(a0)) {
      for (const auto& qq : positiveDivisors(ad)) {
        for (int sign : {1, -1}) {
          Rat cand{mpq_class(mpz_class(sign * pp), qq)};
          if (evalUni(p, cand).isZero()) {
            out.roots.push_back(cand);
            p = deflate(p, cand);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) {
      out.remainder = std::move(p);
      return out;
    }
  }
}

std::string printUnivariate(const std::map<int, Rat>& p, const std::string& var) {
  Poly q(1);
  for (const auto& [d, c] : p) q.addTerm({d}, c);
  return q.str({var});
}

// Recursive triangular solve of the abelianized system.  Variables are
// eliminated from the last (smallest in the order) upward; a variable
// with no univariate eliminant is treated as a free parameter and
// sampled from a fixed trial list.
struct Solver {
  int nvars;
  std::vector<std::string> names;
  std::vector<Rat> trialValues = {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(1, 2), Rat(-2)};
  std::vector<Character> solutions;
  std::vector<std::string> obstructions;
  std::vector<int> freeVars;
  int branchBudget = 64;

  MonomialOrder lexOrder() const {
    MonomialOrder o;
    o.weights.assign(nvars, 1);
    o.elimBlock = 0;
    o.lex = true;
    return o;
  }

  void solve(std::vector<Poly> gens, std::map<int, Rat> partial, int var) {
    if (branchBudget <= 0) return;
    if (var < 0) {
      // all variables assigned: gens must all vanish
      for (const auto& g : gens)
        if (!g.isZero()) return;
      Character chi;
      chi.values = partial;
      solutions.push_back(chi);
      --branchBudget;
      return;
    }
    auto gb = buchberger(lexOrder(), gens);
    if (gb.size() == 1) {
      Expo zero(nvars, 0);
      if (!gb[0].coeff(zero).isZero()) return;  // unit ideal: no solutions
    }
    // univariate eliminant in the current variable?
    std::optional<std::map<int, Rat>> uni;
    for (const auto& g : gb) {
      bool onlyVar = true;
      for (const auto& [e, c] : g.terms())
        for (int i = 0; i < nvars; ++i)
          if (i != var && e[i] != 0) onlyVar = false;
      if (onlyVar && !g.isZero()) {
        std::map<int, Rat> u;
        for (const auto& [e, c] : g.terms()) u[e[var]] = c;
        if (u.rbegin()->first > 0) {
          uni = std::move(u);
          break;
        }
      }
    }
    auto substitute = [&](const std::vector<Poly>& gs, const Rat& value) {
      std::vector<Poly> images;
      for (int i = 0; i < nvars; ++i)
        images.push_back(i == var ? Poly::constant(nvars, value) : Poly::variable(nvars, i));
      std::vector<Poly> out;
      for (const auto& g : gs) {
        Poly s = g.substitute(images);
        if (!s.isZero()) out.push_back(std::move(s));
      }
      return out;
    };
    if (uni) {
      auto split = rationalRoots(*uni);
      if (!split.remainder.empty())
        obstructions.push_back(printUnivariate(split.remainder, names[var]));
      std::vector<Rat> roots = split.roots;
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      for (const Rat& root : roots) {
        auto sub = substitute(gb, root);
        auto p = partial;
        p[var] = root;
        solve(std::move(sub), std::move(p), var - 1);
      }
    } else {
      if (std::find(freeVars.begin(), freeVars.end(), var) == freeVars.end())
        freeVars.push_back(var);
      for (const Rat& t : trialValues) {
        std::size_t before = solutions.size();
        auto sub = substitute(gb, t);
        auto p = partial;
        p[var] = t;
        solve(std::move(sub), std::move(p), var - 1);
        if (solutions.size() > before) break;  // one representative per family
      }
    }
  }
};

}  // namespace

CharacterSearch findCharacters(const WPresentation& pres) {
  const int r = pres.genCount();
  CharacterSearch out;
  bool covered = true;
  for (int i = 0; i < r && covered; ++i)
    for (int j = i + 1; j < r && covered; ++j) {
      auto cp = pres.commutatorPoly(i, j);
      if (!cp) {
        covered = false;
        break;
      }
      Poly p = relationToPoly(r, *cp);
      if (!p.isZero()) out.relations.push_back(std::move(p));
    }
  if (!covered) {
    out.status = CharacterSearch::Status::Inconclusive;
    return out;
  }
  if (out.relations.empty()) {
    out.status = CharacterSearch::Status::AllScalars;
    for (int i = 0; i < r; ++i) out.freeGenerators.push_back(i);
    Character zero;
    for (int i = 0; i < r; ++i) zero.values[i] = Rat(0);
    out.characters.push_back(std::move(zero));
    return out;
  }

  Solver solver;
  solver.nvars = r;
  solver.names = pres.genLabels;
  solver.solve(out.relations, {}, r - 1);
  out.freeGenerators = solver.freeVars;
  std::sort(out.freeGenerators.begin(), out.freeGenerators.end());
  out.characters = solver.solutions;
  out.defining = solver.obstructions;
  if (!out.characters.empty())
    out.status = CharacterSearch::Status::Solved;
  else if (!out.defining.empty())
    out.status = CharacterSearch::Status::IrrationalOnly;
  else
    out.status = CharacterSearch::Status::NoCharacters;
  return out;
}

bool characterSatisfies(const CharacterSearch& search, const Character& chi) {
  for (const auto& rel : search.relations) {
    Vec point(rel.nvars(), Rat(0));
    for (const auto& [i, v] : chi.values) point[i] = v;
    if (!rel.eval(point).isZero()) return false;
  }
  return true;
}

FinModule FinModule::fromCharacter(const WPresentation& pres, const Character& chi) {
  FinModule m;
  m.dim = 1;
  for (int i = 0; i < pres.genCount(); ++i) {
    Rat v = chi.values.count(i) ? chi.values.at(i) : Rat(0);
    m.actions.push_back({Vec{v}});
  }
  return m;
}

namespace {

std::vector<Vec> matMul(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<Vec> c(n, Vec(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].isZero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b[k][j].isZero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

std::vector<Vec> matIdentity(int n) {
  std::vector<Vec> m(n, Vec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

}  // namespace

ModuleReport verifyModule(const WPresentation& pres, const FinModule& m) {
  const int r = pres.genCount();
  if (static_cast<int>(m.actions.size()) != r)
    throw UsageError("verifyModule: one action matrix per generator required");
  for (const auto& a : m.actions)
    if (static_cast<int>(a.size()) != m.dim)
      throw UsageError("verifyModule: matrix size mismatch");

  auto evalMonomial = [&](const std::vector<int>& expo) {
    auto acc = matIdentity(m.dim);
    for (int p = 0; p < r; ++p)
      for (int t = 0; t < expo[p]; ++t) acc = matMul(acc, m.actions[p]);
    return acc;
  };
  for (const auto& [pair, expr] : pres.products) {
    auto lhs = matMul(m.actions[pair.first], m.actions[pair.second]);
    std::vector<Vec> rhs(m.dim, Vec(m.dim, Rat(0)));
    for (const auto& [expo, c] : expr) {
      auto term = evalMonomial(expo);
      for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) rhs[i][j] += term[i][j] * c;
    }
    if (lhs != rhs) {
      return {false, pres.genLabels[pair.first] + " * " + pres.genLabels[pair.second]};
    }
  }
  return {true, ""};
}

SkryabinReport skryabinTruncated(const WAlgebra& w, const FinModule& m, int degreeBound) {
  if (degreeBound < 1) throw UsageError("skryabinTruncated: degree bound must be >= 1");
  const WContext& ctx = w.context();
  const WPresentation& pres = w.presentation();
  SkryabinReport rep;
  rep.degreeBound = degreeBound;
  if (m.dim == 0) {
    rep.truncationDims.assign(degreeBound + 1, 0);
    rep.annihilatorDims.assign(degreeBound + 1, 0);
    rep.locallyNilpotent = true;
    rep.stabilized = true;
    rep.stableAnnihilatorDim = 0;
    return rep;
  }
  const int r = pres.genCount();
  QWindow win = enumerateQ(ctx, degreeBound + 1);
  const int nw = static_cast<int>(win.words.size());
  const int ncoords = nw * m.dim;
  auto coordOf = [&](int wordIdx, int v) { return wordIdx * m.dim + v; };

  // Relation space: (q * X_j) tensor v - q tensor (X_j v), collected for
  // every window word q with room for the generator degree.
  std::vector<Vec> relations;
  for (int wi = 0; wi < nw; ++wi) {
    for (int j = 0; j < r; ++j) {
      if (win.degrees[wi] + pres.genDegrees[j] > degreeBound + 1) continue;
      NCPoly qx = reduceToQuotient(
          ctx, multiply(ctx.pbw, NCPoly::monomial(win.words[wi], Rat(1)), pres.generators[j]));
      Vec qxCoords = quotientCoords(win, qx);
      for (int v = 0; v < m.dim; ++v) {
        Vec rel(ncoords, Rat(0));
        for (int t = 0; t < nw; ++t)
          if (!qxCoords[t].isZero()) rel[coordOf(t, v)] += qxCoords[t];
        for (int u = 0; u < m.dim; ++u) {
          const Rat& a = m.actions[j][u][v];  // X_j e_v = sum_u a_uv e_u
          if (!a.isZero()) rel[coordOf(wi, u)] -= a;
        }
        relations.push_back(std::move(rel));
      }
    }
  }
  Echelon rel = rowReduce(std::move(relations), ncoords);
  std::vector<bool> isPivot(ncoords, false);
  for (int c : rel.pivotCols) isPivot[c] = true;
  std::vector<int> quotientCoordsIdx;
  for (int c = 0; c < ncoords; ++c)
    if (!isPivot[c]) quotientCoordsIdx.push_back(c);
  auto project = [&](Vec full) {
    for (int rr = 0; rr < rel.rank; ++rr) {
      const Rat& x = full[rel.pivotCols[rr]];
      if (x.isZero()) continue;
      Rat factor = x;  // pivot rows are monic
      for (int cc = 0; cc < ncoords; ++cc)
        if (!rel.rows[rr][cc].isZero()) full[cc] -= factor * rel.rows[rr][cc];
    }
    Vec q(quotientCoordsIdx.size(), Rat(0));
    for (std::size_t t = 0; t < quotientCoordsIdx.size(); ++t)
      q[t] = full[quotientCoordsIdx[t]];
    return q;
  };
  auto unitVec = [&](int wordIdx, int v) {
    Vec full(ncoords, Rat(0));
    full[coordOf(wordIdx, v)] = Rat(1);
    return project(std::move(full));
  };

  // truncation dims: rank of the projected generators of each level
  for (int l = 0; l <= degreeBound; ++l) {
    std::vector<Vec> vecs;
    for (int wi = 0; wi < nw; ++wi) {
      if (win.degrees[wi] > l) continue;
      for (int v = 0; v < m.dim; ++v) vecs.push_back(unitVec(wi, v));
    }
    rep.truncationDims.push_back(
        vecs.empty() ? 0 : rowReduce(std::move(vecs), static_cast<int>(quotientCoordsIdx.size())).rank);
  }

  // m'-action matrices on the quotient (defined on inputs of degree <= d)
  const int mD = ctx.mDim();
  auto mPrimeAction = [&](int xi, int wordIdx, int v) {
    NCPoly xq = reduceToQuotient(
        ctx, multiply(ctx.pbw, NCPoly::generator(xi), NCPoly::monomial(win.words[wordIdx], Rat(1))));
    xq -= NCPoly::monomial(win.words[wordIdx], ctx.setup.adChi[xi]);
    Vec coords = quotientCoords(win, xq);
    Vec full(ncoords, Rat(0));
    for (int t = 0; t < nw; ++t)
      if (!coords[t].isZero()) full[coordOf(t, v)] = coords[t];
    return project(std::move(full));
  };

  // annihilator dims per level: kernel of the stacked m' action on the
  // span of level-l vectors
  for (int l = 0; l <= degreeBound; ++l) {
    std::vector<std::pair<int, int>> gens;  // (wordIdx, v)
    for (int wi = 0; wi < nw; ++wi)
      if (win.degrees[wi] <= l)
        for (int v = 0; v < m.dim; ++v) gens.push_back({wi, v});
    if (gens.empty()) {
      rep.annihilatorDims.push_back(0);
      continue;
    }
    // basis of V_l inside the quotient
    std::vector<Vec> cols;
    for (auto [wi, v] : gens) cols.push_back(unitVec(wi, v));
    // stacked action applied to the generating vectors, then kernel over
    // the combination space, intersected with independence of cols
    const int q = static_cast<int>(quotientCoordsIdx.size());
    SparseMat stacked(mD * q + q, static_cast<int>(cols.size()));
    for (std::size_t cidx = 0; cidx < cols.size(); ++cidx) {
      for (int xi = 0; xi < mD; ++xi) {
        Vec img = mPrimeAction(xi, gens[cidx].first, gens[cidx].second);
        for (int t = 0; t < q; ++t)
          if (!img[t].isZero()) stacked.set(xi * q + t, static_cast<int>(cidx), img[t]);
      }
    }
    auto null = kernel(stacked);
    // combinations that are zero in the quotient are not annihilator
    // vectors; quotient out the kernel of cols itself
    SparseMat colMat(q, static_cast<int>(cols.size()));
    for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
      for (int t = 0; t < q; ++t)
        if (!cols[cidx][t].isZero()) colMat.set(t, static_cast<int>(cidx), cols[cidx][t]);
    long zeroDim = static_cast<long>(kernel(colMat).size());
    rep.annihilatorDims.push_back(static_cast<long>(null.size()) - zeroDim);
  }

  // stabilization: three consecutive equal values
  for (std::size_t l = 2; l < rep.annihilatorDims.size(); ++l) {
    if (rep.annihilatorDims[l] == rep.annihilatorDims[l - 1] &&
        rep.annihilatorDims[l - 1] == rep.annihilatorDims[l - 2]) {
      rep.stabilized = true;
      rep.stableAnnihilatorDim = rep.annihilatorDims[l];
    }
  }

  // local nilpotency within the window headroom
  rep.locallyNilpotent = true;
  const int testLevel = degreeBound / 2;
  const int budget = degreeBound - testLevel;
  for (int wi = 0; wi < nw && rep.locallyNilpotent; ++wi) {
    if (win.degrees[wi] > testLevel) continue;
    for (int v = 0; v < m.dim && rep.locallyNilpotent; ++v) {
      for (int xi = 0; xi < mD && rep.locallyNilpotent; ++xi) {
        // iterate xi - chi(xi) on q tensor v inside the word model
        Vec curVec = unitVec(wi, v);
        bool dead = false;
        for (int step = 0; step < budget; ++step) {
          bool representable = true;
          // reconstruct from current projected vector: quotient coords map
          // back to window words tensor module basis
          Vec full(ncoords, Rat(0));
          for (std::size_t t = 0; t < quotientCoordsIdx.size(); ++t)
            full[quotientCoordsIdx[t]] = curVec[t];
          Vec acc(quotientCoordsIdx.size(), Rat(0));
          for (int t = 0; t < nw && representable; ++t)
            for (int u = 0; u < m.dim; ++u) {
              const Rat& c = full[coordOf(t, u)];
              if (c.isZero()) continue;
              if (win.degrees[t] > degreeBound) {
                representable = false;
                break;
              }
              Vec img = mPrimeAction(xi, t, u);
              for (std::size_t s = 0; s < acc.size(); ++s) acc[s] += c * img[s];
            }
          if (!representable) break;
          curVec = std::move(acc);
          bool zero = std::all_of(curVec.begin(), curVec.end(),
                                  [](const Rat& x) { return x.isZero(); });
          if (zero) {
            dead = true;
            break;
          }
        }
        if (!dead) rep.locallyNilpotent = false;
      }
    }
  }
  return rep;
}

GrowthReport gkDimCheck(const WAlgebra& w, const FinModule& m, int window) {
  GrowthReport rep;
  auto sk = skryabinTruncated(w, m, window);
  rep.dims = sk.truncationDims;

  // Exact model: the truncation is a free module over the slice
  // directions, so its dimensions are dim M times the count of monomials
  // in the non-slice quotient variables.  Matching the whole sequence
  // certifies the growth degree, which is the number of those variables
  // (= dim m).
  const WContext& ctx = w.context();
  std::vector<int> freeDegrees;
  for (int i = ctx.mDim(); i < ctx.pbw.size(); ++i) {
    bool isSlice = std::find(ctx.setup.sliceIdx.begin(), ctx.setup.sliceIdx.end(), i) !=
                   ctx.setup.sliceIdx.end();
    if (!isSlice) freeDegrees.push_back(ctx.pbw.kazhdanDeg(i));
  }
  std::vector<long> counts(window + 1, 0);
  {
    auto rec = [&](auto&& self, std::size_t pos, int deg) -> void {
      if (pos == freeDegrees.size()) {
        counts[deg] += 1;
        return;
      }
      for (int e = 0;; ++e) {
        int d = deg + e * freeDegrees[pos];
        if (d > window) break;
        self(self, pos + 1, d);
      }
    };
    rec(rec, 0, 0);
  }
  bool match = true;
  long cum = 0;
  for (int l = 0; l <= window; ++l) {
    cum += counts[l];
    if (rep.dims[l] != cum * m.dim) match = false;
  }
  if (match && m.dim > 0) {
    rep.fittedDegree = static_cast<int>(freeDegrees.size());
    rep.conclusive = true;
    return rep;
  }

  // numeric fallback: stride differencing of the observed sequence
  long stride = 1;
  for (int d : freeDegrees) stride = std::lcm(stride, static_cast<long>(d));
  std::vector<Rat> samples;
  for (long l = window % stride; l <= window; l += stride)
    samples.push_back(Rat(rep.dims[static_cast<std::size_t>(l)]));
  for (int r = 0; static_cast<int>(samples.size()) >= 3; ++r) {
    std::size_t sz = samples.size();
    if (samples[sz - 1] == samples[sz - 2] && samples[sz - 2] == samples[sz - 3]) {
      rep.fittedDegree = r;
      rep.conclusive = true;
      return rep;
    }
    std::vector<Rat> next;
    for (std::size_t i = 1; i < sz; ++i) next.push_back(samples[i] - samples[i - 1]);
    samples = std::move(next);
  }
  return rep;
}

namespace {

// weight multiplicities of the sl2 irreducible of highest weight lambda
std::vector<int> sl2Weights(int lambda) {
  std::vector<int> w;
  for (int a = -lambda; a <= lambda; a += 2) w.push_back(a);
  return w;
}

}  // namespace

IsotypicShadowReport isotypicShadow(const std::vector<int>& sliceDegrees,
                                    const std::vector<int>& lambdas, int degreeBound) {
  IsotypicShadowReport rep;
  // graded dimensions of the slice coordinate ring
  std::vector<long> ks(degreeBound + 1, 0);
  {
    std::vector<int> cur(sliceDegrees.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, int deg) -> void {
      if (pos == sliceDegrees.size()) {
        ks[deg] += 1;
        return;
      }
      for (int e = 0;; ++e) {
        int d = deg + e * sliceDegrees[pos];
        if (d > degreeBound) break;
        self(self, pos + 1, d);
      }
    };
    rec(rec, 0, 0);
  }

  int maxLambda = 0;
  for (int l : lambdas) {
    if (l % 2 != 0) throw UsageError("isotypicShadow: adjoint-group weights must be even");
    maxLambda = std::max(maxLambda, l);
  }

  // Route B: bigraded weight-multiplicity table of the truncated sum of
  // matrix-coefficient blocks tensored with the slice ring.  Degrees can
  // be negative (the group-side grading), shifted by maxLambda.
  const int offset = maxLambda;
  const int degSpan = degreeBound + offset + 1;
  std::vector<std::map<int, long>> weightTable(degSpan);  // degree -> weight -> dim
  for (int mu = 0; mu <= maxLambda; mu += 2) {
    for (int a : sl2Weights(mu)) {        // group-side grading of the block
      for (int b = 0; b <= degreeBound; ++b) {
        if (ks[b] == 0) continue;
        int n = a + b;
        if (n < -offset || n > degreeBound) continue;
        for (int z : sl2Weights(mu)) weightTable[n + offset][z] += ks[b];
      }
    }
  }

  for (int lambda : lambdas) {
    for (int n = -offset; n <= degreeBound; ++n) {
      // Route A: product formula
      long a = 0;
      for (int wt : sl2Weights(lambda)) {
        int b = n - wt;
        if (b >= 0 && b <= degreeBound) a += ks[b];
      }
      a *= (lambda + 1);
      // Route B: multiplicity by weight differencing
      const auto& tbl = weightTable[n + offset];
      long dimLambda = tbl.count(lambda) ? tbl.at(lambda) : 0;
      long dimAbove = tbl.count(lambda + 2) ? tbl.at(lambda + 2) : 0;
      long b2 = (dimLambda - dimAbove) * (lambda + 1);
      rep.dims[{lambda, n}] = a;
      if (a != b2 && rep.pass) {
        rep.pass = false;
        std::ostringstream os;
        os << "isotypic dimensions disagree at weight " << lambda << ", degree " << n
           << ": " << a << " vs " << b2;
        rep.firstMismatch = os.str();
      }
    }
  }
  return rep;
}

OscillatorReport oscillatorKernel(const LieAlgebraData& sl2, const PBWContext& ctx,
                                  int lengthBound) {
  if (sl2.typeTag != 'A' || sl2.rank != 1)
    throw UsageError("oscillatorKernel: the oscillator instance needs sl2");
  StarContext sctx = makeStandardSymplectic(1);
  LinearAction action;
  for (int i = 0; i < sl2.dim; ++i) {
    std::vector<std::vector<Rat>> mat(2, std::vector<Rat>(2, Rat(0)));
    for (const auto& [rc, v] : sl2.repBasis[i].entries()) mat[rc.first][rc.second] = v;
    action.matrices.push_back(std::move(mat));
  }
  action.bracket = sl2.bracket;
  Comoment cm = quantumComoment(sctx, action);

  // image of a PBW word under the comoment map, at hbar = 1
  auto imageOf = [&](const Word& w) {
    StarPoly acc = StarPoly::constant(2, Rat(1));
    for (int letter : w) {
      // multiply on the right to respect the word's product order
      acc = moyal(sctx, acc, cm.hamiltonians[letter]);
    }
    return acc.atHbar(1);
  };

  // enumerate words of length <= bound and compute the kernel
  std::vector<Word> words;
  Word cur;
  auto rec = [&](auto&& self, int maxIdx, int left) -> void {
    words.push_back(cur);
    if (left == 0) return;
    for (int i = maxIdx; i >= 0; --i) {
      cur.push_back(i);
      self(self, i, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, ctx.size() - 1, lengthBound);
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::map<Expo, int> rowIndex;
  std::vector<Poly> images;
  for (const auto& w : words) {
    Poly img = imageOf(w);
    for (const auto& [e, c] : img.terms())
      if (!rowIndex.count(e)) {
        int next = static_cast<int>(rowIndex.size());
        rowIndex[e] = next;
      }
    images.push_back(std::move(img));
  }
  auto kernelUpTo = [&](std::size_t wordCount) {
    SparseMat mat(static_cast<int>(rowIndex.size()), static_cast<int>(wordCount));
    for (std::size_t c = 0; c < wordCount; ++c)
      for (const auto& [e, v] : images[c].terms()) mat.set(rowIndex.at(e), static_cast<int>(c), v);
    return kernel(mat);
  };

  // words of length <= 2 prefix the sorted list
  std::size_t shortCount = 0;
  while (shortCount < words.size() && words[shortCount].size() <= 2) ++shortCount;
  auto shortKernel = kernelUpTo(shortCount);

  OscillatorReport rep;
  rep.kernelDimAtLength2 = static_cast<int>(shortKernel.size());

  // the Casimir value: image of the Casimir is a scalar
  NCPoly omega;
  {
    SparseMat gram(sl2.dim, sl2.dim);
    for (int i = 0; i < sl2.dim; ++i)
      for (int j = 0; j < sl2.dim; ++j) {
        Rat v = sl2.formPair(sl2.basisVec(i), sl2.basisVec(j));
        if (!v.isZero()) gram.set(i, j, v);
      }
    for (int j = 0; j < sl2.dim; ++j) {
      Vec ej(sl2.dim, Rat(0));
      ej[j] = Rat(1);
      auto col = solve(gram, ej);
      if (!col) throw ConsistencyError("oscillatorKernel: degenerate form");
      for (int i = 0; i < sl2.dim; ++i)
        if (!(*col)[i].isZero()) omega += normalForm(ctx, {j, i}, (*col)[i]);
    }
  }
  Poly omegaImage(2);
  for (const auto& [w, c] : omega.terms()) {
    Poly img = imageOf(w);
    omegaImage += img * c;
  }
  Expo zero(2, 0);
  Poly constant = Poly::constant(2, omegaImage.coeff(zero));
  if (!(omegaImage == constant))
    throw ConsistencyError("oscillatorKernel: Casimir image is not scalar");
  rep.casimirValue = omegaImage.coeff(zero);
  rep.kernelGenerator = omega - NCPoly::monomial({}, rep.casimirValue);
  return rep;
}

}  // namespace walg

#include "walg/star.hpp"

#include <algorithm>
#include <sstream>

#include "walg/errors.hpp"

namespace walg {

StarPoly StarPoly::hbar(int nvars, int power) {
  StarPoly p(nvars);
  p.addTerm(power, Expo(nvars, 0), Rat(1));
  return p;
}

StarPoly StarPoly::fromPoly(const Poly& p, int hbarPower) {
  StarPoly s(p.nvars());
  for (const auto& [e, c] : p.terms()) s.addTerm(hbarPower, e, c);
  return s;
}

void StarPoly::addTerm(int hpow, const Expo& e, const Rat& c) {
  if (c.isZero()) return;
  if (hpow < 0) throw UsageError("StarPoly: negative hbar power");
  auto key = std::pair(hpow, e);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Poly StarPoly::hbarCoeff(int k) const {
  Poly out(nvars_);
  for (const auto& [key, c] : terms_)
    if (key.first == k) out.addTerm(key.second, c);
  return out;
}

int StarPoly::maxHbarPower() const {
  int m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, key.first);
  return m;
}

StarPoly& StarPoly::operator+=(const StarPoly& o) {
  if (nvars_ != o.nvars_) throw UsageError("StarPoly: mixed variable counts");
  for (const auto& [key, c] : o.terms_) addTerm(key.first, key.second, c);
  return *this;
}

StarPoly& StarPoly::operator-=(const StarPoly& o) {
  if (nvars_ != o.nvars_) throw UsageError("StarPoly: mixed variable counts");
  for (const auto& [key, c] : o.terms_) addTerm(key.first, key.second, -c);
  return *this;
}

StarPoly& StarPoly::operator*=(const Rat& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

StarPoly operator*(const StarPoly& a, const StarPoly& b) {
  if (a.nvars_ != b.nvars_) throw UsageError("StarPoly: mixed variable counts");
  StarPoly out(a.nvars_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      Expo e(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) e[i] = ka.second[i] + kb.second[i];
      out.addTerm(ka.first + kb.first, e, ca * cb);
    }
  return out;
}

Poly StarPoly::atHbar(const Rat& value) const {
  Poly out(nvars_);
  for (const auto& [key, c] : terms_) {
    Rat scale = c;
    for (int i = 0; i < key.first; ++i) scale *= value;
    out.addTerm(key.second, scale);
  }
  return out;
}

std::string StarPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> extended = names;
  extended.push_back("hbar");
  Poly flat(nvars_ + 1);
  for (const auto& [key, c] : terms_) {
    Expo e = key.second;
    e.push_back(key.first);
    flat.addTerm(e, c);
  }
  return flat.str(extended);
}

void StarContext::validate() const {
  const int n = nvars();
  if (static_cast<int>(weights.size()) != n || static_cast<int>(bivector.size()) != n)
    throw UsageError("StarContext: inconsistent sizes");
  for (const auto& row : bivector)
    if (static_cast<int>(row.size()) != n) throw UsageError("StarContext: ragged bivector");
  if (!antisymmetric()) throw UsageError("StarContext: bivector is not antisymmetric");
}

bool StarContext::antisymmetric() const {
  const int n = nvars();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bivector[i][j] != -bivector[j][i]) return false;
  return true;
}

StarContext makeStandardSymplectic(int pairs) {
  StarContext ctx;
  const int n = 2 * pairs;
  for (int i = 1; i <= pairs; ++i) {
    ctx.names.push_back("x" + std::to_string(i));
    ctx.names.push_back("p" + std::to_string(i));
  }
  ctx.weights.assign(n, 1);
  ctx.bivector.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < pairs; ++i) {
    ctx.bivector[2 * i][2 * i + 1] = Rat(1);
    ctx.bivector[2 * i + 1][2 * i] = Rat(-1);
  }
  return ctx;
}

Poly contractionPower(const StarContext& ctx, const Poly& f, const Poly& g, int j) {
  const int n = ctx.nvars();
  std::vector<std::pair<Poly, Poly>> pairs = {{f, g}};
  std::vector<Rat> coeffs = {Rat(1)};
  for (int step = 0; step < j; ++step) {
    std::vector<std::pair<Poly, Poly>> next;
    std::vector<Rat> nextCoeffs;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      for (int a = 0; a < n; ++a) {
        Poly da = pairs[t].first.derivative(a);
        if (da.isZero()) continue;
        for (int b = 0; b < n; ++b) {
          if (ctx.bivector[a][b].isZero()) continue;
          Poly db = pairs[t].second.derivative(b);
          if (db.isZero()) continue;
          next.emplace_back(da, db);
          nextCoeffs.push_back(coeffs[t] * ctx.bivector[a][b]);
        }
      }
    pairs = std::move(next);
    coeffs = std::move(nextCoeffs);
    if (pairs.empty()) return Poly(n);
  }
  Poly out(n);
  for (std::size_t t = 0; t < pairs.size(); ++t)
    out += (pairs[t].first * pairs[t].second) * coeffs[t];
  return out;
}

namespace {

// Moyal product of hbar-free polynomials: sum_j (hbar/2)^j / j! P^j(f,g).
// The sum stops at min(deg f, deg g): contractions differentiate both
// arguments, so the series is polynomial on polynomial input.
StarPoly moyalPolys(const StarContext& ctx, const Poly& f, const Poly& g) {
  StarPoly out(ctx.nvars());
  if (f.isZero() || g.isZero()) return out;
  std::vector<int> ones(ctx.nvars(), 1);
  const int jmax = std::min(*f.weightedDegree(ones), *g.weightedDegree(ones));
  Rat factor(1);
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0) factor = factor * Rat(1, 2) / Rat(j);
    Poly term = contractionPower(ctx, f, g, j);
    for (const auto& [e, c] : term.terms()) out.addTerm(j, e, c * factor);
  }
  return out;
}

}  // namespace

StarPoly moyal(const StarContext& ctx, const StarPoly& f, const StarPoly& g) {
  // shape only: a non-antisymmetric bivector is allowed here so negative
  // controls can drive the same code path
  if (static_cast<int>(ctx.bivector.size()) != ctx.nvars())
    throw UsageError("moyal: inconsistent context");
  StarPoly out(ctx.nvars());
  for (int i = 0; i <= f.maxHbarPower(); ++i) {
    Poly fi = f.hbarCoeff(i);
    if (fi.isZero()) continue;
    for (int j = 0; j <= g.maxHbarPower(); ++j) {
      Poly gj = g.hbarCoeff(j);
      if (gj.isZero()) continue;
      StarPoly prod = moyalPolys(ctx, fi, gj);
      for (const auto& [key, c] : prod.terms())
        out.addTerm(key.first + i + j, key.second, c);
    }
  }
  return out;
}

StarPoly moyalCommutator(const StarContext& ctx, const StarPoly& f, const StarPoly& g) {
  return moyal(ctx, f, g) - moyal(ctx, g, f);
}

namespace {

Poly randomPoly(const StarContext& ctx, int degree, Prng& rng) {
  const int n = ctx.nvars();
  Poly p(n);
  int terms = 2 + static_cast<int>(rng.below(3));
  for (int t = 0; t < terms; ++t) {
    Expo e(n, 0);
    int budget = static_cast<int>(rng.below(degree + 1));
    for (int b = 0; b < budget; ++b) e[rng.below(n)] += 1;
    p.addTerm(e, rng.smallRat(3, 2));
  }
  return p;
}

std::string describeTerm(const StarContext& ctx, const StarPoly& diff) {
  auto it = diff.terms().begin();
  StarPoly single(ctx.nvars());
  single.addTerm(it->first.first, it->first.second, it->second);
  return single.str(ctx.names);
}

}  // namespace

CheckReport checkAssociativity(const StarContext& ctx, int sampleDegree, int trials,
                               std::uint64_t seed) {
  if (trials < 1) throw UsageError("checkAssociativity: trials must be >= 1");
  Prng rng(seed);
  for (int t = 0; t < trials; ++t) {
    StarPoly f = StarPoly::fromPoly(randomPoly(ctx, sampleDegree, rng));
    StarPoly g = StarPoly::fromPoly(randomPoly(ctx, sampleDegree, rng));
    StarPoly h = StarPoly::fromPoly(randomPoly(ctx, sampleDegree, rng));
    StarPoly diff = moyal(ctx, moyal(ctx, f, g), h) - moyal(ctx, f, moyal(ctx, g, h));
    if (!diff.isZero())
      return {false, "trial " + std::to_string(t) + ": associativity fails at " +
                         describeTerm(ctx, diff)};
  }
  return {true, ""};
}

CheckReport checkHomogeneity(const StarContext& ctx, int monomialDegreeBound) {
  // antisymmetry is irrelevant to the degree bookkeeping checked here
  const int n = ctx.nvars();
  const int k = ctx.degreeConvention;
  // spanning monomials of plain degree <= bound
  std::vector<Expo> monomials;
  Expo cur(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n) {
      monomials.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, monomialDegreeBound);

  for (const auto& ef : monomials)
    for (const auto& eg : monomials) {
      Poly f = Poly::monomial(ef, Rat(1)), g = Poly::monomial(eg, Rat(1));
      auto wf = f.weightedDegree(ctx.weights), wg = g.weightedDegree(ctx.weights);
      for (int j = 1;; ++j) {
        Poly dj = contractionPower(ctx, f, g, j);
        if (dj.isZero()) break;
        if (!dj.isHomogeneous(ctx.weights, *wf + *wg - k * j)) {
          std::ostringstream os;
          os << "expansion order " << j << " not homogeneous of degree "
             << (*wf + *wg - k * j) << " on " << f.str(ctx.names) << " (x) "
             << g.str(ctx.names);
          return {false, os.str()};
        }
      }
    }
  return {true, ""};
}

WeylReport weylIdentify(const StarContext& ctx) {
  // Antisymmetry is deliberately not a precondition: a corrupted bivector
  // must surface as a failing gram comparison, not an exception.
  const int n = ctx.nvars();
  {
    SparseMat p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!ctx.bivector[i][j].isZero()) p.set(i, j, ctx.bivector[i][j]);
    if (rank(p) != n) throw DomainError("weylIdentify: degenerate bivector");
  }
  WeylReport rep;
  rep.gram.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      StarPoly c = moyalCommutator(ctx, StarPoly::variable(n, i), StarPoly::variable(n, j));
      // expect hbar * omega(u_i, u_j) and nothing else
      Poly order1 = c.hbarCoeff(1);
      Expo zero(n, 0);
      rep.gram[i][j] = order1.coeff(zero);
      StarPoly expected(n);
      expected.addTerm(1, zero, rep.gram[i][j]);
      if (!(c - expected).isZero()) {
        rep.check = {false, "commutator of " + ctx.names[i] + ", " + ctx.names[j] +
                                " is not a scalar multiple of hbar"};
        return rep;
      }
      if (rep.gram[i][j] != ctx.bivector[i][j]) {
        rep.check = {false, "gram entry differs from the bivector at " + ctx.names[i] +
                                ", " + ctx.names[j]};
        return rep;
      }
    }
  return rep;
}

Comoment quantumComoment(const StarContext& ctx, const LinearAction& action) {
  ctx.validate();
  const int n = ctx.nvars();
  // the action must preserve the form: R^T Omega + Omega R = 0, with
  // Omega the bivector matrix
  for (const auto& r : action.matrices) {
    if (static_cast<int>(r.size()) != n) throw UsageError("quantumComoment: bad matrix size");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Rat acc(0);
        for (int c = 0; c < n; ++c)
          acc += r[c][a] * ctx.bivector[c][b] + ctx.bivector[a][c] * r[c][b];
        if (!acc.isZero())
          throw DomainError("quantumComoment: action does not preserve the symplectic form");
      }
  }
  Comoment cm;
  for (const auto& r : action.matrices) {
    // H = 1/2 x^T (R^T Omega) x, symmetric-ordered; for quadratics the
    // Weyl symbol is the polynomial itself
    StarPoly h(n);
    for (int l = 0; l < n; ++l)
      for (int b = 0; b < n; ++b) {
        Rat m(0);
        for (int a = 0; a < n; ++a) m += r[a][l] * ctx.bivector[a][b];
        if (m.isZero()) continue;
        Expo e(n, 0);
        e[l] += 1;
        e[b] += 1;
        h.addTerm(0, e, m * Rat(1, 2));
      }
    cm.hamiltonians.push_back(std::move(h));
  }
  return cm;
}

Poly actionDerivation(const StarContext& ctx, const LinearAction& action, int xi,
                      const Poly& f) {
  const int n = ctx.nvars();
  const auto& r = action.matrices.at(xi);
  // xi.f = -df(R v): on coordinates, xi.x_k = -sum_l R_{kl} x_l
  Poly out(n);
  for (int k = 0; k < n; ++k) {
    Poly dk = f.derivative(k);
    if (dk.isZero()) continue;
    for (int l = 0; l < n; ++l) {
      if (r[k][l].isZero()) continue;
      out -= dk * Poly::variable(n, l) * r[k][l];
    }
  }
  return out;
}

CheckReport checkComoment(const StarContext& ctx, const LinearAction& action,
                          const Comoment& cm, int monomialBound) {
  const int n = ctx.nvars();
  // [H_xi, f] = hbar * xi.f on all monomials up to the bound
  std::vector<Expo> monomials;
  Expo cur(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n) {
      monomials.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, monomialBound);

  for (int xi = 0; xi < action.dim(); ++xi) {
    for (const auto& e : monomials) {
      StarPoly f = StarPoly::fromPoly(Poly::monomial(e, Rat(1)));
      StarPoly lhs = moyalCommutator(ctx, cm.hamiltonians[xi], f);
      StarPoly rhs =
          StarPoly::fromPoly(actionDerivation(ctx, action, xi, Poly::monomial(e, Rat(1))), 1);
      if (!(lhs - rhs).isZero()) {
        StarPoly mono = StarPoly::fromPoly(Poly::monomial(e, Rat(1)));
        return {false, "comoment identity fails for generator " + std::to_string(xi) +
                           " on " + mono.str(ctx.names)};
      }
    }
  }
  // [H_xi, H_eta] = hbar * H_[xi,eta] on all pairs
  for (int xi = 0; xi < action.dim(); ++xi)
    for (int eta = 0; eta < action.dim(); ++eta) {
      StarPoly lhs = moyalCommutator(ctx, cm.hamiltonians[xi], cm.hamiltonians[eta]);
      StarPoly rhs(n);
      for (const auto& [k, c] : action.bracket[xi][eta]) {
        StarPoly t = cm.hamiltonians[k];
        t *= c;
        rhs += t;
      }
      StarPoly expect(n);
      for (const auto& [key, c] : rhs.terms()) expect.addTerm(key.first + 1, key.second, c);
      if (!(lhs - expect).isZero())
        return {false, "comoment bracket fails on pair (" + std::to_string(xi) + "," +
                           std::to_string(eta) + ")"};
    }
  return {true, ""};
}

namespace {

// exp(sign * hbar * D) with D = sum d_ab d/dx_a d/dx_b; terminates since
// D lowers degree by two.
StarPoly applyExpD(const std::vector<std::vector<Rat>>& d, const StarPoly& f, int sign) {
  const int n = f.nvars();
  StarPoly out(n);
  for (const auto& [key, coeff] : f.terms()) {
    Poly cur = Poly::monomial(key.second, coeff);
    Rat factor(1);
    for (int k = 0; !cur.isZero(); ++k) {
      if (k > 0) factor = factor * Rat(sign) / Rat(k);
      for (const auto& [e, c] : cur.terms()) out.addTerm(key.first + k, e, c * factor);
      Poly next(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (d[a][b].isZero()) continue;
          Poly t = cur.derivative(a).derivative(b);
          if (!t.isZero()) next += t * d[a][b];
        }
      cur = std::move(next);
    }
  }
  return out;
}

}  // namespace

StarPoly equivalenceTransport(const StarContext& ctx, const std::vector<std::vector<Rat>>& d,
                              const StarPoly& f, const StarPoly& g) {
  StarPoly tf = applyExpD(d, f, -1);
  StarPoly tg = applyExpD(d, g, -1);
  StarPoly prod = moyal(ctx, tf, tg);
  return applyExpD(d, prod, 1);
}

StarPoly parseStarPoly(const StarContext& ctx, const std::string& text) {
  std::vector<std::string> names = ctx.names;
  names.push_back("hbar");
  Poly flat = parsePoly(names, text);
  StarPoly out(ctx.nvars());
  for (const auto& [e, c] : flat.terms()) {
    Expo vars(e.begin(), e.end() - 1);
    out.addTerm(e.back(), vars, c);
  }
  return out;
}

}  // namespace walg

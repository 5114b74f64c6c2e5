#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walg/errors.hpp"
#include "walg/star.hpp"

using namespace walg;

namespace {

// sl2 acting on K^2 by the defining representation; generators e, f, h.
LinearAction sl2Action() {
  LinearAction a;
  a.matrices = {
      {{Rat(0), Rat(1)}, {Rat(0), Rat(0)}},   // e
      {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}},   // f
      {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}},  // h
  };
  a.bracket.assign(3, std::vector<std::map<int, Rat>>(3));
  a.bracket[0][1] = {{2, Rat(1)}};   // [e,f] = h
  a.bracket[1][0] = {{2, Rat(-1)}};
  a.bracket[2][0] = {{0, Rat(2)}};   // [h,e] = 2e
  a.bracket[0][2] = {{0, Rat(-2)}};
  a.bracket[2][1] = {{1, Rat(-2)}};  // [h,f] = -2f
  a.bracket[1][2] = {{1, Rat(2)}};
  return a;
}

}  // namespace

TEST_CASE("moyal on one symplectic pair: x*p, p*x, commutator") {
  auto ctx = makeStandardSymplectic(1);
  StarPoly x = StarPoly::variable(2, 0), p = StarPoly::variable(2, 1);

  StarPoly xp = moyal(ctx, x, p);
  StarPoly expect = x * p + StarPoly::hbar(2) * Rat(1, 2);
  CHECK(xp == expect);

  StarPoly px = moyal(ctx, p, x);
  CHECK(px == x * p - StarPoly::hbar(2) * Rat(1, 2));

  CHECK(moyalCommutator(ctx, x, p) == StarPoly::hbar(2));
}

TEST_CASE("moyal unit") {
  auto ctx = makeStandardSymplectic(2);
  StarPoly one = StarPoly::constant(4, Rat(1));
  StarPoly g = parseStarPoly(ctx, "3/2 x1^2 p2 + p1 x2 - 7");
  CHECK(moyal(ctx, one, g) == g);
  CHECK(moyal(ctx, g, one) == g);
}

TEST_CASE("two-term contraction: x^2 * p^2") {
  auto ctx = makeStandardSymplectic(1);
  StarPoly x2 = parseStarPoly(ctx, "x1^2"), p2 = parseStarPoly(ctx, "p1^2");
  StarPoly got = moyal(ctx, x2, p2);
  StarPoly expect = parseStarPoly(ctx, "x1^2 p1^2 + 2 hbar x1 p1 + 1/2 hbar^2");
  CHECK(got == expect);
  // oracle for the second contraction power
  Poly c2 = contractionPower(ctx, Poly::variable(2, 0).pow(2), Poly::variable(2, 1).pow(2), 2);
  CHECK(c2 == Poly::constant(2, Rat(4)));
}

TEST_CASE("associativity: constants, then 2 variables degree 6 with 50 trials") {
  auto ctx = makeStandardSymplectic(1);
  auto rep0 = checkAssociativity(ctx, 0, 3, 42);
  CHECK(rep0.pass);
  auto rep = checkAssociativity(ctx, 6, 50, 20260809);
  CHECK(rep.pass);
}

TEST_CASE("corrupted bivector: associativity survives, weyl commutation fails") {
  auto ctx = makeStandardSymplectic(1);
  ctx.bivector[1][0] = Rat(1);  // symmetric now: corrupted but nondegenerate
  CHECK_FALSE(ctx.antisymmetric());
  // exp of any constant bidifferential operator is associative (the
  // contraction slots commute), so this corruption cannot break
  // associativity; the commutation relations are what detect it
  auto rep = checkAssociativity(ctx, 3, 20, 7);
  CHECK(rep.pass);
  auto weyl = weylIdentify(ctx);
  CHECK_FALSE(weyl.check.pass);
  CHECK(weyl.check.detail.find("gram entry differs") != std::string::npos);
}

TEST_CASE("homogeneity of expansion orders") {
  auto ctx = makeStandardSymplectic(2);  // weights 1, bivector degree -2, k = 2
  auto rep = checkHomogeneity(ctx, 4);
  CHECK(rep.pass);

  StarContext flat = ctx;
  flat.weights.assign(4, 0);
  flat.degreeConvention = 0;
  CHECK(checkHomogeneity(flat, 3).pass);

  StarContext bad = ctx;
  bad.weights = {1, 3, 1, 1};  // bivector no longer homogeneous for these
  auto repBad = checkHomogeneity(bad, 3);
  CHECK_FALSE(repBad.pass);
  CHECK(repBad.detail.find("expansion order") != std::string::npos);
}

TEST_CASE("weyl identification returns the bivector as gram matrix") {
  auto ctx = makeStandardSymplectic(2);
  auto rep = weylIdentify(ctx);
  CHECK(rep.check.pass);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(rep.gram[i][j] == ctx.bivector[i][j]);
  // u = v gives zero commutator
  StarPoly x = StarPoly::variable(4, 0);
  CHECK(moyalCommutator(ctx, x, x).isZero());

  StarContext degenerate = ctx;
  for (auto& row : degenerate.bivector) row.assign(4, Rat(0));
  CHECK_THROWS_AS(weylIdentify(degenerate), DomainError);
}

TEST_CASE("quantum comoment for sl2 on K^2") {
  auto ctx = makeStandardSymplectic(1);
  auto action = sl2Action();
  auto cm = quantumComoment(ctx, action);

  // H_e = p^2/2, H_f = -x^2/2, H_h = x p in coordinates (x, p)
  CHECK(cm.hamiltonians[0] == parseStarPoly(ctx, "1/2 p1^2"));
  CHECK(cm.hamiltonians[1] == parseStarPoly(ctx, "-1/2 x1^2"));
  CHECK(cm.hamiltonians[2] == parseStarPoly(ctx, "x1 p1"));

  // Poisson oracle on the classical level: {H_e, H_f} = H_h
  Poly he = cm.hamiltonians[0].hbarCoeff(0), hf = cm.hamiltonians[1].hbarCoeff(0);
  Poly pb = contractionPower(ctx, he, hf, 1);
  CHECK(pb == cm.hamiltonians[2].hbarCoeff(0));

  // quantum commutator [H_e, H_f] = hbar H_h via the Moyal oracle
  StarPoly lhs = moyalCommutator(ctx, cm.hamiltonians[0], cm.hamiltonians[1]);
  StarPoly rhs(2);
  for (const auto& [key, c] : cm.hamiltonians[2].terms())
    rhs.addTerm(key.first + 1, key.second, c);
  CHECK(lhs == rhs);

  // exhaustive identity checks through degree 5
  auto rep = checkComoment(ctx, action, cm, 5);
  CHECK(rep.pass);

  // zero element maps to zero
  LinearAction zero = action;
  zero.matrices = {{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}};
  zero.bracket.assign(1, std::vector<std::map<int, Rat>>(1));
  auto cmZero = quantumComoment(ctx, zero);
  CHECK(cmZero.hamiltonians[0].isZero());

  // non-symplectic action is rejected
  LinearAction bad = action;
  bad.matrices[0] = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};  // identity: not in sp
  CHECK_THROWS_AS(quantumComoment(ctx, bad), DomainError);
}

TEST_CASE("equivalence transport keeps associativity and the classical limit") {
  auto ctx = makeStandardSymplectic(1);
  std::vector<std::vector<Rat>> d = {{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(0)}};
  Prng rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    auto rand = [&] {
      Poly p(2);
      for (int t = 0; t < 3; ++t) {
        Expo e(2, 0);
        int deg = static_cast<int>(rng.below(4));
        for (int b = 0; b < deg; ++b) e[rng.below(2)] += 1;
        p.addTerm(e, rng.smallRat(3, 2));
      }
      return StarPoly::fromPoly(p);
    };
    StarPoly f = rand(), g = rand(), h = rand();
    StarPoly lhs = equivalenceTransport(ctx, d, equivalenceTransport(ctx, d, f, g), h);
    StarPoly rhs = equivalenceTransport(ctx, d, f, equivalenceTransport(ctx, d, g, h));
    CHECK(lhs == rhs);
    // classical limit unchanged
    StarPoly prod = equivalenceTransport(ctx, d, f, g);
    CHECK(prod.hbarCoeff(0) == (f * g).hbarCoeff(0));
  }
}

TEST_CASE("semiclassical limit: f*g = fg + O(hbar), commutator = hbar{f,g} + O(hbar^2)") {
  auto ctx = makeStandardSymplectic(2);
  Prng rng(2026);
  for (int trial = 0; trial < 20; ++trial) {
    Poly f(4), g(4);
    for (int t = 0; t < 3; ++t) {
      Expo e(4, 0), e2(4, 0);
      for (int b = 0; b < 4; ++b) {
        e[rng.below(4)] += static_cast<int>(rng.below(2));
        e2[rng.below(4)] += static_cast<int>(rng.below(2));
      }
      f.addTerm(e, rng.smallRat(3, 2));
      g.addTerm(e2, rng.smallRat(3, 2));
    }
    StarPoly sf = StarPoly::fromPoly(f), sg = StarPoly::fromPoly(g);
    StarPoly prod = moyal(ctx, sf, sg);
    CHECK(prod.hbarCoeff(0) == f * g);
    StarPoly comm = moyalCommutator(ctx, sf, sg);
    CHECK(comm.hbarCoeff(0).isZero());
    // the order-1 term of the commutator is exactly the Poisson bracket:
    // each product contributes (hbar/2) P, and P is antisymmetric
    Poly pb = contractionPower(ctx, f, g, 1);
    CHECK(comm.hbarCoeff(1) == pb);
    CHECK((pb + contractionPower(ctx, g, f, 1)).isZero());
  }
}

TEST_CASE("polynomiality: the expansion terminates at min degree") {
  auto ctx = makeStandardSymplectic(2);
  StarPoly f = parseStarPoly(ctx, "x1^3 p2 + x2");
  StarPoly g = parseStarPoly(ctx, "p1^2 x2^2");
  StarPoly prod = moyal(ctx, f, g);
  CHECK(prod.maxHbarPower() <= 4);
}

TEST_CASE("star polynomial parser round trip") {
  auto ctx = makeStandardSymplectic(1);
  StarPoly p = parseStarPoly(ctx, "3/2 * x1^2 p1 + hbar * x1");
  CHECK(p.str(ctx.names) == "x1 hbar + 3/2 x1^2 p1");
  CHECK(parseStarPoly(ctx, p.str(ctx.names)) == p);
  CHECK_THROWS_AS(parseStarPoly(ctx, "3/2 * q^2"), UsageError);
}

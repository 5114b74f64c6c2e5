#ifndef WALG_STAR_HPP
#define WALG_STAR_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walg/poly.hpp"
#include "walg/prng.hpp"

namespace walg {

/// Polynomial in graded variables and a central formal hbar.  Terms map
/// (hbar power, exponent vector) to a rational coefficient.
class StarPoly {
 public:
  StarPoly() : nvars_(0) {}
  explicit StarPoly(int nvars) : nvars_(nvars) {}
  static StarPoly constant(int nvars, const Rat& c) { return fromPoly(Poly::constant(nvars, c)); }
  static StarPoly variable(int nvars, int i) { return fromPoly(Poly::variable(nvars, i)); }
  static StarPoly hbar(int nvars, int power = 1);
  static StarPoly fromPoly(const Poly& p, int hbarPower = 0);

  int nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<std::pair<int, Expo>, Rat>& terms() const { return terms_; }

  void addTerm(int hpow, const Expo& e, const Rat& c);
  /// The coefficient of hbar^k, as a plain polynomial.
  Poly hbarCoeff(int k) const;
  int maxHbarPower() const;

  StarPoly& operator+=(const StarPoly& o);
  StarPoly& operator-=(const StarPoly& o);
  StarPoly& operator*=(const Rat& c);
  friend StarPoly operator+(StarPoly a, const StarPoly& b) { return a += b; }
  friend StarPoly operator-(StarPoly a, const StarPoly& b) { return a -= b; }
  friend StarPoly operator*(StarPoly a, const Rat& c) { return a *= c; }
  /// Commutative product (the classical multiplication).
  friend StarPoly operator*(const StarPoly& a, const StarPoly& b);
  friend bool operator==(const StarPoly& a, const StarPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Specialize hbar to a rational value (hbar = 1 gives the Weyl algebra
  /// realization).  Always explicit, never implicit.
  Poly atHbar(const Rat& value) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<std::pair<int, Expo>, Rat> terms_;
};

/// Variables with grading weights plus a constant antisymmetric bivector;
/// the data of a flat (Moyal-Weyl) star product of degree k.
struct StarContext {
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<std::vector<Rat>> bivector;  // P[i][j], antisymmetric
  int degreeConvention = 2;

  int nvars() const { return static_cast<int>(names.size()); }
  void validate() const;  // shape and antisymmetry
  bool antisymmetric() const;
};

StarContext makeStandardSymplectic(int pairs);  // (x1,p1,...): P(x_i,p_i) = 1

/// j-fold bivector contraction P^j(f,g), the j-th Taylor term of the
/// Moyal exponential.
Poly contractionPower(const StarContext& ctx, const Poly& f, const Poly& g, int j);

/// Moyal-Weyl product f*g = sum_j (hbar/2)^j / j! P^j(f,g).  Terminates
/// because contractions differentiate both arguments.
StarPoly moyal(const StarContext& ctx, const StarPoly& f, const StarPoly& g);
StarPoly moyalCommutator(const StarContext& ctx, const StarPoly& f, const StarPoly& g);

struct CheckReport {
  bool pass = true;
  std::string detail;  // first counterexample when failing
};

/// Exact associativity on random triples of degree <= sampleDegree.
CheckReport checkAssociativity(const StarContext& ctx, int sampleDegree, int trials,
                               std::uint64_t seed);

/// Each expansion order j must be homogeneous of degree
/// deg f + deg g - k*j; verified on monomial pairs up to the bound.
CheckReport checkHomogeneity(const StarContext& ctx, int monomialDegreeBound);

/// Weyl-algebra identification: u*v - v*u = hbar * omega(u,v) on linear
/// generators, omega read off the bivector.  Returns the Gram matrix.
struct WeylReport {
  CheckReport check;
  std::vector<std::vector<Rat>> gram;
};
WeylReport weylIdentify(const StarContext& ctx);

/// A Lie algebra acting on the variables by linear symplectomorphisms:
/// action[k] is the matrix of the k-th basis element on column vectors.
struct LinearAction {
  std::vector<std::vector<std::vector<Rat>>> matrices;
  std::vector<std::vector<std::map<int, Rat>>> bracket;  // Lie brackets
  int dim() const { return static_cast<int>(matrices.size()); }
};

/// Quadratic comoment Hamiltonians H_xi(v) = omega(xi v, v)/2 and their
/// symmetric-ordered quantizations.  Requires the action to preserve the
/// symplectic form; [H_xi, f] at hbar = 1 is the derivation f -> -df(xi v).
struct Comoment {
  std::vector<StarPoly> hamiltonians;  // per Lie algebra basis element
};
Comoment quantumComoment(const StarContext& ctx, const LinearAction& action);

/// The derivation xi.f = -df(xi v) induced by the action.
Poly actionDerivation(const StarContext& ctx, const LinearAction& action, int xi,
                      const Poly& f);

/// Checks [H_xi, f] = hbar * (xi.f) for all monomials f up to the bound
/// and [H_xi, H_eta] = hbar * H_[xi,eta] on all basis pairs.
CheckReport checkComoment(const StarContext& ctx, const LinearAction& action,
                          const Comoment& cm, int monomialBound);

/// Transport of the Moyal product through T = exp(hbar D) for a constant
/// second-order operator D (a symmetric matrix of coefficients);
/// an equivalence in the technical sense.  Used by the property tests.
StarPoly equivalenceTransport(const StarContext& ctx, const std::vector<std::vector<Rat>>& d,
                              const StarPoly& f, const StarPoly& g);

StarPoly parseStarPoly(const StarContext& ctx, const std::string& text);

}  // namespace walg

#endif

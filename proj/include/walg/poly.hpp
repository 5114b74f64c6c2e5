#ifndef WALG_POLY_HPP
#define WALG_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walg/rational.hpp"
#include "walg/sparse.hpp"

namespace walg {

/// Exponent vector; one slot per variable.
using Expo = std::vector<int>;

/// Commutative polynomial over the rationals in a fixed number of
/// variables.  Terms are kept in a map with no zero coefficients.
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);
  static Poly monomial(Expo e, const Rat& c);

  int nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<Expo, Rat>& terms() const { return terms_; }
  Rat coeff(const Expo& e) const;

  void addTerm(const Expo& e, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly pow(int k) const;
  Poly derivative(int i) const;
  /// Substitutes images[i] for variable i; images must share a variable count.
  Poly substitute(const std::vector<Poly>& images) const;
  Rat eval(const Vec& point) const;

  /// Total weighted degree (max over terms); nullopt for the zero poly.
  std::optional<int> weightedDegree(const std::vector<int>& weights) const;
  bool isHomogeneous(const std::vector<int>& weights, int degree) const;
  /// The sum of terms of exact weighted degree d.
  Poly weightedPart(const std::vector<int>& weights, int d) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Expo, Rat> terms_;
};

/// Parses "3/2 x^2 p + 2*y - 1".  Factors multiply by juxtaposition or
/// '*'; names must match the supplied variable list exactly.
Poly parsePoly(const std::vector<std::string>& names, const std::string& text);

}  // namespace walg

#endif

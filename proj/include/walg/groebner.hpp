#ifndef WALG_GROEBNER_HPP
#define WALG_GROEBNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "walg/ncpoly.hpp"
#include "walg/poly.hpp"
#include "walg/setup.hpp"

namespace walg {

/// Weighted degree-reverse-lexicographic order, optionally with a
/// leading elimination block.  Variable 0 is the largest; ties in
/// weighted degree are broken by the last differing exponent (the
/// smaller exponent there wins).
struct MonomialOrder {
  std::vector<int> weights;
  int elimBlock = 0;
  bool lex = false;  // pure lexicographic; used to triangularize systems

  int nvars() const { return static_cast<int>(weights.size()); }
  /// -1, 0, 1 for a < b, a == b, a > b.
  int compare(const Expo& a, const Expo& b) const;
  bool less(const Expo& a, const Expo& b) const { return compare(a, b) < 0; }
};

std::pair<Expo, Rat> leadingTerm(const MonomialOrder& ord, const Poly& p);

/// Normal form of p modulo the list (full multivariate division).
Poly reduceMod(const MonomialOrder& ord, Poly p, const std::vector<Poly>& basis);

/// Buchberger with the sugar selection strategy and the coprime-lcm
/// criterion; returns the unique reduced basis, monic, sorted by
/// leading monomial.  Deterministic for a fixed variable order.
std::vector<Poly> buchberger(const MonomialOrder& ord, std::vector<Poly> gens);

/// A commutative graded ideal held as a reduced basis.
struct GradedIdeal {
  MonomialOrder order;
  std::vector<std::string> varNames;
  std::vector<Poly> basis;

  bool contains(const Poly& p) const { return reduceMod(order, p, basis).isZero(); }
};

GradedIdeal makeIdeal(MonomialOrder order, std::vector<std::string> names,
                      std::vector<Poly> gens);
bool sameIdeal(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal intersectIdeals(const GradedIdeal& a, const GradedIdeal& b);

/// Count of standard monomials (not divisible by any leading term) per
/// weighted degree 0..bound.  Requires positive weights.
std::vector<long> hilbertCounts(const GradedIdeal& ideal, int bound);

struct VarietyReport {
  enum class Status { Exact, Inconclusive };
  Status status = Status::Inconclusive;
  int dimension = -1;
  Rat multiplicity;
  bool multiplicityIsLocalizationChecked = false;  // leading-coefficient proxy
  std::vector<std::string> componentIdeal;         // printed reduced basis
};

/// Dimension from the growth of the Hilbert function (stride-sampled to
/// absorb weight periodicity); multiplicity is the vector-space
/// codimension in the zero-dimensional case, otherwise the normalized
/// leading Hilbert coefficient flagged as a proxy.
VarietyReport varietyReport(const GradedIdeal& ideal, int bound);

/// Restriction to the Slodowy slice: substitutes the parametrization
/// x = e + sum_p t_p dual_p into polynomials over the input basis of g,
/// yielding an ideal in the slice variables with weights d_p + 2.
GradedIdeal sliceRestrict(const NilpotentSetup& setup, const std::vector<Poly>& gensInG);

/// Bounded associated-graded ideal of a two-sided ideal of U(g) under
/// the standard filtration: saturates the two-sided span through the
/// length bound, takes top symbols of a basis, and returns the ideal
/// they generate.  This is in general a sub-ideal of the true graded
/// ideal; exactness on the shipped cases is certified by Hilbert data.
GradedIdeal grOfNCIdeal(const PBWContext& ctx, const LieAlgebraData& g,
                        const std::vector<NCPoly>& gens, int lengthBound);

/// The invariant polynomial tr(x^k) on g, expanded over the input basis
/// coordinates.  Its symbols generate nilpotent-cone ideals for sl_n.
Poly traceSymbol(const LieAlgebraData& g, int k);

}  // namespace walg

#endif

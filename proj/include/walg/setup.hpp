#ifndef WALG_SETUP_HPP
#define WALG_SETUP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walg/lie.hpp"

namespace walg {

/// All data attached to a nilpotent element: the grading by ad(h'), the
/// character chi = <e,.>, the symplectic form on the -1 part, a chosen
/// lagrangian y, the subalgebras m (= n for lagrangian y) and m', and
/// the slice data (a homogeneous basis of the centralizer of e together
/// with the dual parametrization through the centralizer of f).
///
/// The struct also fixes the adapted ordered basis used by all PBW
/// computations: basis vectors sorted by ascending ad(h') weight, y
/// first inside weight -1, centralizer-of-e vectors last inside each
/// nonnegative weight.  m is always an initial segment of this order.
struct NilpotentSetup {
  LieAlgebraData algebra;
  SL2Triple triple;
  Vec hPrime;

  std::map<int, std::vector<Vec>> grading;  // weight -> basis (input coords)
  Vec chi;                                  // chi_i = <e, b_i> on the input basis

  std::vector<Vec> y;       // lagrangian in g(-1)
  std::vector<Vec> mBasis;  // y + all weights <= -2, ascending weight
  std::vector<Vec> nBasis;  // skew-orthogonal closure; equals m for lagrangian y
  std::vector<Rat> mChi;    // <chi, xi> per m basis vector (the m' shifts)

  // Adapted ordered basis of g.
  std::vector<Vec> adapted;
  std::vector<int> weightOf;            // ad(h') weight per adapted index
  std::vector<std::string> adaptedLabels;
  int mDim = 0;                         // adapted[0..mDim) spans m
  std::vector<Rat> adChi;               // chi per adapted vector

  // Slice data: adapted indices of the centralizer-of-e vectors, their
  // Kazhdan degrees (weight + 2), and the dual basis of the centralizer
  // of f realizing the slice parametrization x = e + sum t_j dual_j.
  std::vector<int> sliceIdx;
  std::vector<int> sliceDegrees;
  std::vector<Vec> sliceDual;

  // bracket table and change of basis in adapted coordinates
  std::vector<std::vector<std::map<int, Rat>>> adBracket;

  int dim() const { return algebra.dim; }
  int weightOfVec(const Vec& v) const;  // throws unless homogeneous
  Vec toAdapted(const Vec& inputCoords) const;
  Vec fromAdapted(const Vec& adaptedCoords) const;
};

/// Builds the setup.  hPrime defaults to the triple's h.  yOverride, when
/// given, must be a lagrangian basis of g(-1); otherwise y is chosen by
/// deterministic greedy isotropic extension over the graded basis.
NilpotentSetup buildSetup(const LieAlgebraData& g, const SL2Triple& triple,
                          std::optional<Vec> hPrime = std::nullopt,
                          std::optional<std::vector<Vec>> yOverride = std::nullopt);

}  // namespace walg

#endif

#ifndef WALG_LIE_HPP
#define WALG_LIE_HPP

#include <map>
#include <string>
#include <vector>

#include "walg/sparse.hpp"

namespace walg {

/// A finite-dimensional Lie algebra given by exact structure constants
/// plus a nondegenerate invariant symmetric form.  Instances are built
/// once and never mutated.
struct LieAlgebraData {
  int dim = 0;
  char typeTag = '?';  // A, B, C, D
  int rank = 0;
  std::vector<std::string> basisLabels;
  // bracket[i][j] = coefficients of [b_i, b_j] on the basis
  std::vector<std::vector<std::map<int, Rat>>> bracket;
  SparseMat form;  // trace form of the defining representation
  int repDim = 0;
  std::vector<SparseMat> repBasis;  // defining-representation matrices

  Vec bracketVec(const Vec& x, const Vec& y) const;
  Rat formPair(const Vec& x, const Vec& y) const;
  /// Matrix of ad(x) acting on coordinate vectors.
  SparseMat adMatrix(const Vec& x) const;
  Vec basisVec(int i) const;

  bool checkAntisymmetry() const;
  /// Jacobi identity on all unordered basis triples.
  bool checkJacobi() const;
  /// <[x,y],z> + <y,[x,z]> = 0 on all basis triples.
  bool checkInvariance() const;
};

/// Standard matrix realizations: sl_{r+1} (A), so_{2r+1} (B), sp_{2r} (C),
/// so_{2r} (D), in a split basis with the trace form.
LieAlgebraData buildClassical(char type, int rank);

/// Jordan-form nilpotent of sl_n for a partition of n, as a coordinate
/// vector: one Jordan block of each part, superdiagonal ones.
Vec partitionNilpotent(const LieAlgebraData& g, const std::vector<int>& parts);

struct SL2Triple {
  Vec e, h, f;
};

/// Completes a nonzero ad-nilpotent element to an sl2-triple by exact
/// linear algebra.  Deterministic: all solves use least-index pivoting.
SL2Triple jacobsonMorozov(const LieAlgebraData& g, const Vec& e);

/// Expresses a defining-representation matrix in the Lie algebra basis.
/// Throws DomainError when the matrix is not in the span.
Vec coordinatizeMatrix(const LieAlgebraData& g, const std::vector<Vec>& matrix);

}  // namespace walg

#endif

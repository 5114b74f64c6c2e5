#ifndef WALG_WHITTAKER_HPP
#define WALG_WHITTAKER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walg/ncpoly.hpp"
#include "walg/poly.hpp"
#include "walg/setup.hpp"

namespace walg {

/// Everything needed to compute in Q = U(g)/U(g)m' over the adapted
/// basis: the setup plus a PBW context whose first mDim generators span
/// m.  Quotient representatives are normal-form elements none of whose
/// monomials ends in an m generator.
struct WContext {
  NilpotentSetup setup;
  PBWContext pbw;

  explicit WContext(NilpotentSetup s) : setup(std::move(s)), pbw(PBWContext::fromSetup(setup)) {}
  int mDim() const { return setup.mDim; }
};

/// Canonical representative in Q: rightmost m factors are rewritten via
/// xi = (xi - <chi,xi>) + <chi,xi> and the m' part is killed.  Normal
/// words put the lowest indices rightmost, so this strips trailing
/// m letters, each contributing its chi value.
NCPoly reduceToQuotient(const WContext& ctx, const NCPoly& a);

/// Whittaker test: [xi, a] reduces to zero for every xi in m.
bool isWhittaker(const WContext& ctx, const NCPoly& reducedRep);

/// Monomial basis of F_k Q.  Words use only non-m generators, all of
/// positive Kazhdan degree, so each level is finite-dimensional.
/// Ordered by (Kazhdan degree, word), which makes coordinate prefixes
/// filtration levels.
struct QWindow {
  int maxDegree = 0;
  std::vector<Word> words;
  std::vector<int> degrees;
  std::map<Word, int> index;

  int dimAtMost(int k) const;
};

QWindow enumerateQ(const WContext& ctx, int maxDegree);
Vec quotientCoords(const QWindow& win, const NCPoly& reducedRep);

/// Exact basis of F_k U(g,e) = { a in F_k Q : [m, a] = 0 in Q }.
/// Vectors come out in the unique trailing-echelon normalization with
/// ascending top degree, so prefixes give every lower filtration level.
struct WhittakerBasis {
  QWindow window;
  std::vector<NCPoly> vectors;
  std::vector<int> topDegrees;
};

WhittakerBasis whittakerBasis(const WContext& ctx, int k);

/// Restriction of the degree-k top symbol to the Slodowy slice: the top
/// Kazhdan part, with generator i evaluated at sum_p <dual_p, b_i> t_p.
/// Weighted-homogeneous of degree k in the slice variables.
Poly sliceSymbol(const WContext& ctx, const NCPoly& reducedRep, int k);

/// Degree-truncated presentation of U(g,e): generators lifting the
/// slice basis, graded dimensions, and products of generators expanded
/// in the ordered generator-monomial basis through the truncation.
struct WPresentation {
  int truncation = 0;
  std::vector<std::string> genLabels;
  std::vector<int> genDegrees;
  std::vector<NCPoly> generators;            // reduced representatives
  std::map<int, int> gradedDims;             // degree -> dim of K[S] piece
  std::vector<std::vector<int>> monomials;   // exponent tuples, (degree, lex) order
  // (i,j) -> expansion of gen_i * gen_j over the monomial basis
  std::map<std::pair<int, int>, std::map<std::vector<int>, Rat>> products;

  int genCount() const { return static_cast<int>(genDegrees.size()); }
  /// Abelianized commutator relation [gen_i, gen_j] as a polynomial in
  /// the generator variables; empty map when the pair is out of window.
  std::optional<std::map<std::vector<int>, Rat>> commutatorPoly(int i, int j) const;
};

/// The truncated W-algebra with its expression machinery.
class WAlgebra {
 public:
  static WAlgebra build(WContext ctx, int truncation);

  const WContext& context() const { return ctx_; }
  const WPresentation& presentation() const { return pres_; }
  const WhittakerBasis& basis() const { return basis_; }

  /// Expands a reduced Whittaker element over the ordered generator
  /// monomials; nullopt when it is not in their span within the window.
  std::optional<std::map<std::vector<int>, Rat>> express(const NCPoly& reducedRep) const;

  /// Product of generator monomials inside Q (right factors are
  /// Whittaker, so right multiplication is well defined).
  NCPoly monomialRep(const std::vector<int>& expo) const;

 private:
  WAlgebra(WContext ctx, WPresentation pres, WhittakerBasis basis,
           std::vector<NCPoly> monomialReps, Expressor expressor)
      : ctx_(std::move(ctx)),
        pres_(std::move(pres)),
        basis_(std::move(basis)),
        monomialReps_(std::move(monomialReps)),
        expressor_(std::move(expressor)) {}

  WContext ctx_;
  WPresentation pres_;
  WhittakerBasis basis_;
  std::vector<NCPoly> monomialReps_;
  Expressor expressor_;
};

/// Quadratic Casimir of g written over the adapted basis: sum of
/// products of form-dual basis pairs.  Commutes with everything.
NCPoly casimirElement(const WContext& ctx);

/// The image of a central element of U(g) in the truncated W-algebra.
/// Checks centrality, the Whittaker property of the image, and that the
/// image commutes exactly with every presentation generator.
struct CenterImage {
  NCPoly reduced;
  std::map<std::vector<int>, Rat> expression;
};
CenterImage centerImage(const WAlgebra& w, const NCPoly& central);

}  // namespace walg

#endif

#ifndef WALG_REPS_HPP
#define WALG_REPS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walg/groebner.hpp"
#include "walg/star.hpp"
#include "walg/whittaker.hpp"

namespace walg {

/// One-dimensional representation: a scalar per generator satisfying
/// every truncated relation.
struct Character {
  std::map<int, Rat> values;  // generator index -> value
};

struct CharacterSearch {
  enum class Status {
    AllScalars,      // no relations: every assignment works
    Solved,          // rational points found (families report free generators)
    IrrationalOnly,  // solutions exist only outside Q; descriptors attached
    NoCharacters,    // the relation ideal is the unit ideal
    Inconclusive     // truncation does not cover all generator pairs
  };
  Status status = Status::Inconclusive;
  std::vector<int> freeGenerators;       // parameters of the family
  std::vector<Character> characters;     // rational representatives
  std::vector<std::string> defining;     // univariate polynomials left unsolved
  std::vector<Poly> relations;           // the abelianized system
};

/// Solves the commutative system obtained by abelianizing the truncated
/// commutator relations.  Free parameters are sampled from a fixed
/// rational trial list so at least one representative per family is
/// returned when one exists over Q.
CharacterSearch findCharacters(const WPresentation& pres);

/// Exact check of a character against every relation of the search.
bool characterSatisfies(const CharacterSearch& search, const Character& chi);

/// Finite-dimensional module: one action matrix per generator.
struct FinModule {
  int dim = 0;
  std::vector<std::vector<Vec>> actions;  // actions[g] is dim x dim (rows)

  static FinModule fromCharacter(const WPresentation& pres, const Character& chi);
};

struct ModuleReport {
  bool pass = true;
  std::string firstViolation;
};

/// Exact verification of every stored product relation on the matrices.
ModuleReport verifyModule(const WPresentation& pres, const FinModule& m);

/// Degree-truncated model of Q tensor_W M with its quotient structure.
struct SkryabinReport {
  int degreeBound = 0;
  std::vector<long> truncationDims;   // dim of the degree <= l piece, l = 0..d
  std::vector<long> annihilatorDims;  // dim of the m'-annihilator seen in degree <= l
  bool locallyNilpotent = false;
  bool stabilized = false;
  long stableAnnihilatorDim = -1;
};

SkryabinReport skryabinTruncated(const WAlgebra& w, const FinModule& m, int degreeBound);

struct GrowthReport {
  std::vector<long> dims;
  int fittedDegree = -1;
  bool conclusive = false;
};

/// Fits the polynomial growth degree of the truncated module dimensions;
/// equals dim m for a finite-dimensional W-module.
GrowthReport gkDimCheck(const WAlgebra& w, const FinModule& m, int window);

/// Formal character arithmetic shadow of the graded isotypic
/// decomposition for sl2: per highest weight lambda (even, adjoint
/// group) and degree n, the dimension of the lambda-isotypic component
/// of the coordinate ring of the model variety, computed both by the
/// product formula and by weight-multiplicity differencing.
struct IsotypicShadowReport {
  bool pass = true;
  // (lambda, degree) -> dimension via the product formula
  std::map<std::pair<int, int>, long> dims;
  std::string firstMismatch;
};

IsotypicShadowReport isotypicShadow(const std::vector<int>& sliceDegrees,
                                    const std::vector<int>& lambdas, int degreeBound);

/// The sl2 oscillator instance of the quantized moment-map ideal: the
/// kernel of U(sl2) -> Weyl algebra through the comoment map of the
/// defining action on K^2.  Returns the quadratic kernel generator
/// (Casimir minus its scalar) and the scalar itself.
struct OscillatorReport {
  NCPoly kernelGenerator;
  Rat casimirValue;
  int kernelDimAtLength2 = 0;
};

OscillatorReport oscillatorKernel(const LieAlgebraData& sl2, const PBWContext& ctx,
                                  int lengthBound);

}  // namespace walg

#endif

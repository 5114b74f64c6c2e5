#ifndef WALG_NCPOLY_HPP
#define WALG_NCPOLY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "walg/lie.hpp"
#include "walg/setup.hpp"

namespace walg {

/// A word in generator indices.  Normal (PBW) words are non-increasing
/// left to right, so lowest-index generators sit rightmost.
using Word = std::vector<int>;

/// Generator data for PBW computations: ordered generators with ad(h')
/// weights (Kazhdan degree of a generator is weight + 2) and the Lie
/// bracket table.  The rewriting cache makes repeated products cheap;
/// it is guarded so concurrent use stays safe.
class PBWContext {
 public:
  PBWContext(std::vector<std::string> labels, std::vector<int> weights,
             std::vector<std::vector<std::map<int, Rat>>> bracket);

  /// Plain U(g) over the input basis.  Weights all zero unless an
  /// h-element is supplied, in which case basis vectors must be
  /// ad(h)-eigenvectors and carry their eigenvalues.
  static PBWContext fromLieAlgebra(const LieAlgebraData& g,
                                   std::optional<Vec> h = std::nullopt);

  /// Context over the adapted basis of a nilpotent setup.
  static PBWContext fromSetup(const NilpotentSetup& s);

  int size() const { return n_; }
  const std::string& label(int i) const { return labels_[i]; }
  int weight(int i) const { return weights_[i]; }
  int kazhdanDeg(int i) const { return weights_[i] + 2; }
  const std::map<int, Rat>& bracketOf(int i, int j) const { return bracket_[i][j]; }

  class NCPoly prependGen(int gen, const Word& normalWord) const;

 private:
  struct RewriteCache {
    std::map<std::pair<int, Word>, std::shared_ptr<const class NCPoly>> entries;
    std::mutex mutex;
  };

  int n_;
  std::vector<std::string> labels_;
  std::vector<int> weights_;
  std::vector<std::vector<std::map<int, Rat>>> bracket_;
  std::shared_ptr<RewriteCache> cache_;  // shared across copies of the context
};

/// Element of U(g) in PBW normal form: a finite sum of normal words
/// with nonzero rational coefficients.
class NCPoly {
 public:
  NCPoly() = default;
  static NCPoly one() { return monomial({}, Rat(1)); }
  static NCPoly generator(int i) { return monomial({i}, Rat(1)); }
  static NCPoly monomial(Word w, Rat c);

  bool isZero() const { return terms_.empty(); }
  const std::map<Word, Rat>& terms() const { return terms_; }

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rat& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Rat& c) { return a *= c; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  void addTerm(const Word& w, const Rat& c);

 private:
  std::map<Word, Rat> terms_;
};

/// Normal form of an arbitrary word (not necessarily sorted) times a
/// coefficient.  Rewrites x_i x_j -> x_j x_i + [x_i, x_j] until every
/// monomial is non-increasing; the result is independent of strategy.
NCPoly normalForm(const PBWContext& ctx, const Word& word, const Rat& coeff);

NCPoly multiply(const PBWContext& ctx, const NCPoly& a, const NCPoly& b);
NCPoly commutator(const PBWContext& ctx, const NCPoly& a, const NCPoly& b);

/// Kazhdan degree: max over monomials of the sum of generator degrees.
/// nullopt is the bottom element (degree of zero).
std::optional<int> kazhdanDegree(const PBWContext& ctx, const NCPoly& a);
int kazhdanDegreeWord(const PBWContext& ctx, const Word& w);

/// Word length filtration degree; nullopt for zero.
std::optional<int> standardDegree(const NCPoly& a);

/// The part of a with Kazhdan degree exactly k.
NCPoly kazhdanPart(const PBWContext& ctx, const NCPoly& a, int k);

std::string toString(const PBWContext& ctx, const NCPoly& a);

}  // namespace walg

#endif

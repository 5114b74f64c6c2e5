#include "walg/ncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "walg/errors.hpp"

namespace walg {

PBWContext::PBWContext(std::vector<std::string> labels, std::vector<int> weights,
                       std::vector<std::vector<std::map<int, Rat>>> bracket)
    : n_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      weights_(std::move(weights)),
      bracket_(std::move(bracket)),
      cache_(std::make_shared<RewriteCache>()) {
  if (static_cast<int>(weights_.size()) != n_ ||
      static_cast<int>(bracket_.size()) != n_)
    throw UsageError("PBWContext: inconsistent table sizes");
}

PBWContext PBWContext::fromLieAlgebra(const LieAlgebraData& g, std::optional<Vec> h) {
  std::vector<int> weights(g.dim, 0);
  if (h) {
    for (int i = 0; i < g.dim; ++i) {
      Vec br = g.bracketVec(*h, g.basisVec(i));
      // must be an exact eigenvector
      Rat lambda(0);
      bool seen = false;
      for (int j = 0; j < g.dim; ++j) {
        if (br[j].isZero()) continue;
        if (j != i) throw UsageError("PBWContext: basis vector is not an ad(h)-eigenvector");
        lambda = br[j];
        seen = true;
      }
      if (seen && !lambda.isInteger())
        throw UsageError("PBWContext: non-integer ad(h) eigenvalue");
      weights[i] = seen ? static_cast<int>(lambda.toLong()) : 0;
    }
  }
  return PBWContext(g.basisLabels, weights, g.bracket);
}

PBWContext PBWContext::fromSetup(const NilpotentSetup& s) {
  return PBWContext(s.adaptedLabels, s.weightOf, s.adBracket);
}

NCPoly NCPoly::monomial(Word w, Rat c) {
  NCPoly p;
  if (!c.isZero()) {
    if (!std::is_sorted(w.rbegin(), w.rend()))
      throw UsageError("NCPoly::monomial: word is not in normal order");
    p.terms_.emplace(std::move(w), std::move(c));
  }
  return p;
}

void NCPoly::addTerm(const Word& w, const Rat& c) {
  if (c.isZero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) addTerm(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) addTerm(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rat& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly PBWContext::prependGen(int gen, const Word& w) const {
  if (gen < 0 || gen >= n_) throw UsageError("prependGen: bad generator");
  if (w.empty() || gen >= w[0]) {
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(gen);
    out.insert(out.end(), w.begin(), w.end());
    return NCPoly::monomial(std::move(out), Rat(1));
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->entries.find({gen, w});
    if (it != cache_->entries.end()) return *it->second;
  }
  // gen < w[0]: commute it past the head, then reattach the head.  The
  // full-length monomial of the inner product is the sorted merge, which
  // the head dominates, so reattachment recurses only into the strictly
  // shorter bracket remainders; the recursion is finite.
  const int head = w[0];
  Word rest(w.begin() + 1, w.end());
  NCPoly inner = prependGen(gen, rest);
  NCPoly result;
  for (const auto& [u, c] : inner.terms()) {
    NCPoly p = prependGen(head, u);
    p *= c;
    result += p;
  }
  for (const auto& [k, c] : bracket_[gen][head]) {
    NCPoly br = prependGen(k, rest);
    br *= c;
    result += br;
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->entries.emplace(std::pair(gen, w), std::make_shared<const NCPoly>(result));
  }
  return result;
}

NCPoly normalForm(const PBWContext& ctx, const Word& word, const Rat& coeff) {
  NCPoly acc = NCPoly::one();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    NCPoly next;
    for (const auto& [w, c] : acc.terms()) {
      NCPoly p = ctx.prependGen(*it, w);
      p *= c;
      next += p;
    }
    acc = std::move(next);
  }
  acc *= coeff;
  return acc;
}

NCPoly multiply(const PBWContext& ctx, const NCPoly& a, const NCPoly& b) {
  NCPoly result;
  for (const auto& [wa, ca] : a.terms()) {
    // right-to-left insertion of wa's letters in front of each b-monomial
    NCPoly cur;
    for (const auto& [wb, cb] : b.terms()) cur.addTerm(wb, cb);
    for (auto it = wa.rbegin(); it != wa.rend(); ++it) {
      NCPoly next;
      for (const auto& [w, c] : cur.terms()) {
        NCPoly p = ctx.prependGen(*it, w);
        p *= c;
        next += p;
      }
      cur = std::move(next);
    }
    cur *= ca;
    result += cur;
  }
  return result;
}

NCPoly commutator(const PBWContext& ctx, const NCPoly& a, const NCPoly& b) {
  return multiply(ctx, a, b) - multiply(ctx, b, a);
}

int kazhdanDegreeWord(const PBWContext& ctx, const Word& w) {
  int d = 0;
  for (int i : w) d += ctx.kazhdanDeg(i);
  return d;
}

std::optional<int> kazhdanDegree(const PBWContext& ctx, const NCPoly& a) {
  if (a.isZero()) return std::nullopt;
  int best = 0;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    int d = kazhdanDegreeWord(ctx, w);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

std::optional<int> standardDegree(const NCPoly& a) {
  if (a.isZero()) return std::nullopt;
  std::size_t best = 0;
  for (const auto& [w, c] : a.terms()) best = std::max(best, w.size());
  return static_cast<int>(best);
}

NCPoly kazhdanPart(const PBWContext& ctx, const NCPoly& a, int k) {
  NCPoly out;
  for (const auto& [w, c] : a.terms())
    if (kazhdanDegreeWord(ctx, w) == k) out.addTerm(w, c);
  return out;
}

std::string toString(const PBWContext& ctx, const NCPoly& a) {
  if (a.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    Rat coeff = c;
    if (!first) {
      os << (coeff.sign() < 0 ? " - " : " + ");
      if (coeff.sign() < 0) coeff = -coeff;
    }
    first = false;
    bool needCoeff = !coeff.isOne() || w.empty();
    if (needCoeff) os << coeff;
    std::size_t i = 0;
    bool firstFactor = true;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!firstFactor || needCoeff) os << " ";
      os << ctx.label(w[i]);
      if (j - i > 1) os << "^" << (j - i);
      firstFactor = false;
      i = j;
    }
  }
  return os.str();
}

}  // namespace walg

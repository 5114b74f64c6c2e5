#include "walg/rees.hpp"

#include <algorithm>

#include "walg/errors.hpp"

namespace walg {

ReesElement ReesElement::atLevel(const PBWContext& ctx, const NCPoly& a, int level) {
  ReesElement r;
  r.add(ctx, a, level);
  return r;
}

ReesElement& ReesElement::add(const PBWContext& ctx, const NCPoly& a, int level) {
  if (a.isZero()) return *this;
  auto d = kazhdanDegree(ctx, a);
  if (d && *d > level)
    throw DomainError("ReesElement: coefficient exceeds its filtration level");
  auto it = pieces_.find(level);
  if (it == pieces_.end()) {
    pieces_.emplace(level, a);
  } else {
    it->second += a;
    if (it->second.isZero()) pieces_.erase(it);
  }
  return *this;
}

ReesElement multiply(const PBWContext& ctx, const ReesElement& a, const ReesElement& b) {
  ReesElement out;
  for (const auto& [i, x] : a.pieces_)
    for (const auto& [j, y] : b.pieces_) {
      NCPoly prod = multiply(ctx, x, y);
      // the filtration property F_i * F_j <= F_{i+j} is revalidated here
      out.add(ctx, prod, i + j);
    }
  return out;
}

NCPoly ReesElement::specializeOne() const {
  NCPoly out;
  for (const auto& [i, x] : pieces_) out += x;
  return out;
}

NCPoly ReesElement::specializeZeroSymbol(const PBWContext& ctx) const {
  NCPoly out;
  for (const auto& [i, x] : pieces_) out += kazhdanPart(ctx, x, i);
  return out;
}

FiltrationWindow enumerateWindow(const PBWContext& ctx, int kBound, int sBound) {
  if (sBound < 0) throw UsageError("enumerateWindow: negative length bound");
  FiltrationWindow win;
  win.kBound = kBound;
  win.sBound = sBound;
  Word cur;
  auto rec = [&](auto&& self, int maxIndex, int lenLeft) -> void {
    if (kazhdanDegreeWord(ctx, cur) <= kBound) win.words.push_back(cur);
    if (lenLeft == 0) return;
    for (int i = maxIndex; i >= 0; --i) {
      cur.push_back(i);
      self(self, i, lenLeft - 1);
      cur.pop_back();
    }
  };
  rec(rec, ctx.size() - 1, sBound);
  std::sort(win.words.begin(), win.words.end(), [&](const Word& a, const Word& b) {
    int da = kazhdanDegreeWord(ctx, a), db = kazhdanDegreeWord(ctx, b);
    if (da != db) return da < db;
    return a < b;
  });
  for (int i = 0; i < static_cast<int>(win.words.size()); ++i) {
    win.degrees.push_back(kazhdanDegreeWord(ctx, win.words[i]));
    win.index.emplace(win.words[i], i);
  }
  return win;
}

std::map<int, long> windowFiltrationDims(const FiltrationWindow& win) {
  std::map<int, long> out;
  for (int k = std::min(0, win.degrees.empty() ? 0 : win.degrees.front()); k <= win.kBound;
       ++k) {
    long n = 0;
    for (int d : win.degrees)
      if (d <= k) ++n;
    out[k] = n;
  }
  return out;
}

std::map<int, long> windowGradedDims(const FiltrationWindow& win) {
  std::map<int, long> out;
  for (int d : win.degrees) out[d] += 1;
  return out;
}

namespace {

struct SpanBuilder {
  const FiltrationWindow& win;
  std::vector<Vec> echelon;
  std::vector<int> pivots;
  std::vector<NCPoly> members;
  std::vector<int> levels;  // Rees level each member was built at

  explicit SpanBuilder(const FiltrationWindow& w) : win(w) {}

  bool insert(const NCPoly& p, int level) {
    Vec v(win.words.size(), Rat(0));
    for (const auto& [w, c] : p.terms()) {
      auto it = win.index.find(w);
      if (it == win.index.end()) return false;  // escaped the window: skip
      v[it->second] = c;
    }
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      if (v[pivots[r]].isZero()) continue;
      Rat factor = v[pivots[r]] / echelon[r][pivots[r]];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!echelon[r][i].isZero()) v[i] -= factor * echelon[r][i];
    }
    int pivot = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].isZero()) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot < 0) return false;
    echelon.push_back(std::move(v));
    pivots.push_back(pivot);
    members.push_back(p);
    levels.push_back(level);
    return true;
  }
};

// Two-sided span saturation inside the window.  Each product carries its
// Rees level (the sum of the generator's declared level and the Kazhdan
// degrees of all multiplied letters).  Products are processed in
// ascending level so a direction always enters at its lowest reachable
// level; rejections at higher levels then never hide lower witnesses.
void saturate(const PBWContext& ctx, const FiltrationWindow& win,
              const std::vector<NCPoly>& gens, const std::vector<int>& genLevels,
              SpanBuilder& span) {
  std::map<std::pair<int, long>, std::pair<NCPoly, int>> queue;  // (level, seq) -> (poly, level)
  long seq = 0;
  for (std::size_t j = 0; j < gens.size(); ++j)
    queue.emplace(std::pair(genLevels[j], seq++), std::pair(gens[j], genLevels[j]));
  while (!queue.empty()) {
    auto it = queue.begin();
    NCPoly x = it->second.first;
    int lvl = it->second.second;
    queue.erase(it);
    if (!span.insert(x, lvl)) continue;
    auto sx = standardDegree(x);
    if (!sx || *sx >= win.sBound) continue;
    for (int i = 0; i < ctx.size(); ++i) {
      int d = ctx.kazhdanDeg(i);
      NCPoly left = multiply(ctx, NCPoly::generator(i), x);
      if (!left.isZero()) queue.emplace(std::pair(lvl + d, seq++), std::pair(left, lvl + d));
      NCPoly right = multiply(ctx, x, NCPoly::generator(i));
      if (!right.isZero()) queue.emplace(std::pair(lvl + d, seq++), std::pair(right, lvl + d));
    }
  }
}

}  // namespace

ReesReport reesRoundtrip(const PBWContext& ctx, const std::vector<NCPoly>& gens,
                         const std::vector<int>& levels, int kBound, int sBound) {
  if (gens.size() != levels.size()) throw UsageError("reesRoundtrip: gens/levels mismatch");
  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto d = kazhdanDegree(ctx, gens[j]);
    if (d && *d > levels[j])
      throw DomainError("reesRoundtrip: generator exceeds its declared filtration level");
  }
  FiltrationWindow win = enumerateWindow(ctx, kBound, sBound);
  ReesReport rep;

  SpanBuilder span(win);
  saturate(ctx, win, gens, levels, span);

  // Rees level pieces P_i = span of members built at level <= i.
  auto pieceBasis = [&](int i) {
    std::vector<Vec> cols;
    for (std::size_t t = 0; t < span.members.size(); ++t) {
      if (span.levels[t] > i) continue;
      Vec v(win.words.size(), Rat(0));
      for (const auto& [w, c] : span.members[t].terms()) v[win.index.at(w)] = c;
      cols.push_back(std::move(v));
    }
    return cols;
  };
  int maxLevel = 0;
  for (int l : span.levels) maxLevel = std::max(maxLevel, l);
  maxLevel = std::min(maxLevel, kBound);

  for (int i = 0; i <= maxLevel; ++i) {
    auto cols = pieceBasis(i);
    std::vector<Vec> rows = cols;
    rep.idealLevelDims[i] = rows.empty() ? 0 : rowReduce(rows, static_cast<int>(win.words.size())).rank;
  }

  // hbar-saturation: any member combination of level i whose Kazhdan
  // degree drops to i-1 must already lie in the level-(i-1) piece.
  rep.saturated = true;
  for (int i = 1; i <= maxLevel && rep.saturated; ++i) {
    auto high = pieceBasis(i);
    if (high.empty()) continue;
    // filtration-adapted basis: coordinates are (degree, word)-sorted
    auto adapted = trailingEchelon(high);
    auto low = pieceBasis(i - 1);
    Expressor ex(low);
    for (const auto& v : adapted) {
      int top = -1;
      for (std::size_t t = 0; t < v.size(); ++t)
        if (!v[t].isZero()) top = std::max(top, win.degrees[t]);
      if (top <= i - 1 && !ex.express(v))
        rep.saturated = false;
    }
  }

  // Roundtrip: the hbar = 1 span equals an independently saturated span
  // of the original ideal (level bookkeeping dropped).
  {
    SpanBuilder plain(win);
    std::vector<int> zeroLevels(gens.size(), kBound);
    saturate(ctx, win, gens, zeroLevels, plain);
    rep.roundtrip = plain.echelon.size() == span.echelon.size();
    std::vector<Vec> all;
    for (const auto& m : span.members) {
      Vec v(win.words.size(), Rat(0));
      for (const auto& [w, c] : m.terms()) v[win.index.at(w)] = c;
      all.push_back(std::move(v));
    }
    Expressor ex(all);
    rep.generatorsRecovered = true;
    for (const auto& g : gens) {
      Vec v(win.words.size(), Rat(0));
      for (const auto& [w, c] : g.terms()) v[win.index.at(w)] = c;
      if (!ex.express(v)) rep.generatorsRecovered = false;
    }
  }

  // dimension of I cap F_k inside the window
  {
    std::vector<Vec> all;
    for (const auto& m : span.members) {
      Vec v(win.words.size(), Rat(0));
      for (const auto& [w, c] : m.terms()) v[win.index.at(w)] = c;
      all.push_back(std::move(v));
    }
    auto adapted = trailingEchelon(all);
    for (int k = 0; k <= kBound; ++k) {
      long n = 0;
      for (const auto& v : adapted) {
        int top = -1;
        for (std::size_t t = 0; t < v.size(); ++t)
          if (!v[t].isZero()) top = std::max(top, win.degrees[t]);
        if (top <= k) ++n;
      }
      rep.idealDegreeDims[k] = n;
    }
  }
  return rep;
}

}  // namespace walg

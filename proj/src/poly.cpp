#include "walg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "walg/errors.hpp"

namespace walg {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.addTerm(Expo(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw UsageError("Poly::variable: index out of range");
  Poly p(nvars);
  Expo e(nvars, 0);
  e[i] = 1;
  p.addTerm(e, Rat(1));
  return p;
}

Poly Poly::monomial(Expo e, const Rat& c) {
  Poly p(static_cast<int>(e.size()));
  p.addTerm(e, c);
  return p;
}

Rat Poly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::addTerm(const Expo& e, const Rat& c) {
  if (c.isZero()) return;
  if (static_cast<int>(e.size()) != nvars_) throw UsageError("Poly::addTerm: bad exponent");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw UsageError("Poly: mixed variable counts");
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw UsageError("Poly: mixed variable counts");
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw UsageError("Poly: mixed variable counts");
  Poly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Expo e(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.addTerm(e, ca * cb);
    }
  return out;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw UsageError("Poly::pow: negative exponent");
  Poly acc = Poly::constant(nvars_, Rat(1));
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Poly Poly::derivative(int i) const {
  if (i < 0 || i >= nvars_) throw UsageError("Poly::derivative: index out of range");
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Expo d = e;
    d[i] -= 1;
    out.addTerm(d, c * Rat(e[i]));
  }
  return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw UsageError("Poly::substitute: wrong image count");
  int outVars = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != outVars) throw UsageError("Poly::substitute: ragged images");
  Poly out(outVars);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(outVars, c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    out += term;
  }
  return out;
}

Rat Poly::eval(const Vec& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw UsageError("Poly::eval: bad point");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

std::optional<int> Poly::weightedDegree(const std::vector<int>& weights) const {
  if (terms_.empty()) return std::nullopt;
  if (static_cast<int>(weights.size()) != nvars_)
    throw UsageError("Poly::weightedDegree: bad weights");
  bool first = true;
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i = 0; i < nvars_; ++i) d += e[i] * weights[i];
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

bool Poly::isHomogeneous(const std::vector<int>& weights, int degree) const {
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i = 0; i < nvars_; ++i) d += e[i] * weights[i];
    if (d != degree) return false;
  }
  return true;
}

Poly Poly::weightedPart(const std::vector<int>& weights, int d) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    int w = 0;
    for (int i = 0; i < nvars_; ++i) w += e[i] * weights[i];
    if (w == d) out.addTerm(e, c);
  }
  return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat coeff = c;
    if (!first) {
      os << (coeff.sign() < 0 ? " - " : " + ");
      if (coeff.sign() < 0) coeff = -coeff;
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool needCoeff = !coeff.isOne() || constant;
    if (needCoeff) os << coeff;
    bool firstFactor = true;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!firstFactor || needCoeff) os << " ";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      firstFactor = false;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skipWs();
    return pos >= s.size();
  }
  char peek() {
    skipWs();
    return pos < s.size() ? s[pos] : '\0';
  }
};

}  // namespace

Poly parsePoly(const std::vector<std::string>& names, const std::string& text) {
  const int n = static_cast<int>(names.size());
  Lexer lx{text};
  Poly result(n);

  auto parseNumber = [&]() -> Rat {
    std::size_t start = lx.pos;
    while (lx.pos < lx.s.size() &&
           (std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '/'))
      ++lx.pos;
    return Rat::parse(lx.s.substr(start, lx.pos - start));
  };
  auto parseName = [&]() -> int {
    std::size_t start = lx.pos;
    while (lx.pos < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
      ++lx.pos;
    std::string name = lx.s.substr(start, lx.pos - start);
    for (int i = 0; i < n; ++i)
      if (names[i] == name) return i;
    throw UsageError("parsePoly: unknown variable '" + name + "'");
  };

  bool firstTerm = true;
  while (!lx.eof()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++lx.pos;
    } else if (!firstTerm) {
      throw UsageError("parsePoly: expected '+' or '-' between terms");
    }
    firstTerm = false;

    Rat coeff(sign);
    Expo e(n, 0);
    bool sawFactor = false;
    for (;;) {
      char f = lx.peek();
      if (f == '*') {
        ++lx.pos;
        continue;
      }
      if (f == '\0' || f == '+' || f == '-') break;
      if (std::isdigit(static_cast<unsigned char>(f))) {
        coeff *= parseNumber();
        sawFactor = true;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
        int var = parseName();
        int p = 1;
        if (lx.peek() == '^') {
          ++lx.pos;
          if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
            throw UsageError("parsePoly: exponent must be a number");
          p = static_cast<int>(parseNumber().toLong());
        }
        e[var] += p;
        sawFactor = true;
        continue;
      }
      throw UsageError(std::string("parsePoly: unexpected character '") + f + "'");
    }
    if (!sawFactor) throw UsageError("parsePoly: empty term");
    result.addTerm(e, coeff);
  }
  return result;
}

}  // namespace walg

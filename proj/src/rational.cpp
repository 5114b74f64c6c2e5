#include "walg/rational.hpp"

#include <ostream>

#include "walg/errors.hpp"

namespace walg {

Rat::Rat(long num, long den) {
  if (den == 0) throw UsageError("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw UsageError("Rat::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw UsageError("Rat::parse: bad rational '" + s + "'");
  if (q.get_den() == 0) throw UsageError("Rat::parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rat(q);
}

long Rat::toLong() const {
  if (!isInteger() || !v_.get_num().fits_slong_p())
    throw UsageError("Rat::toLong: " + str() + " is not a small integer");
  return v_.get_num().get_si();
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.isZero()) throw UsageError("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

mpz_class intGcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class intLcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace walg

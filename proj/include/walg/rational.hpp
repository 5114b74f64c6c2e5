#ifndef WALG_RATIONAL_HPP
#define WALG_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace walg {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.  Thin value wrapper over GMP's mpq_class that guarantees
/// canonical form at every construction site.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}        // NOLINT: implicit by design
  Rat(long n) : v_(static_cast<long>(n)) {}  // NOLINT
  Rat(long num, long den);
  explicit Rat(const mpz_class& z) : v_(z) {}
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p", or "p/q".  Throws UsageError on malformed input.
  static Rat parse(const std::string& s);

  bool isZero() const { return v_ == 0; }
  bool isOne() const { return v_ == 1; }
  bool isInteger() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  /// Exact conversion to long; throws if it does not fit or is non-integer.
  long toLong() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

/// gcd/lcm on the integer parts, used by fraction-free elimination.
mpz_class intGcd(const mpz_class& a, const mpz_class& b);
mpz_class intLcm(const mpz_class& a, const mpz_class& b);

}  // namespace walg

#endif

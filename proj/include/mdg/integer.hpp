#ifndef MDG_INTEGER_HPP
#define MDG_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "mdg/error.hpp"

namespace mdg {

/// Arbitrary-precision integer.  Canonical form (no leading zero limbs, zero
/// is unsigned) is maintained by the underlying representation.
class Integer {
 public:
  Integer() : z_(0) {}
  Integer(long v) : z_(v) {}                // NOLINT implicit by design
  explicit Integer(const std::string& dec) : z_(dec, 10) {}
  explicit Integer(mpz_class z) : z_(std::move(z)) {}

  Integer operator+(const Integer& o) const { return Integer(mpz_class(z_ + o.z_)); }
  Integer operator-(const Integer& o) const { return Integer(mpz_class(z_ - o.z_)); }
  Integer operator*(const Integer& o) const { return Integer(mpz_class(z_ * o.z_)); }
  Integer operator-() const { return Integer(mpz_class(-z_)); }

  Integer& operator+=(const Integer& o) { z_ += o.z_; return *this; }
  Integer& operator-=(const Integer& o) { z_ -= o.z_; return *this; }
  Integer& operator*=(const Integer& o) { z_ *= o.z_; return *this; }

  bool operator==(const Integer& o) const { return z_ == o.z_; }
  bool operator!=(const Integer& o) const { return z_ != o.z_; }
  bool operator<(const Integer& o) const { return z_ < o.z_; }
  bool operator<=(const Integer& o) const { return z_ <= o.z_; }
  bool operator>(const Integer& o) const { return z_ > o.z_; }

  bool is_zero() const { return z_ == 0; }
  int sign() const { return sgn(z_); }

  /// Quotient/remainder with truncation toward zero.
  std::pair<Integer, Integer> divrem(const Integer& d) const {
    if (d.is_zero()) throw DivisionByZeroError("Integer::divrem by zero");
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), z_.get_mpz_t(), d.z_.get_mpz_t());
    return {Integer(std::move(q)), Integer(std::move(r))};
  }

  /// Exact division; the caller asserts divisibility.
  Integer divexact(const Integer& d) const {
    if (d.is_zero()) throw DivisionByZeroError("Integer::divexact by zero");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), z_.get_mpz_t(), d.z_.get_mpz_t());
    return Integer(std::move(q));
  }

  static Integer gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
    return Integer(std::move(g));
  }

  static Integer binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Integer(std::move(b));
  }

  static Integer pow(const Integer& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.z_.get_mpz_t(), e);
    return Integer(std::move(r));
  }

  /// Residue in [0, m) for m > 0.
  std::uint64_t mod_u64(std::uint64_t m) const {
    mpz_class r;
    mpz_mod_ui(r.get_mpz_t(), z_.get_mpz_t(), m);
    return mpz_get_ui(r.get_mpz_t());
  }

  bool fits_long() const { return z_.fits_slong_p(); }
  long to_long() const { return z_.get_si(); }

  std::string to_string() const { return z_.get_str(); }
  const mpz_class& raw() const { return z_; }

 private:
  mpz_class z_;
};

struct RationalDomain;

/// Exact rational: numerator/denominator coprime, denominator positive.
class Rational {
 public:
  using Domain = RationalDomain;
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}               // NOLINT implicit by design
  Rational(const Integer& num, const Integer& den) : q_(num.raw(), den.raw()) {
    if (den.is_zero()) throw DivisionByZeroError("Rational with zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw DivisionByZeroError("Rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZeroError("Rational division by zero");
    return Rational(mpq_class(q_ / o.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  Rational inv() const {
    if (is_zero()) throw DivisionByZeroError("Rational::inv of zero");
    return Rational(mpq_class(1 / q_));
  }

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(long v) const { return Rational(v); }
  static unsigned long characteristic() { return 0; }

  Integer numerator() const { return Integer(mpz_class(q_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(q_.get_den())); }

  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

/// Coefficient-domain handle for Rational (stateless).
struct RationalDomain {
  using Element = Rational;
  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(long v) const { return Rational(v); }
  static unsigned long characteristic() { return 0; }
  bool operator==(const RationalDomain&) const { return true; }
  std::string name() const { return "QQ"; }
};

inline RationalDomain rational_domain_of(const Rational&) { return {}; }

}  // namespace mdg

#endif

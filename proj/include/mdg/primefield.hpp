#ifndef MDG_PRIMEFIELD_HPP
#define MDG_PRIMEFIELD_HPP

#include <cstdint>
#include <string>

#include "mdg/error.hpp"

namespace mdg {

/// Deterministic Miller-Rabin, valid for all n < 2^32.
bool is_prime_u32(std::uint32_t n);

/// Modular inverse via extended Euclid; throws on non-invertible input.
std::uint32_t mod_inverse_u32(std::uint32_t a, std::uint32_t p);

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

class Fp;

/// Handle for the prime field F_p, p < 2^31.  Construction checks primality.
class FpDomain {
 public:
  using Element = Fp;

  explicit FpDomain(std::uint32_t p);
  static FpDomain unchecked(std::uint32_t p) { return FpDomain(p, NoCheck{}); }

  std::uint32_t modulus() const { return p_; }
  unsigned long characteristic() const { return p_; }

  Fp zero() const;
  Fp one() const;
  Fp from_int(long v) const;
  Fp element(std::uint32_t residue) const;

  bool operator==(const FpDomain& o) const { return p_ == o.p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

 private:
  struct NoCheck {};
  FpDomain(std::uint32_t p, NoCheck) : p_(p) {}
  std::uint32_t p_;
};

/// Element of F_p: residue in [0, p).  Immutable value type.
class Fp {
 public:
  using Domain = FpDomain;

  Fp() : v_(0), p_(2) {}
  Fp(std::uint32_t residue, std::uint32_t p) : v_(residue % p), p_(p) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  FpDomain domain() const { return FpDomain::unchecked(p_); }

  Fp operator+(Fp o) const {
    check(o);
    std::uint32_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return Fp(s, p_, Raw{});
  }
  Fp operator-(Fp o) const {
    check(o);
    return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_, Raw{});
  }
  Fp operator*(Fp o) const {
    check(o);
    return Fp(static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_), p_, Raw{});
  }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, Raw{}); }
  Fp operator/(Fp o) const { return *this * o.inv(); }

  Fp& operator+=(Fp o) { *this = *this + o; return *this; }
  Fp& operator-=(Fp o) { *this = *this - o; return *this; }
  Fp& operator*=(Fp o) { *this = *this * o; return *this; }

  bool operator==(Fp o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(Fp o) const { return !(*this == o); }
  bool operator<(Fp o) const { return v_ < o.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp inv() const {
    if (v_ == 0) throw DivisionByZeroError("Fp::inv of zero in " + domain().name());
    return Fp(mod_inverse_u32(v_, p_), p_, Raw{});
  }

  Fp pow(std::uint64_t e) const {
    return Fp(static_cast<std::uint32_t>(pow_mod_u64(v_, e, p_)), p_, Raw{});
  }

  /// In F_p the Frobenius is the identity, so every element is its own p-th root.
  Fp pth_root() const { return *this; }

  Fp zero() const { return Fp(0, p_, Raw{}); }
  Fp one() const { return Fp(1 % p_, p_, Raw{}); }
  Fp from_int(long v) const { return domain().from_int(v); }
  unsigned long characteristic() const { return p_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  struct Raw {};
  Fp(std::uint32_t v, std::uint32_t p, Raw) : v_(v), p_(p) {}
  void check(Fp o) const {
    if (p_ != o.p_) throw DomainError("Fp arithmetic across different moduli");
  }
  std::uint32_t v_;
  std::uint32_t p_;
};

inline Fp FpDomain::zero() const { return Fp(0, p_); }
inline Fp FpDomain::one() const { return Fp(1 % p_, p_); }
inline Fp FpDomain::element(std::uint32_t residue) const { return Fp(residue, p_); }
inline Fp FpDomain::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Fp(static_cast<std::uint32_t>(r), p_);
}

/// Multiplicative inverse in F_p (spec-level entry point).
inline Fp field_inverse(Fp a) { return a.inv(); }

/// C(n, k) mod p via the Lucas decomposition; stable for n far beyond machine
/// factorials.  Throws DomainError when k > n.
Fp binomial_mod(std::uint64_t n, std::uint64_t k, const FpDomain& dom);

/// Euler criterion: true iff a is a square in F_p (0 counts as a square).
bool is_square(Fp a);

}  // namespace mdg

#endif

#include <algorithm>

#include "mdg/extfield.hpp"
#include "mdg/primefield.hpp"

namespace mdg {

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n % q == 0) return n == q;
  }
  // Miller-Rabin with bases 2, 3, 5, 7 is exact below 3,215,031,751 > 2^31.
  std::uint32_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t a : {2u, 3u, 5u, 7u}) {
    std::uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint32_t mod_inverse_u32(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DivisionByZeroError("mod_inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("mod_inverse: input not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FpDomain::FpDomain(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
    throw DomainError("FpDomain: modulus " + std::to_string(p) + " is not a prime < 2^31");
}

Fp binomial_mod(std::uint64_t n, std::uint64_t k, const FpDomain& dom) {
  if (k > n) throw DomainError("binomial_mod: k > n");
  const std::uint32_t p = dom.modulus();
  // Lucas: C(n,k) = prod C(n_i, k_i) mod p over base-p digits.
  std::uint64_t acc = 1;
  while (n > 0 || k > 0) {
    std::uint64_t ni = n % p, ki = k % p;
    n /= p;
    k /= p;
    if (ki > ni) return dom.zero();
    // C(ni, ki) mod p with ni < p: numerator/denominator products of < p factors.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t j = 1; j <= ki; ++j) {
      num = num * ((ni - ki + j) % p) % p;
      den = den * (j % p) % p;
    }
    acc = acc * num % p * mod_inverse_u32(static_cast<std::uint32_t>(den), p) % p;
  }
  return dom.element(static_cast<std::uint32_t>(acc));
}

bool is_square(Fp a) {
  if (a.is_zero()) return true;
  const std::uint32_t p = a.modulus();
  if (p == 2) return true;
  return a.pow((p - 1) / 2).is_one();
}

// ---------------------------------------------------------------------------
// Extension fields

namespace {

// Evaluates z^{p^j} reduction chains is overkill at this scale; irreducibility
// over F_p is decided by checking that the candidate has no root generating a
// proper subfield: f monic of degree k is irreducible iff z^{p^k} = z mod f
// and gcd(z^{p^{k/d}} - z, f) = 1 for every prime d | k.
using Poly = std::vector<std::uint64_t>;  // dense coeffs mod p, index = exponent

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod_mul(const Poly& a, const Poly& b, const Poly& modulus, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  // modulus is monic of degree m; fold high coefficients down
  const std::size_t m = modulus.size() - 1;
  for (std::size_t e = prod.size(); e-- > m;) {
    std::uint64_t lead = prod[e];
    if (lead == 0) continue;
    prod[e] = 0;
    for (std::size_t i = 0; i < m; ++i)
      prod[e - m + i] = (prod[e - m + i] + p - lead * modulus[i] % p) % p;
  }
  prod.resize(std::min(prod.size(), m));
  trim(prod);
  return prod;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& modulus, std::uint64_t p) {
  Poly result{1};
  while (e > 0) {
    if (e & 1) result = poly_mod_mul(result, base, modulus, p);
    base = poly_mod_mul(base, base, modulus, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    std::uint64_t inv = mod_inverse_u32(static_cast<std::uint32_t>(b.back()),
                                        static_cast<std::uint32_t>(p));
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t c = a.back() * inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = (a[i + shift] + p - c * b[i] % p) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

// u - z mod p, in place on a copy
Poly minus_z(Poly u, std::uint64_t p) {
  if (u.size() < 2) u.resize(2, 0);
  u[1] = (u[1] + p - 1) % p;
  trim(u);
  return u;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  const Poly z{0, 1};
  // z^{p^k} mod f must equal z.
  Poly t = z;
  for (unsigned i = 0; i < k; ++i) t = poly_pow_mod(t, p, f, p);
  if (!minus_z(t, p).empty()) return false;
  // For each prime divisor d of k: gcd(z^{p^{k/d}} - z, f) = 1.
  std::vector<unsigned> primes;
  unsigned m = k;
  for (unsigned d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);
  for (unsigned d : primes) {
    Poly u = z;
    for (unsigned i = 0; i < k / d; ++i) u = poly_pow_mod(u, p, f, p);
    if (poly_gcd(minus_z(u, p), f, p).size() > 1) return false;
  }
  return true;
}

}  // namespace

ExtField::ExtField(std::uint32_t p, unsigned k, std::vector<std::uint32_t> tail)
    : p_(p), k_(k), tail_(std::move(tail)) {
  order_ = 1;
  for (unsigned i = 0; i < k_; ++i) order_ *= p_;
}

std::shared_ptr<const ExtField> ExtField::build(std::uint32_t p, unsigned k,
                                                std::uint64_t budget) {
  if (k < 1) throw DomainError("build_extension: degree must be >= 1");
  FpDomain check(p);  // primality gate
  std::uint64_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    if (order > budget)
      throw ResourceError("build_extension(" + std::to_string(p) + "," + std::to_string(k) + ")",
                          order, budget);
  }
  // Enumerate tails (c_{k-1}, ..., c_0) ascending; take the first irreducible
  // z^k + c_{k-1} z^{k-1} + ... + c_0.
  std::uint64_t count = order;  // p^k candidate tails
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> tail(k, 0);
    std::uint64_t rest = code;
    for (unsigned i = k; i-- > 0;) {  // most significant digit = c_{k-1}
      tail[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    Poly f(k + 1, 0);
    for (unsigned i = 0; i < k; ++i) f[i] = tail[i];
    f[k] = 1;
    if (is_irreducible(f, p))
      return std::shared_ptr<const ExtField>(new ExtField(p, k, std::move(tail)));
  }
  throw DomainError("build_extension: no irreducible found (unreachable for prime p)");
}

Fq ExtField::zero() const {
  return Fq(shared_from_this(), std::vector<std::uint32_t>(k_, 0));
}

Fq ExtField::one() const {
  std::vector<std::uint32_t> c(k_, 0);
  c[0] = 1 % p_;
  return Fq(shared_from_this(), std::move(c));
}

Fq ExtField::generator() const {
  std::vector<std::uint32_t> c(k_, 0);
  if (k_ == 1) {
    // z = -c_0 in the degree-1 case
    c[0] = (p_ - tail_[0]) % p_;
  } else {
    c[1] = 1;
  }
  return Fq(shared_from_this(), std::move(c));
}

Fq ExtField::from_coords(std::vector<std::uint32_t> coords) const {
  if (coords.size() != k_) throw DomainError("ExtField::from_coords: wrong length");
  for (auto& c : coords) c %= p_;
  return Fq(shared_from_this(), std::move(coords));
}

Fq ExtField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  std::vector<std::uint32_t> c(k_, 0);
  c[0] = static_cast<std::uint32_t>(r);
  return Fq(shared_from_this(), std::move(c));
}

Fq ExtField::from_index(std::uint64_t idx) const {
  if (idx >= order_) throw DomainError("ExtField::from_index out of range");
  std::vector<std::uint32_t> c(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = static_cast<std::uint32_t>(idx % p_);
    idx /= p_;
  }
  return Fq(shared_from_this(), std::move(c));
}

void Fq::check(const Fq& o) const {
  if (!f_ || !o.f_) throw DomainError("Fq: uninitialized element");
  if (f_ != o.f_ && !(f_->characteristic() == o.f_->characteristic() &&
                      f_->degree() == o.f_->degree() &&
                      f_->defining_tail() == o.f_->defining_tail()))
    throw DomainError("Fq arithmetic across different extension fields");
}

Fq Fq::operator+(const Fq& o) const {
  check(o);
  const std::uint32_t p = f_->characteristic();
  std::vector<std::uint32_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::uint32_t s = c_[i] + o.c_[i];
    c[i] = s >= p ? s - p : s;
  }
  return Fq(f_, std::move(c));
}

Fq Fq::operator-(const Fq& o) const {
  check(o);
  const std::uint32_t p = f_->characteristic();
  std::vector<std::uint32_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    c[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  return Fq(f_, std::move(c));
}

Fq Fq::operator-() const {
  const std::uint32_t p = f_->characteristic();
  std::vector<std::uint32_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] == 0 ? 0 : p - c_[i];
  return Fq(f_, std::move(c));
}

Fq Fq::operator*(const Fq& o) const {
  check(o);
  const std::uint64_t p = f_->characteristic();
  const unsigned k = f_->degree();
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j)
      prod[i + j] = (prod[i + j] + std::uint64_t(c_[i]) * o.c_[j]) % p;
  }
  // Reduce by z^k = -tail: fold high coefficients down.
  const auto& tail = f_->defining_tail();
  for (unsigned e = 2 * k - 2; e >= k && e < prod.size(); --e) {
    std::uint64_t lead = prod[e];
    if (lead != 0) {
      prod[e] = 0;
      for (unsigned i = 0; i < k; ++i) {
        std::uint64_t sub = lead * tail[i] % p;
        prod[e - k + i] = (prod[e - k + i] + p - sub) % p;
      }
    }
    if (e == k) break;
  }
  std::vector<std::uint32_t> c(k);
  for (unsigned i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>(prod[i]);
  return Fq(f_, std::move(c));
}

bool Fq::operator==(const Fq& o) const {
  check(o);
  return c_ == o.c_;
}

bool Fq::operator<(const Fq& o) const {
  return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

bool Fq::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool Fq::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

Fq Fq::pow(std::uint64_t e) const {
  Fq result = one();
  Fq base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Fq Fq::inv() const {
  if (is_zero()) throw DivisionByZeroError("Fq::inv of zero");
  return pow(f_->order() - 2);
}

Fq Fq::pth_root() const {
  const unsigned k = f_->degree();
  if (k == 1) return *this;
  std::uint64_t e = 1;
  for (unsigned i = 0; i + 1 < k; ++i) e *= f_->characteristic();
  return pow(e);
}

Fq Fq::zero() const { return f_->zero(); }
Fq Fq::one() const { return f_->one(); }
Fq Fq::from_int(long v) const { return f_->from_int(v); }

std::string Fq::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  s += "]";
  return s;
}

}  // namespace mdg

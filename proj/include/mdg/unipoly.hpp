#ifndef MDG_UNIPOLY_HPP
#define MDG_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "mdg/error.hpp"

namespace mdg {

/// Dense univariate polynomial over a coefficient field K.  Invariant: the
/// coefficient vector has no trailing zeros (the zero polynomial is empty).
template <class K>
class UniPoly {
 public:
  using Coeff = K;
  using Domain = typename K::Domain;

  explicit UniPoly(Domain dom, std::string var = "t")
      : dom_(std::move(dom)), var_(std::move(var)) {}

  static UniPoly from_coeffs(Domain dom, std::vector<K> coeffs, std::string var = "t") {
    UniPoly f(std::move(dom), std::move(var));
    f.c_ = std::move(coeffs);
    f.trim();
    return f;
  }

  static UniPoly constant(Domain dom, const K& value, std::string var = "t") {
    return from_coeffs(std::move(dom), {value}, std::move(var));
  }

  static UniPoly monomial(Domain dom, const K& coeff, unsigned exp, std::string var = "t") {
    UniPoly f(std::move(dom), std::move(var));
    if (!coeff.is_zero()) {
      f.c_.assign(exp + 1, f.dom_.zero());
      f.c_[exp] = coeff;
    }
    return f;
  }

  /// The variable itself.
  static UniPoly gen(Domain dom, std::string var = "t") {
    return monomial(dom, dom.one(), 1, std::move(var));
  }

  const Domain& domain() const { return dom_; }
  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : dom_.zero(); }
  const std::vector<K>& coeffs() const { return c_; }

  K lead() const {
    if (is_zero()) throw DomainError("UniPoly::lead of zero polynomial");
    return c_.back();
  }

  UniPoly operator+(const UniPoly& o) const {
    check(o);
    std::vector<K> r(std::max(c_.size(), o.c_.size()), dom_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return from_coeffs(dom_, std::move(r), var_);
  }

  UniPoly operator-(const UniPoly& o) const {
    check(o);
    std::vector<K> r(std::max(c_.size(), o.c_.size()), dom_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return from_coeffs(dom_, std::move(r), var_);
  }

  UniPoly operator-() const {
    std::vector<K> r(c_.size(), dom_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return from_coeffs(dom_, std::move(r), var_);
  }

  UniPoly operator*(const UniPoly& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return UniPoly(dom_, var_);
    std::vector<K> r(c_.size() + o.c_.size() - 1, dom_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return from_coeffs(dom_, std::move(r), var_);
  }

  UniPoly operator*(const K& s) const {
    std::vector<K> r(c_.size(), dom_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return from_coeffs(dom_, std::move(r), var_);
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
    check(d);
    if (d.is_zero()) throw DivisionByZeroError("UniPoly::divrem by zero");
    UniPoly q(dom_, var_);
    UniPoly r = *this;
    if (r.degree() >= d.degree()) {
      q.c_.assign(r.c_.size() - d.c_.size() + 1, dom_.zero());
      K lead_inv = d.lead().inv();
      while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = r.c_.size() - d.c_.size();
        K f = r.lead() * lead_inv;
        q.c_[shift] = f;
        for (std::size_t i = 0; i < d.c_.size(); ++i)
          r.c_[i + shift] = r.c_[i + shift] - f * d.c_[i];
        r.trim();
      }
    }
    q.trim();
    return {q, r};
  }

  UniPoly operator%(const UniPoly& d) const { return divrem(d).second; }
  UniPoly operator/(const UniPoly& d) const { return divrem(d).first; }

  /// Exact division; throws if the remainder is nonzero.
  UniPoly divexact(const UniPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw DomainError("UniPoly::divexact: division is not exact");
    return q;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(dom_, var_);
    std::vector<K> r(c_.size() - 1, dom_.zero());
    for (std::size_t i = 1; i < c_.size(); ++i)
      r[i - 1] = c_[i] * dom_.from_int(static_cast<long>(i));
    return from_coeffs(dom_, std::move(r), var_);
  }

  K eval(const K& x) const {
    K acc = dom_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Horner evaluation with coefficients mapped into another domain.
  template <class L, class Map>
  L eval_mapped(const L& x, Map&& embed) const {
    L acc = x.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(c_[i]);
    return acc;
  }

  UniPoly pow(std::uint64_t e) const {
    UniPoly result = constant(dom_, dom_.one(), var_);
    UniPoly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// Multiply by t^k.
  UniPoly shifted(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<K> r(c_.size() + k, dom_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return from_coeffs(dom_, std::move(r), var_);
  }

  /// Canonical order used for deterministic factor lists: by degree, then by
  /// the coefficient sequence from the highest exponent down.
  static bool canonical_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

  static UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    a.check(b);
    if (a.is_zero() && b.is_zero())
      throw DivisionByZeroError("UniPoly::gcd(0, 0)");
    UniPoly f = a, g = b;
    // monic normalization each step keeps rational coefficients small
    while (!g.is_zero()) {
      f = f % g;
      std::swap(f, g);
      if (!f.is_zero()) f = f.monic();
    }
    return f.monic();
  }

 private:
  void check(const UniPoly& o) const {
    if (!(dom_ == o.dom_)) throw DomainError("UniPoly arithmetic across domains");
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Domain dom_;
  std::string var_;
  std::vector<K> c_;
};

}  // namespace mdg

#endif

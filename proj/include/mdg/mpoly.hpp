#ifndef MDG_MPOLY_HPP
#define MDG_MPOLY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mdg/monomial.hpp"
#include "mdg/unipoly.hpp"

namespace mdg {

template <class K>
struct PolyRing {
  typename K::Domain dom;
  std::vector<std::string> vars;

  PolyRing(typename K::Domain d, std::vector<std::string> v)
      : dom(std::move(d)), vars(std::move(v)) {}

  std::size_t nvars() const { return vars.size(); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool same_as(const PolyRing& o) const { return dom == o.dom && vars == o.vars; }
};

template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <class K>
RingPtr<K> make_ring(typename K::Domain dom, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing<K>>(std::move(dom), std::move(vars));
}

/// Sparse multivariate polynomial: terms strictly descending in the ambient
/// term order, no zero coefficients.  Immutable value semantics.
template <class K>
class MultiPoly {
 public:
  using Term = std::pair<K, Monomial>;

  MultiPoly(RingPtr<K> ring, TermOrder order)
      : ring_(std::move(ring)), order_(std::move(order)) {}

  static MultiPoly zero(RingPtr<K> ring, TermOrder order) {
    return MultiPoly(std::move(ring), std::move(order));
  }

  static MultiPoly constant(RingPtr<K> ring, const K& c,
                            TermOrder order = TermOrder::grevlex()) {
    MultiPoly f(ring, std::move(order));
    if (!c.is_zero()) f.terms_.emplace_back(c, Monomial(ring->nvars()));
    return f;
  }

  static MultiPoly term(RingPtr<K> ring, const K& c, Monomial m,
                        TermOrder order = TermOrder::grevlex()) {
    MultiPoly f(ring, std::move(order));
    if (!c.is_zero()) f.terms_.emplace_back(c, std::move(m));
    return f;
  }

  static MultiPoly var(RingPtr<K> ring, std::size_t i, unsigned exp = 1,
                       TermOrder order = TermOrder::grevlex()) {
    Monomial m(ring->nvars());
    m[i] = exp;
    return term(std::move(ring), ring->dom.one(), std::move(m), std::move(order));
  }

  static MultiPoly var(RingPtr<K> ring, const std::string& name, unsigned exp = 1,
                       TermOrder order = TermOrder::grevlex()) {
    int i = ring->var_index(name);
    if (i < 0) throw DomainError("MultiPoly::var: unknown variable " + name);
    return var(std::move(ring), static_cast<std::size_t>(i), exp, std::move(order));
  }

  /// Builds from an unsorted term list (duplicates combined).
  static MultiPoly from_terms(RingPtr<K> ring, std::vector<Term> ts, TermOrder order) {
    MultiPoly f(std::move(ring), order);
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
      return order.greater(a.second, b.second);
    });
    for (auto& t : ts) {
      if (t.first.is_zero()) continue;
      if (!f.terms_.empty() && f.terms_.back().second == t.second) {
        f.terms_.back().first = f.terms_.back().first + t.first;
        if (f.terms_.back().first.is_zero()) f.terms_.pop_back();
      } else {
        f.terms_.push_back(std::move(t));
      }
    }
    return f;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].second.is_one());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].second.is_one() && terms_[0].first.is_one();
  }

  const K& lead_coeff() const {
    require_nonzero();
    return terms_[0].first;
  }
  const Monomial& lead_monomial() const {
    require_nonzero();
    return terms_[0].second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.second.total_degree());
    return d;
  }

  long weighted_degree(const std::vector<long>& w) const {
    long d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      long wd = t.second.weighted_degree(w);
      if (first || wd > d) d = wd;
      first = false;
    }
    return d;
  }

  bool is_homogeneous(const std::vector<long>& w) const {
    if (terms_.size() <= 1) return true;
    long d = terms_[0].second.weighted_degree(w);
    for (const auto& t : terms_)
      if (t.second.weighted_degree(w) != d) return false;
    return true;
  }

  /// Degree in a single variable.
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.second[var]);
    return d;
  }

  MultiPoly reordered(const TermOrder& order) const {
    if (order == order_) return *this;
    return from_terms(ring_, terms_, order);
  }

  MultiPoly operator+(const MultiPoly& o) const { return merged(o, false); }
  MultiPoly operator-(const MultiPoly& o) const { return merged(o, true); }

  MultiPoly operator-() const {
    MultiPoly r(ring_, order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(-t.first, t.second);
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    check(o);
    MultiPoly acc(ring_, order_);
    for (const auto& t : o.terms_) acc = acc + scaled(t.first, t.second);
    return acc;
  }

  MultiPoly operator*(const K& c) const {
    MultiPoly r(ring_, order_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      K prod = t.first * c;
      if (!prod.is_zero()) r.terms_.emplace_back(prod, t.second);
    }
    return r;
  }

  /// this * (c * m) — the hot path of polynomial reduction.
  MultiPoly scaled(const K& c, const Monomial& m) const {
    MultiPoly r(ring_, order_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      K prod = t.first * c;
      if (!prod.is_zero()) r.terms_.emplace_back(prod, t.second * m);
    }
    return r;
  }

  MultiPoly pow(std::uint64_t e) const {
    MultiPoly result = constant(ring_, ring_->dom.one(), order_);
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  bool operator==(const MultiPoly& o) const {
    if (order_ == o.order_) return terms_ == o.terms_;
    return terms_ == o.reordered(order_).terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Substitute a constant for one variable.
  MultiPoly substituted(std::size_t var, const K& value) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.second[var];
      K c = t.first;
      if (e > 0) c = c * pow_k(value, e);
      if (c.is_zero()) continue;
      Monomial m = t.second;
      m[var] = 0;
      out.emplace_back(c, m);
    }
    return from_terms(ring_, std::move(out), order_);
  }

  /// True when only the given variable occurs.
  bool univariate_in(std::size_t var) const {
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < ring_->nvars(); ++i)
        if (i != var && t.second[i] > 0) return false;
    return true;
  }

  UniPoly<K> to_unipoly(std::size_t var) const {
    if (!univariate_in(var))
      throw DomainError("to_unipoly: polynomial involves other variables");
    std::vector<K> c(degree_in(var) + 1, ring_->dom.zero());
    for (const auto& t : terms_) c[t.second[var]] = t.first;
    return UniPoly<K>::from_coeffs(ring_->dom, std::move(c), ring_->vars[var]);
  }

  static MultiPoly from_unipoly(RingPtr<K> ring, const UniPoly<K>& f, std::size_t var,
                                TermOrder order = TermOrder::grevlex()) {
    std::vector<Term> ts;
    for (int i = 0; i <= f.degree(); ++i) {
      if (f.coeff(i).is_zero()) continue;
      Monomial m(ring->nvars());
      m[var] = static_cast<unsigned>(i);
      ts.emplace_back(f.coeff(i), m);
    }
    return from_terms(std::move(ring), std::move(ts), std::move(order));
  }

  /// Image in a ring with more variables; `slot[i]` = index of old var i.
  MultiPoly mapped_to(RingPtr<K> big, const std::vector<std::size_t>& slot,
                      const TermOrder& order) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(big->nvars());
      for (std::size_t i = 0; i < ring_->nvars(); ++i) m[slot[i]] = t.second[i];
      ts.emplace_back(t.first, m);
    }
    return from_terms(std::move(big), std::move(ts), order);
  }

  void require_nonzero() const {
    if (terms_.empty()) throw DomainError("operation on zero polynomial");
  }

 private:
  void check(const MultiPoly& o) const {
    if (ring_ != o.ring_ && !ring_->same_as(*o.ring_))
      throw DomainError("MultiPoly arithmetic across rings");
    if (!(order_ == o.order_))
      throw DomainError("MultiPoly arithmetic across term orders");
  }

  static K pow_k(const K& v, unsigned e) {
    K acc = v.one();
    K base = v;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  MultiPoly merged(const MultiPoly& o, bool subtract) const {
    check(o);
    MultiPoly r(ring_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = order_.compare(terms_[i].second, o.terms_[j].second);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.emplace_back(subtract ? -t.first : t.first, t.second);
      } else {
        K sum = subtract ? terms_[i].first - o.terms_[j].first
                         : terms_[i].first + o.terms_[j].first;
        if (!sum.is_zero()) r.terms_.emplace_back(std::move(sum), terms_[i].second);
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) {
      const auto& t = o.terms_[j];
      r.terms_.emplace_back(subtract ? -t.first : t.first, t.second);
    }
    return r;
  }

  RingPtr<K> ring_;
  TermOrder order_;
  std::vector<Term> terms_;
};

}  // namespace mdg

#endif

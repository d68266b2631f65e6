#ifndef MDG_MONOMIAL_HPP
#define MDG_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mdg/error.hpp"

namespace mdg {

/// Exponent vector; length equals the ring's variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

  std::size_t nvars() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& exps() const { return e_; }

  unsigned total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0u);
  }

  long weighted_degree(const std::vector<long>& w) const {
    long acc = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) acc += w[i] * static_cast<long>(e_[i]);
    return acc;
  }

  bool is_one() const {
    for (unsigned e : e_)
      if (e) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// o / this, assuming divisibility.
  Monomial divide_into(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = o.e_[i] - e_[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  /// Plain lexicographic compare for use as a deterministic map key.
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

 private:
  std::vector<unsigned> e_;
};

/// Total multiplicative monomial order with 1 minimal.
class TermOrder {
 public:
  enum class Kind { Lex, GrevLex, Weighted, Block };

  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder grevlex() { return TermOrder(Kind::GrevLex); }

  /// Weighted degree first (weights must be nonnegative so 1 stays minimal),
  /// graded-reverse-lex tie-break.
  static TermOrder weighted(std::vector<long> w) {
    for (long x : w)
      if (x < 0) throw DomainError("TermOrder::weighted: negative weight");
    TermOrder o(Kind::Weighted);
    o.weights_ = std::move(w);
    return o;
  }

  /// Elimination order: the front block (mask true) dominates; grevlex within
  /// each block.  Any monomial involving a front variable exceeds every
  /// monomial in the back block alone.
  static TermOrder block(std::vector<bool> front) {
    TermOrder o(Kind::Block);
    o.front_ = std::move(front);
    return o;
  }

  Kind kind() const { return kind_; }
  const std::vector<bool>& front_mask() const { return front_; }

  /// +1 when a > b, 0 when equal, -1 when a < b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex:
        return cmp_lex(a, b);
      case Kind::GrevLex:
        return cmp_grevlex(a, b, nullptr);
      case Kind::Weighted: {
        long wa = a.weighted_degree(weights_), wb = b.weighted_degree(weights_);
        if (wa != wb) return wa > wb ? 1 : -1;
        return cmp_grevlex(a, b, nullptr);
      }
      case Kind::Block: {
        int c = cmp_grevlex(a, b, &front_);
        if (c != 0) return c;
        std::vector<bool> back(front_.size());
        for (std::size_t i = 0; i < front_.size(); ++i) back[i] = !front_[i];
        return cmp_grevlex(a, b, &back);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const TermOrder& o) const {
    return kind_ == o.kind_ && weights_ == o.weights_ && front_ == o.front_;
  }

  /// Stable serialization; used as cache key and in reports.
  std::string to_string() const {
    switch (kind_) {
      case Kind::Lex:
        return "lex";
      case Kind::GrevLex:
        return "grevlex";
      case Kind::Weighted: {
        std::string s = "weighted[";
        for (std::size_t i = 0; i < weights_.size(); ++i)
          s += (i ? "," : "") + std::to_string(weights_[i]);
        return s + "]";
      }
      case Kind::Block: {
        std::string s = "block[";
        for (std::size_t i = 0; i < front_.size(); ++i) s += front_[i] ? '1' : '0';
        return s + "]";
      }
    }
    return "?";
  }

 private:
  explicit TermOrder(Kind k) : kind_(k) {}

  static int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  /// Grevlex restricted to the variables selected by `mask` (all when null):
  /// higher restricted degree wins; on ties the monomial with the smaller
  /// exponent at the last differing selected variable is larger.
  static int cmp_grevlex(const Monomial& a, const Monomial& b,
                         const std::vector<bool>* mask) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      if (mask && !(*mask)[i]) continue;
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
      if (mask && !(*mask)[i]) continue;
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  std::vector<long> weights_;
  std::vector<bool> front_;
};

}  // namespace mdg

#endif

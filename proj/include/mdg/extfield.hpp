#ifndef MDG_EXTFIELD_HPP
#define MDG_EXTFIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mdg/error.hpp"
#include "mdg/primefield.hpp"

namespace mdg {

class Fq;

/// The field F_{p^k}, presented as F_p[z]/(m(z)) for the first monic
/// irreducible m of degree k in a fixed coefficient enumeration.  Handles are
/// shared immutable objects; two handles with equal (p, k) define the same
/// field elementwise.
class ExtField : public std::enable_shared_from_this<ExtField> {
 public:
  /// Deterministic construction; throws ResourceError when p^k exceeds
  /// `budget` (default 2^20 elements).
  static std::shared_ptr<const ExtField> build(std::uint32_t p, unsigned k,
                                               std::uint64_t budget = (1u << 20));

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return order_; }

  /// Coefficients c_0..c_{k-1} of the defining polynomial z^k + sum c_i z^i.
  const std::vector<std::uint32_t>& defining_tail() const { return tail_; }

  Fq zero() const;
  Fq one() const;
  Fq generator() const;  // the class of z
  Fq from_coords(std::vector<std::uint32_t> coords) const;
  Fq from_int(long v) const;
  /// idx in [0, p^k), little-endian base-p digits; deterministic enumeration.
  Fq from_index(std::uint64_t idx) const;

 private:
  ExtField(std::uint32_t p, unsigned k, std::vector<std::uint32_t> tail);
  std::uint32_t p_;
  unsigned k_;
  std::uint64_t order_;
  std::vector<std::uint32_t> tail_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

struct ExtDomain;

/// Element of F_{p^k}: coordinate vector of length k over F_p, reduced
/// modulo the defining irreducible.
class Fq {
 public:
  using Domain = ExtDomain;
  Fq() = default;
  Fq(ExtFieldPtr field, std::vector<std::uint32_t> coords)
      : f_(std::move(field)), c_(std::move(coords)) {}

  const ExtFieldPtr& field() const { return f_; }
  ExtDomain domain() const;
  const std::vector<std::uint32_t>& coords() const { return c_; }

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const { return *this * o.inv(); }
  Fq operator-() const;

  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }
  bool operator<(const Fq& o) const;  // coordinate-lex; deterministic ordering

  bool is_zero() const;
  bool is_one() const;

  Fq inv() const;
  Fq pow(std::uint64_t e) const;
  /// a^{p^{k-1}}; the unique p-th root in a perfect field.
  Fq pth_root() const;

  Fq zero() const;
  Fq one() const;
  Fq from_int(long v) const;
  unsigned long characteristic() const { return f_->characteristic(); }

  std::string to_string() const;

 private:
  void check(const Fq& o) const;
  ExtFieldPtr f_;
  std::vector<std::uint32_t> c_;
};

/// Coefficient-domain handle for F_{p^k}.
struct ExtDomain {
  using Element = Fq;
  ExtFieldPtr field;

  ExtDomain() = default;
  explicit ExtDomain(ExtFieldPtr f) : field(std::move(f)) {}

  Fq zero() const { return field->zero(); }
  Fq one() const { return field->one(); }
  Fq from_int(long v) const { return field->from_int(v); }
  unsigned long characteristic() const { return field->characteristic(); }
  bool operator==(const ExtDomain& o) const {
    return field->characteristic() == o.field->characteristic() &&
           field->degree() == o.field->degree();
  }
  std::string name() const {
    return "GF(" + std::to_string(field->characteristic()) + "^" +
           std::to_string(field->degree()) + ")";
  }
};

inline ExtDomain Fq::domain() const { return ExtDomain(f_); }

/// Spec-level entry point mirroring the operation name.
inline ExtDomain build_extension(std::uint32_t p, unsigned k,
                                 std::uint64_t budget = (1u << 20)) {
  return ExtDomain(ExtField::build(p, k, budget));
}

}  // namespace mdg

#endif

#ifndef MDG_DETFAM_HPP
#define MDG_DETFAM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mdg/idealops.hpp"
#include "mdg/integer.hpp"
#include "mdg/mpoly.hpp"
#include "mdg/primefield.hpp"
#include "mdg/textio.hpp"

namespace mdg {

/// The n-th multidiagonal matrix family: d+1 central diagonals carrying
/// r_0..r_d (constant along each diagonal), exponent `a` for the (xy)^a
/// factor of the defining hypersurface.
template <class K>
struct MultidiagSpec {
  unsigned d = 2;                  // positive even
  std::vector<MultiPoly<K>> coeffs;  // r_0..r_d over the base ring
  unsigned a = 0;
  RingPtr<K> ring;                 // base ring A_0 of the r's

  void validate() const {
    if (d == 0 || d % 2 != 0) throw DomainError("MultidiagSpec: d must be positive even");
    if (coeffs.size() != d + 1) throw DomainError("MultidiagSpec: need d+1 coefficients");
  }
};

/// Band matrix with entries addressed inside |row - col| <= d/2; entries
/// outside the band are zero.
template <class K>
class BandMatrix {
 public:
  BandMatrix(RingPtr<K> ring, std::size_t n, unsigned half_bandwidth)
      : ring_(std::move(ring)),
        n_(n),
        half_(half_bandwidth),
        zero_(MultiPoly<K>::zero(ring_, TermOrder::grevlex())),
        store_(n * (2 * half_bandwidth + 1), zero_) {}

  std::size_t size() const { return n_; }
  unsigned half_bandwidth() const { return half_; }
  const RingPtr<K>& ring() const { return ring_; }

  bool in_band(std::size_t i, std::size_t j) const {
    return (i <= j ? j - i : i - j) <= half_;
  }

  const MultiPoly<K>& entry(std::size_t i, std::size_t j) const {
    if (!in_band(i, j)) return zero_;
    return store_[slot(i, j)];
  }

  void set_entry(std::size_t i, std::size_t j, MultiPoly<K> v) {
    if (!in_band(i, j)) {
      if (!v.is_zero()) throw DomainError("BandMatrix: write outside the band");
      return;
    }
    store_[slot(i, j)] = std::move(v);
  }

  bool operator==(const BandMatrix& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (entry(i, j) != o.entry(i, j)) return false;
    return true;
  }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    return i * (2 * half_ + 1) + (j + half_ - i);
  }

  RingPtr<K> ring_;
  std::size_t n_;
  unsigned half_;
  MultiPoly<K> zero_;
  std::vector<MultiPoly<K>> store_;
};

/// entry(i, j) = r_{d/2 + (i - j)} inside the band.
template <class K>
BandMatrix<K> build_matrix(const MultidiagSpec<K>& spec, std::size_t n) {
  spec.validate();
  if (n < 1) throw DomainError("build_matrix: n must be >= 1");
  const unsigned half = spec.d / 2;
  BandMatrix<K> m(spec.ring, n, half);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = (i > half ? i - half : 0); j < n && j <= i + half; ++j) {
      unsigned idx = half + static_cast<unsigned>(static_cast<long>(i) - static_cast<long>(j));
      m.set_entry(i, j, spec.coeffs[idx]);
    }
  }
  return m;
}

/// Exact determinant by Bareiss fraction-free elimination with row pivoting;
/// the oracle against which the family recurrences are checked.
template <class K>
MultiPoly<K> det_direct(const BandMatrix<K>& m, std::size_t cap_multivariate = 15,
                        std::size_t cap_univariate = 60) {
  const std::size_t n = m.size();
  const std::size_t cap = m.ring()->nvars() <= 1 ? cap_univariate : cap_multivariate;
  if (n > cap)
    throw ResourceError("det_direct(n=" + std::to_string(n) + ")", n, cap);
  const TermOrder ord = TermOrder::grevlex();
  std::vector<std::vector<MultiPoly<K>>> a(
      n, std::vector<MultiPoly<K>>(n, MultiPoly<K>::zero(m.ring(), ord)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.entry(i, j).reordered(ord);

  MultiPoly<K> prev = MultiPoly<K>::constant(m.ring(), m.ring()->dom.one(), ord);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly<K>::zero(m.ring(), ord);  // singular column
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly<K> num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("det_direct: Bareiss division not exact");
        a[i][j] = *q;
      }
      a[i][k] = MultiPoly<K>::zero(m.ring(), ord);
    }
    prev = a[k][k];
  }
  MultiPoly<K> det = a[n - 1][n - 1];
  return negate ? -det : det;
}

enum class FamilyId { P, Q, F, Katzman, GenericTridiag };

inline std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::P: return "P";
    case FamilyId::Q: return "Q";
    case FamilyId::F: return "F";
    case FamilyId::Katzman: return "Katzman";
    case FamilyId::GenericTridiag: return "generic";
  }
  return "?";
}

/// Natural base ring of a family over the given coefficient domain:
/// P, F, Katzman live in K[t]; Q in K[s,t]; the generic tridiagonal family in
/// K[r0,r1,r2].
template <class K>
RingPtr<K> family_ring(FamilyId id, typename K::Domain dom) {
  switch (id) {
    case FamilyId::Q:
      return make_ring<K>(std::move(dom), {"s", "t"});
    case FamilyId::GenericTridiag:
      return make_ring<K>(std::move(dom), {"r0", "r1", "r2"});
    default:
      return make_ring<K>(std::move(dom), {"t"});
  }
}

template <class K>
MultidiagSpec<K> family_spec(FamilyId id, const RingPtr<K>& ring) {
  MultidiagSpec<K> s;
  s.ring = ring;
  auto P = [&](const std::string& text) { return parse_poly<K>(ring, text); };
  switch (id) {
    case FamilyId::P:
      s.d = 2;
      s.coeffs = {P("1"), P("t"), P("1")};
      break;
    case FamilyId::Q:
      s.d = 2;
      s.coeffs = {P("s"), P("t"), P("s")};
      break;
    case FamilyId::F:
      s.d = 4;
      s.coeffs = {P("1"), P("0"), P("t"), P("0"), P("1")};
      break;
    case FamilyId::Katzman:
      s.d = 2;
      s.coeffs = {P("1"), P("-1-t"), P("t")};
      break;
    case FamilyId::GenericTridiag:
      s.d = 2;
      s.coeffs = {P("r0"), P("r1"), P("r2")};
      break;
  }
  return s;
}

/// det M_n by the family recurrence (det M_0 = 1 throughout):
///   d = 2:  det M_{n+2} = r_1 det M_{n+1} - r_0 r_2 det M_n
///   F:      det M_{n+4} = t det M_{n+3} - t det M_{n+1} + det M_n,
///           seeded with det M_1 = t, det M_2 = t^2, det M_3 = t^3 - t.
template <class K>
MultiPoly<K> det_family(FamilyId id, const RingPtr<K>& ring, std::uint64_t n) {
  const TermOrder ord = TermOrder::grevlex();
  auto P = [&](const std::string& text) { return parse_poly<K>(ring, text, ord); };
  if (id == FamilyId::F) {
    std::vector<MultiPoly<K>> window = {P("1"), P("t"), P("t^2"), P("t^3-t")};
    if (n < 4) return window[n];
    MultiPoly<K> t = P("t");
    for (std::uint64_t i = 4; i <= n; ++i) {
      MultiPoly<K> next = t * window[3] - t * window[1] + window[0];
      window[0] = std::move(window[1]);
      window[1] = std::move(window[2]);
      window[2] = std::move(window[3]);
      window[3] = std::move(next);
    }
    return window[3];
  }
  MultidiagSpec<K> spec = family_spec(id, ring);
  MultiPoly<K> r1 = spec.coeffs[1].reordered(ord);
  MultiPoly<K> r0r2 = (spec.coeffs[0] * spec.coeffs[2]).reordered(ord);
  MultiPoly<K> prev = P("1");
  if (n == 0) return prev;
  MultiPoly<K> cur = r1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    MultiPoly<K> next = r1 * cur - r0r2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Closed form for the d = 2 generic family:
///   det M_n = sum_i (-1)^i C(n-i, i) r_1^(n-2i) (r_0 r_2)^i,
/// checked against the recurrence over ZZ (Rational coefficients).
inline bool closed_form_check(unsigned n) {
  if (n > 200) throw DomainError("closed_form_check: n above configured cap 200");
  auto ring = family_ring<Rational>(FamilyId::GenericTridiag, RationalDomain{});
  const TermOrder ord = TermOrder::grevlex();
  MultiPoly<Rational> viarec = det_family(FamilyId::GenericTridiag, ring, n);
  MultiPoly<Rational> r1 = parse_poly<Rational>(ring, "r1", ord);
  MultiPoly<Rational> r0r2 = parse_poly<Rational>(ring, "r0*r2", ord);
  MultiPoly<Rational> sum = MultiPoly<Rational>::zero(ring, ord);
  for (unsigned i = 0; 2 * i <= n; ++i) {
    Rational c(Integer::binomial(n - i, i), Integer(1));
    if (i % 2) c = -c;
    sum = sum + r1.pow(n - 2 * i) * r0r2.pow(i) * c;
  }
  return sum == viarec;
}

/// Generating-function truncation: denom(x) * sum_{n<=N} det M_n x^n = 1
/// modulo x^(N+1).  Denominators: 1 - r_1 x + r_0 r_2 x^2 for d = 2 families,
/// 1 - t x + t x^3 - x^4 for F.
template <class K>
bool gf_truncation_check(FamilyId id, const RingPtr<K>& ring, unsigned N) {
  if (N > 500) throw DomainError("gf_truncation_check: N above configured cap 500");
  const TermOrder ord = TermOrder::grevlex();
  auto P = [&](const std::string& text) { return parse_poly<K>(ring, text, ord); };
  std::vector<MultiPoly<K>> denom;
  if (id == FamilyId::F) {
    denom = {P("1"), P("-t"), P("0"), P("t"), P("-1")};
  } else {
    MultidiagSpec<K> spec = family_spec(id, ring);
    denom = {P("1"), -spec.coeffs[1].reordered(ord),
             (spec.coeffs[0] * spec.coeffs[2]).reordered(ord)};
  }
  std::vector<MultiPoly<K>> dets;
  dets.reserve(N + 1);
  for (unsigned n = 0; n <= N; ++n) dets.push_back(det_family(id, ring, n));
  for (unsigned n = 0; n <= N; ++n) {
    MultiPoly<K> conv = MultiPoly<K>::zero(ring, ord);
    for (unsigned k = 0; k < denom.size() && k <= n; ++k)
      conv = conv + denom[k] * dets[n - k];
    if (n == 0) {
      if (!conv.is_one()) return false;
    } else if (!conv.is_zero()) {
      return false;
    }
  }
  return true;
}

/// det M_{p^e-1} = (det M_{p-1})^(1+p+...+p^(e-1)) over F_p, exactly; checked
/// in the generic ring F_p[r0,r1,r2] or the (s,t) specialization.
inline bool frobenius_det_identity(std::uint32_t p, unsigned e, bool q_specialization,
                                   std::uint64_t size_cap = (1u << 15)) {
  FpDomain dom(p);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  if (q > size_cap)
    throw ResourceError("frobenius_det_identity", q, size_cap);
  FamilyId id = q_specialization ? FamilyId::Q : FamilyId::GenericTridiag;
  auto ring = family_ring<Fp>(id, dom);
  MultiPoly<Fp> lhs = det_family(id, ring, q - 1);
  MultiPoly<Fp> base = det_family(id, ring, p - 1);
  std::uint64_t exponent = (q - 1) / (p - 1);  // 1 + p + ... + p^(e-1)
  return lhs == base.pow(exponent);
}

/// Q_n(s,t) = s^n P_n(t/s): the degree-n homogenization of P_n equals Q_n.
inline bool homogenize_check(unsigned n) {
  if (n > 500) throw DomainError("homogenize_check: n above configured cap 500");
  auto qring = family_ring<Rational>(FamilyId::Q, RationalDomain{});
  MultiPoly<Rational> qn = det_family(FamilyId::Q, qring, n);
  auto pring = family_ring<Rational>(FamilyId::P, RationalDomain{});
  MultiPoly<Rational> pn = det_family(FamilyId::P, pring, n);
  // homogenize: c t^i -> c s^(n-i) t^i
  std::vector<MultiPoly<Rational>::Term> ts;
  for (const auto& [c, m] : pn.terms()) {
    Monomial big(2);
    big[1] = m[0];
    big[0] = n - m[0];
    ts.emplace_back(c, big);
  }
  MultiPoly<Rational> hom =
      MultiPoly<Rational>::from_terms(qring, std::move(ts), TermOrder::grevlex());
  return hom == qn;
}

/// Presentation matrix of the graded piece [A/(x^n, y^n)]_{n-1+a+d/2}, built
/// by brute force: rows are the relations
///   (xy)^a (r_0 x^d + ... + r_d y^d) x^i y^(n-1-a-d/2-i),
/// reduced modulo (x^n, y^n), with columns indexed by the monomial generators
/// x^(a+d/2) y^(n-1), ..., x^(n-1) y^(a+d/2) in ascending x-exponent.
template <class K>
BandMatrix<K> presentation_matrix(const MultidiagSpec<K>& spec, std::size_t n) {
  spec.validate();
  const unsigned half = spec.d / 2;
  if (n <= spec.a + spec.d)
    throw DomainError("presentation_matrix: need n > a + d");
  const std::size_t msize = n - spec.a - half;

  // working ring: base variables plus x, y
  std::vector<std::string> vars = spec.ring->vars;
  const std::size_t xi = vars.size(), yi = vars.size() + 1;
  vars.push_back("x");
  vars.push_back("y");
  RingPtr<K> big = make_ring<K>(spec.ring->dom, vars);
  const TermOrder ord = TermOrder::grevlex();
  std::vector<std::size_t> slot(spec.ring->nvars());
  for (std::size_t i = 0; i < slot.size(); ++i) slot[i] = i;

  MultiPoly<K> relation = MultiPoly<K>::zero(big, ord);
  for (unsigned k = 0; k <= spec.d; ++k) {
    Monomial m(big->nvars());
    m[xi] = spec.a + (spec.d - k);
    m[yi] = spec.a + k;
    relation = relation + spec.coeffs[k].mapped_to(big, slot, ord) *
                              MultiPoly<K>::term(big, big->dom.one(), m, ord);
  }

  BandMatrix<K> out(spec.ring, msize, half);
  for (std::size_t i = 0; i < msize; ++i) {
    Monomial shift(big->nvars());
    shift[xi] = static_cast<unsigned>(i);
    shift[yi] = static_cast<unsigned>(msize - 1 - i);
    MultiPoly<K> rel = relation.scaled(big->dom.one(), shift);
    // reduce modulo (x^n, y^n) and collect generator coefficients
    for (const auto& [c, m] : rel.terms()) {
      if (m[xi] >= n || m[yi] >= n) continue;  // killed by (x^n, y^n)
      // generator index j from the x-exponent a + d/2 + j
      long j = static_cast<long>(m[xi]) - static_cast<long>(spec.a + half);
      if (j < 0 || j >= static_cast<long>(msize) ||
          m[yi] != n - 1 - static_cast<unsigned>(j))
        throw std::logic_error("presentation_matrix: stray monomial outside generators");
      Monomial base(spec.ring->nvars());
      for (std::size_t v = 0; v < spec.ring->nvars(); ++v) base[v] = m[v];
      MultiPoly<K> cur = out.entry(i, static_cast<std::size_t>(j));
      out.set_entry(i, static_cast<std::size_t>(j),
                    cur + MultiPoly<K>::term(spec.ring, c, base, TermOrder::grevlex()));
    }
  }
  return out;
}

/// Exact rank over F_p by Gaussian elimination.
std::size_t rank_fp(std::vector<std::vector<Fp>> m);

/// For every t0 in F_p: det M_n(t0) = 0  iff  rank M_n(t0) < n (the cokernel
/// is nonzero exactly on the vanishing locus of the determinant).
bool support_consistency(const MultidiagSpec<Fp>& spec, std::size_t n, std::uint32_t p);

/// Lemma-style root identity for the F family at odd n:
///   F_n(xi + 1/xi) * xi^n (xi^2 - 1)^2 = (xi^(n+3) - 1)(xi^(n+1) - 1)
/// over all xi in F_{p^2}^* with xi != +-1.
bool root_formula_check_F(unsigned n, std::uint32_t p);

}  // namespace mdg

#endif

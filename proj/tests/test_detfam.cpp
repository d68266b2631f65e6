#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mdg/detfam.hpp"
#include "mdg/factor.hpp"

using namespace mdg;

namespace {

using QP = MultiPoly<Rational>;

// cofactor-expansion determinant, the oracle for the Bareiss oracle (n <= 6)
template <class K>
MultiPoly<K> det_naive(const BandMatrix<K>& m, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols) {
  const TermOrder ord = TermOrder::grevlex();
  if (rows.empty()) return MultiPoly<K>::constant(m.ring(), m.ring()->dom.one(), ord);
  MultiPoly<K> acc = MultiPoly<K>::zero(m.ring(), ord);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const MultiPoly<K>& e = m.entry(rows[0], cols[k]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    MultiPoly<K> minor = det_naive(m, sub_rows, sub_cols);
    MultiPoly<K> contrib = e.reordered(ord) * minor;
    acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
  }
  return acc;
}

template <class K>
MultiPoly<K> det_naive(const BandMatrix<K>& m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.size(); ++i) idx.push_back(i);
  return det_naive(m, idx, idx);
}

}  // namespace

TEST_CASE("build_matrix spec examples") {
  auto ring = family_ring<Rational>(FamilyId::Q, RationalDomain{});
  auto spec = family_spec(FamilyId::Q, ring);
  BandMatrix<Rational> m2 = build_matrix(spec, 2);
  CHECK(m2.entry(0, 0) == parse_poly<Rational>(ring, "t"));
  CHECK(m2.entry(0, 1) == parse_poly<Rational>(ring, "s"));
  CHECK(m2.entry(1, 0) == parse_poly<Rational>(ring, "s"));
  CHECK(m2.entry(1, 1) == parse_poly<Rational>(ring, "t"));

  BandMatrix<Rational> m1 = build_matrix(spec, 1);
  CHECK(m1.entry(0, 0) == parse_poly<Rational>(ring, "t"));

  auto fring = family_ring<Rational>(FamilyId::F, RationalDomain{});
  auto fspec = family_spec(FamilyId::F, fring);
  BandMatrix<Rational> f3 = build_matrix(fspec, 3);
  CHECK(f3.entry(0, 0) == parse_poly<Rational>(fring, "t"));
  CHECK(f3.entry(0, 1).is_zero());
  CHECK(f3.entry(0, 2) == parse_poly<Rational>(fring, "1"));
  CHECK(f3.entry(1, 1) == parse_poly<Rational>(fring, "t"));
  CHECK(f3.entry(2, 0) == parse_poly<Rational>(fring, "1"));
}

TEST_CASE("det_direct spec examples") {
  // identity 3x3
  auto ring = make_ring<Rational>(RationalDomain{}, {"t"});
  BandMatrix<Rational> eye(ring, 3, 0);
  for (std::size_t i = 0; i < 3; ++i)
    eye.set_entry(i, i, parse_poly<Rational>(ring, "1"));
  CHECK(det_direct(eye) == parse_poly<Rational>(ring, "1"));

  auto qring = family_ring<Rational>(FamilyId::Q, RationalDomain{});
  auto qspec = family_spec(FamilyId::Q, qring);
  CHECK(det_direct(build_matrix(qspec, 2)) == parse_poly<Rational>(qring, "t^2-s^2"));

  auto fring = family_ring<Rational>(FamilyId::F, RationalDomain{});
  auto fspec = family_spec(FamilyId::F, fring);
  CHECK(det_direct(build_matrix(fspec, 3)) == parse_poly<Rational>(fring, "t^3-t"));

  BandMatrix<Rational> big(ring, 100, 0);
  CHECK_THROWS_AS(det_direct(big), ResourceError);
}

TEST_CASE("det_direct agrees with cofactor expansion on random band matrices") {
  auto ring = make_ring<Rational>(RationalDomain{}, {"s", "t"});
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng() % 4;
    unsigned half = 1 + static_cast<unsigned>(rng() % 2);
    BandMatrix<Rational> m(ring, n, half);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!m.in_band(i, j)) continue;
        std::vector<MultiPoly<Rational>::Term> ts;
        Monomial mono(2);
        mono[0] = static_cast<unsigned>(rng() % 2);
        mono[1] = static_cast<unsigned>(rng() % 2);
        ts.emplace_back(Rational(static_cast<long>(rng() % 5) - 2), mono);
        m.set_entry(i, j, MultiPoly<Rational>::from_terms(ring, ts, TermOrder::grevlex()));
      }
    CHECK(det_direct(m) == det_naive(m));
  }
}

TEST_CASE("det_family spec examples") {
  auto pring = family_ring<Rational>(FamilyId::P, RationalDomain{});
  CHECK(det_family(FamilyId::P, pring, 4) == parse_poly<Rational>(pring, "t^4-3*t^2+1"));

  auto kring = family_ring<Rational>(FamilyId::Katzman, RationalDomain{});
  CHECK(det_family(FamilyId::Katzman, kring, 2) ==
        parse_poly<Rational>(kring, "t^2+t+1"));

  auto qring = family_ring<Rational>(FamilyId::Q, RationalDomain{});
  CHECK(det_family(FamilyId::Q, qring, 3) == parse_poly<Rational>(qring, "t^3-2*s^2*t"));

  auto fring = family_ring<Rational>(FamilyId::F, RationalDomain{});
  CHECK(det_family(FamilyId::F, fring, 0) == parse_poly<Rational>(fring, "1"));
  CHECK(det_family(FamilyId::F, fring, 1) == parse_poly<Rational>(fring, "t"));
  CHECK(det_family(FamilyId::F, fring, 2) == parse_poly<Rational>(fring, "t^2"));
  CHECK(det_family(FamilyId::F, fring, 3) == parse_poly<Rational>(fring, "t^3-t"));
}

TEST_CASE("oracle agreement: det_family equals det_direct") {
  // multivariate families to n = 12, univariate to n = 40
  auto qring = family_ring<Rational>(FamilyId::Q, RationalDomain{});
  auto qspec = family_spec(FamilyId::Q, qring);
  for (std::size_t n = 1; n <= 12; ++n)
    CHECK(det_family(FamilyId::Q, qring, n) == det_direct(build_matrix(qspec, n)));

  auto gring = family_ring<Rational>(FamilyId::GenericTridiag, RationalDomain{});
  auto gspec = family_spec(FamilyId::GenericTridiag, gring);
  for (std::size_t n = 1; n <= 12; ++n)
    CHECK(det_family(FamilyId::GenericTridiag, gring, n) ==
          det_direct(build_matrix(gspec, n)));

  for (FamilyId id : {FamilyId::P, FamilyId::F, FamilyId::Katzman}) {
    auto ring = family_ring<Rational>(id, RationalDomain{});
    auto spec = family_spec(id, ring);
    for (std::size_t n = 1; n <= 40; ++n)
      CHECK(det_family(id, ring, n) == det_direct(build_matrix(spec, n)));
  }
}

TEST_CASE("P_n monic of degree n; Q_n homogeneous; Q_n(0,t) = t^n") {
  auto pring = family_ring<Rational>(FamilyId::P, RationalDomain{});
  auto qring = family_ring<Rational>(FamilyId::Q, RationalDomain{});
  for (unsigned n = 1; n <= 200; ++n) {
    QP qn = det_family(FamilyId::Q, qring, n);
    CHECK(qn.is_homogeneous({1, 1}));
    // coprime to s: setting s = 0 leaves t^n
    QP at0 = qn.substituted(0, Rational(0));
    CHECK(at0 == QP::var(qring, 1u, n));
  }
  for (unsigned n = 1; n <= 60; ++n) {
    auto pn = det_family(FamilyId::P, pring, n).to_unipoly(0);
    CHECK(pn.degree() == static_cast<int>(n));
    CHECK(pn.lead().is_one());
  }
}

TEST_CASE("Katzman identity det M_n (t-1) = (-1)^n (t^(n+1) - 1)") {
  auto ring = family_ring<Rational>(FamilyId::Katzman, RationalDomain{});
  for (unsigned n = 1; n <= 40; ++n) {
    QP lhs = det_family(FamilyId::Katzman, ring, n) * parse_poly<Rational>(ring, "t-1");
    QP rhs = parse_poly<Rational>(ring, "t^" + std::to_string(n + 1) + "-1");
    if (n % 2) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("closed_form_check examples") {
  CHECK(closed_form_check(0));
  CHECK(closed_form_check(2));
  CHECK(closed_form_check(25));
}

TEST_CASE("gf_truncation_check examples") {
  auto pring = family_ring<Rational>(FamilyId::P, RationalDomain{});
  CHECK(gf_truncation_check(FamilyId::P, pring, 10));
  CHECK(gf_truncation_check(FamilyId::P, pring, 0));
  auto fring = family_ring<Rational>(FamilyId::F, RationalDomain{});
  CHECK(gf_truncation_check(FamilyId::F, fring, 10));
  auto kring = family_ring<Rational>(FamilyId::Katzman, RationalDomain{});
  CHECK(gf_truncation_check(FamilyId::Katzman, kring, 10));
}

TEST_CASE("frobenius_det_identity examples") {
  CHECK(frobenius_det_identity(2, 2, true));
  CHECK(frobenius_det_identity(3, 2, false));
  CHECK(frobenius_det_identity(5, 1, true));   // e = 1 tautological
  CHECK(frobenius_det_identity(3, 2, true));
}

TEST_CASE("homogenize_check examples") {
  CHECK(homogenize_check(1));
  CHECK(homogenize_check(3));
  CHECK(homogenize_check(100));
}

TEST_CASE("presentation_matrix spec examples") {
  // d=2, r=(s,t,s), a=0, n=3 -> M_2 = [[t,s],[s,t]]
  auto qring = family_ring<Rational>(FamilyId::Q, RationalDomain{});
  auto qspec = family_spec(FamilyId::Q, qring);
  BandMatrix<Rational> pm = presentation_matrix(qspec, 3);
  CHECK(pm == build_matrix(qspec, 2));

  // d=2, Katzman coefficients, a=1, n=4 -> 1x1 matrix [-(1+t)]
  auto kring = family_ring<Rational>(FamilyId::Katzman, RationalDomain{});
  auto kspec = family_spec(FamilyId::Katzman, kring);
  kspec.a = 1;
  BandMatrix<Rational> km = presentation_matrix(kspec, 4);
  REQUIRE(km.size() == 1);
  CHECK(km.entry(0, 0) == parse_poly<Rational>(kring, "-1-t"));

  // d=4 family, a=0, n=7 -> M_5
  auto fring = family_ring<Rational>(FamilyId::F, RationalDomain{});
  auto fspec = family_spec(FamilyId::F, fring);
  CHECK(presentation_matrix(fspec, 7) == build_matrix(fspec, 5));

  CHECK_THROWS_AS(presentation_matrix(qspec, 2), DomainError);
}

TEST_CASE("presentation_matrix equals build_matrix across the grid") {
  // d = 2 with a in {0, 1} and d = 4 with a = 0, n <= 12, over QQ and F_5
  auto run = [&](auto domain) {
    using K = typename decltype(domain)::Element;
    for (unsigned a : {0u, 1u}) {
      auto ring = family_ring<K>(FamilyId::Q, domain);
      auto spec = family_spec(FamilyId::Q, ring);
      spec.a = a;
      for (std::size_t n = spec.a + spec.d + 1; n <= 12; ++n)
        CHECK(presentation_matrix(spec, n) == build_matrix(spec, n - a - 1));
    }
    auto fring = family_ring<K>(FamilyId::F, domain);
    auto fspec = family_spec(FamilyId::F, fring);
    for (std::size_t n = fspec.d + 1; n <= 12; ++n)
      CHECK(presentation_matrix(fspec, n) == build_matrix(fspec, n - 2));
  };
  run(RationalDomain{});
  run(FpDomain(5));
}

TEST_CASE("support_consistency examples") {
  auto p5 = FpDomain(5);
  auto pring = family_ring<Fp>(FamilyId::P, p5);
  auto pspec = family_spec(FamilyId::P, pring);
  CHECK(support_consistency(pspec, 3, 5));
  CHECK(support_consistency(pspec, 1, 5));

  auto p7 = FpDomain(7);
  auto fring = family_ring<Fp>(FamilyId::F, p7);
  auto fspec = family_spec(FamilyId::F, fring);
  CHECK(support_consistency(fspec, 3, 7));

  auto kring = family_ring<Fp>(FamilyId::Katzman, FpDomain(3));
  auto kspec = family_spec(FamilyId::Katzman, kring);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(support_consistency(kspec, n, 3));
}

TEST_CASE("root_formula_check_F examples") {
  CHECK(root_formula_check_F(1, 5));
  CHECK(root_formula_check_F(3, 3));
  CHECK(root_formula_check_F(7, 5));
  CHECK_THROWS_AS(root_formula_check_F(4, 5), DomainError);

  // Lemma roots2(3) companion: F_7 over F_3 has 7 distinct roots (q = 9)
  auto f3ring = family_ring<Fp>(FamilyId::F, FpDomain(3));
  auto f7 = det_family(FamilyId::F, f3ring, 7).to_unipoly(0);
  CHECK(distinct_root_count(f7) == 7);
}

TEST_CASE("F-family base cases cross-checked against det_direct") {
  auto fring = family_ring<Rational>(FamilyId::F, RationalDomain{});
  auto fspec = family_spec(FamilyId::F, fring);
  CHECK(det_family(FamilyId::F, fring, 1) == det_direct(build_matrix(fspec, 1)));
  CHECK(det_family(FamilyId::F, fring, 2) == det_direct(build_matrix(fspec, 2)));
  CHECK(det_family(FamilyId::F, fring, 3) == det_direct(build_matrix(fspec, 3)));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "mdg/factor.hpp"
#include "mdg/integer.hpp"
#include "mdg/unipoly.hpp"

using namespace mdg;

namespace {

using QPoly = UniPoly<Rational>;
using PPoly = UniPoly<Fp>;

QPoly qpoly(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPoly::from_coeffs(RationalDomain{}, std::move(c));
}

PPoly ppoly(const FpDomain& dom, std::vector<long> coeffs) {
  std::vector<Fp> c;
  for (long v : coeffs) c.push_back(dom.from_int(v));
  return PPoly::from_coeffs(dom, std::move(c));
}

// P_0 = 1, P_1 = t, P_{n+2} = t P_{n+1} - P_n  (recurrence-only helper; the
// production family code lives in detfam and is tested against this oracle)
template <class K, class D>
UniPoly<K> pfam(const D& dom, unsigned n) {
  UniPoly<K> prev = UniPoly<K>::constant(dom, dom.one());
  UniPoly<K> cur = UniPoly<K>::gen(dom);
  if (n == 0) return prev;
  for (unsigned i = 1; i < n; ++i) {
    UniPoly<K> next = UniPoly<K>::gen(dom) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Test-only desk factorizer over QQ for degree <= 3 monic integer polynomials:
// rational-root test (monic => integer roots divide the constant term), then a
// discriminant certificate for the remaining quadratic.
Factorization<Rational> q_desk_factor(QPoly f) {
  Factorization<Rational> out;
  out.unit = f.lead();
  f = f.monic();
  REQUIRE(f.degree() <= 3);
  auto add = [&](const QPoly& g) {
    for (auto& [h, m] : out.factors) {
      if (h == g) {
        ++m;
        return;
      }
    }
    out.factors.emplace_back(g, 1);
  };
  // strip integer roots
  bool progress = true;
  while (f.degree() > 1 && progress) {
    progress = false;
    Rational c0 = f.coeff(0);
    if (c0.is_zero()) {
      add(QPoly::gen(RationalDomain{}));
      f = f.divexact(QPoly::gen(RationalDomain{}));
      progress = true;
      continue;
    }
    long bound = std::abs(c0.numerator().to_long());
    for (long r = -bound; r <= bound; ++r) {
      if (r == 0 || bound % std::abs(r) != 0) continue;
      if (f.eval(Rational(r)).is_zero()) {
        QPoly lin = qpoly({-r, 1});
        add(lin);
        f = f.divexact(lin);
        progress = true;
        break;
      }
    }
  }
  if (f.degree() == 1) {
    add(f);
  } else if (f.degree() == 2) {
    // monic integer quadratic with no integer root is irreducible over QQ
    // (Gauss: a rational factorization would force monic integer linear
    // factors, i.e. an integer root, and those were stripped above)
    add(f);
  } else {
    REQUIRE(f.degree() == 0);
  }
  return out;
}

}  // namespace

TEST_CASE("poly arithmetic spec examples") {
  RationalDomain q;
  // gcd(t^2 - 1, t - 1) = t - 1
  CHECK(QPoly::gcd(qpoly({-1, 0, 1}), qpoly({-1, 1})) == qpoly({-1, 1}));
  // divrem(t^3, t^2) = (t, 0)
  auto [quo, rem] = qpoly({0, 0, 0, 1}).divrem(qpoly({0, 0, 1}));
  CHECK(quo == qpoly({0, 1}));
  CHECK(rem.is_zero());
  // gcd(P3, P3') over QQ with P3 = t^3 - 2t is 1 (hand Euclid: P3' = 3t^2 - 2,
  // P3 mod P3' = -(4/3)t, then 3t^2 - 2 mod t = -2, constant => coprime)
  QPoly p3 = qpoly({0, -2, 0, 1});
  CHECK(pfam<Rational>(q, 3) == p3);
  CHECK(QPoly::gcd(p3, p3.derivative()).is_one());
  CHECK_THROWS_AS(qpoly({1}).divrem(QPoly(q)), DivisionByZeroError);
}

TEST_CASE("divrem identity on random rational polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> fc, gc;
    for (int i = 0; i < 8; ++i) fc.emplace_back(static_cast<long>(rng() % 21) - 10);
    for (int i = 0; i < 4; ++i) gc.emplace_back(static_cast<long>(rng() % 21) - 10);
    QPoly f = QPoly::from_coeffs(RationalDomain{}, fc);
    QPoly g = QPoly::from_coeffs(RationalDomain{}, gc);
    if (g.is_zero()) continue;
    auto [quo, rem] = f.divrem(g);
    CHECK(quo * g + rem == f);
    CHECK(rem.degree() < g.degree());
  }
}

TEST_CASE("squarefree_part spec examples") {
  RationalDomain q;
  // (t-1)^2 (t+1) -> t^2 - 1
  QPoly f = qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({1, 1});
  CHECK(squarefree_part(f) == qpoly({-1, 0, 1}));

  // t^p - t over F_p is already squarefree
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FpDomain dom(p);
    PPoly tp = PPoly::monomial(dom, dom.one(), p) - PPoly::gen(dom);
    CHECK(squarefree_part(tp) == tp.monic());
    CHECK(distinct_root_count(tp) == p);
  }

  // P6 over F_2: squarefree part of degree 3 (Lemma-style q/2 - 1 with q = 8)
  FpDomain f2(2);
  PPoly p6 = pfam<Fp>(f2, 6);
  CHECK(squarefree_part(p6).degree() == 3);
  CHECK(distinct_root_count(p6) == 3);
}

TEST_CASE("squarefree_part brute-force root oracle for P6 over F_2") {
  FpDomain f2(2);
  PPoly p6 = pfam<Fp>(f2, 6);
  // Every root of a degree-6 polynomial over F_2 has minimal-field degree
  // d <= 6.  With r_k = #roots in F_{2^k} and m_d = #roots of exact degree d,
  // r_k = sum of m_d over d | k; solve for m_d and total the counts.
  std::size_t r[7], m[7];
  for (unsigned k = 1; k <= 6; ++k) r[k] = roots_in_extension(p6, k).size();
  std::size_t total = 0;
  for (unsigned d = 1; d <= 6; ++d) {
    m[d] = r[d];
    for (unsigned e = 1; e < d; ++e)
      if (d % e == 0) m[d] -= m[e];
    total += m[d];
  }
  CHECK(total == 3);
  CHECK(distinct_root_count(p6) == total);
}

TEST_CASE("char-p squarefree with wild multiplicities") {
  FpDomain f3(3);
  // f = (t-1)^3 (t+1)^2 t over F_3: derivative loses the cubed factor
  PPoly f = ppoly(f3, {-1, 1}).pow(3) * ppoly(f3, {1, 1}).pow(2) * PPoly::gen(f3);
  PPoly sf = squarefree_part(f);
  PPoly expect = (ppoly(f3, {-1, 1}) * ppoly(f3, {1, 1}) * PPoly::gen(f3)).monic();
  CHECK(sf == expect);

  // pure p-th power: (t^2 + 1)^3 over F_3
  PPoly g = ppoly(f3, {1, 0, 1}).pow(3);
  CHECK(squarefree_part(g) == ppoly(f3, {1, 0, 1}).monic());

  // (t-1)^4 -> 1 distinct root
  CHECK(distinct_root_count(ppoly(f3, {-1, 1}).pow(4)) == 1);
}

TEST_CASE("factor spec examples") {
  FpDomain f5(5), f3(3);
  // t^2 - 2 irreducible over F_5 (2 is not a square mod 5: squares are 0,1,4)
  auto fac1 = factor(ppoly(f5, {-2, 0, 1}));
  REQUIRE(fac1.factors.size() == 1);
  CHECK(fac1.factors[0].first == ppoly(f5, {-2, 0, 1}).monic());
  CHECK(fac1.factors[0].second == 1);

  // P3 = t^3 - 2t over F_5 -> t (t^2 - 2); trial division over all 5 linear
  // factors finds only root 0
  PPoly p3 = pfam<Fp>(f5, 3);
  for (std::uint32_t r = 1; r < 5; ++r) CHECK_FALSE(p3.eval(f5.element(r)).is_zero());
  CHECK(p3.eval(f5.element(0)).is_zero());
  auto fac2 = factor(p3);
  REQUIRE(fac2.factors.size() == 2);
  CHECK(fac2.factors[0].first == PPoly::gen(f5));
  CHECK(fac2.factors[1].first == ppoly(f5, {-2, 0, 1}));

  // t^5 - 1 over F_3 = (t - 1)(t^4 + t^3 + t^2 + t + 1): brute force confirms
  // the quartic has no roots in F_3 and no quadratic factor divides it
  PPoly t5m1 = PPoly::monomial(f3, f3.one(), 5) - PPoly::constant(f3, f3.one());
  auto fac3 = factor(t5m1);
  REQUIRE(fac3.factors.size() == 2);
  CHECK(fac3.factors[0].first == ppoly(f3, {-1, 1}));
  CHECK(fac3.factors[1].first == ppoly(f3, {1, 1, 1, 1, 1}));
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) {
      PPoly quad = ppoly(f3, {static_cast<long>(a), static_cast<long>(b), 1});
      CHECK_FALSE((ppoly(f3, {1, 1, 1, 1, 1}) % quad).is_zero());
    }
}

TEST_CASE("factor recomposition on random polynomials") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    FpDomain dom(p);
    std::mt19937_64 rng(1000 + p);
    for (int trial = 0; trial < 250; ++trial) {
      int deg = 1 + static_cast<int>(rng() % 30);
      std::vector<Fp> c;
      for (int i = 0; i < deg; ++i)
        c.push_back(dom.element(static_cast<std::uint32_t>(rng() % p)));
      c.push_back(dom.element(1 + static_cast<std::uint32_t>(rng() % (p - 1 ? p - 1 : 1))));
      PPoly f = PPoly::from_coeffs(dom, c);
      auto fac = factor(f, 99);
      CHECK(fac.recompose(dom) == f);
      // factors pairwise distinct and sorted
      for (std::size_t i = 1; i < fac.factors.size(); ++i)
        CHECK(PPoly::canonical_less(fac.factors[i - 1].first, fac.factors[i].first));
    }
  }
}

TEST_CASE("reported factors pass the gcd irreducibility certificate") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FpDomain dom(p);
    std::mt19937_64 rng(55 + p);
    for (int trial = 0; trial < 20; ++trial) {
      int deg = 2 + static_cast<int>(rng() % 12);
      std::vector<Fp> c;
      for (int i = 0; i < deg; ++i)
        c.push_back(dom.element(static_cast<std::uint32_t>(rng() % p)));
      c.push_back(dom.one());
      PPoly f = PPoly::from_coeffs(dom, c);
      for (const auto& [irr, mult] : factor(f).factors) {
        (void)mult;
        const int m = irr.degree();
        const PPoly t = PPoly::gen(dom) % irr;
        PPoly frob = t;
        for (int k = 1; k <= m; ++k) {
          frob = detail::poly_pow_mod(frob, p, irr);  // t^(p^k) mod irr
          if (k < m)
            CHECK(PPoly::gcd(frob - t, irr).is_one());
          else
            CHECK(frob == t);
        }
      }
    }
  }
}

TEST_CASE("distinct_root_count examples and additivity on coprime pairs") {
  FpDomain f3(3), f2(2);
  CHECK(distinct_root_count(pfam<Fp>(f3, 7)) == 7);   // q = 9
  CHECK(distinct_root_count(pfam<Fp>(f2, 6)) == 3);   // q = 8, q/2 - 1

  std::mt19937_64 rng(17);
  FpDomain f5(5);
  int done = 0;
  while (done < 40) {
    std::vector<Fp> a, b;
    for (int i = 0; i <= 5; ++i) a.push_back(f5.element(static_cast<std::uint32_t>(rng() % 5)));
    for (int i = 0; i <= 5; ++i) b.push_back(f5.element(static_cast<std::uint32_t>(rng() % 5)));
    PPoly f = PPoly::from_coeffs(f5, a), g = PPoly::from_coeffs(f5, b);
    if (f.is_zero() || g.is_zero() || !PPoly::gcd(f, g).is_one()) continue;
    CHECK(distinct_root_count(f * g) == distinct_root_count(f) + distinct_root_count(g));
    ++done;
  }
}

TEST_CASE("roots_in_extension spec examples") {
  FpDomain f3(3), f5(5);
  // t^2 + 1 over F_3: -1 is not a square in F_3 but is in F_9
  CHECK(roots_in_extension(ppoly(f3, {1, 0, 1}), 1).empty());
  CHECK(roots_in_extension(ppoly(f3, {1, 0, 1}), 2).size() == 2);

  auto ones = roots_in_extension(ppoly(f5, {-1, 1}), 3);
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].is_one());

  auto zeros = roots_in_extension(pfam<Fp>(f5, 3), 1);
  REQUIRE(zeros.size() == 1);
  CHECK(zeros[0].is_zero());

  CHECK_THROWS_AS(roots_in_extension(ppoly(f3, {1, 0, 1}), 30), ResourceError);
}

TEST_CASE("root formula: P_n(xi + 1/xi) * xi^n (xi^2 - 1) = xi^(2n+2) - 1") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto F = ExtField::build(p, 2);
    FpDomain dom(p);
    for (unsigned n = 1; n <= 20; ++n) {
      PPoly pn = pfam<Fp>(dom, n);
      for (std::uint64_t idx = 1; idx < F->order(); ++idx) {
        Fq xi = F->from_index(idx);
        if (xi == F->one() || xi == -F->one()) continue;
        Fq lhs = pn.eval_mapped(xi + xi.inv(), [&](Fp c) { return F->from_int(c.value()); });
        lhs = lhs * xi.pow(n) * (xi * xi - F->one());
        Fq rhs = xi.pow(2 * n + 2) - F->one();
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("P_n(2) = n + 1 and P_n(-2) = (-1)^n (n + 1) over QQ, n <= 50") {
  RationalDomain q;
  for (unsigned n = 0; n <= 50; ++n) {
    QPoly pn = pfam<Rational>(q, n);
    CHECK(pn.eval(Rational(2)) == Rational(static_cast<long>(n + 1)));
    Rational expect = Rational(static_cast<long>(n + 1)) * (n % 2 ? Rational(-1) : Rational(1));
    CHECK(pn.eval(Rational(-2)) == expect);
  }
}

TEST_CASE("cumulative_factor_set over QQ (desk oracle) and constants") {
  RationalDomain q;
  auto table = cumulative_factor_set<Rational>(
      [&](std::uint64_t n) { return pfam<Rational>(q, static_cast<unsigned>(n)); },
      {1, 2, 3}, [](const QPoly& f) { return q_desk_factor(f); });
  // P1 = t; P2 = (t-1)(t+1); P3 = t (t^2-2): cumulative 1, 3, 4
  REQUIRE(table.size() == 3);
  CHECK(table[0].second == 1);
  CHECK(table[1].second == 3);
  CHECK(table[2].second == 4);

  auto flat = cumulative_factor_set<Rational>(
      [&](std::uint64_t) { return QPoly::gen(q); }, {0, 1, 2},
      [](const QPoly& f) { return q_desk_factor(f); });
  for (const auto& [idx, cnt] : flat) CHECK(cnt == 1);
}

TEST_CASE("cumulative factors of P_{q-2} over F_3 strictly increase") {
  FpDomain f3(3);
  auto table = cumulative_factor_set<Fp>(
      [&](std::uint64_t n) { return pfam<Fp>(f3, static_cast<unsigned>(n)); },
      {1, 7, 25},  // q = 3, 9, 27
      [](const PPoly& f) { return factor(f); });
  REQUIRE(table.size() == 3);
  CHECK(table[0].second < table[1].second);
  CHECK(table[1].second < table[2].second);
}

TEST_CASE("factorization is deterministic for a fixed seed") {
  FpDomain f7(7);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Fp> c;
    for (int i = 0; i < 20; ++i) c.push_back(f7.element(static_cast<std::uint32_t>(rng() % 7)));
    c.push_back(f7.one());
    PPoly f = PPoly::from_coeffs(f7, c);
    auto a = factor(f, 1234), b = factor(f, 1234);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      CHECK(a.factors[i].first == b.factors[i].first);
      CHECK(a.factors[i].second == b.factors[i].second);
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>

#include "mdg/extfield.hpp"
#include "mdg/integer.hpp"
#include "mdg/primefield.hpp"

using namespace mdg;

TEST_CASE("Integer basics and canonical zero") {
  Integer a(12), b(-12);
  CHECK(a + b == Integer(0));
  CHECK((a + b).sign() == 0);
  CHECK(Integer::gcd(Integer(12), Integer(-18)) == Integer(6));
  CHECK(Integer::binomial(6, 3) == Integer(20));
  auto [q, r] = Integer(-7).divrem(Integer(2));
  CHECK(q == Integer(-3));
  CHECK(r == Integer(-1));
  CHECK_THROWS_AS(Integer(1).divrem(Integer(0)), DivisionByZeroError);
}

TEST_CASE("Integer ring axioms on sampled triples") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    Integer a(static_cast<long>(rng() % 20011) - 10000);
    Integer b(static_cast<long>(rng() % 20011) - 10000);
    Integer c(static_cast<long>(rng() % 20011) - 10000);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("Rational canonical form") {
  Rational q(6, -4);
  CHECK(q == Rational(-3, 2));
  CHECK(q.denominator() == Integer(2));
  CHECK(q.numerator() == Integer(-3));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
  CHECK(Rational(5, 7).inv() == Rational(7, 5));
}

TEST_CASE("FpDomain rejects non-primes") {
  CHECK_THROWS_AS(FpDomain(1), DomainError);
  CHECK_THROWS_AS(FpDomain(15), DomainError);
  CHECK_NOTHROW(FpDomain(2));
  CHECK_NOTHROW(FpDomain(2147483647));  // 2^31 - 1
  CHECK_THROWS_AS(FpDomain(2147483649u), DomainError);
}

TEST_CASE("field_inverse examples") {
  FpDomain f7(7), f5(5);
  CHECK(field_inverse(f7.element(3)) == f7.element(5));
  CHECK(field_inverse(f7.element(1)) == f7.element(1));
  CHECK(field_inverse(f5.element(4)) == f5.element(4));
  CHECK_THROWS_AS(field_inverse(f7.element(0)), DivisionByZeroError);
}

TEST_CASE("Fp field axioms on sampled triples") {
  for (std::uint32_t p : {2u, 3u, 7u, 101u, 65537u}) {
    FpDomain dom(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 100; ++i) {
      Fp a = dom.element(static_cast<std::uint32_t>(rng() % p));
      Fp b = dom.element(static_cast<std::uint32_t>(rng() % p));
      Fp c = dom.element(static_cast<std::uint32_t>(rng() % p));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inv() == dom.one());
    }
  }
}

TEST_CASE("binomial_mod examples and Lucas agreement with exact computation") {
  FpDomain f5(5), f7(7);
  CHECK(binomial_mod(4, 2, f5) == f5.element(1));
  CHECK(binomial_mod(6, 3, f7) == f7.element(6));  // C(6,3) = 20 = 6 mod 7
  CHECK(binomial_mod(1000000, 0, f7) == f7.element(1));
  CHECK_THROWS_AS(binomial_mod(3, 4, f5), DomainError);

  // oracle: exact Integer binomial reduced mod p
  for (std::uint32_t p : {2u, 3u, 5u, 13u}) {
    FpDomain dom(p);
    for (unsigned long n = 0; n <= 60; ++n) {
      for (unsigned long k = 0; k <= n; ++k) {
        auto exact = Integer::binomial(n, k).mod_u64(p);
        CHECK(binomial_mod(n, k, dom).value() == exact);
      }
    }
  }
  // large n sanity: C(10^6, 2) = (10^6)(10^6-1)/2
  Integer big = Integer::binomial(1000000, 2);
  CHECK(binomial_mod(1000000, 2, f7).value() == big.mod_u64(7));
}

TEST_CASE("is_square examples and quadratic residue oracle") {
  FpDomain f7(7), f5(5);
  CHECK_FALSE(is_square(f7.from_int(-1)));
  CHECK(is_square(f5.from_int(-1)));  // 2^2 = 4 = -1 mod 5
  CHECK(is_square(f7.element(0)));

  // oracle: enumerate squares
  for (std::uint32_t p : {3u, 7u, 11u, 13u, 31u}) {
    FpDomain dom(p);
    std::set<std::uint32_t> squares;
    for (std::uint32_t b = 0; b < p; ++b) squares.insert(b * b % p);
    for (std::uint32_t a = 0; a < p; ++a)
      CHECK(is_square(dom.element(a)) == (squares.count(a) > 0));
  }
}

TEST_CASE("is_square(-1) iff p = 1 mod 4, all primes below 200") {
  for (std::uint32_t p = 3; p < 200; ++p) {
    if (!is_prime_u32(p)) continue;
    FpDomain dom(p);
    CHECK(is_square(dom.from_int(-1)) == (p % 4 == 1));
  }
}

TEST_CASE("build_extension examples") {
  auto f9 = ExtField::build(3, 2);
  CHECK(f9->order() == 9);

  auto f5 = ExtField::build(5, 1);
  CHECK(f5->order() == 5);
  CHECK(f5->from_index(3) * f5->from_index(2) == f5->from_index(1));  // 6 = 1 mod 5

  auto f4 = ExtField::build(2, 2);
  // only irreducible monic quadratic over F_2 is z^2 + z + 1
  CHECK(f4->defining_tail() == std::vector<std::uint32_t>{1, 1});

  CHECK_THROWS_AS(ExtField::build(2, 40), ResourceError);
}

TEST_CASE("Fq field axioms and inverses") {
  for (auto [p, k] : {std::pair<std::uint32_t, unsigned>{2, 3},
                      {3, 2},
                      {5, 2},
                      {7, 2}}) {
    auto F = ExtField::build(p, k);
    std::mt19937_64 rng(p * 100 + k);
    for (int i = 0; i < 60; ++i) {
      Fq a = F->from_index(rng() % F->order());
      Fq b = F->from_index(rng() % F->order());
      Fq c = F->from_index(rng() % F->order());
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK(a * a.inv() == F->one());
    }
    // multiplicative group order spot-check: g^(p^k - 1) = 1 for nonzero g
    Fq g = F->generator();
    CHECK(g.pow(F->order() - 1) == F->one());
  }
}

TEST_CASE("Frobenius additivity, exhaustive for p^k <= 512") {
  for (auto [p, k] : {std::pair<std::uint32_t, unsigned>{2, 2},
                      {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9},
                      {3, 2}, {3, 3}, {3, 4}, {3, 5},
                      {5, 2}, {5, 3},
                      {7, 2}, {7, 3},
                      {11, 2}, {13, 2}, {17, 2}, {19, 2}}) {
    auto F = ExtField::build(p, k);
    REQUIRE(F->order() <= 512);
    for (std::uint64_t i = 0; i < F->order(); ++i) {
      for (std::uint64_t j = i; j < F->order(); ++j) {
        Fq a = F->from_index(i), b = F->from_index(j);
        CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
      }
    }
  }
}

TEST_CASE("Fq pth_root inverts Frobenius") {
  auto F = ExtField::build(3, 3);
  for (std::uint64_t i = 0; i < F->order(); ++i) {
    Fq a = F->from_index(i);
    CHECK(a.pth_root().pow(3) == a);
  }
}

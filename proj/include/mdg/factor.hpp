#ifndef MDG_FACTOR_HPP
#define MDG_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "mdg/extfield.hpp"
#include "mdg/primefield.hpp"
#include "mdg/unipoly.hpp"

namespace mdg {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x6d646766616374ull;

/// Complete factorization: unit * prod factors[i]^mult[i] reproduces the
/// input exactly.  Factors are monic irreducible, pairwise distinct, sorted
/// canonically (degree, then coefficient sequence).
template <class K>
struct Factorization {
  K unit;
  std::vector<std::pair<UniPoly<K>, unsigned>> factors;

  UniPoly<K> recompose(const typename K::Domain& dom, const std::string& var = "t") const {
    UniPoly<K> acc = UniPoly<K>::constant(dom, unit, var);
    for (const auto& [f, m] : factors) acc = acc * f.pow(m);
    return acc;
  }
};

namespace detail {

/// Coefficientwise p-th root of a polynomial known to be of the form g(t^p).
template <class K>
UniPoly<K> poly_pth_root(const UniPoly<K>& f) {
  const unsigned long p = f.domain().characteristic();
  std::vector<K> out;
  for (int i = 0; i <= f.degree(); ++i) {
    K c = f.coeff(i);
    if (static_cast<unsigned long>(i) % p == 0) {
      out.push_back(c.pth_root());
    } else if (!c.is_zero()) {
      throw DomainError("poly_pth_root: input is not a p-th power");
    }
  }
  return UniPoly<K>::from_coeffs(f.domain(), std::move(out), f.var());
}

}  // namespace detail

/// Product of the distinct irreducible factors of f (monic).  Handles
/// characteristic p by peeling p-th-power content.
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
  if (f.is_zero()) throw DomainError("squarefree_part of zero polynomial");
  if (f.degree() == 0) return UniPoly<K>::constant(f.domain(), f.domain().one(), f.var());
  const unsigned long p = f.domain().characteristic();
  UniPoly<K> fp = f.derivative();
  if (fp.is_zero()) {
    // f = g(t^p); same radical as the p-th root
    if constexpr (requires(K c) { c.pth_root(); }) {
      return squarefree_part(detail::poly_pth_root(f));
    } else {
      throw DomainError("squarefree_part: zero derivative in characteristic 0");
    }
  }
  UniPoly<K> d = UniPoly<K>::gcd(f, fp);
  UniPoly<K> w = f.divexact(d).monic();  // factors with multiplicity not = 0 mod p
  if (p == 0) return w;
  // strip every w-factor from d; what remains is a perfect p-th power
  UniPoly<K> rest = d.monic();
  while (true) {
    UniPoly<K> g = UniPoly<K>::gcd(rest, w);
    if (g.degree() == 0) break;
    rest = rest.divexact(g).monic();
  }
  if (rest.degree() == 0) return w;
  if constexpr (requires(K c) { c.pth_root(); }) {
    return (w * squarefree_part(detail::poly_pth_root(rest))).monic();
  } else {
    throw DomainError("squarefree_part: unreachable");
  }
}

/// Number of distinct roots of f in the algebraic closure.
template <class K>
std::size_t distinct_root_count(const UniPoly<K>& f) {
  return static_cast<std::size_t>(squarefree_part(f).degree());
}

/// Squarefree decomposition: pairwise-coprime monic g_i with multiplicities,
/// whose weighted product is monic(f).
template <class K>
std::vector<std::pair<UniPoly<K>, unsigned>> squarefree_decomposition(const UniPoly<K>& f) {
  std::vector<std::pair<UniPoly<K>, unsigned>> out;
  UniPoly<K> g = f.monic();
  if (g.degree() <= 0) return out;
  const unsigned long p = g.domain().characteristic();

  std::function<void(const UniPoly<K>&, unsigned)> run = [&](const UniPoly<K>& h,
                                                             unsigned stride) {
    UniPoly<K> hp = h.derivative();
    if (p != 0 && hp.is_zero()) {
      if constexpr (requires(K c) { c.pth_root(); }) {
        run(detail::poly_pth_root(h), stride * static_cast<unsigned>(p));
      }
      return;
    }
    UniPoly<K> d = UniPoly<K>::gcd(h, hp);
    UniPoly<K> w = h.divexact(d).monic();
    unsigned i = 1;
    while (w.degree() > 0) {
      UniPoly<K> y = UniPoly<K>::gcd(w, d);
      UniPoly<K> z = w.divexact(y).monic();
      if (z.degree() > 0) out.emplace_back(z, i * stride);
      w = y;
      d = d.divexact(y).monic();
      ++i;
    }
    if (p != 0 && d.degree() > 0) {
      if constexpr (requires(K c) { c.pth_root(); }) {
        run(detail::poly_pth_root(d), stride * static_cast<unsigned>(p));
      }
    }
  };
  run(g, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return UniPoly<K>::canonical_less(a.first, b.first);
  });
  return out;
}

namespace detail {

template <class K>
UniPoly<K> poly_pow_mod(UniPoly<K> base, std::uint64_t e, const UniPoly<K>& f) {
  UniPoly<K> result = UniPoly<K>::constant(f.domain(), f.domain().one(), f.var());
  base = base % f;
  while (e > 0) {
    if (e & 1) result = result * base % f;
    base = base * base % f;
    e >>= 1;
  }
  return result;
}

inline UniPoly<Fp> random_poly_below(const FpDomain& dom, int deg_bound,
                                     std::mt19937_64& rng, const std::string& var) {
  std::vector<Fp> c;
  c.reserve(deg_bound);
  for (int i = 0; i < deg_bound; ++i)
    c.push_back(dom.element(static_cast<std::uint32_t>(rng() % dom.modulus())));
  return UniPoly<Fp>::from_coeffs(dom, std::move(c), var);
}

/// Equal-degree splitting of a squarefree product of irreducibles of degree d.
inline void equal_degree_split(const UniPoly<Fp>& f, unsigned d,
                               std::mt19937_64& rng, std::vector<UniPoly<Fp>>& out) {
  const int r = f.degree() / static_cast<int>(d);
  if (r == 1) {
    out.push_back(f.monic());
    return;
  }
  const FpDomain dom = f.domain();
  const std::uint32_t p = dom.modulus();
  UniPoly<Fp> factor_candidate(dom, f.var());
  while (true) {
    UniPoly<Fp> a = random_poly_below(dom, f.degree(), rng, f.var());
    if (a.degree() < 1) continue;
    UniPoly<Fp> g = UniPoly<Fp>::gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      factor_candidate = g;
      break;
    }
    UniPoly<Fp> h(dom, f.var());
    if (p == 2) {
      // trace map over GF(2^d): a + a^2 + ... + a^(2^(d-1))
      UniPoly<Fp> t = a % f;
      h = t;
      for (unsigned i = 1; i < d; ++i) {
        t = t * t % f;
        h = h + t;
      }
    } else {
      // a^((p^d-1)/2) = (norm chain)^((p-1)/2)
      UniPoly<Fp> c = a % f;
      UniPoly<Fp> norm = c;
      for (unsigned i = 1; i < d; ++i) {
        c = poly_pow_mod(c, p, f);
        norm = norm * c % f;
      }
      h = poly_pow_mod(norm, (p - 1) / 2, f);
      h = h - UniPoly<Fp>::constant(dom, dom.one(), f.var());
    }
    if (h.is_zero()) continue;
    UniPoly<Fp> g2 = UniPoly<Fp>::gcd(h, f);
    if (g2.degree() > 0 && g2.degree() < f.degree()) {
      factor_candidate = g2;
      break;
    }
  }
  equal_degree_split(factor_candidate, d, rng, out);
  equal_degree_split(f.divexact(factor_candidate).monic(), d, rng, out);
}

}  // namespace detail

/// Complete factorization over F_p: squarefree decomposition, then
/// distinct-degree splitting, then randomized equal-degree splitting.
/// Deterministic for a fixed seed; canonical factor order.
inline Factorization<Fp> factor(const UniPoly<Fp>& f,
                                std::uint64_t seed = kDefaultFactorSeed) {
  if (f.is_zero()) throw DomainError("factor of zero polynomial");
  Factorization<Fp> out;
  out.unit = f.lead();
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(seed);

  std::map<std::vector<Fp>, unsigned, bool (*)(const std::vector<Fp>&, const std::vector<Fp>&)>
      collected(+[](const std::vector<Fp>& a, const std::vector<Fp>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
          if (a[i] != b[i]) return a[i] < b[i];
        return false;
      });

  for (const auto& [piece, mult] : squarefree_decomposition(f)) {
    // distinct-degree: strip irreducibles of degree d = 1, 2, ...
    UniPoly<Fp> rest = piece;
    UniPoly<Fp> frob = UniPoly<Fp>::gen(f.domain(), f.var()) % rest;  // t^(p^d) mod rest
    for (unsigned d = 1; rest.degree() > 0; ++d) {
      if (rest.degree() < static_cast<int>(2 * d)) {
        // remainder is irreducible
        collected[rest.monic().coeffs()] += mult;
        break;
      }
      frob = detail::poly_pow_mod(frob, f.domain().modulus(), rest);
      UniPoly<Fp> diff = frob - UniPoly<Fp>::gen(f.domain(), f.var());
      if (diff.is_zero()) {
        // every remaining factor has degree dividing d; all have degree >= d,
        // so all are degree exactly d here
        std::vector<UniPoly<Fp>> parts;
        detail::equal_degree_split(rest, d, rng, parts);
        for (auto& irr : parts) collected[irr.coeffs()] += mult;
        break;
      }
      UniPoly<Fp> g = UniPoly<Fp>::gcd(diff, rest);
      if (g.degree() > 0) {
        std::vector<UniPoly<Fp>> parts;
        detail::equal_degree_split(g, d, rng, parts);
        for (auto& irr : parts) collected[irr.coeffs()] += mult;
        rest = rest.divexact(g).monic();
        frob = frob % rest;
      }
    }
  }
  for (auto& [coeffs, mult] : collected)
    out.factors.emplace_back(UniPoly<Fp>::from_coeffs(f.domain(), coeffs, f.var()), mult);
  return out;
}

/// All roots of f in F_{p^k}: reduce to the part splitting over the extension
/// via gcd(f, t^(p^k) - t), then evaluate over the (budgeted) field.
inline std::vector<Fq> roots_in_extension(const UniPoly<Fp>& f, unsigned k,
                                          std::uint64_t budget = (1u << 20)) {
  if (f.is_zero()) throw DomainError("roots_in_extension of zero polynomial");
  auto F = ExtField::build(f.domain().modulus(), k, budget);
  std::vector<Fq> roots;
  if (f.degree() == 0) return roots;
  UniPoly<Fp> frob = UniPoly<Fp>::gen(f.domain(), f.var()) % f;
  for (unsigned i = 0; i < k; ++i)
    frob = detail::poly_pow_mod(frob, f.domain().modulus(), f);
  UniPoly<Fp> g = UniPoly<Fp>::gcd(frob - UniPoly<Fp>::gen(f.domain(), f.var()), f);
  if (g.degree() == 0) return roots;
  for (std::uint64_t idx = 0; idx < F->order(); ++idx) {
    Fq x = F->from_index(idx);
    Fq val = g.eval_mapped(x, [&](Fp c) { return F->from_int(c.value()); });
    if (val.is_zero()) roots.push_back(x);
  }
  return roots;
}

/// Growth table for the cumulative number of distinct irreducible factors
/// across an indexed family.  `family` maps an index to the polynomial;
/// `factorize` supplies the factor oracle for the coefficient field.
template <class K, class Family, class Factorize>
std::vector<std::pair<std::uint64_t, std::size_t>> cumulative_factor_set(
    Family&& family, const std::vector<std::uint64_t>& indices, Factorize&& factorize) {
  std::vector<std::vector<K>> seen;
  std::vector<std::pair<std::uint64_t, std::size_t>> table;
  for (std::uint64_t idx : indices) {
    UniPoly<K> f = family(idx);
    if (f.is_zero()) throw DomainError("cumulative_factor_set: zero polynomial in family");
    Factorization<K> fac = factorize(f);
    for (const auto& [irr, mult] : fac.factors) {
      (void)mult;
      if (std::find(seen.begin(), seen.end(), irr.coeffs()) == seen.end())
        seen.push_back(irr.coeffs());
    }
    table.emplace_back(idx, seen.size());
  }
  return table;
}

}  // namespace mdg

#endif

#ifndef MDG_GROEBNER_HPP
#define MDG_GROEBNER_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mdg/mpoly.hpp"

namespace mdg {

inline constexpr std::uint64_t kDefaultGroebnerBudget = 1'000'000;

struct GroebnerStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_reduced = 0;   // S-polynomials actually reduced
  std::uint64_t reduction_steps = 0; // lead cancellations during reduction
  std::uint64_t basis_size = 0;
};

/// Reduced Groebner basis: monic, auto-reduced, sorted by lead monomial
/// ascending.  Unique for (ideal, order).
template <class K>
struct GroebnerBasis {
  std::vector<MultiPoly<K>> elements;
  TermOrder order = TermOrder::grevlex();
  GroebnerStats stats;

  bool is_unit_ideal() const {
    return elements.size() == 1 && elements[0].is_one();
  }
};

/// Remainder of f on division by `basis`: no remaining term is divisible by
/// any basis lead monomial, and f - result lies in the generated ideal.
template <class K>
MultiPoly<K> normal_form(const MultiPoly<K>& f, const std::vector<MultiPoly<K>>& basis,
                         const TermOrder& order, GroebnerStats* stats = nullptr) {
  // the lead of `work` strictly decreases, so remainder terms arrive in
  // descending order already
  std::vector<typename MultiPoly<K>::Term> rem;
  MultiPoly<K> work = f.reordered(order);
  while (!work.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.lead_monomial().divides(work.lead_monomial())) {
        K c = work.lead_coeff() / g.lead_coeff();
        Monomial m = g.lead_monomial().divide_into(work.lead_monomial());
        work = work - g.scaled(c, m);
        if (stats) ++stats->reduction_steps;
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // move the irreducible lead term to the remainder
      rem.emplace_back(work.lead_coeff(), work.lead_monomial());
      work = work - MultiPoly<K>::term(f.ring(), work.lead_coeff(), work.lead_monomial(), order);
    }
  }
  return MultiPoly<K>::from_terms(f.ring(), std::move(rem), order);
}

template <class K>
MultiPoly<K> normal_form(const MultiPoly<K>& f, const GroebnerBasis<K>& basis) {
  return normal_form(f, basis.elements, basis.order);
}

namespace detail {

template <class K>
MultiPoly<K> s_polynomial(const MultiPoly<K>& f, const MultiPoly<K>& g,
                          const TermOrder& order) {
  Monomial l = Monomial::lcm(f.lead_monomial(), g.lead_monomial());
  MultiPoly<K> a = f.scaled(f.lead_coeff().inv(), f.lead_monomial().divide_into(l));
  MultiPoly<K> b = g.scaled(g.lead_coeff().inv(), g.lead_monomial().divide_into(l));
  (void)order;
  return a - b;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned degree;
};

}  // namespace detail

/// Buchberger completion with the Gebauer-Moller pair update (product and
/// chain criteria) and normal selection strategy (minimal lcm degree, ties by
/// the order).  Deterministic; throws ResourceError past `budget` processed
/// pairs, carrying the statistics gathered so far.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<MultiPoly<K>>& generators,
                            const TermOrder& order,
                            std::uint64_t budget = kDefaultGroebnerBudget) {
  GroebnerBasis<K> out;
  out.order = order;
  GroebnerStats& st = out.stats;

  std::vector<MultiPoly<K>> basis;
  std::vector<detail::Pair> pairs;

  auto add_element = [&](MultiPoly<K> h) {
    const std::size_t t = basis.size();
    const Monomial& lt = h.lead_monomial();

    // Gebauer-Moller update of the pair queue against the new element.
    std::vector<detail::Pair> kept;
    kept.reserve(pairs.size());
    for (auto& pr : pairs) {
      // chain criterion: drop (i,j) when lt strictly refines its lcm
      bool drop = lt.divides(pr.lcm) &&
                  Monomial::lcm(basis[pr.i].lead_monomial(), lt) != pr.lcm &&
                  Monomial::lcm(basis[pr.j].lead_monomial(), lt) != pr.lcm;
      if (!drop) kept.push_back(std::move(pr));
    }
    pairs = std::move(kept);

    // candidate pairs (i, t)
    std::vector<detail::Pair> fresh;
    for (std::size_t i = 0; i < t; ++i) {
      Monomial l = Monomial::lcm(basis[i].lead_monomial(), lt);
      fresh.push_back({i, t, l, l.total_degree()});
    }
    // drop candidates whose lcm is a proper multiple of another candidate lcm
    std::vector<bool> dead(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (dead[a]) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || dead[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm) {
          dead[a] = true;
          break;
        }
      }
    }
    // among equal lcms keep a single representative; prefer one satisfying
    // the product criterion (it is then dropped entirely)
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (dead[a]) continue;
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (dead[b]) continue;
        if (fresh[a].lcm == fresh[b].lcm) dead[b] = true;
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (dead[a]) continue;
      bool coprime_exists = false;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (fresh[b].lcm != fresh[a].lcm) continue;
        if (basis[fresh[b].i].lead_monomial().coprime_with(lt)) {
          coprime_exists = true;
          break;
        }
      }
      if (coprime_exists) dead[a] = true;  // product criterion
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (!dead[a]) pairs.push_back(std::move(fresh[a]));

    basis.push_back(std::move(h));
  };

  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    MultiPoly<K> h = normal_form(g, basis, order, &st);
    if (!h.is_zero()) add_element(h * h.lead_coeff().inv());
  }

  while (!pairs.empty()) {
    // normal strategy: minimal lcm degree, then minimal lcm in the order,
    // then lowest indices for determinism
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs.size(); ++a) {
      const auto& pa = pairs[a];
      const auto& pb = pairs[best];
      int c;
      if (pa.degree != pb.degree) {
        c = pa.degree < pb.degree ? -1 : 1;
      } else {
        c = order.compare(pa.lcm, pb.lcm);
        if (c == 0)
          c = (pa.i != pb.i) ? (pa.i < pb.i ? -1 : 1)
                             : (pa.j < pb.j ? -1 : (pa.j > pb.j ? 1 : 0));
      }
      if (c < 0) best = a;
    }
    detail::Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    ++st.pairs_considered;
    if (st.pairs_considered > budget)
      throw ResourceError("buchberger(" + order.to_string() + ")", st.pairs_considered,
                          budget);

    MultiPoly<K> s = detail::s_polynomial(basis[pr.i], basis[pr.j], order);
    MultiPoly<K> h = normal_form(s, basis, order, &st);
    ++st.pairs_reduced;
    if (!h.is_zero()) add_element(h * h.lead_coeff().inv());
  }

  // interreduce: in ascending lead order, an element is redundant exactly
  // when an earlier kept lead divides its lead (divisors never come later);
  // then tail-reduce each survivor against the others
  std::sort(basis.begin(), basis.end(),
            [&](const MultiPoly<K>& a, const MultiPoly<K>& b) {
              return order.less(a.lead_monomial(), b.lead_monomial());
            });
  std::vector<MultiPoly<K>> reduced;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& kept : reduced) {
      if (kept.lead_monomial().divides(g.lead_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) reduced.push_back(g);
  }
  std::vector<MultiPoly<K>> final_basis;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<MultiPoly<K>> others;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    MultiPoly<K> r = normal_form(reduced[i], others, order, &st);
    if (!r.is_zero()) final_basis.push_back(r * r.lead_coeff().inv());
  }
  std::sort(final_basis.begin(), final_basis.end(),
            [&](const MultiPoly<K>& a, const MultiPoly<K>& b) {
              return order.less(a.lead_monomial(), b.lead_monomial());
            });
  out.elements = std::move(final_basis);
  st.basis_size = out.elements.size();
  return out;
}

/// Ideal with cached reduced bases keyed by term order.
template <class K>
class Ideal {
 public:
  Ideal(RingPtr<K> ring, std::vector<MultiPoly<K>> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<MultiPoly<K>>& generators() const { return gens_; }

  const GroebnerBasis<K>& basis(const TermOrder& order,
                                std::uint64_t budget = kDefaultGroebnerBudget) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = order.to_string();
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, buchberger(gens_, order, budget)).first;
    return it->second;
  }

 private:
  RingPtr<K> ring_;
  std::vector<MultiPoly<K>> gens_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, GroebnerBasis<K>> cache_;
};

template <class K>
bool ideal_membership(const MultiPoly<K>& f, const Ideal<K>& ideal,
                      const TermOrder& order = TermOrder::grevlex(),
                      std::uint64_t budget = kDefaultGroebnerBudget) {
  return normal_form(f, ideal.basis(order, budget)).is_zero();
}

template <class K>
bool ideal_equality(const Ideal<K>& a, const Ideal<K>& b,
                    const TermOrder& order = TermOrder::grevlex(),
                    std::uint64_t budget = kDefaultGroebnerBudget) {
  if (!a.ring()->same_as(*b.ring())) throw DomainError("ideal_equality across rings");
  const auto& ba = a.basis(order, budget).elements;
  const auto& bb = b.basis(order, budget).elements;
  if (ba.size() != bb.size()) return false;
  for (std::size_t i = 0; i < ba.size(); ++i)
    if (ba[i] != bb[i]) return false;
  return true;
}

}  // namespace mdg

#endif

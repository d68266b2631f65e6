#ifndef MDG_IDEALOPS_HPP
#define MDG_IDEALOPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mdg/groebner.hpp"

namespace mdg {

template <class K>
Ideal<K> make_ideal(RingPtr<K> ring, std::vector<MultiPoly<K>> gens) {
  return Ideal<K>(std::move(ring), std::move(gens));
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  std::vector<MultiPoly<K>> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return Ideal<K>(a.ring(), std::move(gens));
}

/// Exact division of multivariate polynomials; nullopt when not divisible.
template <class K>
std::optional<MultiPoly<K>> divide_exact(const MultiPoly<K>& g, const MultiPoly<K>& f) {
  if (f.is_zero()) throw DivisionByZeroError("divide_exact by zero");
  MultiPoly<K> rem = g.reordered(f.order());
  MultiPoly<K> quot = MultiPoly<K>::zero(g.ring(), f.order());
  while (!rem.is_zero()) {
    if (!f.lead_monomial().divides(rem.lead_monomial())) return std::nullopt;
    K c = rem.lead_coeff() / f.lead_coeff();
    Monomial m = f.lead_monomial().divide_into(rem.lead_monomial());
    quot = quot + MultiPoly<K>::term(g.ring(), c, m, f.order());
    rem = rem - f.scaled(c, m);
  }
  return quot.reordered(g.order());
}

namespace detail {

/// Base ring plus one fresh tag variable appended at the end.
template <class K>
struct TagRing {
  RingPtr<K> big;
  std::vector<std::size_t> slot;  // base var i -> index in big (identity here)
  std::size_t tag;

  MultiPoly<K> lift(const MultiPoly<K>& f, const TermOrder& order) const {
    return f.mapped_to(big, slot, order);
  }

  /// Project a tag-free polynomial back to the base ring.
  MultiPoly<K> project(const MultiPoly<K>& f, RingPtr<K> base,
                       const TermOrder& order) const {
    std::vector<typename MultiPoly<K>::Term> ts;
    for (const auto& t : f.terms()) {
      if (t.second[tag] != 0)
        throw DomainError("TagRing::project: tag variable not eliminated");
      Monomial m(base->nvars());
      for (std::size_t i = 0; i < base->nvars(); ++i) m[i] = t.second[slot[i]];
      ts.emplace_back(t.first, m);
    }
    return MultiPoly<K>::from_terms(std::move(base), std::move(ts), order);
  }
};

template <class K>
TagRing<K> with_tag(const RingPtr<K>& ring, const std::string& tagname = "@w") {
  std::vector<std::string> vars = ring->vars;
  vars.push_back(tagname);
  TagRing<K> ext;
  ext.big = make_ring<K>(ring->dom, std::move(vars));
  for (std::size_t i = 0; i < ring->nvars(); ++i) ext.slot.push_back(i);
  ext.tag = ring->nvars();
  return ext;
}

/// Generators of (ideal in big ring) intersected with the tag-free subring.
template <class K>
std::vector<MultiPoly<K>> eliminate_tag(const TagRing<K>& ext,
                                        const std::vector<MultiPoly<K>>& gens,
                                        const RingPtr<K>& base, std::uint64_t budget) {
  std::vector<bool> front(ext.big->nvars(), false);
  front[ext.tag] = true;
  auto gb = buchberger(gens, TermOrder::block(front), budget);
  std::vector<MultiPoly<K>> out;
  for (const auto& g : gb.elements) {
    bool tag_free = true;
    for (const auto& t : g.terms())
      if (t.second[ext.tag] != 0) {
        tag_free = false;
        break;
      }
    if (tag_free) out.push_back(ext.project(g, base, TermOrder::grevlex()));
  }
  return out;
}

}  // namespace detail

/// Generators of I intersected with the subring on the kept variables,
/// via a block order that eliminates the complement.
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<bool>& keep,
                   std::uint64_t budget = kDefaultGroebnerBudget) {
  const auto& ring = ideal.ring();
  if (keep.size() != ring->nvars()) throw DomainError("eliminate: bad keep mask");
  std::vector<bool> front(keep.size());
  bool anything = false;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    front[i] = !keep[i];
    anything = anything || front[i];
  }
  if (!anything) {
    auto gb = ideal.basis(TermOrder::grevlex(), budget);
    return Ideal<K>(ring, gb.elements);
  }
  auto gb = ideal.basis(TermOrder::block(front), budget);
  std::vector<MultiPoly<K>> out;
  for (const auto& g : gb.elements) {
    bool in_subring = true;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < keep.size(); ++i)
        if (front[i] && t.second[i] != 0) {
          in_subring = false;
          break;
        }
      if (!in_subring) break;
    }
    if (in_subring) out.push_back(g.reordered(TermOrder::grevlex()));
  }
  return Ideal<K>(ring, std::move(out));
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<std::string>& keep_names,
                   std::uint64_t budget = kDefaultGroebnerBudget) {
  std::vector<bool> keep(ideal.ring()->nvars(), false);
  for (const auto& name : keep_names) {
    int i = ideal.ring()->var_index(name);
    if (i < 0) throw DomainError("eliminate: unknown variable " + name);
    keep[static_cast<std::size_t>(i)] = true;
  }
  return eliminate(ideal, keep, budget);
}

/// I cap J via the tag construction: eliminate w from w*I + (1-w)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b,
                   std::uint64_t budget = kDefaultGroebnerBudget) {
  if (!a.ring()->same_as(*b.ring())) throw DomainError("intersect across rings");
  const auto& ring = a.ring();
  auto ext = detail::with_tag(ring);
  const TermOrder grev = TermOrder::grevlex();
  MultiPoly<K> w = MultiPoly<K>::var(ext.big, ext.tag, 1, grev);
  MultiPoly<K> one_minus_w = MultiPoly<K>::constant(ext.big, ring->dom.one(), grev) - w;
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : a.generators()) gens.push_back(ext.lift(g, grev) * w);
  for (const auto& h : b.generators()) gens.push_back(ext.lift(h, grev) * one_minus_w);
  return Ideal<K>(ring, detail::eliminate_tag(ext, gens, ring, budget));
}

/// (I : f), computed as (1/f) * (I cap (f)).
template <class K>
Ideal<K> colon(const Ideal<K>& ideal, const MultiPoly<K>& f,
               std::uint64_t budget = kDefaultGroebnerBudget) {
  if (f.is_zero()) throw DomainError("colon by zero polynomial");
  Ideal<K> principal(ideal.ring(), {f});
  Ideal<K> meet = intersect(ideal, principal, budget);
  std::vector<MultiPoly<K>> out;
  for (const auto& g : meet.generators()) {
    auto q = divide_exact(g, f);
    if (!q)
      throw std::logic_error("colon: intersection generator not divisible by f");
    out.push_back(*q);
  }
  return Ideal<K>(ideal.ring(), std::move(out));
}

/// (I : J) = intersection over generators g of J of (I : g).
template <class K>
Ideal<K> colon_ideal(const Ideal<K>& ideal, const Ideal<K>& j,
                     std::uint64_t budget = kDefaultGroebnerBudget) {
  std::optional<Ideal<K>> acc;
  for (const auto& g : j.generators()) {
    if (g.is_zero()) continue;
    Ideal<K> c = colon(ideal, g, budget);
    acc = acc ? intersect(*acc, c, budget) : c;
  }
  if (!acc) throw DomainError("colon_ideal by the zero ideal");
  return *acc;
}

/// (I : f^inf) via the Rabinowitsch tag: eliminate w from I + (1 - w f).
template <class K>
Ideal<K> saturate(const Ideal<K>& ideal, const MultiPoly<K>& f,
                  std::uint64_t budget = kDefaultGroebnerBudget) {
  if (f.is_zero()) throw DomainError("saturate by zero polynomial");
  const auto& ring = ideal.ring();
  auto ext = detail::with_tag(ring);
  const TermOrder grev = TermOrder::grevlex();
  MultiPoly<K> w = MultiPoly<K>::var(ext.big, ext.tag, 1, grev);
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(ext.lift(g, grev));
  gens.push_back(MultiPoly<K>::constant(ext.big, ring->dom.one(), grev) -
                 w * ext.lift(f, grev));
  return Ideal<K>(ring, detail::eliminate_tag(ext, gens, ring, budget));
}

/// f in rad(I) iff 1 in I + (1 - w f) in the tag-extended ring.
template <class K>
bool radical_membership(const MultiPoly<K>& f, const Ideal<K>& ideal,
                        std::uint64_t budget = kDefaultGroebnerBudget) {
  if (f.is_zero()) return true;  // 0 lies in every radical
  const auto& ring = ideal.ring();
  auto ext = detail::with_tag(ring);
  const TermOrder grev = TermOrder::grevlex();
  MultiPoly<K> w = MultiPoly<K>::var(ext.big, ext.tag, 1, grev);
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(ext.lift(g, grev));
  gens.push_back(MultiPoly<K>::constant(ext.big, ring->dom.one(), grev) -
                 w * ext.lift(f, grev));
  return buchberger(gens, grev, budget).is_unit_ideal();
}

/// Ideal generated by g^q over the листed generators g.  The bracket power is
/// generator-dependent in general; the callers pass the distinguished set.
template <class K>
Ideal<K> frobenius_power(const Ideal<K>& ideal, std::uint64_t q) {
  unsigned long p = ideal.ring()->dom.characteristic();
  if (p == 0) throw DomainError("frobenius_power needs positive characteristic");
  std::uint64_t rest = q;
  while (rest > 1 && rest % p == 0) rest /= p;
  if (rest != 1)
    throw DomainError("frobenius_power: q = " + std::to_string(q) +
                      " is not a power of the characteristic " + std::to_string(p));
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.pow(q));
  return Ideal<K>(ideal.ring(), std::move(gens));
}

/// Restrict an ideal whose generators live in the kept variables to a fresh
/// smaller ring on those variables (e.g. down to K[t] for univariate work).
template <class K>
std::pair<RingPtr<K>, std::vector<MultiPoly<K>>> restrict_to_subring(
    const Ideal<K>& ideal, const std::vector<std::string>& keep_names) {
  const auto& ring = ideal.ring();
  std::vector<std::size_t> kept;
  for (const auto& name : keep_names) {
    int i = ring->var_index(name);
    if (i < 0) throw DomainError("restrict_to_subring: unknown variable " + name);
    kept.push_back(static_cast<std::size_t>(i));
  }
  RingPtr<K> sub = make_ring<K>(ring->dom, keep_names);
  std::vector<MultiPoly<K>> out;
  for (const auto& g : ideal.generators()) {
    std::vector<typename MultiPoly<K>::Term> ts;
    for (const auto& t : g.terms()) {
      Monomial m(sub->nvars());
      for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (t.second[i] == 0) continue;
        bool found = false;
        for (std::size_t j = 0; j < kept.size(); ++j)
          if (kept[j] == i) {
            m[j] = t.second[i];
            found = true;
            break;
          }
        if (!found)
          throw DomainError("restrict_to_subring: generator involves dropped variable");
      }
      ts.emplace_back(t.first, m);
    }
    out.push_back(MultiPoly<K>::from_terms(sub, std::move(ts), TermOrder::grevlex()));
  }
  return {sub, std::move(out)};
}

}  // namespace mdg

#endif

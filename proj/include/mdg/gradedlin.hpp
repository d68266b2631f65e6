#ifndef MDG_GRADEDLIN_HPP
#define MDG_GRADEDLIN_HPP

#include <functional>
#include <map>
#include <vector>

#include "mdg/integer.hpp"
#include "mdg/mpoly.hpp"

namespace mdg {

namespace gradedlin_detail {

/// Integer basis of { u : M u = 0 } over QQ, rows of M given as long vectors.
/// Each basis vector is scaled to integer entries.
std::vector<std::vector<long>> integer_nullspace(const std::vector<std::vector<long>>& rows,
                                                 std::size_t ncols);

}  // namespace gradedlin_detail

/// Membership of f in the ideal generated by `gens`, decided by exact linear
/// algebra on the monomial basis of the relevant graded piece; no Groebner
/// basis is involved.
///
/// `weights` is the primary (nonnegative) grading; f and every generator must
/// be homogeneous for it.  Multiplier monomials are confined to the matching
/// piece, with `zero_weight_cap` bounding their total degree in weight-zero
/// variables.  Every additional grading under which all inputs happen to be
/// homogeneous is detected automatically and used to shrink the piece; those
/// auxiliary constraints never exclude a genuine solution, so the answer is
/// exact whenever the cap is large enough (and `true` is always sound).
template <class K>
bool graded_piece_membership(const MultiPoly<K>& f, const std::vector<MultiPoly<K>>& gens,
                             const std::vector<long>& weights, long zero_weight_cap) {
  const auto& ring = f.ring();
  const std::size_t nv = ring->nvars();
  if (weights.size() != nv) throw DomainError("graded_piece_membership: bad weight vector");
  for (long w : weights)
    if (w < 0) throw DomainError("graded_piece_membership: negative weight");
  if (zero_weight_cap < 0)
    throw DomainError("graded_piece_membership: piece not finite-dimensional under the cap");
  if (f.is_zero()) return true;
  if (!f.is_homogeneous(weights))
    throw DomainError("graded_piece_membership: query not homogeneous");
  for (const auto& g : gens)
    if (!g.is_homogeneous(weights))
      throw DomainError("graded_piece_membership: ideal not homogeneous for the grading");

  // auxiliary gradings: nullspace of all exponent differences
  std::vector<std::vector<long>> diff_rows;
  auto add_rows = [&](const MultiPoly<K>& g) {
    if (g.term_count() <= 1) return;
    const auto& e0 = g.terms()[0].second;
    for (std::size_t t = 1; t < g.term_count(); ++t) {
      std::vector<long> row(nv);
      for (std::size_t i = 0; i < nv; ++i)
        row[i] = static_cast<long>(g.terms()[t].second[i]) - static_cast<long>(e0[i]);
      diff_rows.push_back(std::move(row));
    }
  };
  add_rows(f);
  for (const auto& g : gens) add_rows(g);
  std::vector<std::vector<long>> aux = gradedlin_detail::integer_nullspace(diff_rows, nv);

  auto grade = [&](const Monomial& m, const std::vector<long>& u) {
    long acc = 0;
    for (std::size_t i = 0; i < nv; ++i) acc += u[i] * static_cast<long>(m[i]);
    return acc;
  };

  const Monomial& f0 = f.terms()[0].second;
  const long fw = grade(f0, weights);

  // sparse incremental elimination state: pivot row -> normalized column
  using Col = std::vector<std::pair<int, K>>;
  std::map<Monomial, int> row_ids;
  auto row_of = [&](const Monomial& m) {
    auto it = row_ids.find(m);
    if (it == row_ids.end()) it = row_ids.emplace(m, static_cast<int>(row_ids.size())).first;
    return it->second;
  };
  std::map<int, Col> pivots;

  auto reduce = [&](Col col) -> Col {
    while (!col.empty()) {
      auto it = pivots.find(col[0].first);
      if (it == pivots.end()) return col;
      // cancel the minimal row; the pivot column introduces only larger rows
      K c = col[0].second;
      Col next;
      std::size_t a = 0, b = 0;
      const Col& pv = it->second;
      while (a < col.size() && b < pv.size()) {
        if (col[a].first < pv[b].first) {
          next.push_back(col[a++]);
        } else if (col[a].first > pv[b].first) {
          next.emplace_back(pv[b].first, -(c * pv[b].second));
          ++b;
        } else {
          K v = col[a].second - c * pv[b].second;
          if (!v.is_zero()) next.emplace_back(col[a].first, v);
          ++a;
          ++b;
        }
      }
      while (a < col.size()) next.push_back(col[a++]);
      while (b < pv.size()) {
        next.emplace_back(pv[b].first, -(c * pv[b].second));
        ++b;
      }
      col = std::move(next);
    }
    return col;
  };

  auto insert_column = [&](Col col) {
    std::sort(col.begin(), col.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    col = reduce(std::move(col));
    if (col.empty()) return;
    K inv = col[0].second.inv();
    for (auto& e : col) e.second = e.second * inv;
    pivots.emplace(col[0].first, std::move(col));
  };

  // admitted multiplier monomials per generator, then their product columns
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const Monomial& g0 = g.terms()[0].second;
    long need_w = fw - grade(g0, weights);
    if (need_w < 0) continue;
    std::vector<long> need_aux;
    for (const auto& u : aux) need_aux.push_back(grade(f0, u) - grade(g0, u));

    // suffix extremes for interval pruning of the auxiliary constraints
    std::vector<unsigned> var_cap(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      if (weights[i] > 0)
        var_cap[i] = static_cast<unsigned>(need_w / weights[i]);
      else
        var_cap[i] = static_cast<unsigned>(zero_weight_cap);
    }
    std::vector<std::vector<long>> suf_min(aux.size(), std::vector<long>(nv + 1, 0));
    std::vector<std::vector<long>> suf_max(aux.size(), std::vector<long>(nv + 1, 0));
    for (std::size_t u = 0; u < aux.size(); ++u) {
      for (std::size_t i = nv; i-- > 0;) {
        long lo = std::min(0L, aux[u][i] * static_cast<long>(var_cap[i]));
        long hi = std::max(0L, aux[u][i] * static_cast<long>(var_cap[i]));
        suf_min[u][i] = suf_min[u][i + 1] + lo;
        suf_max[u][i] = suf_max[u][i + 1] + hi;
      }
    }

    Monomial mu(nv);
    std::vector<long> aux_sum(aux.size(), 0);
    std::function<void(std::size_t, long, long)> dfs = [&](std::size_t var, long rem_w,
                                                           long rem_zero) {
      for (std::size_t u = 0; u < aux.size(); ++u) {
        long target = need_aux[u] - aux_sum[u];
        if (target < suf_min[u][var] || target > suf_max[u][var]) return;
      }
      if (var == nv) {
        if (rem_w != 0) return;
        // admitted: emit the column of mu * g
        Col col;
        col.reserve(g.term_count());
        for (const auto& t : g.terms()) col.emplace_back(row_of(t.second * mu), t.first);
        insert_column(std::move(col));
        return;
      }
      unsigned cap = var_cap[var];
      if (weights[var] > 0) cap = std::min<unsigned>(cap, static_cast<unsigned>(rem_w / weights[var]));
      else cap = std::min<unsigned>(cap, static_cast<unsigned>(rem_zero));
      for (unsigned e = 0; e <= cap; ++e) {
        mu[var] = e;
        for (std::size_t u = 0; u < aux.size(); ++u)
          aux_sum[u] += aux[u][var] * static_cast<long>(e);
        dfs(var + 1, rem_w - weights[var] * static_cast<long>(e),
            rem_zero - (weights[var] == 0 ? static_cast<long>(e) : 0));
        for (std::size_t u = 0; u < aux.size(); ++u)
          aux_sum[u] -= aux[u][var] * static_cast<long>(e);
      }
      mu[var] = 0;
    };
    dfs(0, need_w, zero_weight_cap);
  }

  // finally reduce f's column: empty residue <=> membership
  Col fcol;
  for (const auto& t : f.terms()) fcol.emplace_back(row_of(t.second), t.first);
  std::sort(fcol.begin(), fcol.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return reduce(std::move(fcol)).empty();
}

}  // namespace mdg

#endif

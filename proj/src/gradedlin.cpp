#include "mdg/gradedlin.hpp"

#include <numeric>

namespace mdg {
namespace gradedlin_detail {

std::vector<std::vector<long>> integer_nullspace(const std::vector<std::vector<long>>& rows,
                                                 std::size_t ncols) {
  // RREF over QQ, then read one basis vector per free column.
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    row.reserve(ncols);
    for (long v : r) row.emplace_back(v);
    m.push_back(std::move(row));
  }

  std::vector<int> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    Rational inv = m[rank][col].inv();
    for (std::size_t j = col; j < ncols; ++j) m[rank][j] = m[rank][j] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++rank;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<long>> basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(ncols, Rational());
    v[free_col] = Rational(1);
    for (std::size_t r = 0; r < rank; ++r)
      v[static_cast<std::size_t>(pivot_col_of_row[r])] = -m[r][free_col];
    // scale to a primitive integer vector with positive first nonzero entry
    Integer l(1);
    for (const auto& q : v) {
      Integer den = q.denominator();
      l = l.divexact(Integer::gcd(l, den)) * den;
    }
    std::vector<long> iv(ncols);
    Integer g(0);
    for (std::size_t j = 0; j < ncols; ++j) {
      Rational scaled = v[j] * Rational(l, Integer(1));
      Integer n = scaled.numerator();
      iv[j] = n.to_long();
      g = Integer::gcd(g, n);
    }
    if (!g.is_zero() && !(g == Integer(1))) {
      long gl = g.to_long();
      for (auto& x : iv) x /= gl;
    }
    for (auto x : iv) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : iv) y = -y;
      break;
    }
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace gradedlin_detail
}  // namespace mdg

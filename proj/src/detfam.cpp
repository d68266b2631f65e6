#include "mdg/detfam.hpp"

#include "mdg/extfield.hpp"

namespace mdg {

std::size_t rank_fp(std::vector<std::vector<Fp>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    Fp inv = m[rank][col].inv();
    for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      Fp f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool support_consistency(const MultidiagSpec<Fp>& spec, std::size_t n, std::uint32_t p) {
  spec.validate();
  if (spec.ring->nvars() != 1)
    throw DomainError("support_consistency: spec must have a univariate parameter");
  FpDomain dom(p);
  auto const_val = [&](const MultiPoly<Fp>& f) {
    if (f.is_zero()) return dom.zero();
    if (!f.is_constant()) throw std::logic_error("support_consistency: non-constant value");
    return f.lead_coeff();
  };
  BandMatrix<Fp> m = build_matrix(spec, n);
  MultiPoly<Fp> det = det_direct(m);
  for (std::uint32_t v = 0; v < p; ++v) {
    Fp t0 = dom.element(v);
    Fp detval = const_val(det.substituted(0, t0));
    std::vector<std::vector<Fp>> numeric(n, std::vector<Fp>(n, dom.zero()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        numeric[i][j] = const_val(m.entry(i, j).substituted(0, t0));
    bool det_zero = detval.is_zero();
    bool rank_deficient = rank_fp(numeric) < n;
    if (det_zero != rank_deficient) return false;
  }
  return true;
}

bool root_formula_check_F(unsigned n, std::uint32_t p) {
  if (n % 2 == 0)
    throw DomainError("root_formula_check_F: the identity is asserted only for odd n");
  if (p == 2) throw DomainError("root_formula_check_F: p must be an odd prime");
  FpDomain dom(p);
  auto ring = family_ring<Fp>(FamilyId::F, dom);
  UniPoly<Fp> fn = det_family(FamilyId::F, ring, n).to_unipoly(0);
  auto F = ExtField::build(p, 2);
  for (std::uint64_t idx = 1; idx < F->order(); ++idx) {
    Fq xi = F->from_index(idx);
    if (xi == F->one() || xi == -F->one()) continue;
    Fq val = fn.eval_mapped(xi + xi.inv(), [&](Fp c) { return F->from_int(c.value()); });
    Fq sq = xi * xi - F->one();
    Fq lhs = val * xi.pow(n) * sq * sq;
    Fq rhs = (xi.pow(n + 3) - F->one()) * (xi.pow(n + 1) - F->one());
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace mdg

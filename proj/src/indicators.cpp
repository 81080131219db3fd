#include "tetrasym/indicators.hpp"

#include <cmath>

namespace tetrasym {

std::vector<double> fs_element_group(const Category& cat) {
  const GroupData& g = cat.group();
  std::vector<double> sigma(g.order, 0.0);
  for (int h = 0; h < g.order; ++h) sigma[g.mult[h][h]] += 1.0 / g.order;

  // Central: coefficients constant on conjugacy classes. Selfadjoint: the
  // coefficient of h equals that of h^{-1} (coefficients are real).
  for (int a = 0; a < g.order; ++a) {
    int ainv = -1;
    for (int b = 0; b < g.order; ++b)
      if (g.mult[a][b] == g.identity) ainv = b;
    for (int h = 0; h < g.order; ++h) {
      const int conj_h = g.mult[g.mult[a][h]][ainv];
      if (std::abs(sigma[h] - sigma[conj_h]) > 1e-12)
        throw NotIndicatorValued("sigma is not central");
    }
    if (std::abs(sigma[a] - sigma[ainv]) > 1e-12)
      throw NotIndicatorValued("sigma is not selfadjoint");
  }
  return sigma;
}

FSTable fs_decompose(const Category& cat, const std::vector<double>& sigma,
                     const Tolerance& tol) {
  const GroupData& g = cat.group();
  if (static_cast<int>(sigma.size()) != g.order)
    throw ShapeMismatch("sigma has wrong length");
  FSTable table;
  for (int r = 0; r < cat.rank(); ++r) {
    // sigma acts on the block r as the scalar (1/d_r) sum_h sigma_h chi_r(h);
    // by the central decomposition that scalar is nu_r / d_r.
    Complex acc = 0.0;
    for (int h = 0; h < g.order; ++h) acc += sigma[h] * g.character(r, h);
    const Complex nu = acc;  // d_r * (block scalar)
    const double re = nu.real();
    const int rounded = static_cast<int>(std::lround(re));
    if (std::abs(nu.imag()) > tol.eps || std::abs(re - rounded) > tol.eps ||
        rounded < -1 || rounded > 1)
      throw NotIndicatorValued("block scalar of label " + cat.label_name(r) +
                               " is not in {-1,0,1}");
    table.nu.push_back(rounded);
  }
  return table;
}

int categorical_indicator(const Rigidity& rig, int p, Complex phase) {
  const Category& cat = rig.category();
  const Tolerance& tol = rig.tol;
  if (cat.conj(p) != p) return 0;
  const auto& js = cat.hom_basis(Word::leaf(p), Word::leaf(cat.conj(p)));
  if (js.size() != 1)
    throw NotSelfConjugate("hom(p, hat p) is not one-dimensional for " +
                           cat.label_name(p));
  Intertwiner j = js[0];
  j.mat *= phase;
  const Intertwiner j_hat = rig.conjugate_arrow(j);
  // nu_p = J^{-1} J-hat kappa_p^{-1}; J is an isometry so J^{-1} = J*, and
  // kappa is unitary so kappa^{-1} = kappa*.
  const Intertwiner nu =
      compose(star(j), compose(j_hat, star(rig.kappa(p))));
  const Complex s = nu.mat.trace() / double(cat.dim(p));
  if (max_abs(nu.mat - s * cidentity(cat.dim(p))) > tol.eps)
    throw NotIndicatorValued("categorical indicator is not scalar on " +
                             cat.label_name(p));
  if (std::abs(s - 1.0) <= 1e-6) return 1;
  if (std::abs(s + 1.0) <= 1e-6) return -1;
  throw NotIndicatorValued("categorical indicator of " + cat.label_name(p) +
                           " is not a sign");
}

FSTable categorical_table(const Rigidity& rig) {
  FSTable table;
  for (int p = 0; p < rig.category().rank(); ++p)
    table.nu.push_back(categorical_indicator(rig, p));
  return table;
}

}  // namespace tetrasym

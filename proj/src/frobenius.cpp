#include "tetrasym/frobenius.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace tetrasym {

BasicSpace basic_space(const Category& cat, int p, int q, int r) {
  BasicSpace bs;
  bs.p = p;
  bs.q = q;
  bs.r = r;
  bs.basis = cat.hom_basis(Word::leaf(p),
                           Word::tensor(Word::leaf(q), Word::leaf(r)));
  return bs;
}

std::array<int, 3> x_image_triple(const Category& cat, int p, int q, int r) {
  return {r, cat.conj(q), p};
}

std::array<int, 3> y_image_triple(const Category& cat, int p, int q, int r) {
  return {q, p, cat.conj(r)};
}

namespace {

std::array<int, 3> triple_of(const Category& cat, const Intertwiner& t) {
  if (!t.src.is_leaf() || !t.dst.is_tensor() || !t.dst.left().is_leaf() ||
      !t.dst.right().is_leaf())
    throw ShapeMismatch("not a basic-space element: " + t.src.str() + " -> " +
                        t.dst.str());
  (void)cat;
  return {t.src.label(), t.dst.left().label(), t.dst.right().label()};
}

}  // namespace

Intertwiner frobenius_x(const Rigidity& rig, const Intertwiner& t) {
  const Category& cat = rig.category();
  const auto [p, q, r] = triple_of(cat, t);
  const int qh = cat.conj(q);
  const Word wq = Word::leaf(q), wr = Word::leaf(r), wqh = Word::leaf(qh);
  // x(t) = (1_qh (x) t*) phi*_{qh,q,r} (e_q* (x) 1_r) rho_r sqrt(d_r/d_p)
  Intertwiner out = compose(
      tensor_arrow(cat.identity_arrow(wqh), star(t)),
      compose(star(cat.phi_(wqh, wq, wr)),
              compose(tensor_arrow(star(rig.irr(q).e), cat.identity_arrow(wr)),
                      cat.rho_(wr))));
  out.mat *= std::sqrt(rig.qdim(r) / rig.qdim(p));
  return out;
}

Intertwiner frobenius_y(const Rigidity& rig, const Intertwiner& t) {
  const Category& cat = rig.category();
  const auto [p, q, r] = triple_of(cat, t);
  const int rh = cat.conj(r);
  const Word wq = Word::leaf(q), wr = Word::leaf(r), wrh = Word::leaf(rh);
  // y(t) = (t* (x) 1_rh) phi_{q,r,rh} (1_q (x) c_r) lambda_q sqrt(d_q/d_p)
  Intertwiner out = compose(
      tensor_arrow(star(t), cat.identity_arrow(wrh)),
      compose(cat.phi_(wq, wr, wrh),
              compose(tensor_arrow(cat.identity_arrow(wq), rig.irr(r).c),
                      cat.lambda_(wq))));
  out.mat *= std::sqrt(rig.qdim(q) / rig.qdim(p));
  return out;
}

namespace {

AntilinearMap map_in_bases(const Rigidity& rig, std::array<int, 3> srct,
                           std::array<int, 3> dstt, bool use_x) {
  const Category& cat = rig.category();
  const BasicSpace src = basic_space(cat, srct[0], srct[1], srct[2]);
  const BasicSpace dst = basic_space(cat, dstt[0], dstt[1], dstt[2]);
  CMatrix m(dst.dim(), src.dim());
  for (int i = 0; i < src.dim(); ++i) {
    const Intertwiner img = use_x ? frobenius_x(rig, src.basis[i])
                                  : frobenius_y(rig, src.basis[i]);
    for (int k = 0; k < dst.dim(); ++k)
      m(k, i) = inner_product(dst.basis[k].mat, img.mat, Inner::Scaled);
  }
  return AntilinearMap{srct, dstt, m};
}

}  // namespace

AntilinearMap frobenius_x_map(const Rigidity& rig, int p, int q, int r) {
  return map_in_bases(rig, {p, q, r},
                      x_image_triple(rig.category(), p, q, r), true);
}

AntilinearMap frobenius_y_map(const Rigidity& rig, int p, int q, int r) {
  return map_in_bases(rig, {p, q, r},
                      y_image_triple(rig.category(), p, q, r), false);
}

double S3Residuals::max() const {
  return std::max(std::max(x_square, y_square), std::max(braid, isometry));
}

S3Residuals s3_relations_check(const Rigidity& rig, int p, int q, int r) {
  const Category& cat = rig.category();
  S3Residuals res;
  const int n = basic_space(cat, p, q, r).dim();
  if (n == 0) return res;

  const auto x1 = frobenius_x_map(rig, p, q, r);
  const auto x2 = frobenius_x_map(rig, x1.dst[0], x1.dst[1], x1.dst[2]);
  res.x_square = max_abs(CMatrix(x2.mat * x1.mat.conjugate()) -
                         CMatrix(double(rig.chi(q)) * cidentity(n)));

  const auto y1 = frobenius_y_map(rig, p, q, r);
  const auto y2 = frobenius_y_map(rig, y1.dst[0], y1.dst[1], y1.dst[2]);
  res.y_square = max_abs(CMatrix(y2.mat * y1.mat.conjugate()) -
                         CMatrix(double(rig.chi(r)) * cidentity(n)));

  for (const auto& m : {x1.mat, y1.mat})
    res.isometry = std::max(
        res.isometry,
        max_abs(CMatrix(m.adjoint() * m) - cidentity(m.cols())));

  // xyx = yxy as antilinear maps: matrix M3 conj(M2) M1 along each chain.
  const auto yx = frobenius_y_map(rig, x1.dst[0], x1.dst[1], x1.dst[2]);
  const auto xyx =
      frobenius_x_map(rig, yx.dst[0], yx.dst[1], yx.dst[2]);
  const CMatrix lhs = xyx.mat * yx.mat.conjugate() * x1.mat;

  const auto xy = frobenius_x_map(rig, y1.dst[0], y1.dst[1], y1.dst[2]);
  const auto yxy =
      frobenius_y_map(rig, xy.dst[0], xy.dst[1], xy.dst[2]);
  const CMatrix rhs = yxy.mat * xy.mat.conjugate() * y1.mat;
  res.braid = max_abs(lhs - rhs);
  return res;
}

TripleOrbit triple_orbit(const Category& cat, int p, int q, int r) {
  TripleOrbit orbit;
  const int ph = cat.conj(p), qh = cat.conj(q), rh = cat.conj(r);
  const std::array<std::array<int, 3>, 6> images = {{
      {p, q, r},     // id
      {r, qh, p},    // x
      {q, p, rh},    // y
      {rh, ph, q},   // xy
      {qh, r, ph},   // yx
      {ph, rh, qh},  // xyx = yxy
  }};
  for (const auto& t : images)
    if (std::find(orbit.triples.begin(), orbit.triples.end(), t) ==
        orbit.triples.end())
      orbit.triples.push_back(t);

  if (p == q && q == r && p == ph)
    orbit.cls = TripleClass::Case3;
  else if (q == r && q == ph && p != ph)
    orbit.cls = TripleClass::Case2;
  else if (q == qh && r == p && p != q)
    orbit.cls = TripleClass::Case1;
  return orbit;
}

std::vector<SelectionRule> selection_rules(const Rigidity& rig) {
  const Category& cat = rig.category();
  std::vector<SelectionRule> rules;
  for (int q = 0; q < cat.rank(); ++q) {
    if (cat.conj(q) != q || rig.chi(q) != -1) continue;
    for (int p = 0; p < cat.rank(); ++p) {
      if (cat.fusion_coeff(p, p, q) != 0)
        throw SelectionViolation("N^" + cat.label_name(p) + "_{" +
                                 cat.label_name(p) + cat.label_name(q) +
                                 "} != 0 with chi = -1");
      rules.push_back(SelectionRule{"N^p_{pq} = 0", p, q});
    }
    if (cat.fusion_coeff(q, q, q) != 0)
      throw SelectionViolation("N^q_{qq} != 0 with chi_q = -1");
    rules.push_back(SelectionRule{"N^p_{pp} = 0", q, q});
  }
  return rules;
}

Z3Spectrum z3_spectrum(const Rigidity& rig, int p) {
  const Category& cat = rig.category();
  const int ph = cat.conj(p);
  if (ph == p) throw NotCase2("label is self-conjugate");
  // Case-2 space (p, hat p (x) hat p); xy = x after y is a linear
  // endomorphism of it.
  const auto y = frobenius_y_map(rig, p, ph, ph);
  const auto x = frobenius_x_map(rig, y.dst[0], y.dst[1], y.dst[2]);
  if (x.dst != std::array<int, 3>{p, ph, ph})
    throw NotCase2("xy does not stabilize (p, hat p (x) hat p)");
  const int n = basic_space(cat, p, ph, ph).dim();
  if (n == 0) throw NotCase2("empty case-2 space");
  const CMatrix xy = x.mat * y.mat.conjugate();

  Z3Spectrum out;
  out.cube_residual = max_abs(CMatrix(xy * xy * xy) - cidentity(n));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(xy);
  out.eigenbasis = es.eigenvectors();
  for (int i = 0; i < n; ++i) {
    const Complex ev = es.eigenvalues()(i);
    if (std::abs(ev * ev * ev - 1.0) > 1e-6)
      throw NotCase2("xy eigenvalue is not a third root of unity");
    out.eigenvalues.push_back(ev);
  }
  return out;
}

}  // namespace tetrasym

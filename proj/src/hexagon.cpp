#include "tetrasym/hexagon.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace tetrasym {

namespace {

// Scalar hexagons for a pointed category whose associator
// a_{p,q,r} : (p(x)q)(x)r -> p(x)(q(x)r) has scalar 1/omega_{pqr} in our
// phi convention:
//   H1:  a(q,r,p) R(p,q+r) a(p,q,r) = R(p,r) a(q,p,r) R(p,q)
//   H2:  a(r,p,q)^-1 R(p+q,r) a(p,q,r)^-1 = R(p,r) a(p,r,q)^-1 R(q,r)
Complex h1_lhs(const PointedZ3Data& pz, const BraidingTable& t, int p, int q,
               int r) {
  const Complex a_qrp = 1.0 / pz.cocycle(q, r, p);
  const Complex a_pqr = 1.0 / pz.cocycle(p, q, r);
  return a_qrp * t.R[p][(q + r) % 3] * a_pqr;
}

Complex h1_rhs(const PointedZ3Data& pz, const BraidingTable& t, int p, int q,
               int r) {
  const Complex a_qpr = 1.0 / pz.cocycle(q, p, r);
  return t.R[p][r] * a_qpr * t.R[p][q];
}

Complex h2_lhs(const PointedZ3Data& pz, const BraidingTable& t, int p, int q,
               int r) {
  const Complex a_rpq = 1.0 / pz.cocycle(r, p, q);
  const Complex a_pqr = 1.0 / pz.cocycle(p, q, r);
  return (1.0 / a_rpq) * t.R[(p + q) % 3][r] * (1.0 / a_pqr);
}

Complex h2_rhs(const PointedZ3Data& pz, const BraidingTable& t, int p, int q,
               int r) {
  const Complex a_prq = 1.0 / pz.cocycle(p, r, q);
  return t.R[p][r] * (1.0 / a_prq) * t.R[q][r];
}

}  // namespace

double hexagon_residual(const Category& cat, const BraidingTable& t) {
  const PointedZ3Data& pz = cat.pointed();
  double worst = 0.0;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      for (int r = 0; r < 3; ++r) {
        worst = std::max(worst, std::abs(h1_lhs(pz, t, p, q, r) -
                                         h1_rhs(pz, t, p, q, r)));
        worst = std::max(worst, std::abs(h2_lhs(pz, t, p, q, r) -
                                         h2_rhs(pz, t, p, q, r)));
      }
  return worst;
}

BraidingTable braiding_from_theta(const Category& cat, Complex theta) {
  const PointedZ3Data& pz = cat.pointed();
  const Complex w = pz.omega;
  BraidingTable t;
  for (int a = 0; a < 3; ++a) t.R[0][a] = t.R[a][0] = 1.0;
  t.R[1][1] = theta;
  // H1 at (1,1,1): R(1,2) = R(1,1)^2 w(1,1,1)^2 / w(1,1,1) = theta^2 w.
  t.R[1][2] = theta * theta * w;
  // H2 at (1,1,1): R(2,1) = R(1,1)^2 w(1,1,1)/w(1,1,1)^2 = theta^2 / w.
  t.R[2][1] = theta * theta / w;
  // H1 at (2,1,1): R(2,2) = R(2,1)^2 w(1,1,2) w(2,1,1) / w(1,2,1) = theta^4.
  t.R[2][2] = t.R[2][1] * t.R[2][1] * w * w;
  return t;
}

HexagonSearch hexagon_solve(const Category& cat, int lattice_order,
                            Tolerance tol) {
  if (lattice_order < 1) lattice_order = 1;
  HexagonSearch out;
  out.lattice_order = lattice_order;
  out.min_residual = std::numeric_limits<double>::infinity();
  for (int k = 0; k < lattice_order; ++k) {
    const Complex theta =
        std::polar(1.0, 2.0 * std::numbers::pi * k / lattice_order);
    const BraidingTable t = braiding_from_theta(cat, theta);
    const double res = hexagon_residual(cat, t);
    out.min_residual = std::min(out.min_residual, res);
    if (res <= tol.eps) out.solutions.push_back(t);
  }
  return out;
}

}  // namespace tetrasym

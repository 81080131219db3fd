#include "tetrasym/numeric.hpp"

#include <cmath>

namespace tetrasym {

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool approx_equal(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol.eps;
}

bool approx_equal(Complex a, Complex b, const Tolerance& tol) {
  return std::abs(a - b) <= tol.eps;
}

void ensure_finite(const CMatrix& m, const char* what) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw NonFinite(std::string("non-finite entry in ") + what);
    }
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Complex inner_product(const CMatrix& a, const CMatrix& b, Inner inner) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("inner_product: shape mismatch");
  Complex hs = (a.adjoint() * b).trace();
  if (inner == Inner::Scaled) hs /= static_cast<double>(a.cols());
  return hs;
}

std::vector<CMatrix> orthonormalize(const std::vector<CMatrix>& vectors,
                                    Inner inner, const Tolerance& tol) {
  if (vectors.empty()) throw EmptyInput("orthonormalize: no vectors given");
  const Eigen::Index rows = vectors.front().rows();
  const Eigen::Index cols = vectors.front().cols();
  double scale = 0.0;
  for (const auto& v : vectors) {
    if (v.rows() != rows || v.cols() != cols)
      throw ShapeMismatch("orthonormalize: inputs differ in shape");
    scale = std::max(scale, std::sqrt(std::abs(inner_product(v, v, inner))));
  }
  std::vector<CMatrix> basis;
  for (const auto& v : vectors) {
    CMatrix w = v;
    // Two projection passes keep orthogonality tight when inputs are nearly
    // dependent (classical re-orthogonalization).
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis) w -= inner_product(u, w, inner) * u;
    const double norm = std::sqrt(std::abs(inner_product(w, w, inner)));
    if (norm <= tol.eps * scale) continue;  // dependent, drop
    basis.push_back(w / norm);
  }
  return basis;
}

MatrixClass classify(const CMatrix& m, const Tolerance& tol) {
  MatrixClass c;
  c.zero = max_abs(m) <= tol.eps;
  const CMatrix gram = m.adjoint() * m;
  c.isometry =
      max_abs(gram - CMatrix(cidentity(m.cols()))) <= tol.eps;
  c.unitary = c.isometry && m.rows() == m.cols();
  c.partial_isometry = max_abs(CMatrix(m * gram) - m) <= tol.eps;
  return c;
}

CMatrix phase_fix(const CMatrix& m, const Tolerance& tol) {
  const double big = max_abs(m);
  if (big <= tol.eps) return m;
  const double cutoff = std::sqrt(tol.eps) * big;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      if (std::abs(z) > cutoff) return CMatrix((std::conj(z) / std::abs(z)) * m);
    }
  return m;
}

CMatrix cidentity(Eigen::Index n) {
  return CMatrix(CMatrix::Identity(n, n));
}

CMatrix swap_factors(Eigen::Index da, Eigen::Index db) {
  CMatrix s = CMatrix::Zero(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < db; ++j) s(j * da + i, i * db + j) = 1.0;
  return s;
}

}  // namespace tetrasym

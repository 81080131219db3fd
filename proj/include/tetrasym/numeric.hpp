#pragma once

// Dense complex linear algebra with an explicit tolerance discipline.
// Every structural identity downstream is checked as an eps-inequality on
// max-abs residuals, never as exact equality.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "tetrasym/errors.hpp"

namespace tetrasym {

using Complex = std::complex<double>;
using CMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

struct Tolerance {
  double eps = 1e-9;
};

// Largest |entry|; 0 for empty matrices.
double max_abs(const CMatrix& m);

bool approx_equal(const CMatrix& a, const CMatrix& b, const Tolerance& tol);
bool approx_equal(Complex a, Complex b, const Tolerance& tol);

// Throws NonFinite if any entry is NaN or Inf.
void ensure_finite(const CMatrix& m, const char* what);

// Kronecker product, row-major index convention:
// (a (x) b)[i*rb+k, j*cb+l] = a[i,j] * b[k,l].
CMatrix kron(const CMatrix& a, const CMatrix& b);

enum class Inner {
  HilbertSchmidt,  // <A,B> = tr(A* B)
  Scaled,          // <A,B> = tr(A* B) / cols(A); makes hom-space bases satisfy
                   // t* t = <t,t> 1 on irreducible sources
};

Complex inner_product(const CMatrix& a, const CMatrix& b, Inner inner);

// Gram-Schmidt in input order. Inputs whose residual after projection falls
// below eps * (largest input norm) are dropped as linearly dependent.
std::vector<CMatrix> orthonormalize(const std::vector<CMatrix>& vectors,
                                    Inner inner, const Tolerance& tol);

struct MatrixClass {
  bool isometry = false;
  bool unitary = false;
  bool partial_isometry = false;
  bool zero = false;
};

MatrixClass classify(const CMatrix& m, const Tolerance& tol);

// Multiplies by the phase making the first entry whose modulus exceeds
// sqrt(eps) * max_abs real positive. No-op on (near-)zero matrices.
CMatrix phase_fix(const CMatrix& m, const Tolerance& tol);

CMatrix cidentity(Eigen::Index n);

// Permutation matrix swapping the two factors of C^da (x) C^db.
CMatrix swap_factors(Eigen::Index da, Eigen::Index db);

}  // namespace tetrasym

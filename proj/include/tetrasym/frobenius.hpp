#pragma once

// Frobenius maps on basic intertwiner spaces (p, q(x)r) and the projective
// S3 action they generate. Antilinear maps are stored as (matrix, implicit
// conjugation) acting on coordinates as v -> M conj(v); composing two of them
// gives the linear map M2 conj(M1).

#include <array>
#include <vector>

#include "tetrasym/rigidity.hpp"

namespace tetrasym {

struct BasicSpace {
  int p = 0, q = 0, r = 0;              // the space (p, q (x) r)
  std::vector<Intertwiner> basis;       // orthonormal for the (5.1) product
  int dim() const { return static_cast<int>(basis.size()); }
};

struct AntilinearMap {
  std::array<int, 3> src;  // source triple (p,q,r)
  std::array<int, 3> dst;  // destination triple
  CMatrix mat;             // dim(dst) x dim(src); acts as v -> mat conj(v)
};

BasicSpace basic_space(const Category& cat, int p, int q, int r);

// x : (p, q(x)r) -> (r, q^(x)p) and y : (p, q(x)r) -> (q, p(x)r^) applied to
// a concrete element; t must live in the triple's hom space.
Intertwiner frobenius_x(const Rigidity& rig, const Intertwiner& t);
Intertwiner frobenius_y(const Rigidity& rig, const Intertwiner& t);

// Matrices of x and y in the canonical bases of source and destination.
AntilinearMap frobenius_x_map(const Rigidity& rig, int p, int q, int r);
AntilinearMap frobenius_y_map(const Rigidity& rig, int p, int q, int r);

std::array<int, 3> x_image_triple(const Category& cat, int p, int q, int r);
std::array<int, 3> y_image_triple(const Category& cat, int p, int q, int r);

struct S3Residuals {
  double x_square = 0.0;   // x^2 - chi_q id
  double y_square = 0.0;   // y^2 - chi_r id
  double braid = 0.0;      // xyx - yxy
  double isometry = 0.0;   // unitarity of the x and y matrices
  double max() const;
};

S3Residuals s3_relations_check(const Rigidity& rig, int p, int q, int r);

enum class TripleClass { Generic, Case1, Case2, Case3 };

struct TripleOrbit {
  std::vector<std::array<int, 3>> triples;  // deduplicated, <= 6
  TripleClass cls = TripleClass::Generic;
};

TripleOrbit triple_orbit(const Category& cat, int p, int q, int r);

struct SelectionRule {
  std::string pattern;  // "N^p_{pq} = 0" or "N^p_{pp} = 0"
  int p = 0, q = 0;
};

// Enforces the fusion zeros implied by chi = -1; throws SelectionViolation.
std::vector<SelectionRule> selection_rules(const Rigidity& rig);

struct Z3Spectrum {
  std::vector<Complex> eigenvalues;  // each a third root of unity
  CMatrix eigenbasis;                // columns, coordinates in the canonical basis
  double cube_residual = 0.0;        // ||(xy)^3 - id||
};

// The linear map xy on a case-2 space (p, hat(p)(x)hat(p)); NotCase2 if the
// triple is not of that shape.
Z3Spectrum z3_spectrum(const Rigidity& rig, int p);

}  // namespace tetrasym

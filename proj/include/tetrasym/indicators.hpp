#pragma once

// Frobenius-Schur indicators by two independent routes: the central
// group-algebra element sigma = (1/|G|) sum_g g^2 decomposed over irreducible
// blocks, and the categorical sign J^{-1} J-hat kappa^{-1} built from an
// isometry J : p -> hat(p). Both land in {-1, 0, +1}.

#include <vector>

#include "tetrasym/rigidity.hpp"

namespace tetrasym {

struct FSTable {
  std::vector<int> nu;  // -1, 0, +1 per label
};

// Coefficients of sigma in group-element coordinates; verified central and
// selfadjoint. Group backend only.
std::vector<double> fs_element_group(const Category& cat);

// Central decomposition sigma = sum_r (nu_r / d_r) e_r read off through
// characters; throws NotIndicatorValued if a block scalar is not within tol
// of {-1, 0, +1} after multiplying by d_r.
FSTable fs_decompose(const Category& cat, const std::vector<double>& sigma,
                     const Tolerance& tol);

// Categorical indicator of a single label; 0 when p is not self-conjugate.
// phase lets callers replace J by z J (|z| = 1) to confirm J-independence.
int categorical_indicator(const Rigidity& rig, int p, Complex phase = 1.0);

FSTable categorical_table(const Rigidity& rig);

}  // namespace tetrasym

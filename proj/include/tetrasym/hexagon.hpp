#pragma once

// Braiding existence for the pointed Z3 categories. A braiding is a table of
// unit scalars R[p][q] for c_{p,q} : p(x)q -> q(x)r subject to both hexagon
// identities against the cocycle associator; the search parametrizes
// candidates by theta = R[1][1] on a root-of-unity lattice and forces the
// rest of the table by the hexagon recursions.

#include <vector>

#include "tetrasym/category.hpp"

namespace tetrasym {

struct BraidingTable {
  std::array<std::array<Complex, 3>, 3> R{};
};

// Max absolute defect of the two scalar hexagons over all 27 label triples.
double hexagon_residual(const Category& cat, const BraidingTable& table);

// Table forced from theta by the hexagon recursions (rows/columns through 0
// are 1 by the unit axioms).
BraidingTable braiding_from_theta(const Category& cat, Complex theta);

struct HexagonSearch {
  std::vector<BraidingTable> solutions;  // residual <= tol, lattice order
  double min_residual = 0.0;             // over the whole lattice
  int lattice_order = 0;
};

HexagonSearch hexagon_solve(const Category& cat, int lattice_order = 36,
                            Tolerance tol = {});

}  // namespace tetrasym

#pragma once

// Named verification suites over a loaded category, producing a
// machine-readable report. Check ids are stable and key the structural
// identities they certify.

#include <string>
#include <vector>

#include "tetrasym/category.hpp"
#include "tetrasym/rigidity.hpp"

namespace tetrasym {

struct Check {
  std::string id;
  bool pass = false;
  double residual = 0.0;
  std::string details;
};

struct Report {
  std::string category;
  std::string suite;
  double tolerance = 0.0;
  unsigned seed = 0;
  std::vector<Check> checks;
  bool all_pass() const;
};

// suite is one of: coherence, rigidity, indicators, frobenius, s4, all.
Report run_suite(const Category& cat, const std::string& suite,
                 Tolerance tol = {}, unsigned seed = 1);

std::string report_to_json(const Report& rep);
std::string report_summary(const Report& rep);

// F-symbol export: every admissible tetrahedron with its normalized
// F-coefficients and 6j values, sorted by label tuple.
std::string fsymbols_to_json(const Rigidity& rig);

std::string orbits_to_json(const Category& cat);
std::string indicators_to_json(const Category& cat, Tolerance tol);
std::string hexagon_to_json(const Category& cat, int lattice_order,
                            Tolerance tol);

}  // namespace tetrasym

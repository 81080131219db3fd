// Batch verification CLI: load a category preset or spec file, run named
// check suites, emit JSON reports on stdout and a human summary on stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "tetrasym/hexagon.hpp"
#include "tetrasym/report.hpp"

using namespace tetrasym;

namespace {

Tolerance default_tolerance() {
  Tolerance tol;
  if (const char* env = std::getenv("TETRASYM_TOL")) {
    const double v = std::atof(env);
    if (v > 0.0 && v < 1.0) tol.eps = v;
  }
  return tol;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification of rigidity data, Frobenius-Schur indicators and "
               "S4-symmetric 6j-symbols for concrete C*-categories"};
  app.require_subcommand(1);

  std::string category;
  std::string suite = "all";
  std::string out_path;
  double tol_arg = 0.0;
  unsigned seed = 1;
  int lattice = 36;

  auto add_category = [&](CLI::App* cmd) {
    cmd->add_option("--category", category, "preset name or spec file path")
        ->required();
  };

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_category(verify);
  verify->add_option("--suite", suite,
                     "coherence|rigidity|indicators|frobenius|s4|all");
  verify->add_option("--tol", tol_arg, "override tolerance");
  verify->add_option("--seed", seed, "sampling seed");

  CLI::App* fsym = app.add_subcommand("fsymbols", "export F-symbol tables");
  add_category(fsym);
  fsym->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* orbits = app.add_subcommand("orbits", "tetrahedron orbit census");
  add_category(orbits);

  CLI::App* indicators =
      app.add_subcommand("indicators", "Frobenius-Schur indicator table");
  add_category(indicators);

  CLI::App* hexagon =
      app.add_subcommand("hexagon", "braiding search for pointed categories");
  add_category(hexagon);
  hexagon->add_option("--lattice", lattice, "root-of-unity lattice order");

  CLI11_PARSE(app, argc, argv);

  Tolerance tol = default_tolerance();
  if (tol_arg > 0.0 && tol_arg < 1.0) tol.eps = tol_arg;

  try {
    const Category cat = Category::load(category);

    if (verify->parsed()) {
      const Report rep = run_suite(cat, suite, tol, seed);
      std::cout << report_to_json(rep) << "\n";
      std::cerr << report_summary(rep);
      return rep.all_pass() ? 0 : 1;
    }
    if (fsym->parsed()) {
      Rigidity rig(cat, tol);
      const std::string doc = fsymbols_to_json(rig);
      if (out_path.empty()) {
        std::cout << doc << "\n";
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "cannot write " << out_path << "\n";
          return 2;
        }
        out << doc << "\n";
        std::cerr << "wrote " << out_path << "\n";
      }
      return 0;
    }
    if (orbits->parsed()) {
      std::cout << orbits_to_json(cat) << "\n";
      return 0;
    }
    if (indicators->parsed()) {
      std::cout << indicators_to_json(cat, tol) << "\n";
      return 0;
    }
    if (hexagon->parsed()) {
      std::cout << hexagon_to_json(cat, lattice, tol) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "load error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

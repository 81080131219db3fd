#include <catch2/catch_amalgamated.hpp>

#include "tetrasym/frobenius.hpp"
#include "test_helpers.hpp"

using namespace tetrasym;
using tetrasym::testing::preset;

TEST_CASE("canonical actions of x and y", "[frobenius]") {
  // rho_p sits in (p, 1(x)p), lambda_p in (p, p(x)1) with the unit as the
  // letter 0; both are the canonical basis elements there.
  for (const auto& nm : {std::string("q8"), std::string("z3_omega1")}) {
    const Category& cat = preset(nm);
    const Rigidity rig(cat);
    for (int p = 0; p < cat.rank(); ++p) {
      const int ph = cat.conj(p);
      const Intertwiner rho = basic_space(cat, p, 0, p).basis[0];
      const Intertwiner lam = basic_space(cat, p, p, 0).basis[0];
      const double sd = std::sqrt(rig.qdim(p));

      REQUIRE(max_abs(frobenius_x(rig, rho).mat - rho.mat) < 1e-9);
      REQUIRE(max_abs(frobenius_y(rig, rho).mat -
                      CMatrix(rig.irr(p).c.mat / sd)) < 1e-9);
      REQUIRE(max_abs(frobenius_x(rig, frobenius_y(rig, rho)).mat -
                      basic_space(cat, ph, ph, 0).basis[0].mat) < 1e-9);

      REQUIRE(max_abs(frobenius_x(rig, lam).mat -
                      CMatrix(rig.irr(p).e.mat.adjoint() / sd)) < 1e-9);
      REQUIRE(max_abs(frobenius_y(rig, lam).mat - lam.mat) < 1e-9);
      REQUIRE(max_abs(frobenius_y(rig, frobenius_x(rig, lam)).mat -
                      basic_space(cat, ph, 0, ph).basis[0].mat) < 1e-9);
    }
  }
}

TEST_CASE("pointed frobenius coefficients", "[frobenius]") {
  const Category& cat = preset("z3_omega1");
  const Rigidity rig(cat);
  const PointedZ3Data& pz = cat.pointed();

  SECTION("x(1^p_qr) = conj(omega_{q^ q r}) 1^r_{q^ p}") {
    for (int q = 0; q < 3; ++q)
      for (int r = 0; r < 3; ++r) {
        const int p = (q + r) % 3;
        const auto m = frobenius_x_map(rig, p, q, r);
        REQUIRE(std::abs(m.mat(0, 0) -
                         std::conj(pz.cocycle(cat.conj(q), q, r))) < 1e-12);
      }
  }
  SECTION("y(1^p_qr) = omega_{q r r^} 1^q_{p r^}") {
    for (int q = 0; q < 3; ++q)
      for (int r = 0; r < 3; ++r) {
        const int p = (q + r) % 3;
        const auto m = frobenius_y_map(rig, p, q, r);
        REQUIRE(std::abs(m.mat(0, 0) - pz.cocycle(q, r, cat.conj(r))) < 1e-12);
      }
  }
  SECTION("xy on (1, 2(x)2) multiplies by omega") {
    const auto y = frobenius_y_map(rig, 1, 2, 2);
    const auto x = frobenius_x_map(rig, y.dst[0], y.dst[1], y.dst[2]);
    const Complex ev = (x.mat * y.mat.conjugate())(0, 0);
    REQUIRE(std::abs(ev - pz.omega) < 1e-12);
  }
}

TEST_CASE("antilinear isometry property", "[frobenius]") {
  std::mt19937 rng(31);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (const auto& nm : tetrasym::testing::all_presets()) {
    const Category& cat = preset(nm);
    const Rigidity rig(cat);
    for (int p = 0; p < cat.rank(); ++p)
      for (int q = 0; q < cat.rank(); ++q)
        for (int r = 0; r < cat.rank(); ++r) {
          const BasicSpace bs = basic_space(cat, p, q, r);
          if (bs.dim() == 0) continue;
          // <x(t1), x(t2)> = <t2, t1> on random elements
          Intertwiner t1 = bs.basis[0], t2 = bs.basis[bs.dim() - 1];
          t1.mat *= Complex(dist(rng), dist(rng));
          t2.mat *= Complex(dist(rng), dist(rng));
          const Intertwiner x1 = frobenius_x(rig, t1);
          const Intertwiner x2 = frobenius_x(rig, t2);
          const Complex lhs = inner_product(x1.mat, x2.mat, Inner::Scaled);
          const Complex rhs = inner_product(t2.mat, t1.mat, Inner::Scaled);
          REQUIRE(std::abs(lhs - rhs) < 1e-9);
          const Intertwiner y1 = frobenius_y(rig, t1);
          const Intertwiner y2 = frobenius_y(rig, t2);
          REQUIRE(std::abs(inner_product(y1.mat, y2.mat, Inner::Scaled) - rhs) <
                  1e-9);
        }
  }
}

TEST_CASE("projective s3 relations", "[frobenius]") {
  SECTION("q8 triple (1, E, E): x squares to chi_E = -1") {
    const Category& cat = preset("q8");
    const Rigidity rig(cat);
    const auto x1 = frobenius_x_map(rig, 0, 4, 4);
    const auto x2 = frobenius_x_map(rig, x1.dst[0], x1.dst[1], x1.dst[2]);
    REQUIRE(max_abs(CMatrix(x2.mat * x1.mat.conjugate()) +
                    cidentity(1)) < 1e-9);
  }
  SECTION("pointed triples: x squares to the identity") {
    const Rigidity rig(preset("z3_omega2"));
    for (int q = 0; q < 3; ++q)
      for (int r = 0; r < 3; ++r) {
        const auto res = s3_relations_check(rig, (q + r) % 3, q, r);
        REQUIRE(res.x_square < 1e-12);
        REQUIRE(res.y_square < 1e-12);
      }
  }
  SECTION("all relations on all admissible triples of every preset") {
    for (const auto& nm : tetrasym::testing::all_presets()) {
      const Category& cat = preset(nm);
      const Rigidity rig(cat);
      for (int p = 0; p < cat.rank(); ++p)
        for (int q = 0; q < cat.rank(); ++q)
          for (int r = 0; r < cat.rank(); ++r) {
            if (cat.fusion_coeff(p, q, r) == 0) continue;
            REQUIRE(s3_relations_check(rig, p, q, r).max() < 1e-9);
          }
    }
  }
}

TEST_CASE("triple orbits and degeneracy classes", "[frobenius]") {
  SECTION("(1,1,1) is a singleton of case 3") {
    const auto orbit = triple_orbit(preset("q8"), 0, 0, 0);
    REQUIRE(orbit.triples.size() == 1);
    REQUIRE(orbit.cls == TripleClass::Case3);
  }
  SECTION("pointed (1,2,2) is case 2 with orbit of two") {
    const auto orbit = triple_orbit(preset("z3_omega1"), 1, 2, 2);
    REQUIRE(orbit.cls == TripleClass::Case2);
    REQUIRE(orbit.triples.size() == 2);
    REQUIRE(orbit.triples[1] == std::array<int, 3>{2, 1, 1});
  }
  SECTION("q8 (1, E, E) has orbit size 3 containing a case-1 triple") {
    const Category& cat = preset("q8");
    const auto orbit = triple_orbit(cat, 0, 4, 4);
    REQUIRE(orbit.triples.size() == 3);
    REQUIRE(triple_orbit(cat, 4, 0, 4).cls == TripleClass::Case1);
  }
  SECTION("generic triples have orbit size 6") {
    // chi_k inside chi_i (x) chi_j in q8: all six images distinct
    const auto orbit = triple_orbit(preset("q8"), 3, 1, 2);
    REQUIRE(orbit.cls == TripleClass::Generic);
    REQUIRE(orbit.triples.size() == 6);
  }
}

TEST_CASE("selection rules", "[frobenius]") {
  SECTION("q8: chi_E = -1 forces N^p_{pE} = 0, in particular N^E_{EE} = 0") {
    const Category& cat = preset("q8");
    const Rigidity rig(cat);
    const auto rules = selection_rules(rig);
    REQUIRE(rules.size() == 6);  // five labels plus the case-3 rule on E
    REQUIRE(cat.fusion_coeff(4, 4, 4) == 0);
  }
  SECTION("s3 has no negative indicators, so no constraints") {
    REQUIRE(selection_rules(Rigidity(preset("s3"))).empty());
  }
}

TEST_CASE("case-2 z3 spectrum", "[frobenius]") {
  SECTION("undeformed: eigenvalue 1") {
    const Z3Spectrum sp = z3_spectrum(Rigidity(preset("z3_omega0")), 1);
    REQUIRE(sp.eigenvalues.size() == 1);
    REQUIRE(std::abs(sp.eigenvalues[0] - Complex(1.0)) < 1e-9);
  }
  SECTION("omega-deformed: eigenvalue omega, cube is the identity") {
    const Category& cat = preset("z3_omega1");
    const Z3Spectrum sp = z3_spectrum(Rigidity(cat), 1);
    REQUIRE(sp.eigenvalues.size() == 1);
    REQUIRE(std::abs(sp.eigenvalues[0] - cat.pointed().omega) < 1e-9);
    REQUIRE(sp.cube_residual < 1e-12);
  }
  SECTION("z3 group pair works the same way") {
    const Z3Spectrum sp = z3_spectrum(Rigidity(preset("z3")), 1);
    REQUIRE(sp.eigenvalues.size() == 1);
    REQUIRE(sp.cube_residual < 1e-9);
  }
  SECTION("self-conjugate labels are rejected") {
    REQUIRE_THROWS_AS(z3_spectrum(Rigidity(preset("q8")), 4), NotCase2);
  }
}

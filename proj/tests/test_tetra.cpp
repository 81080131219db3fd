#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "tetrasym/tetra.hpp"
#include "test_helpers.hpp"

using namespace tetrasym;
using tetrasym::testing::preset;

TEST_CASE("tetra label action", "[tetra]") {
  const Category& cat = preset("z3_omega1");
  const Tetra s{{1, 0, 1, 2, 1, 1}};

  SECTION("identity permutation") {
    REQUIRE(tetra_transform(cat, {0, 1, 2, 3}, s) == s);
  }
  SECTION("tau_12 on (1,0,1,2,1,1)") {
    const Tetra img = tetra_transform(cat, gen_perm(Gen::T12), s);
    REQUIRE(img == Tetra{{2, 1, 1, 1, 0, 2}});
  }
  SECTION("generators square to the identity on labels") {
    for (const auto& nm : tetrasym::testing::all_presets()) {
      const Category& c = preset(nm);
      for (const Tetra& t : all_admissible(c))
        for (Gen g : {Gen::T12, Gen::T23, Gen::T34}) {
          const Tetra once = tetra_transform(c, gen_perm(g), t);
          REQUIRE(tetra_transform(c, gen_perm(g), once) == t);
        }
    }
  }
  SECTION("direct permutation formula matches generator decomposition") {
    // every permutation as a word in adjacent transpositions
    const Category& c = preset("q8");
    const Tetra t{{4, 4, 4, 4, 0, 2}};
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
      Tetra via_word = t;
      // bubble-sort decomposition of perm, applied right-to-left
      std::array<int, 4> work = perm;
      std::vector<Gen> word;
      for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i + 1 < 4; ++i)
          if (work[i] > work[i + 1]) {
            std::swap(work[i], work[i + 1]);
            word.push_back(i == 0 ? Gen::T12 : (i == 1 ? Gen::T23 : Gen::T34));
            moved = true;
          }
      }
      std::reverse(word.begin(), word.end());
      for (Gen g : word) via_word = tetra_transform(c, gen_perm(g), via_word);
      REQUIRE(via_word == tetra_transform(c, perm, t));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("phi values", "[tetra]") {
  SECTION("all-unit tetrahedron gives 1") {
    for (const auto& nm : {std::string("q8"), std::string("z3_omega1")}) {
      const Category& cat = preset(nm);
      const Rigidity rig(cat);
      const Tetra s{{0, 0, 0, 0, 0, 0}};
      const auto sp = tetra_spaces(cat, s);
      REQUIRE(std::abs(phi_value(rig, s, sp[0].basis[0], sp[1].basis[0],
                                 sp[2].basis[0], sp[3].basis[0]) -
                       Complex(1.0)) < 1e-12);
    }
  }
  SECTION("pointed canonical values are the cocycle") {
    const Category& cat = preset("z3_omega1");
    const Rigidity rig(cat);
    for (const Tetra& s : all_admissible(cat)) {
      const FTensor f = f_tensor(rig, s);
      REQUIRE(f.values.size() == 1);
      REQUIRE(std::abs(f.values[0] -
                       cat.pointed().cocycle(s.p(), s.q(), s.r())) < 1e-12);
      REQUIRE(std::abs(std::abs(f.values[0]) - 1.0) < 1e-12);
    }
    // the appendix block (101)_2 in particular
    REQUIRE(std::abs(f_tensor(rig, Tetra{{1, 0, 1, 2, 1, 1}}).values[0] -
                     Complex(1.0)) < 1e-12);
  }
  SECTION("closed diagram agrees with the recoupling overlap") {
    const Category& cat = preset("q8");
    const Rigidity rig(cat);
    for (const Tetra& s : all_admissible(cat)) {
      const auto sp = tetra_spaces(cat, s);
      const Complex a = phi_value(rig, s, sp[0].basis[0], sp[1].basis[0],
                                  sp[2].basis[0], sp[3].basis[0]);
      const Complex b = phi_value_overlap(rig, s, sp[0].basis[0], sp[1].basis[0],
                                          sp[2].basis[0], sp[3].basis[0]);
      REQUIRE(std::abs(a - b) < 1e-9);
    }
  }
  SECTION("unit-edge tetrahedra reduce to the triangle identity") {
    const Category& cat = preset("q8");
    const Rigidity rig(cat);
    for (const Tetra& s : all_admissible(cat)) {
      if (s.p() != 0) continue;
      // with p = 1 the block forces u = q, v = t and F/sqrt(d...) = delta
      const FTensor f = f_tensor(rig, s);
      const double norm = std::sqrt(rig.qdim(s.p()) * rig.qdim(s.q()) *
                                    rig.qdim(s.r()) * rig.qdim(s.t()));
      for (int i = 0; i < f.dims[0]; ++i)
        for (int j = 0; j < f.dims[1]; ++j)
          for (int k = 0; k < f.dims[2]; ++k)
            for (int l = 0; l < f.dims[3]; ++l) {
              const Complex expect =
                  (i == k && j == l) ? Complex(1.0) : Complex(0.0);
              // alpha and delta are the canonical unit intertwiners here, and
              // beta, gamma range over the same space
              REQUIRE(std::abs(f.at(i, j, k, l) / norm - expect) < 1e-9);
            }
    }
  }
}

TEST_CASE("s4 action on blocks", "[tetra]") {
  const Category& cat = preset("q8");
  const Rigidity rig(cat);

  SECTION("generator action matrices are unitary") {
    int checked = 0;
    for (const Tetra& s : all_admissible(cat)) {
      if (block_dim(cat, s) == 0) continue;
      for (Gen g : {Gen::T12, Gen::T23, Gen::T34}) {
        const auto act = s4_generator_action(rig, g, s);
        REQUIRE(classify(act.mat, Tolerance{1e-9}).unitary);
      }
      if (++checked > 40) break;
    }
  }
  SECTION("defining relations hold on every admissible tetrahedron") {
    for (const Tetra& s : all_admissible(cat))
      REQUIRE(verify_s4_relations(rig, s) < 1e-9);
  }
  SECTION("phi is invariant with parity conjugation") {
    for (const Tetra& s : all_admissible(cat))
      REQUIRE(verify_phi_invariance(rig, s) < 1e-9);
  }
}

TEST_CASE("6j unitarity", "[tetra]") {
  SECTION("q8 (E,E,E,E) block is a unitary 4x4 matrix") {
    const Category& cat = preset("q8");
    const Rigidity rig(cat);
    REQUIRE(verify_sixj_unitarity(rig, 4, 4, 4, 4) < 1e-9);
    // spot check the rescaling of the named 6j tensor
    const Tetra s{{4, 4, 4, 4, 0, 0}};
    REQUIRE(std::abs(six_j_tensor(rig, s).values[0] -
                     f_tensor(rig, s).values[0] / 4.0) < 1e-12);
    int count = 0;
    for (int u = 0; u < 5; ++u)
      for (int v = 0; v < 5; ++v)
        if (admissible(cat, Tetra{{4, 4, 4, 4, u, v}})) ++count;
    REQUIRE(count == 16);  // four u's times four v's
  }
  SECTION("every block of s3 is unitary") {
    const Category& cat = preset("s3");
    const Rigidity rig(cat);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q)
        for (int r = 0; r < 3; ++r)
          for (int t = 0; t < 3; ++t)
            REQUIRE(verify_sixj_unitarity(rig, p, q, r, t) < 1e-9);
  }
}

TEST_CASE("orbit census and transport", "[tetra]") {
  SECTION("pointed census matches the five-orbit structure") {
    const Category& cat = preset("z3_omega1");
    const OrbitReport rep = orbit_report(cat);
    REQUIRE(rep.admissible_count == 27);
    REQUIRE(rep.orbits.size() == 5);
    std::vector<std::size_t> sizes;
    for (const auto& o : rep.orbits) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    REQUIRE(sizes == std::vector<std::size_t>{1, 4, 4, 6, 12});
    REQUIRE(rep.reduction_ratio == Catch::Approx(27.0 / 5.0));
  }
  SECTION("trivial category has one orbit of size one") {
    const Category cat = Category::load_string(R"({
      "name": "trivial", "backend": "group_rep", "order": 1,
      "generators": [], "mult_table": [[0]],
      "irreps": [{"name": "triv", "dim": 1, "conjugate": "triv",
                  "conj_unitary": [[1,0]], "matrices": {}}]})");
    const OrbitReport rep = orbit_report(cat);
    REQUIRE(rep.orbits.size() == 1);
    REQUIRE(rep.orbits[0].size() == 1);
  }
  SECTION("transport reproduces direct values") {
    for (const auto& nm : {std::string("z3_omega1"), std::string("s3")}) {
      const Rigidity rig(preset(nm));
      REQUIRE(verify_orbit_transport(rig) < 1e-9);
    }
  }
}

TEST_CASE("gauge demonstration", "[tetra]") {
  SECTION("omega = 1 is rejected") {
    REQUIRE_THROWS_AS(coherent_gauge_demo(Rigidity(preset("z3_omega0"))),
                      OmegaTrivial);
  }
  SECTION("omega = exp(2 pi i/3)") {
    const Category& cat = preset("z3_omega1");
    const Complex w = cat.pointed().omega;
    const GaugeDemo demo = coherent_gauge_demo(Rigidity(cat));
    REQUIRE(std::abs(demo.coeff_factor - w) < 1e-12);
    REQUIRE(std::abs(demo.table_factor - std::conj(w)) < 1e-12);
    REQUIRE(std::abs(demo.product_a - 1.0) < 1e-12);
    REQUIRE(std::abs(demo.product_b - w * w) < 1e-12);
  }
  SECTION("omega = exp(-2 pi i/3), and gauge independence across seeds") {
    const Category& cat = preset("z3_omega2");
    const Complex w = cat.pointed().omega;
    const Rigidity rig(cat);
    for (unsigned seed : {1u, 2u, 77u}) {
      const GaugeDemo demo = coherent_gauge_demo(rig, seed);
      REQUIRE(std::abs(demo.product_b - w * w) < 1e-12);
    }
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "tetrasym/indicators.hpp"
#include "test_helpers.hpp"

using namespace tetrasym;
using tetrasym::testing::preset;

namespace {

// Classical oracle nu_r = (1/|G|) sum_g chi_r(g^2), independent of the
// central-element route.
std::vector<int> character_fs_oracle(const Category& cat) {
  const GroupData& g = cat.group();
  std::vector<int> nus;
  for (int r = 0; r < cat.rank(); ++r) {
    Complex acc = 0.0;
    for (int h = 0; h < g.order; ++h)
      acc += g.character(r, g.mult[h][h]);
    acc /= double(g.order);
    REQUIRE(std::abs(acc.imag()) < 1e-9);
    REQUIRE(std::abs(acc.real() - std::lround(acc.real())) < 1e-9);
    nus.push_back(int(std::lround(acc.real())));
  }
  return nus;
}

const char* kTrivialGroup = R"({
  "name": "trivial", "backend": "group_rep", "order": 1,
  "generators": [], "mult_table": [[0]],
  "irreps": [{"name": "triv", "dim": 1, "conjugate": "triv",
              "conj_unitary": [[1,0]], "matrices": {}}]})";

}  // namespace

TEST_CASE("frobenius-schur element", "[indicators]") {
  SECTION("trivial group: sigma is the identity element") {
    const Category cat = Category::load_string(kTrivialGroup);
    const auto sigma = fs_element_group(cat);
    REQUIRE(sigma == std::vector<double>{1.0});
  }
  SECTION("z2: all squares are the identity") {
    const auto sigma = fs_element_group(preset("z2"));
    REQUIRE(sigma[0] == Catch::Approx(1.0));
    REQUIRE(sigma[1] == Catch::Approx(0.0));
  }
  SECTION("q8: the six elements +-i, +-j, +-k square to -1") {
    const Category& cat = preset("q8");
    const auto sigma = fs_element_group(cat);
    // element order: 1, -1, i, -i, j, -j, k, -k
    REQUIRE(sigma[0] == Catch::Approx(2.0 / 8.0));  // (+-1)^2 = 1
    REQUIRE(sigma[1] == Catch::Approx(6.0 / 8.0));
    for (int h = 2; h < 8; ++h) REQUIRE(sigma[h] == Catch::Approx(0.0));
  }
  SECTION("pointed backend is rejected") {
    REQUIRE_THROWS_AS(fs_element_group(preset("z3_omega0")), WrongBackend);
  }
}

TEST_CASE("central decomposition of sigma", "[indicators]") {
  Tolerance tol;
  SECTION("frozen tables") {
    auto table = [&](const char* nm) {
      const Category& cat = preset(nm);
      return fs_decompose(cat, fs_element_group(cat), tol).nu;
    };
    REQUIRE(table("z2") == std::vector<int>{1, 1});
    REQUIRE(table("z3") == std::vector<int>{1, 0, 0});
    REQUIRE(table("s3") == std::vector<int>{1, 1, 1});
    REQUIRE(table("d4") == std::vector<int>{1, 1, 1, 1, 1});
    REQUIRE(table("q8") == std::vector<int>{1, 1, 1, 1, -1});
  }
  SECTION("matches the character-sum oracle on every group preset") {
    for (const auto& nm : tetrasym::testing::group_presets()) {
      const Category& cat = preset(nm);
      REQUIRE(fs_decompose(cat, fs_element_group(cat), tol).nu ==
              character_fs_oracle(cat));
    }
  }
  SECTION("non-indicator block scalars are rejected") {
    const Category& cat = preset("s3");
    std::vector<double> junk(6, 0.0);
    junk[0] = 0.3;
    REQUIRE_THROWS_AS(fs_decompose(cat, junk, tol), NotIndicatorValued);
  }
}

TEST_CASE("categorical indicator", "[indicators]") {
  SECTION("unit label has nu = +1 everywhere") {
    for (const auto& nm : tetrasym::testing::all_presets())
      REQUIRE(categorical_indicator(Rigidity(preset(nm)), 0) == 1);
  }
  SECTION("q8: E is pseudoreal") {
    REQUIRE(categorical_indicator(Rigidity(preset("q8")), 4) == -1);
  }
  SECTION("pointed: label 1 is complex") {
    const Rigidity rig(preset("z3_omega1"));
    REQUIRE(categorical_indicator(rig, 1) == 0);
    REQUIRE(categorical_indicator(rig, 2) == 0);
    REQUIRE(categorical_table(rig).nu == std::vector<int>{1, 0, 0});
  }
  SECTION("independent of the choice of J") {
    const Rigidity rig(preset("q8"));
    for (const Complex z :
         {Complex(0, 1), std::polar(1.0, 2.1), std::polar(1.0, -0.4)})
      REQUIRE(categorical_indicator(rig, 4, z) == -1);
  }
}

TEST_CASE("route consistency and the chi link", "[indicators]") {
  Tolerance tol;
  for (const auto& nm : tetrasym::testing::group_presets()) {
    const Category& cat = preset(nm);
    const Rigidity rig(cat);
    const FSTable sigma_route = fs_decompose(cat, fs_element_group(cat), tol);
    const FSTable cat_route = categorical_table(rig);
    REQUIRE(sigma_route.nu == cat_route.nu);
    for (int p = 0; p < cat.rank(); ++p) {
      if (cat.conj(p) == p)
        REQUIRE(rig.chi(p) == cat_route.nu[p]);
      else
        REQUIRE(cat_route.nu[p] == 0);
    }
  }
}

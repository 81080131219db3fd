#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <sstream>

#include "tetrasym/category.hpp"
#include "test_helpers.hpp"

using namespace tetrasym;
using tetrasym::testing::preset;

namespace {

// Character inner product <chi_dst, chi_src> over the full group; the fusion
// oracle for hom dimensions.
int character_dim(const Category& cat, const Word& src, const Word& dst) {
  const auto& g = cat.group();
  Complex acc = 0.0;
  for (int h = 0; h < g.order; ++h)
    acc += cat.word_matrix(dst, h).trace() *
           std::conj(cat.word_matrix(src, h).trace());
  acc /= double(g.order);
  REQUIRE(std::abs(acc.imag()) < 1e-9);
  REQUIRE(std::abs(acc.real() - std::round(acc.real())) < 1e-9);
  return int(std::round(acc.real()));
}

}  // namespace

TEST_CASE("preset loading", "[category]") {
  SECTION("z3_omega0 is pointed of rank 3") {
    const Category& c = preset("z3_omega0");
    REQUIRE(c.is_pointed());
    REQUIRE(c.rank() == 3);
    REQUIRE(c.conj(1) == 2);
    REQUIRE(std::abs(c.pointed().omega - Complex(1.0)) < 1e-12);
  }
  SECTION("q8 has dims 1,1,1,1,2") {
    const Category& c = preset("q8");
    REQUIRE(c.rank() == 5);
    int sum_sq = 0;
    for (int p = 0; p < c.rank(); ++p) sum_sq += c.dim(p) * c.dim(p);
    REQUIRE(sum_sq == c.group().order);
    REQUIRE(c.dim(4) == 2);
  }
  SECTION("all presets load and self-verify") {
    for (const auto& nm : tetrasym::testing::all_presets())
      REQUIRE_NOTHROW(Category::load(nm));
  }
  SECTION("non-unitary irrep matrix is rejected") {
    std::string doc = R"({
      "name": "bad", "backend": "group_rep", "order": 2,
      "generators": [1], "mult_table": [[0,1],[1,0]],
      "irreps": [
        {"name":"triv","dim":1,"conjugate":"triv","conj_unitary":[[1,0]],
         "matrices":{"1":[[1,0]]}},
        {"name":"bad","dim":1,"conjugate":"bad","conj_unitary":[[1,0]],
         "matrices":{"1":[[2,0]]}}
      ]})";
    REQUIRE_THROWS_AS(Category::load_string(doc), InvalidIrrep);
  }
  SECTION("garbage is a ParseError") {
    REQUIRE_THROWS_AS(Category::load_string("{nope"), ParseError);
    REQUIRE_THROWS_AS(Category::load("no_such_preset_xyz"), ParseError);
  }
  SECTION("wrong conjugate assignment is rejected") {
    // chi1 of Z3 declared self-conjugate: conj(D) is chi2, not chi1.
    std::string doc = R"({
      "name": "bad_conj", "backend": "group_rep", "order": 3,
      "generators": [1],
      "mult_table": [[0,1,2],[1,2,0],[2,0,1]],
      "irreps": [
        {"name":"triv","dim":1,"conjugate":"triv","conj_unitary":[[1,0]],
         "matrices":{"1":[[1,0]]}},
        {"name":"chi1","dim":1,"conjugate":"chi1","conj_unitary":[[1,0]],
         "matrices":{"1":[[-0.5,0.8660254037844386]]}},
        {"name":"chi2","dim":1,"conjugate":"chi2","conj_unitary":[[1,0]],
         "matrices":{"1":[[-0.5,-0.8660254037844386]]}}
      ]})";
    REQUIRE_THROWS_AS(Category::load_string(doc), InvalidIrrep);
  }
  SECTION("bad omega index is an InvalidCocycle") {
    REQUIRE_THROWS_AS(Category::load_string(
                          R"({"name":"x","backend":"pointed_z3","omega_index":5})"),
                      InvalidCocycle);
  }
}

TEST_CASE("word representations", "[category]") {
  SECTION("empty word is the trivial one-dimensional representation") {
    const Category& c = preset("q8");
    REQUIRE(c.word_dim(Word::unit()) == 1);
    for (int h = 0; h < c.group().order; ++h)
      REQUIRE(std::abs(c.word_matrix(Word::unit(), h)(0, 0) - Complex(1.0)) <
              1e-12);
  }
  SECTION("pointed word (1,2) has grade 0") {
    const Category& c = preset("z3_omega1");
    REQUIRE(c.grade(Word::chain({1, 2})) == 0);
    REQUIRE(c.word_dim(Word::chain({1, 2})) == 1);
  }
  SECTION("q8 word (E,E) has squared character") {
    const Category& c = preset("q8");
    const Word ee = Word::chain({4, 4});
    REQUIRE(c.word_dim(ee) == 4);
    for (int h = 0; h < c.group().order; ++h) {
      Complex chi = c.group().character(4, h);
      REQUIRE(std::abs(c.word_matrix(ee, h).trace() - chi * chi) < 1e-9);
    }
  }
}

TEST_CASE("hom bases", "[category]") {
  Tolerance tol;
  SECTION("Schur: dim hom(p,q) = delta_pq on every preset") {
    for (const auto& nm : tetrasym::testing::all_presets()) {
      const Category& c = preset(nm);
      for (int p = 0; p < c.rank(); ++p)
        for (int q = 0; q < c.rank(); ++q)
          REQUIRE(c.hom_dim(Word::leaf(p), Word::leaf(q)) == (p == q ? 1 : 0));
    }
  }
  SECTION("hom(1,1) is one-dimensional everywhere") {
    for (const auto& nm : tetrasym::testing::all_presets())
      REQUIRE(preset(nm).hom_dim(Word::unit(), Word::unit()) == 1);
  }
  SECTION("pointed: dim hom(1, 2(x)2) = 1") {
    const Category& c = preset("z3_omega1");
    REQUIRE(c.hom_dim(Word::leaf(1), Word::chain({2, 2})) == 1);
  }
  SECTION("q8: E does not appear in E(x)E") {
    REQUIRE(preset("q8").fusion_coeff(4, 4, 4) == 0);
  }
  SECTION("group hom dims match the character oracle") {
    for (const auto& nm : tetrasym::testing::group_presets()) {
      const Category& c = preset(nm);
      for (int t = 0; t < c.rank(); ++t)
        for (int p = 0; p < c.rank(); ++p)
          for (int q = 0; q < c.rank(); ++q) {
            const Word pq = Word::chain({p, q});
            REQUIRE(c.hom_dim(Word::leaf(t), pq) ==
                    character_dim(c, Word::leaf(t), pq));
          }
    }
  }
  SECTION("bases are orthonormal intertwiners with t*t = 1_p") {
    const Category& c = preset("q8");
    const Word ee = Word::chain({4, 4});
    for (int t = 0; t < c.rank(); ++t) {
      const auto& basis = c.hom_basis(Word::leaf(t), ee);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        // intertwiner property over generators
        for (int gen : c.group().generators)
          REQUIRE(max_abs(CMatrix(basis[i].mat * c.word_matrix(Word::leaf(t), gen)) -
                          CMatrix(c.word_matrix(ee, gen) * basis[i].mat)) < 1e-9);
        for (std::size_t j = 0; j < basis.size(); ++j) {
          CMatrix prod = basis[i].mat.adjoint() * basis[j].mat;
          CMatrix expect = (i == j) ? cidentity(c.dim(t))
                                    : CMatrix(CMatrix::Zero(c.dim(t), c.dim(t)));
          REQUIRE(approx_equal(prod, expect, tol));
        }
      }
    }
  }
}

TEST_CASE("fusion coefficients", "[category]") {
  SECTION("unit fusion") {
    for (const auto& nm : tetrasym::testing::all_presets()) {
      const Category& c = preset(nm);
      for (int p = 0; p < c.rank(); ++p) {
        REQUIRE(c.fusion_coeff(p, p, 0) == 1);
        REQUIRE(c.fusion_coeff(p, 0, p) == 1);
      }
    }
  }
  SECTION("pointed fusion is addition mod 3") {
    const Category& c = preset("z3_omega2");
    for (int t = 0; t < 3; ++t)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
          REQUIRE(c.fusion_coeff(t, p, q) == (t == (p + q) % 3 ? 1 : 0));
  }
  SECTION("associativity of the fusion ring") {
    for (const auto& nm : tetrasym::testing::all_presets()) {
      const Category& c = preset(nm);
      for (int p = 0; p < c.rank(); ++p)
        for (int q = 0; q < c.rank(); ++q)
          for (int r = 0; r < c.rank(); ++r)
            for (int t = 0; t < c.rank(); ++t) {
              int lhs = 0, rhs = 0;
              for (int u = 0; u < c.rank(); ++u) {
                lhs += c.fusion_coeff(u, p, q) * c.fusion_coeff(t, u, r);
                rhs += c.fusion_coeff(t, p, u) * c.fusion_coeff(u, q, r);
              }
              REQUIRE(lhs == rhs);
            }
    }
  }
  SECTION("conjugation symmetry dim(t, p(x)q) = dim(1, t^(x)(p(x)q))") {
    for (const auto& nm : tetrasym::testing::all_presets()) {
      const Category& c = preset(nm);
      for (int t = 0; t < c.rank(); ++t)
        for (int p = 0; p < c.rank(); ++p)
          for (int q = 0; q < c.rank(); ++q) {
            const Word pq = Word::chain({p, q});
            const Word big = Word::tensor(Word::leaf(c.conj(t)), pq);
            REQUIRE(c.hom_dim(Word::leaf(t), pq) ==
                    c.hom_dim(Word::unit(), big));
          }
    }
  }
}

TEST_CASE("structure maps and coherence", "[category]") {
  Tolerance tol;
  SECTION("group backend: phi is the identity, maps are unitary") {
    const Category& c = preset("s3");
    const Word a = Word::leaf(2), b = Word::leaf(1), d = Word::leaf(2);
    REQUIRE(approx_equal(
        c.phi_(a, b, d).mat,
        cidentity(c.word_dim(a) * c.word_dim(b) * c.word_dim(d)), tol));
    REQUIRE(classify(c.lambda_(a).mat, tol).unitary);
    REQUIRE(classify(c.rho_(a).mat, tol).unitary);
  }
  SECTION("pointed associator scalars") {
    const Category& c1 = preset("z3_omega1");
    const Complex w = c1.pointed().omega;
    REQUIRE(std::abs(as_scalar(c1.phi_(Word::leaf(1), Word::leaf(1),
                                       Word::leaf(1))) - w) < 1e-12);
    REQUIRE(std::abs(as_scalar(c1.phi_(Word::leaf(0), Word::leaf(2),
                                       Word::leaf(1))) - Complex(1.0)) < 1e-12);
    // 121 and 212 stay undeformed
    REQUIRE(std::abs(as_scalar(c1.phi_(Word::leaf(1), Word::leaf(2),
                                       Word::leaf(1))) - Complex(1.0)) < 1e-12);
  }
  SECTION("coherence passes on all presets") {
    for (const auto& nm : tetrasym::testing::all_presets()) {
      auto rep = preset(nm).verify_coherence(tol);
      REQUIRE(rep.max_residual() <= 1e-12);
      REQUIRE(rep.exhaustive);
    }
  }
  SECTION("large rank falls back to seeded sampling") {
    // Z11: rank 11, rank^4 > 10^4. Cyclic character table built inline.
    std::ostringstream doc;
    doc.precision(17);
    doc << R"({"name":"z11","backend":"group_rep","order":11,"generators":[1],)";
    doc << "\"mult_table\":[";
    for (int i = 0; i < 11; ++i) {
      doc << (i ? ",[" : "[");
      for (int j = 0; j < 11; ++j) doc << (j ? "," : "") << (i + j) % 11;
      doc << "]";
    }
    doc << "],\"irreps\":[";
    for (int k = 0; k < 11; ++k) {
      const double re = std::cos(2 * std::numbers::pi * k / 11);
      const double im = std::sin(2 * std::numbers::pi * k / 11);
      doc << (k ? "," : "") << "{\"name\":\"chi" << k
          << "\",\"dim\":1,\"conjugate\":\"chi" << (11 - k) % 11
          << "\",\"conj_unitary\":[[1,0]],\"matrices\":{\"1\":[[" << re << ","
          << im << "]]}}";
    }
    doc << "]}";
    const Category c = Category::load_string(doc.str());
    const auto rep = c.verify_coherence(tol, 42);
    REQUIRE_FALSE(rep.exhaustive);
    REQUIRE(rep.seed == 42);
    REQUIRE(rep.max_residual() <= 1e-12);
  }
  SECTION("tampered cocycle violates the pentagon") {
    std::string doc = R"({"name":"tampered","backend":"pointed_z3",
      "omega_index":1,
      "tamper_cocycle":[[[1,1,1],[-1,0]]]})";
    Category c = Category::load_string(doc);
    REQUIRE_THROWS_AS(c.verify_coherence(tol), CoherenceViolation);
  }
}

TEST_CASE("arrow algebra", "[category]") {
  Tolerance tol;
  const Category& c = preset("q8");
  const Word ee = Word::chain({4, 4});
  const auto& basis = c.hom_basis(Word::leaf(0), ee);
  REQUIRE(basis.size() == 1);
  SECTION("star is involutive and contravariant") {
    const Intertwiner t = basis[0];
    REQUIRE(star(star(t)).src == t.src);
    REQUIRE(approx_equal(star(star(t)).mat, t.mat, tol));
    const Intertwiner s = star(t);  // ee -> unit-label word
    const Intertwiner st = compose(s, t);
    REQUIRE(approx_equal(star(st).mat, CMatrix(compose(star(t), star(s)).mat),
                         tol));
  }
  SECTION("composition requires matching bracketing") {
    const Intertwiner t = basis[0];
    Intertwiner wrong = t;
    wrong.dst = Word::tensor(Word::leaf(4), Word::tensor(Word::leaf(4), Word::unit()));
    REQUIRE_THROWS_AS(compose(star(t), wrong), ShapeMismatch);
  }
}

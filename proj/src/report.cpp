#include "tetrasym/report.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"

#include "tetrasym/hexagon.hpp"
#include "tetrasym/indicators.hpp"
#include "tetrasym/tetra.hpp"

namespace tetrasym {

using nlohmann::json;

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

namespace {

void push(Report& rep, const std::string& id, double residual,
          const Tolerance& tol, const std::string& details = "") {
  rep.checks.push_back(Check{id, residual <= tol.eps, residual, details});
}

void push_fail(Report& rep, const std::string& id, const std::string& why) {
  rep.checks.push_back(Check{id, false, 1.0, why});
}

void push_bool(Report& rep, const std::string& id, bool ok,
               const std::string& details = "") {
  rep.checks.push_back(Check{id, ok, ok ? 0.0 : 1.0, details});
}

Intertwiner random_arrow(const Category& cat, const Word& src, const Word& dst,
                         std::mt19937& rng) {
  const auto& basis = cat.hom_basis(src, dst);
  Intertwiner out{src, dst,
                  CMatrix(CMatrix::Zero(cat.word_dim(dst), cat.word_dim(src)))};
  std::normal_distribution<double> dist(0.0, 1.0);
  for (const auto& b : basis)
    out.mat += Complex(dist(rng), dist(rng)) * b.mat;
  return out;
}

std::vector<Word> sample_words(const Category& cat) {
  std::vector<Word> words;
  for (int p = 0; p < cat.rank(); ++p) words.push_back(Word::leaf(p));
  for (int p = 0; p < cat.rank(); ++p)
    for (int q = 0; q < cat.rank(); ++q)
      words.push_back(Word::chain({p, q}));
  return words;
}

double zigzag_residual(const Rigidity& rig, const Word& a) {
  const Category& cat = rig.category();
  const Word ah = cat.hat(a);
  const Intertwiner& e = rig.word(a).e;
  const Intertwiner& c = rig.word(a).c;
  const Intertwiner z1 = compose(
      star(cat.lambda_(a)),
      compose(tensor_arrow(cat.identity_arrow(a), e),
              compose(star(cat.phi_(a, ah, a)),
                      compose(tensor_arrow(c, cat.identity_arrow(a)),
                              cat.rho_(a)))));
  const Intertwiner z2 = compose(
      star(cat.rho_(ah)),
      compose(tensor_arrow(e, cat.identity_arrow(ah)),
              compose(cat.phi_(ah, a, ah),
                      compose(tensor_arrow(cat.identity_arrow(ah), c),
                              cat.lambda_(ah)))));
  const double r1 = max_abs(z1.mat - cidentity(cat.word_dim(a)));
  const double r2 = max_abs(z2.mat - cidentity(cat.word_dim(ah)));
  return std::max(r1, r2);
}

void suite_coherence(Report& rep, const Category& cat, const Tolerance& tol,
                     unsigned seed) {
  try {
    const CoherenceReport cr = cat.verify_coherence(tol, seed);
    for (const auto& c : cr.checks) push(rep, c.id, c.residual, tol);
  } catch (const CoherenceViolation& e) {
    push_fail(rep, "pentagon-1.1b", e.what());
  }
}

void suite_rigidity(Report& rep, const Category& cat, const Rigidity& rig,
                    const Tolerance& tol, unsigned seed) {
  std::mt19937 rng(seed);

  double worst = 0.0;
  for (const Word& a : sample_words(cat))
    worst = std::max(worst, zigzag_residual(rig, a));
  push(rep, "zigzag-1.2", worst, tol);

  worst = 0.0;
  for (int p = 0; p < cat.rank(); ++p) {
    const auto& ir = rig.irr(p);
    worst = std::max(worst, max_abs(CMatrix(ir.e.mat * ir.e.mat.adjoint()) -
                                    CMatrix(ir.d * cidentity(1))));
    worst = std::max(worst, max_abs(CMatrix(ir.c.mat.adjoint() * ir.c.mat) -
                                    CMatrix(ir.d * cidentity(1))));
  }
  push(rep, "normalization-1.12", worst, tol);

  worst = 0.0;
  for (int p = 0; p < cat.rank(); ++p)
    for (int q = 0; q < cat.rank(); ++q) {
      const double dpq = rig.qdim(Word::chain({p, q}));
      worst = std::max(worst, std::abs(dpq - rig.qdim(p) * rig.qdim(q)));
      worst = std::max(worst, std::abs(rig.qdim(p) - rig.qdim(cat.conj(p))));
    }
  push(rep, "dimensions-1.14", worst, tol);

  // Conjugation functor: involutive, and the V/W sums agree with the
  // evaluation/coevaluation chain.
  worst = 0.0;
  double worst_route = 0.0;
  for (int trial = 0; trial < 12; ++trial) {
    const auto words = sample_words(cat);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    const Word a = words[pick(rng)], b = words[pick(rng)];
    if (cat.hom_dim(a, b) == 0) continue;
    const Intertwiner t = random_arrow(cat, a, b, rng);
    const Intertwiner th = rig.conjugate_arrow(t);
    const Intertwiner thh = rig.conjugate_arrow(th);
    worst = std::max(worst, max_abs(thh.mat - t.mat) / (1.0 + max_abs(t.mat)));
    const Intertwiner td = rig.conjugate_arrow_direct(t);
    worst_route =
        std::max(worst_route, max_abs(th.mat - td.mat) / (1.0 + max_abs(t.mat)));
  }
  push(rep, "conjugation-involutive-1.15", worst, tol);
  push(rep, "conjugation-route-1.3-vs-1.15", worst_route, tol);

  try {
    Rigidity other(cat, tol, seed + 17);
    double res = 0.0;
    for (int p = 0; p < cat.rank(); ++p) {
      const Word a = Word::leaf(p);
      const Intertwiner u = compare_rigidity(rig, other, a);
      res = std::max(res, max_abs(CMatrix(u.mat.adjoint() * u.mat) -
                                  cidentity(cat.word_dim(a))));
    }
    const Word ab = Word::chain({cat.rank() - 1, cat.rank() - 1});
    const Intertwiner u = compare_rigidity(rig, other, ab);
    res = std::max(res, max_abs(CMatrix(u.mat.adjoint() * u.mat) -
                                cidentity(cat.word_dim(ab))));
    push(rep, "comparison-unitary-1.16", res, Tolerance{1e-6});
  } catch (const Error& e) {
    push_fail(rep, "comparison-unitary-1.16", e.what());
  }

  worst = 0.0;
  for (int p = 0; p < cat.rank(); ++p)
    for (int q = 0; q < cat.rank(); ++q)
      worst = std::max(worst,
                       rig.verify_antimonoidal(Word::leaf(p), Word::leaf(q)));
  push(rep, "antimonoidal-2.3a", worst, tol);

  double worst_unitary = 0.0, worst_sovereign = 0.0, worst_scalar = 0.0;
  for (int p = 0; p < cat.rank(); ++p) {
    const Intertwiner k = rig.kappa(p);
    const Intertwiner kt = rig.kappa_tilde(p);
    worst_unitary = std::max(
        worst_unitary,
        max_abs(CMatrix(k.mat.adjoint() * k.mat) - cidentity(cat.dim(p))));
    worst_sovereign = std::max(worst_sovereign, max_abs(k.mat - kt.mat));
    worst_scalar = std::max(
        worst_scalar,
        max_abs(k.mat - CMatrix(double(rig.chi(p)) * cidentity(cat.dim(p)))));
  }
  push(rep, "kappa-unitary-1.8", worst_unitary, tol);
  push(rep, "sovereign-2.2", worst_sovereign, tol);
  push(rep, "kappa-scalar-4.2", worst_scalar, tol);

  // Traces: cyclicity on random pairs, left = right, faithfulness.
  double worst_cyclic = 0.0, worst_lr = 0.0, worst_faithful = 0.0;
  const auto words = sample_words(cat);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const Word a = words[pick(rng)], b = words[pick(rng)];
    if (cat.hom_dim(a, b) == 0 || cat.hom_dim(b, a) == 0) continue;
    const Intertwiner t = random_arrow(cat, b, a, rng);  // t : b -> a
    const Intertwiner sarr = random_arrow(cat, a, b, rng);
    const Complex ts = rig.trace(compose(t, sarr));  // on a
    const Complex st = rig.trace(compose(sarr, t));  // on b
    worst_cyclic = std::max(worst_cyclic, std::abs(ts - st));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Word a = words[pick(rng)];
    const Intertwiner t = random_arrow(cat, a, a, rng);
    worst_lr = std::max(
        worst_lr, std::abs(rig.trace_left(t) - rig.trace_right(t)));
    const Complex tt = rig.trace(compose(star(t), t));
    if (tt.real() < -tol.eps || std::abs(tt.imag()) > tol.eps)
      worst_faithful = std::max(worst_faithful, std::abs(tt));
    if (max_abs(t.mat) > 1e-6 && std::abs(tt) <= tol.eps)
      worst_faithful = 1.0;
    const Complex da = rig.trace(cat.identity_arrow(a));
    worst_lr = std::max(worst_lr, std::abs(da - rig.qdim(a)));
  }
  push(rep, "trace-cyclic-2.5", worst_cyclic, tol);
  push(rep, "trace-leftright-2.6", worst_lr, tol);
  push(rep, "trace-faithful-1.10", worst_faithful, tol);

  worst = 0.0;
  for (int p = 0; p < cat.rank(); ++p) {
    const int ph = cat.conj(p);
    const double chi = rig.chi(p);
    worst = std::max(worst, max_abs(rig.irr(ph).e.mat -
                                    CMatrix(chi * rig.irr(p).c.mat.adjoint())));
    worst = std::max(worst, max_abs(rig.irr(ph).c.mat -
                                    CMatrix((1.0 / chi) * rig.irr(p).e.mat.adjoint())));
  }
  push(rep, "gauge-4.4", worst, tol);
}

void suite_indicators(Report& rep, const Category& cat, const Rigidity& rig,
                      const Tolerance& tol, unsigned seed) {
  FSTable cat_table;
  try {
    cat_table = categorical_table(rig);
    push_bool(rep, "indicator-categorical-3.10", true);
  } catch (const Error& e) {
    push_fail(rep, "indicator-categorical-3.10", e.what());
    return;
  }

  bool zero_ok = true;
  for (int p = 0; p < cat.rank(); ++p)
    zero_ok = zero_ok && ((cat_table.nu[p] == 0) == (cat.conj(p) != p));
  push_bool(rep, "indicator-zero-iff-complex-3.2", zero_ok);

  bool chi_ok = true;
  for (int p = 0; p < cat.rank(); ++p)
    if (cat.conj(p) == p && rig.chi(p) != cat_table.nu[p]) chi_ok = false;
  push_bool(rep, "chi-equals-nu-4.2", chi_ok);

  // J-independence: replacing J by z J must not move the sign.
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
  bool j_ok = true;
  for (int p = 0; p < cat.rank(); ++p) {
    if (cat.conj(p) != p) continue;
    const Complex z = std::polar(1.0, angle(rng));
    if (categorical_indicator(rig, p, z) != cat_table.nu[p]) j_ok = false;
  }
  push_bool(rep, "indicator-j-independent-3.10", j_ok);

  if (cat.is_group()) {
    try {
      const auto sigma = fs_element_group(cat);
      push_bool(rep, "fs-element-central-3.1", true);
      const FSTable group_table = fs_decompose(cat, sigma, tol);
      push_bool(rep, "fs-decompose-3.2", true);
      push_bool(rep, "fs-route-consistency", group_table.nu == cat_table.nu);
    } catch (const Error& e) {
      push_fail(rep, "fs-route-consistency", e.what());
    }
  }
}

void suite_frobenius(Report& rep, const Category& cat, const Rigidity& rig,
                     const Tolerance& tol) {
  double worst_iso = 0.0, worst_sq = 0.0, worst_braid = 0.0;
  for (int p = 0; p < cat.rank(); ++p)
    for (int q = 0; q < cat.rank(); ++q)
      for (int r = 0; r < cat.rank(); ++r) {
        if (cat.fusion_coeff(p, q, r) == 0) continue;
        const S3Residuals res = s3_relations_check(rig, p, q, r);
        worst_iso = std::max(worst_iso, res.isometry);
        worst_sq = std::max(worst_sq, std::max(res.x_square, res.y_square));
        worst_braid = std::max(worst_braid, res.braid);
      }
  push(rep, "frobenius-isometry-5.3", worst_iso, tol);
  push(rep, "s3-squares-5.4a", worst_sq, tol);
  push(rep, "s3-braid-5.4b", worst_braid, tol);

  // Canonical actions on the unitor intertwiners.
  double worst56 = 0.0;
  for (int p = 0; p < cat.rank(); ++p) {
    const int ph = cat.conj(p);
    const Intertwiner rho = basic_space(cat, p, 0, p).basis[0];
    const Intertwiner lam = basic_space(cat, p, p, 0).basis[0];
    const Intertwiner rho_h = basic_space(cat, ph, 0, ph).basis[0];
    const Intertwiner lam_h = basic_space(cat, ph, ph, 0).basis[0];
    const double sd = std::sqrt(rig.qdim(p));

    worst56 = std::max(worst56, max_abs(frobenius_x(rig, rho).mat - rho.mat));
    worst56 = std::max(
        worst56, max_abs(frobenius_y(rig, rho).mat -
                         CMatrix(rig.irr(p).c.mat / sd)));
    worst56 = std::max(
        worst56,
        max_abs(frobenius_x(rig, frobenius_y(rig, rho)).mat - lam_h.mat));
    worst56 = std::max(
        worst56, max_abs(frobenius_x(rig, lam).mat -
                         CMatrix(rig.irr(p).e.mat.adjoint() / sd)));
    worst56 = std::max(worst56, max_abs(frobenius_y(rig, lam).mat - lam.mat));
    worst56 = std::max(
        worst56,
        max_abs(frobenius_y(rig, frobenius_x(rig, lam)).mat - rho_h.mat));
  }
  push(rep, "canonical-actions-5.6", worst56, tol);

  try {
    const auto rules = selection_rules(rig);
    push_bool(rep, "selection-rules-cases-1-3", true,
              std::to_string(rules.size()) + " constraints checked");
  } catch (const SelectionViolation& e) {
    push_fail(rep, "selection-rules-cases-1-3", e.what());
  }

  double worst_z3 = 0.0;
  bool any_case2 = false;
  for (int p = 0; p < cat.rank(); ++p) {
    const int ph = cat.conj(p);
    if (ph == p || cat.fusion_coeff(p, ph, ph) == 0) continue;
    any_case2 = true;
    const Z3Spectrum sp = z3_spectrum(rig, p);
    worst_z3 = std::max(worst_z3, sp.cube_residual);
  }
  if (any_case2) push(rep, "z3-spectrum-case-2", worst_z3, tol);
}

void suite_s4(Report& rep, const Category& cat, const Rigidity& rig,
              const Tolerance& tol) {
  const auto tetras = all_admissible(cat);

  double worst_rel = 0.0, worst_phi = 0.0, worst_oracle = 0.0;
  for (const Tetra& s : tetras) {
    worst_rel = std::max(worst_rel, verify_s4_relations(rig, s));
    worst_phi = std::max(worst_phi, verify_phi_invariance(rig, s));
    const auto sp = tetra_spaces(cat, s);
    const Complex direct =
        phi_value(rig, s, sp[0].basis[0], sp[1].basis[0], sp[2].basis[0],
                  sp[3].basis[0]);
    const Complex overlap =
        phi_value_overlap(rig, s, sp[0].basis[0], sp[1].basis[0],
                          sp[2].basis[0], sp[3].basis[0]);
    worst_oracle = std::max(worst_oracle, std::abs(direct - overlap));
  }
  push(rep, "s4-relations-6.6", worst_rel, tol,
       std::to_string(tetras.size()) + " tetrahedra");
  push(rep, "prop-7.4b", worst_phi, tol);
  push(rep, "phi-contraction-oracle-7.1", worst_oracle, tol);

  double worst_unit = 0.0;
  for (int p = 0; p < cat.rank(); ++p)
    for (int q = 0; q < cat.rank(); ++q)
      for (int r = 0; r < cat.rank(); ++r)
        for (int t = 0; t < cat.rank(); ++t)
          worst_unit =
              std::max(worst_unit, verify_sixj_unitarity(rig, p, q, r, t));
  push(rep, "sixj-unitarity-7.6", worst_unit, tol);

  push(rep, "orbit-transport", verify_orbit_transport(rig), tol);

  const OrbitReport orep = orbit_report(cat);
  if (cat.is_pointed()) {
    std::vector<std::size_t> sizes;
    for (const auto& o : orep.orbits) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    const bool census_ok =
        sizes == std::vector<std::size_t>{1, 4, 4, 6, 12} &&
        orep.admissible_count == 27;
    push_bool(rep, "orbit-census-appendix", census_ok,
              "orbits " + std::to_string(orep.orbits.size()) + ", tetrahedra " +
                  std::to_string(orep.admissible_count));

    if (cat.pointed().omega_index != 0) {
      const GaugeDemo demo = coherent_gauge_demo(rig);
      const Complex w = cat.pointed().omega;
      const double res = std::max(
          {std::abs(demo.coeff_factor - w), std::abs(demo.table_factor - std::conj(w)),
           std::abs(demo.product_a - 1.0), std::abs(demo.product_b - w * w)});
      push(rep, "gauge-contradiction-appendix", res, tol);
    }
  } else {
    bool small = true;
    for (const auto& o : orep.orbits) small = small && o.size() <= 24;
    push_bool(rep, "orbit-sizes-bounded", small,
              std::to_string(orep.orbits.size()) + " orbits, ratio " +
                  std::to_string(orep.reduction_ratio));
  }
}

}  // namespace

Report run_suite(const Category& cat, const std::string& suite, Tolerance tol,
                 unsigned seed) {
  Report rep;
  rep.category = cat.name();
  rep.suite = suite;
  rep.tolerance = tol.eps;
  rep.seed = seed;

  const bool all = suite == "all";
  if (all || suite == "coherence") suite_coherence(rep, cat, tol, seed);
  if (all || suite == "rigidity" || suite == "indicators" ||
      suite == "frobenius" || suite == "s4") {
    Rigidity rig(cat, tol);
    if (all || suite == "rigidity") suite_rigidity(rep, cat, rig, tol, seed);
    if (all || suite == "indicators")
      suite_indicators(rep, cat, rig, tol, seed);
    if (all || suite == "frobenius") suite_frobenius(rep, cat, rig, tol);
    if (all || suite == "s4") suite_s4(rep, cat, rig, tol);
  }
  if (rep.checks.empty())
    push_fail(rep, "unknown-suite", "no such suite: " + suite);
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const Check& a, const Check& b) { return a.id < b.id; });
  return rep;
}

std::string report_to_json(const Report& rep) {
  json j;
  j["category"] = rep.category;
  j["suite"] = rep.suite;
  j["tolerance"] = rep.tolerance;
  j["seed"] = rep.seed;
  j["checks"] = json::array();
  for (const auto& c : rep.checks) {
    json jc;
    jc["id"] = c.id;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["residual"] = c.residual;
    if (!c.details.empty()) jc["details"] = c.details;
    j["checks"].push_back(jc);
  }
  j["all_pass"] = rep.all_pass();
  return j.dump(1);
}

std::string report_summary(const Report& rep) {
  std::ostringstream out;
  out << rep.category << " / " << rep.suite << "\n";
  for (const auto& c : rep.checks)
    out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.id << "  (residual "
        << c.residual << ")" << (c.details.empty() ? "" : "  " + c.details)
        << "\n";
  out << (rep.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return out.str();
}

namespace {

json complex_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

json tensor_to_json(const FTensor& f, double norm) {
  json out = json::array();
  for (int i = 0; i < f.dims[0]; ++i) {
    json ji = json::array();
    for (int j = 0; j < f.dims[1]; ++j) {
      json jj = json::array();
      for (int k = 0; k < f.dims[2]; ++k) {
        json jk = json::array();
        for (int l = 0; l < f.dims[3]; ++l)
          jk.push_back(complex_pair(f.at(i, j, k, l) / norm));
        jj.push_back(jk);
      }
      ji.push_back(jj);
    }
    out.push_back(ji);
  }
  return out;
}

}  // namespace

std::string fsymbols_to_json(const Rigidity& rig) {
  const Category& cat = rig.category();
  json out = json::array();
  auto tetras = all_admissible(cat);
  std::sort(tetras.begin(), tetras.end());
  for (const Tetra& s : tetras) {
    json jt;
    jt["tetra"] = s.s;
    jt["Fhat"] = tensor_to_json(f_tensor(rig, s), 1.0);
    jt["sixj"] = tensor_to_json(six_j_tensor(rig, s), 1.0);
    out.push_back(jt);
  }
  return out.dump(1);
}

std::string orbits_to_json(const Category& cat) {
  const OrbitReport rep = orbit_report(cat);
  json out;
  out["category"] = cat.name();
  out["admissible"] = rep.admissible_count;
  out["orbit_count"] = rep.orbits.size();
  out["reduction_ratio"] = rep.reduction_ratio;
  out["orbits"] = json::array();
  for (const auto& orbit : rep.orbits) {
    json jo = json::array();
    for (const Tetra& s : orbit) jo.push_back(s.s);
    out["orbits"].push_back(jo);
  }
  return out.dump(1);
}

std::string indicators_to_json(const Category& cat, Tolerance tol) {
  Rigidity rig(cat, tol);
  const FSTable table = categorical_table(rig);
  json out;
  out["category"] = cat.name();
  json labels = json::array();
  for (int p = 0; p < cat.rank(); ++p) {
    json jl;
    jl["label"] = cat.label_name(p);
    jl["nu"] = table.nu[p];
    jl["chi"] = rig.chi(p);
    jl["self_conjugate"] = cat.conj(p) == p;
    labels.push_back(jl);
  }
  out["indicators"] = labels;
  if (cat.is_group()) {
    const FSTable st = fs_decompose(cat, fs_element_group(cat), tol);
    out["sigma_route"] = st.nu;
    out["routes_agree"] = st.nu == table.nu;
  }
  return out.dump(1);
}

std::string hexagon_to_json(const Category& cat, int lattice_order,
                            Tolerance tol) {
  const HexagonSearch search = hexagon_solve(cat, lattice_order, tol);
  json out;
  out["category"] = cat.name();
  out["omega_index"] = cat.pointed().omega_index;
  out["lattice_order"] = search.lattice_order;
  out["min_residual"] = search.min_residual;
  out["solutions"] = json::array();
  for (const auto& sol : search.solutions) {
    json js = json::array();
    for (int p = 0; p < 3; ++p) {
      json row = json::array();
      for (int q = 0; q < 3; ++q) row.push_back(complex_pair(sol.R[p][q]));
      js.push_back(row);
    }
    out["solutions"].push_back(js);
  }
  return out.dump(1);
}

}  // namespace tetrasym

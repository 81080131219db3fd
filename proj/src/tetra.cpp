#include "tetrasym/tetra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tetrasym {

std::string Tetra::str() const {
  std::string out = "(";
  for (int i = 0; i < 6; ++i) out += std::to_string(s[i]) + (i < 5 ? "," : ")");
  return out;
}

bool admissible(const Category& cat, const Tetra& s) {
  return cat.fusion_coeff(s.u(), s.p(), s.q()) > 0 &&
         cat.fusion_coeff(s.t(), s.u(), s.r()) > 0 &&
         cat.fusion_coeff(s.v(), s.q(), s.r()) > 0 &&
         cat.fusion_coeff(s.t(), s.p(), s.v()) > 0;
}

std::vector<Tetra> all_admissible(const Category& cat) {
  std::vector<Tetra> out;
  const int n = cat.rank();
  Tetra s;
  for (s.s[0] = 0; s.s[0] < n; ++s.s[0])
    for (s.s[1] = 0; s.s[1] < n; ++s.s[1])
      for (s.s[2] = 0; s.s[2] < n; ++s.s[2])
        for (s.s[3] = 0; s.s[3] < n; ++s.s[3])
          for (s.s[4] = 0; s.s[4] < n; ++s.s[4])
            for (s.s[5] = 0; s.s[5] < n; ++s.s[5])
              if (admissible(cat, s)) out.push_back(s);
  return out;
}

Tetra tetra_transform(const Category& cat, const std::array<int, 4>& perm,
                      const Tetra& s) {
  // Oriented edge labels: lab(i,j) for i<j from s, lab(j,i) the conjugate.
  auto lab = [&](int i, int j) {
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    int val;
    if (i == 0 && j == 1) val = s.p();
    else if (i == 1 && j == 2) val = s.q();
    else if (i == 2 && j == 3) val = s.r();
    else if (i == 0 && j == 3) val = s.t();
    else if (i == 0 && j == 2) val = s.u();
    else val = s.v();  // (1,3)
    return flip ? cat.conj(val) : val;
  };
  Tetra out;
  out.s = {lab(perm[0], perm[1]), lab(perm[1], perm[2]), lab(perm[2], perm[3]),
           lab(perm[0], perm[3]), lab(perm[0], perm[2]), lab(perm[1], perm[3])};
  return out;
}

std::array<int, 4> gen_perm(Gen g) {
  switch (g) {
    case Gen::T12: return {1, 0, 2, 3};
    case Gen::T23: return {0, 2, 1, 3};
    case Gen::T34: return {0, 1, 3, 2};
  }
  return {0, 1, 2, 3};
}

std::array<BasicSpace, 4> tetra_spaces(const Category& cat, const Tetra& s) {
  return {basic_space(cat, s.u(), s.p(), s.q()),
          basic_space(cat, s.t(), s.u(), s.r()),
          basic_space(cat, s.v(), s.q(), s.r()),
          basic_space(cat, s.t(), s.p(), s.v())};
}

int block_dim(const Category& cat, const Tetra& s) {
  const auto sp = tetra_spaces(cat, s);
  return sp[0].dim() * sp[1].dim() * sp[2].dim() * sp[3].dim();
}

Complex phi_value(const Rigidity& rig, const Tetra& s, const Intertwiner& alpha,
                  const Intertwiner& beta, const Intertwiner& gamma,
                  const Intertwiner& delta) {
  const Category& cat = rig.category();
  const Word wp = Word::leaf(s.p()), wq = Word::leaf(s.q()),
             wr = Word::leaf(s.r()), wt = Word::leaf(s.t());
  const Intertwiner inner = compose(
      star(beta),
      compose(tensor_arrow(star(alpha), cat.identity_arrow(wr)),
              compose(cat.phi_(wp, wq, wr),
                      compose(tensor_arrow(cat.identity_arrow(wp), gamma),
                              delta))));
  const Intertwiner& et = rig.irr(s.t()).e;
  const Word th = Word::leaf(cat.conj(s.t()));
  const Complex closed = as_scalar(compose(
      et, compose(tensor_arrow(cat.identity_arrow(th), inner), star(et))));
  return std::sqrt(rig.qdim(s.p()) * rig.qdim(s.q()) * rig.qdim(s.r()) /
                   rig.qdim(s.t())) *
         closed;
}

Complex phi_value_overlap(const Rigidity& rig, const Tetra& s,
                          const Intertwiner& alpha, const Intertwiner& beta,
                          const Intertwiner& gamma, const Intertwiner& delta) {
  const Category& cat = rig.category();
  const Word wp = Word::leaf(s.p()), wq = Word::leaf(s.q()),
             wr = Word::leaf(s.r());
  const Intertwiner left =
      compose(tensor_arrow(alpha, cat.identity_arrow(wr)), beta);
  const Intertwiner right =
      compose(cat.phi_(wp, wq, wr),
              compose(tensor_arrow(cat.identity_arrow(wp), gamma), delta));
  const Complex overlap = inner_product(left.mat, right.mat, Inner::Scaled);
  return std::sqrt(rig.qdim(s.p()) * rig.qdim(s.q()) * rig.qdim(s.r()) *
                   rig.qdim(s.t())) *
         overlap;
}

Complex FTensor::at(int i, int j, int k, int l) const {
  return values[((static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k) *
                    dims[3] +
                l];
}

FTensor f_tensor(const Rigidity& rig, const Tetra& s) {
  const Category& cat = rig.category();
  const auto sp = tetra_spaces(cat, s);
  FTensor f;
  f.s = s;
  f.dims = {sp[0].dim(), sp[1].dim(), sp[2].dim(), sp[3].dim()};
  f.values.reserve(static_cast<std::size_t>(f.dims[0]) * f.dims[1] *
                   f.dims[2] * f.dims[3]);
  for (int i = 0; i < f.dims[0]; ++i)
    for (int j = 0; j < f.dims[1]; ++j)
      for (int k = 0; k < f.dims[2]; ++k)
        for (int l = 0; l < f.dims[3]; ++l)
          f.values.push_back(phi_value(rig, s, sp[0].basis[i], sp[1].basis[j],
                                       sp[2].basis[k], sp[3].basis[l]));
  return f;
}

FTensor six_j_tensor(const Rigidity& rig, const Tetra& s) {
  FTensor f = f_tensor(rig, s);
  const double norm = std::sqrt(rig.qdim(s.p()) * rig.qdim(s.q()) *
                                rig.qdim(s.r()) * rig.qdim(s.t()));
  for (auto& v : f.values) v /= norm;
  return f;
}

std::array<Intertwiner, 4> s4_act_tuple(const Rigidity& rig, Gen g,
                                        const Tetra& s,
                                        const std::array<Intertwiner, 4>& f) {
  (void)s;
  switch (g) {
    case Gen::T12:
      return {frobenius_x(rig, f[0]), f[2], f[1], frobenius_x(rig, f[3])};
    case Gen::T23:
      return {frobenius_y(rig, f[0]), f[3], frobenius_x(rig, f[2]), f[1]};
    case Gen::T34:
      return {f[3], frobenius_y(rig, f[1]), frobenius_y(rig, f[2]), f[0]};
  }
  throw Error("unreachable");
}

S4GenAction s4_generator_action(const Rigidity& rig, Gen g, const Tetra& s) {
  const Category& cat = rig.category();
  S4GenAction act;
  act.target = tetra_transform(cat, gen_perm(g), s);
  const auto src = tetra_spaces(cat, s);
  const auto dst = tetra_spaces(cat, act.target);
  const int di = src[0].dim(), dj = src[1].dim(), dk = src[2].dim(),
            dl = src[3].dim();
  const int Di = dst[0].dim(), Dj = dst[1].dim(), Dk = dst[2].dim(),
            Dl = dst[3].dim();
  act.mat = CMatrix::Zero(Di * Dj * Dk * Dl, di * dj * dk * dl);

  // Slot maps per generator; moved slots contribute Kronecker deltas, mapped
  // slots contribute the Frobenius matrix, conjugated in starred slots.
  const auto xa = [&](const BasicSpace& b) {
    return frobenius_x_map(rig, b.p, b.q, b.r).mat;
  };
  const auto ya = [&](const BasicSpace& b) {
    return frobenius_y_map(rig, b.p, b.q, b.r).mat;
  };

  auto idx_src = [&](int i, int j, int k, int l) {
    return ((i * dj + j) * dk + k) * dl + l;
  };
  auto idx_dst = [&](int i, int j, int k, int l) {
    return ((i * Dj + j) * Dk + k) * Dl + l;
  };

  CMatrix m1, m2;
  switch (g) {
    case Gen::T12: m1 = xa(src[0]); m2 = xa(src[3]); break;
    case Gen::T23: m1 = ya(src[0]); m2 = xa(src[2]); break;
    case Gen::T34: m1 = ya(src[1]); m2 = ya(src[2]); break;
  }

  for (int i = 0; i < di; ++i)
    for (int j = 0; j < dj; ++j)
      for (int k = 0; k < dk; ++k)
        for (int l = 0; l < dl; ++l) {
          switch (g) {
            case Gen::T12:
              for (int ii = 0; ii < Di; ++ii)
                for (int ll = 0; ll < Dl; ++ll)
                  act.mat(idx_dst(ii, k, j, ll), idx_src(i, j, k, l)) +=
                      std::conj(m1(ii, i)) * m2(ll, l);
              break;
            case Gen::T23:
              for (int ii = 0; ii < Di; ++ii)
                for (int kk = 0; kk < Dk; ++kk)
                  act.mat(idx_dst(ii, l, kk, j), idx_src(i, j, k, l)) +=
                      std::conj(m1(ii, i)) * m2(kk, k);
              break;
            case Gen::T34:
              for (int jj = 0; jj < Dj; ++jj)
                for (int kk = 0; kk < Dk; ++kk)
                  act.mat(idx_dst(l, jj, kk, i), idx_src(i, j, k, l)) +=
                      std::conj(m1(jj, j)) * m2(kk, k);
              break;
          }
        }
  return act;
}

double verify_s4_relations(const Rigidity& rig, const Tetra& s) {
  double worst = 0.0;
  const int n = block_dim(rig.category(), s);
  if (n == 0) return worst;

  for (Gen g : {Gen::T12, Gen::T23, Gen::T34}) {
    const auto a1 = s4_generator_action(rig, g, s);
    const auto a2 = s4_generator_action(rig, g, a1.target);
    if (!(a2.target == s)) throw Error("generator squared moved the labels");
    worst = std::max(
        worst, max_abs(CMatrix(a2.mat * a1.mat.conjugate()) - cidentity(n)));
  }

  auto braid = [&](Gen a, Gen b) {
    const auto l1 = s4_generator_action(rig, a, s);
    const auto l2 = s4_generator_action(rig, b, l1.target);
    const auto l3 = s4_generator_action(rig, a, l2.target);
    const auto r1 = s4_generator_action(rig, b, s);
    const auto r2 = s4_generator_action(rig, a, r1.target);
    const auto r3 = s4_generator_action(rig, b, r2.target);
    if (!(l3.target == r3.target))
      throw Error("braid relation moved labels inconsistently");
    const CMatrix lhs = l3.mat * l2.mat.conjugate() * l1.mat;
    const CMatrix rhs = r3.mat * r2.mat.conjugate() * r1.mat;
    return max_abs(lhs - rhs);
  };
  worst = std::max(worst, braid(Gen::T12, Gen::T23));
  worst = std::max(worst, braid(Gen::T23, Gen::T34));
  return worst;
}

double verify_phi_invariance(const Rigidity& rig, const Tetra& s) {
  const Category& cat = rig.category();
  const auto sp = tetra_spaces(cat, s);
  double worst = 0.0;
  for (Gen g : {Gen::T12, Gen::T23, Gen::T34}) {
    const Tetra target = tetra_transform(cat, gen_perm(g), s);
    for (int i = 0; i < sp[0].dim(); ++i)
      for (int j = 0; j < sp[1].dim(); ++j)
        for (int k = 0; k < sp[2].dim(); ++k)
          for (int l = 0; l < sp[3].dim(); ++l) {
            const std::array<Intertwiner, 4> faces = {
                sp[0].basis[i], sp[1].basis[j], sp[2].basis[k], sp[3].basis[l]};
            const auto moved = s4_act_tuple(rig, g, s, faces);
            const Complex lhs =
                phi_value(rig, target, moved[0], moved[1], moved[2], moved[3]);
            const Complex rhs = std::conj(
                phi_value(rig, s, faces[0], faces[1], faces[2], faces[3]));
            worst = std::max(worst, std::abs(lhs - rhs));
          }
  }
  return worst;
}

double verify_sixj_unitarity(const Rigidity& rig, int p, int q, int r, int t) {
  const Category& cat = rig.category();
  struct Row { int u, i, j; };
  struct Col { int v, k, l; };
  std::vector<Row> rows;
  std::vector<Col> cols;
  for (int u = 0; u < cat.rank(); ++u) {
    const int nu = cat.fusion_coeff(u, p, q), nb = cat.fusion_coeff(t, u, r);
    for (int i = 0; i < nu; ++i)
      for (int j = 0; j < nb; ++j) rows.push_back({u, i, j});
  }
  for (int v = 0; v < cat.rank(); ++v) {
    const int ng = cat.fusion_coeff(v, q, r), nd = cat.fusion_coeff(t, p, v);
    for (int k = 0; k < ng; ++k)
      for (int l = 0; l < nd; ++l) cols.push_back({v, k, l});
  }
  if (rows.empty() && cols.empty()) return 0.0;
  if (rows.size() != cols.size())
    throw Error("6j block is not square at (" + std::to_string(p) + "," +
                std::to_string(q) + "," + std::to_string(r) + "," +
                std::to_string(t) + ")");

  const double norm = std::sqrt(rig.qdim(p) * rig.qdim(q) * rig.qdim(r) *
                                rig.qdim(t));
  std::map<int, FTensor> by_uv;
  CMatrix m(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const Tetra s{{p, q, r, t, rows[a].u, cols[b].v}};
      const int key = rows[a].u * cat.rank() + cols[b].v;
      auto it = by_uv.find(key);
      if (it == by_uv.end()) it = by_uv.emplace(key, f_tensor(rig, s)).first;
      m(a, b) =
          it->second.at(rows[a].i, rows[a].j, cols[b].k, cols[b].l) / norm;
    }
  const double r1 = max_abs(CMatrix(m.adjoint() * m) - cidentity(m.cols()));
  const double r2 = max_abs(CMatrix(m * m.adjoint()) - cidentity(m.rows()));
  return std::max(r1, r2);
}

OrbitReport orbit_report(const Category& cat) {
  OrbitReport rep;
  const auto tetras = all_admissible(cat);
  rep.admissible_count = static_cast<int>(tetras.size());

  std::array<int, 4> perm = {0, 1, 2, 3};
  std::map<Tetra, std::vector<Tetra>> orbits;
  for (const Tetra& s : tetras) {
    Tetra canon = s;
    perm = {0, 1, 2, 3};
    do {
      canon = std::min(canon, tetra_transform(cat, perm, s));
    } while (std::next_permutation(perm.begin(), perm.end()));
    orbits[canon].push_back(s);
  }
  for (auto& [rep_tetra, members] : orbits) {
    std::sort(members.begin(), members.end());
    rep.orbits.push_back(members);
  }
  rep.reduction_ratio =
      rep.orbits.empty()
          ? 0.0
          : double(rep.admissible_count) / double(rep.orbits.size());
  return rep;
}

double verify_orbit_transport(const Rigidity& rig) {
  const Category& cat = rig.category();
  const OrbitReport rep = orbit_report(cat);
  double worst = 0.0;
  for (const auto& orbit : rep.orbits) {
    const Tetra& root = orbit.front();
    std::map<Tetra, Eigen::VectorXcd> transported;
    {
      const FTensor f = f_tensor(rig, root);
      Eigen::VectorXcd v(f.values.size());
      for (std::size_t i = 0; i < f.values.size(); ++i) v(i) = f.values[i];
      transported[root] = v;
    }
    std::vector<Tetra> frontier = {root};
    while (!frontier.empty()) {
      std::vector<Tetra> next;
      for (const Tetra& s : frontier)
        for (Gen g : {Gen::T12, Gen::T23, Gen::T34}) {
          const auto act = s4_generator_action(rig, g, s);
          if (transported.count(act.target)) continue;
          // Phi(tau X) = conj(Phi(X)) on basis tuples gives
          // F_target = conj(M F_source) for the unitary slot matrix M.
          transported[act.target] =
              (act.mat * transported[s]).conjugate();
          next.push_back(act.target);
        }
      frontier = std::move(next);
    }
    for (const Tetra& s : orbit) {
      auto it = transported.find(s);
      if (it == transported.end())
        throw Error("orbit member unreachable by generator moves: " + s.str());
      const FTensor f = f_tensor(rig, s);
      for (std::size_t i = 0; i < f.values.size(); ++i)
        worst = std::max(worst, std::abs(f.values[i] - it->second(i)));
    }
  }
  return worst;
}

GaugeDemo coherent_gauge_demo(const Rigidity& rig, unsigned seed) {
  const Category& cat = rig.category();
  const PointedZ3Data& pz = cat.pointed();
  if (pz.omega_index == 0)
    throw OmegaTrivial("gauge demonstration needs omega != 1");

  GaugeDemo demo;
  const Tetra s0{{1, 0, 1, 2, 1, 1}};

  // (a) tau_12 of the canonical-basis block value: transport coefficient
  // times the fixed-basis value at the image block.
  const auto act = s4_generator_action(rig, Gen::T12, s0);
  demo.coeff_factor = std::conj(act.mat(0, 0));
  demo.table_factor = std::conj(f_tensor(rig, act.target).values[0]);
  demo.product_a = demo.coeff_factor * demo.table_factor;

  // (b) any phase redefinition b^p_{qr} = w_{qr} 1^p_{qr}: the product of the
  // two image-block values is gauge independent.
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
  std::array<std::array<Complex, 3>, 3> phase;
  for (auto& row : phase)
    for (auto& z : row) z = std::polar(1.0, angle(rng));

  auto block_value = [&](const Tetra& s) {
    const auto sp = tetra_spaces(cat, s);
    auto scaled = [&](const BasicSpace& b) {
      Intertwiner t = b.basis[0];
      t.mat *= phase[b.q][b.r];
      return t;
    };
    return phi_value(rig, s, scaled(sp[0]), scaled(sp[1]), scaled(sp[2]),
                     scaled(sp[3]));
  };
  demo.value_222 = block_value(Tetra{{2, 2, 2, 0, 1, 1}});
  demo.value_111 = block_value(Tetra{{1, 1, 1, 0, 2, 2}});
  demo.product_b = demo.value_222 * demo.value_111;
  return demo;
}

}  // namespace tetrasym

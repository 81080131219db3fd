#include "tetrasym/rigidity.hpp"

#include <cmath>

namespace tetrasym {

namespace {

Intertwiner add(const Intertwiner& a, const Intertwiner& b) {
  if (!(a.src == b.src) || !(a.dst == b.dst))
    throw ShapeMismatch("add: arrows between different words");
  return Intertwiner{a.src, a.dst, a.mat + b.mat};
}

// Phase making phase_fix(m) = z * m.
Complex phase_factor(const CMatrix& m, const Tolerance& tol) {
  const double big = max_abs(m);
  if (big <= tol.eps) return 1.0;
  const double cutoff = std::sqrt(tol.eps) * big;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > cutoff)
        return std::conj(m(i, j)) / std::abs(m(i, j));
  return 1.0;
}

CMatrix random_unitary(int n, std::mt19937& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Complex(dist(rng), dist(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  // Fix the R diagonal phases so the distribution is Haar-like; any unitary
  // works here, determinism is all that matters.
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    Complex d = r(i, i);
    q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1.0);
  }
  return CMatrix(q);
}

std::uint64_t word_seed_mix(unsigned base, const Word& w) {
  std::uint64_t h = 1469598103934665603ull ^ base;
  for (char c : w.str()) h = (h ^ std::uint64_t(c)) * 1099511628211ull;
  return h;
}

}  // namespace

Rigidity::Rigidity(const Category& cat, Tolerance tolerance, unsigned basis_seed)
    : tol(tolerance), cat_(&cat), basis_seed_(basis_seed) {
  irr_.resize(cat.rank());
  chi_.assign(cat.rank(), 1);
  for (int p = 0; p < cat.rank(); ++p) standardize(p);
  if (basis_seed_ != 0) {
    std::mt19937 rng(basis_seed_);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
    for (int p = 0; p < cat.rank(); ++p) {
      const Complex z = std::polar(1.0, angle(rng));
      irr_[p].e.mat *= z;
      irr_[p].c.mat /= z;
    }
  }
  involutive_gauge();
}

void Rigidity::standardize(int p) {
  const Category& cat = *cat_;
  const Word wp = Word::leaf(p);
  const Word wph = Word::leaf(cat.conj(p));
  const Word pair_ep = Word::tensor(wph, wp);
  const Word pair_cp = Word::tensor(wp, wph);

  const auto& e_space = cat.hom_basis(pair_ep, Word::unit());
  if (e_space.size() != 1)
    throw NoInvariantVector("hom(hat(p)(x)p, 1) is " +
                            std::to_string(e_space.size()) +
                            "-dimensional for label " + cat.label_name(p));
  const auto& c_space = cat.hom_basis(Word::unit(), pair_cp);
  if (c_space.size() != 1)
    throw NoInvariantVector("hom(1, p(x)hat(p)) is not one-dimensional");

  Intertwiner e0 = e_space[0];
  Intertwiner c0 = c_space[0];

  // Pin c against e through the first zig-zag: the expression below is a
  // self-intertwiner of p, hence a scalar; dividing by it makes the zig-zag
  // exactly 1_p.
  const Intertwiner zig = compose(
      star(cat.lambda_(wp)),
      compose(tensor_arrow(cat.identity_arrow(wp), e0),
              compose(star(cat.phi_(wp, wph, wp)),
                      compose(tensor_arrow(c0, cat.identity_arrow(wp)),
                              cat.rho_(wp)))));
  const Complex nu = zig.mat.trace() / double(cat.dim(p));
  if (std::abs(nu) < 1e-6)
    throw NoInvariantVector("degenerate rigidity pairing for label " +
                            cat.label_name(p));
  c0.mat /= nu;

  const double d = e0.mat.norm() * c0.mat.norm();
  const double se = std::sqrt(d) / e0.mat.norm();
  e0.mat *= se;
  c0.mat /= se;
  // Phase convention: first significant entry of e_p real positive.
  const Complex z = phase_factor(e0.mat, tol);
  e0.mat *= z;
  c0.mat /= z;

  irr_[p].e = e0;
  irr_[p].c = c0;
  irr_[p].d = d;

  if (cat.is_group() &&
      std::abs(d - double(cat.dim(p))) > 1e-6 * double(cat.dim(p)))
    throw GaugeInconsistency("quantum dimension of " + cat.label_name(p) +
                             " differs from the vector-space dimension");
}

void Rigidity::involutive_gauge() {
  const Category& cat = *cat_;
  for (int p = 0; p < cat.rank(); ++p) {
    const int ph = cat.conj(p);
    if (std::abs(irr_[p].d - irr_[ph].d) > tol.eps * (1 + irr_[p].d))
      throw GaugeInconsistency("d_p != d_{hat p} for label " +
                               cat.label_name(p));
    if (p == ph) {
      // e_p and c_p* span the same line; the ratio is the gauge-invariant
      // sign chi_p.
      const Intertwiner cs = star(irr_[p].c);
      const Complex chi =
          inner_product(cs.mat, irr_[p].e.mat, Inner::HilbertSchmidt) /
          irr_[p].d;
      if (std::abs(chi - 1.0) <= 1e-6)
        chi_[p] = 1;
      else if (std::abs(chi + 1.0) <= 1e-6)
        chi_[p] = -1;
      else
        throw GaugeInconsistency("e_p is not +-c_p* on self-conjugate label " +
                                 cat.label_name(p) + " (ratio " +
                                 std::to_string(chi.real()) + "+" +
                                 std::to_string(chi.imag()) + "i)");
    } else if (p < ph) {
      // Check proportionality, then absorb the phase into the pair partner.
      const Intertwiner cs = star(irr_[p].c);
      const Complex ratio =
          inner_product(cs.mat, irr_[ph].e.mat, Inner::HilbertSchmidt) /
          irr_[p].d;
      if (std::abs(std::abs(ratio) - 1.0) > 1e-6 ||
          max_abs(irr_[ph].e.mat - ratio * cs.mat) > 1e-6)
        throw GaugeInconsistency("e_{hat p} is not proportional to c_p* for " +
                                 cat.label_name(p));
      irr_[ph].e = cs;
      irr_[ph].c = star(irr_[p].e);
      chi_[p] = chi_[ph] = 1;
    }
  }
}

CMatrix Rigidity::conj_transport(const Word& w) const {
  const Category& cat = *cat_;
  if (w.is_unit()) return cidentity(1);
  if (w.is_leaf()) {
    if (cat.is_pointed()) return cidentity(1);
    return cat.group().irreps[w.label()].conj_unitary;
  }
  const Word l = w.left(), r = w.right();
  const CMatrix tl = conj_transport(l), tr = conj_transport(r);
  // carrier(hat w) = carrier(hat r) (x) carrier(hat l); swap then transport.
  return kron(tl, tr) *
         swap_factors(cat.word_dim(cat.hat(r)), cat.word_dim(cat.hat(l)));
}

std::vector<Intertwiner> Rigidity::family_V(int p, const Word& a) const {
  std::vector<Intertwiner> v = cat_->hom_basis(Word::leaf(p), a);
  if (basis_seed_ != 0 && !v.empty()) {
    std::mt19937 rng(static_cast<unsigned>(
        word_seed_mix(basis_seed_, a) ^ (0x9e3779b9u * (p + 1))));
    const int m = static_cast<int>(v.size());
    const CMatrix u = random_unitary(m, rng);
    std::vector<Intertwiner> mixed = v;
    for (int i = 0; i < m; ++i) {
      CMatrix acc = CMatrix::Zero(v[0].mat.rows(), v[0].mat.cols());
      for (int j = 0; j < m; ++j) acc += u(j, i) * v[j].mat;
      mixed[i].mat = acc;
    }
    v = std::move(mixed);
  }
  return v;
}

Intertwiner Rigidity::transport_W(int p, const Intertwiner& v) const {
  const Category& cat = *cat_;
  const Word a = v.dst;
  const CMatrix ta = conj_transport(a);
  const CMatrix tp = conj_transport(Word::leaf(p));
  return Intertwiner{Word::leaf(cat.conj(p)), cat.hat(a),
                     ta.adjoint() * v.mat.conjugate() * tp};
}

const WordRigidity& Rigidity::word(const Word& a) const {
  {
    std::lock_guard<std::mutex> lock(word_cache_->mutex);
    auto it = word_cache_->entries.find(a);
    if (it != word_cache_->entries.end()) return it->second;
  }

  const Category& cat = *cat_;
  WordRigidity wr;
  const Word ah = cat.hat(a);
  const Word pair_e = Word::tensor(ah, a);
  const Word pair_c = Word::tensor(a, ah);
  Intertwiner esum{pair_e, Word::unit(),
                   CMatrix(CMatrix::Zero(1, cat.word_dim(pair_e)))};
  Intertwiner csum{Word::unit(), pair_c,
                   CMatrix(CMatrix::Zero(cat.word_dim(pair_c), 1))};
  for (int p = 0; p < cat.rank(); ++p) {
    auto vs = family_V(p, a);
    if (vs.empty()) continue;
    IsoSummand sm;
    sm.p = p;
    for (const auto& v : vs) {
      const Intertwiner w = transport_W(p, v);
      esum = add(esum, compose(irr_[p].e, tensor_arrow(star(w), star(v))));
      csum = add(csum, compose(tensor_arrow(v, w), irr_[p].c));
      sm.V.push_back(v);
      sm.W.push_back(w);
    }
    wr.d += double(vs.size()) * irr_[p].d;
    wr.summands.push_back(std::move(sm));
  }
  wr.e = esum;
  wr.c = csum;
  std::lock_guard<std::mutex> lock(word_cache_->mutex);
  return word_cache_->entries.emplace(a, std::move(wr)).first->second;
}

Intertwiner Rigidity::conjugate_arrow(const Intertwiner& t) const {
  const Category& cat = *cat_;
  const Word b = t.src, a = t.dst;
  const WordRigidity& fa = word(a);
  const WordRigidity& fb = word(b);
  const Word ah = cat.hat(a), bh = cat.hat(b);
  CMatrix acc = CMatrix::Zero(cat.word_dim(bh), cat.word_dim(ah));
  for (const auto& sa : fa.summands)
    for (const auto& sb : fb.summands) {
      if (sa.p != sb.p) continue;
      const int dp = cat.dim(sa.p);
      for (std::size_t al = 0; al < sa.V.size(); ++al)
        for (std::size_t be = 0; be < sb.V.size(); ++be) {
          const Complex coeff =
              (sa.V[al].mat.adjoint() * t.mat * sb.V[be].mat).trace() /
              double(dp);
          acc += coeff * (sb.W[be].mat * sa.W[al].mat.adjoint());
        }
    }
  return Intertwiner{ah, bh, acc};
}

Intertwiner Rigidity::conjugate_arrow_direct(const Intertwiner& t) const {
  const Category& cat = *cat_;
  const Word a = t.src, b = t.dst;
  const Word ah = cat.hat(a), bh = cat.hat(b);
  const Intertwiner& eb = word(b).e;
  const Intertwiner& ca = word(a).c;
  const Intertwiner ib_h = cat.identity_arrow(bh);
  const Intertwiner ia_h = cat.identity_arrow(ah);
  return compose(
      star(cat.rho_(ah)),
      compose(tensor_arrow(eb, ia_h),
              compose(tensor_arrow(tensor_arrow(ib_h, t), ia_h),
                      compose(cat.phi_(bh, a, ah),
                              compose(tensor_arrow(ib_h, ca),
                                      cat.lambda_(bh))))));
}

Complex Rigidity::trace_left(const Intertwiner& t) const {
  if (!(t.src == t.dst)) throw ShapeMismatch("trace: src != dst");
  const WordRigidity& wr = word(t.src);
  const Word ah = cat_->hat(t.src);
  return as_scalar(compose(
      wr.e, compose(tensor_arrow(cat_->identity_arrow(ah), t), star(wr.e))));
}

Complex Rigidity::trace_right(const Intertwiner& t) const {
  if (!(t.src == t.dst)) throw ShapeMismatch("trace: src != dst");
  const WordRigidity& wr = word(t.src);
  const Word ah = cat_->hat(t.src);
  return as_scalar(compose(
      star(wr.c), compose(tensor_arrow(t, cat_->identity_arrow(ah)), wr.c)));
}

Complex Rigidity::trace(const Intertwiner& t) const {
  const Complex l = trace_left(t), r = trace_right(t);
  if (std::abs(l - r) > tol.eps * (1.0 + std::abs(l)))
    throw GaugeInconsistency("left and right traces differ: " +
                             std::to_string(std::abs(l - r)));
  return l;
}

Intertwiner Rigidity::kappa(int p) const {
  const Category& cat = *cat_;
  const Word wp = Word::leaf(p);
  const Word wph = Word::leaf(cat.conj(p));
  return compose(
      star(cat.lambda_(wp)),
      compose(tensor_arrow(cat.identity_arrow(wp), star(irr_[cat.conj(p)].c)),
              compose(star(cat.phi_(wp, wph, wp)),
                      compose(tensor_arrow(irr_[p].c, cat.identity_arrow(wp)),
                              cat.rho_(wp)))));
}

Intertwiner Rigidity::kappa_tilde(int p) const {
  const Category& cat = *cat_;
  const Word wp = Word::leaf(p);
  const Word wph = Word::leaf(cat.conj(p));
  return compose(
      star(cat.rho_(wp)),
      compose(tensor_arrow(irr_[cat.conj(p)].e, cat.identity_arrow(wp)),
              compose(cat.phi_(wp, wph, wp),
                      compose(tensor_arrow(cat.identity_arrow(wp), star(irr_[p].e)),
                              cat.lambda_(wp)))));
}

Intertwiner Rigidity::e_pair(const Word& a, const Word& b) const {
  const Category& cat = *cat_;
  const Word ah = cat.hat(a), bh = cat.hat(b);
  const Word ab = Word::tensor(a, b);
  const Intertwiner ib_h = cat.identity_arrow(bh);
  const Intertwiner ib = cat.identity_arrow(b);
  return compose(
      word(b).e,
      compose(tensor_arrow(ib_h, star(cat.rho_(b))),
              compose(tensor_arrow(ib_h, tensor_arrow(word(a).e, ib)),
                      compose(tensor_arrow(ib_h, cat.phi_(ah, a, b)),
                              star(cat.phi_(bh, ah, ab))))));
}

Intertwiner Rigidity::c_pair(const Word& a, const Word& b) const {
  const Category& cat = *cat_;
  const Word ah = cat.hat(a), bh = cat.hat(b);
  const Word ab = Word::tensor(a, b);
  const Intertwiner ia = cat.identity_arrow(a);
  const Intertwiner ia_h = cat.identity_arrow(ah);
  return compose(
      star(cat.phi_(ab, bh, ah)),
      compose(tensor_arrow(cat.phi_(a, b, bh), ia_h),
              compose(tensor_arrow(tensor_arrow(ia, word(b).c), ia_h),
                      compose(tensor_arrow(cat.lambda_(a), ia_h), word(a).c))));
}

Intertwiner Rigidity::antimonoidal_alpha(const Word& a, const Word& b) const {
  const Category& cat = *cat_;
  const Word ab = Word::tensor(a, b);
  const Word abh = cat.hat(ab);  // equals hat(b) (x) hat(a) structurally
  const Intertwiner ih = cat.identity_arrow(abh);
  return compose(
      star(cat.rho_(abh)),
      compose(tensor_arrow(word(ab).e, ih),
              compose(cat.phi_(abh, ab, abh),
                      compose(tensor_arrow(ih, c_pair(a, b)), cat.lambda_(abh)))));
}

double Rigidity::verify_antimonoidal(const Word& a, const Word& b) const {
  // alpha_{hat a, a} e_a-hat = c_{hat a} and c_a-hat alpha_{a, hat a}^{-1} = e_{hat a}.
  const Category& cat = *cat_;
  const Word ah = cat.hat(a);
  const Intertwiner ea_hat = conjugate_arrow(word(a).e);
  const Intertwiner lhs1 = compose(antimonoidal_alpha(ah, a), ea_hat);
  const double r1 = max_abs(lhs1.mat - word(ah).c.mat);

  const Intertwiner ca_hat = conjugate_arrow(word(a).c);
  const Intertwiner alpha = antimonoidal_alpha(a, ah);
  // alpha is unitary; its inverse is the adjoint.
  const Intertwiner lhs2 = compose(ca_hat, star(alpha));
  const double r2 = max_abs(lhs2.mat - word(ah).e.mat);
  return std::max(r1, r2);
}

Intertwiner compare_rigidity(const Rigidity& r1, const Rigidity& r2,
                             const Word& a) {
  const Category& cat = r1.category();
  const Tolerance tol = r1.tol;
  const int d = cat.word_dim(a);
  const int dh = cat.word_dim(cat.hat(a));
  const CMatrix& e1 = r1.word(a).e.mat;
  const CMatrix& e2 = r2.word(a).e.mat;
  Eigen::MatrixXcd m1(dh, d), m2(dh, d);
  for (int m = 0; m < dh; ++m)
    for (int k = 0; k < d; ++k) {
      m1(m, k) = e1(0, m * d + k);
      m2(m, k) = e2(0, m * d + k);
    }
  const CMatrix u = m1.colPivHouseholderQr().solve(m2);
  const double res_e = max_abs(CMatrix(m1 * u) - CMatrix(m2));

  const CMatrix& c1 = r1.word(a).c.mat;
  const CMatrix& c2 = r2.word(a).c.mat;
  CMatrix k1(d, dh), k2(d, dh);
  for (int k = 0; k < d; ++k)
    for (int m = 0; m < dh; ++m) {
      k1(k, m) = c1(k * dh + m, 0);
      k2(k, m) = c2(k * dh + m, 0);
    }
  const double res_c = max_abs(CMatrix(u.adjoint() * k1) - k2);

  if (res_e > 1e-6 || res_c > 1e-6 || !classify(u, Tolerance{1e-6}).unitary)
    throw NotRelated("no unitary relates the two rigidity choices on " +
                     a.str() + " (residuals " + std::to_string(res_e) + ", " +
                     std::to_string(res_c) + ")");
  (void)tol;
  return Intertwiner{a, a, u};
}

}  // namespace tetrasym

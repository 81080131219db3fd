#include "tetrasym/category.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/SVD>

#include "json.hpp"

namespace tetrasym {

using nlohmann::json;

Intertwiner star(const Intertwiner& t) {
  return Intertwiner{t.dst, t.src, t.mat.adjoint()};
}

Intertwiner compose(const Intertwiner& f, const Intertwiner& g) {
  if (!(g.dst == f.src))
    throw ShapeMismatch("compose: words do not match: " + g.dst.str() +
                        " vs " + f.src.str());
  return Intertwiner{g.src, f.dst, f.mat * g.mat};
}

Intertwiner tensor_arrow(const Intertwiner& s, const Intertwiner& t) {
  return Intertwiner{Word::tensor(s.src, t.src), Word::tensor(s.dst, t.dst),
                     kron(s.mat, t.mat)};
}

Complex as_scalar(const Intertwiner& t) {
  if (t.mat.rows() != 1 || t.mat.cols() != 1)
    throw ShapeMismatch("as_scalar: arrow is not 1x1");
  return t.mat(0, 0);
}

Complex GroupData::character(int label, int element) const {
  return irreps[label].element_mats[element].trace();
}

Complex PointedZ3Data::cocycle(int p, int q, int r) const {
  if (!tamper.empty()) {
    auto it = tamper.find({p, q, r});
    if (it != tamper.end()) return it->second;
  }
  // omega on 111, 222, 112, 221, 211, 122; one otherwise.
  const bool deformed = (p != 0 && q != 0 && r != 0) &&
                        !(p == 1 && q == 2 && r == 1) &&
                        !(p == 2 && q == 1 && r == 2);
  return deformed ? omega : Complex(1.0, 0.0);
}

double CoherenceReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

namespace {

CMatrix parse_matrix(const json& j, int rows, int cols, const char* what) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(rows * cols))
    throw ParseError(std::string(what) + ": expected " +
                     std::to_string(rows * cols) + " [re,im] pairs");
  CMatrix m(rows, cols);
  for (int k = 0; k < rows * cols; ++k) {
    const auto& e = j[k];
    if (!e.is_array() || e.size() != 2)
      throw ParseError(std::string(what) + ": entry " + std::to_string(k) +
                       " is not an [re,im] pair");
    m(k / cols, k % cols) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  ensure_finite(m, what);
  return m;
}

int find_identity(const std::vector<std::vector<int>>& mult) {
  const int n = static_cast<int>(mult.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mult[e][x] == x && mult[x][e] == x;
    if (ok) return e;
  }
  throw ParseError("mult_table has no identity element");
}

}  // namespace

std::string resolve_category_path(const std::string& name_or_path) {
  namespace fs = std::filesystem;
  std::vector<std::string> candidates = {name_or_path, name_or_path + ".json"};
  std::vector<std::string> roots;
  if (const char* env = std::getenv("TETRASYM_DATA")) roots.push_back(env);
#ifdef TETRASYM_PRESET_DIR
  roots.push_back(TETRASYM_PRESET_DIR);
#endif
  const std::string base = fs::path(name_or_path).filename().string();
  for (const auto& root : roots) {
    candidates.push_back(root + "/" + name_or_path + ".json");
    candidates.push_back(root + "/" + base + ".json");
    candidates.push_back(root + "/" + base);
  }
  for (const auto& c : candidates)
    if (fs::exists(c) && fs::is_regular_file(c)) return c;
  throw ParseError("category spec not found: " + name_or_path);
}

Category Category::load(const std::string& name_or_path) {
  return load_file(resolve_category_path(name_or_path));
}

Category Category::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_string(ss.str());
}

Category Category::load_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  Category cat;
  try {
    cat.name_ = j.at("name").get<std::string>();
    const std::string backend = j.at("backend").get<std::string>();
    if (backend == "pointed_z3") {
      PointedZ3Data pz;
      pz.omega_index = j.at("omega_index").get<int>();
      if (pz.omega_index < 0 || pz.omega_index > 2)
        throw InvalidCocycle("omega_index must be 0, 1 or 2");
      pz.omega = std::polar(1.0, 2.0 * std::numbers::pi * pz.omega_index / 3.0);
      if (j.contains("tamper_cocycle")) {
        // Test fixture hook: overwrite one cocycle entry.
        for (const auto& t : j.at("tamper_cocycle")) {
          const auto& idx = t.at(0);
          pz.tamper[{idx.at(0).get<int>(), idx.at(1).get<int>(),
                     idx.at(2).get<int>()}] =
              Complex(t.at(1).at(0).get<double>(), t.at(1).at(1).get<double>());
        }
      }
      cat.pointed_ = std::move(pz);
      cat.dims_ = {1, 1, 1};
      cat.conj_ = {0, 2, 1};
      cat.label_names_ = {"0", "1", "2"};
    } else if (backend == "group_rep") {
      GroupData g;
      g.order = j.at("order").get<int>();
      g.generators = j.at("generators").get<std::vector<int>>();
      g.mult = j.at("mult_table").get<std::vector<std::vector<int>>>();
      if (static_cast<int>(g.mult.size()) != g.order)
        throw ParseError("mult_table size does not match order");
      for (const auto& row : g.mult) {
        if (static_cast<int>(row.size()) != g.order)
          throw ParseError("mult_table row size does not match order");
        for (int v : row)
          if (v < 0 || v >= g.order) throw ParseError("mult_table entry range");
      }
      g.identity = find_identity(g.mult);
      std::vector<std::string> names;
      std::vector<std::string> conj_names;
      for (const auto& ji : j.at("irreps")) {
        GroupIrrep ir;
        ir.name = ji.at("name").get<std::string>();
        ir.dim = ji.at("dim").get<int>();
        conj_names.push_back(ji.at("conjugate").get<std::string>());
        ir.conj_unitary = parse_matrix(ji.at("conj_unitary"), ir.dim, ir.dim,
                                       ("conj_unitary of " + ir.name).c_str());
        ir.element_mats.assign(g.order, CMatrix());
        for (auto& [key, val] : ji.at("matrices").items()) {
          const int elem = std::stoi(key);
          if (elem < 0 || elem >= g.order)
            throw ParseError("matrix keyed by out-of-range element");
          ir.element_mats[elem] = parse_matrix(
              val, ir.dim, ir.dim, ("matrix of " + ir.name).c_str());
        }
        names.push_back(ir.name);
        cat.dims_.push_back(ir.dim);
        g.irreps.push_back(std::move(ir));
      }
      cat.label_names_ = names;
      for (const auto& cn : conj_names) {
        auto it = std::find(names.begin(), names.end(), cn);
        if (it == names.end())
          throw ParseError("unknown conjugate irrep name: " + cn);
        cat.conj_.push_back(static_cast<int>(it - names.begin()));
      }
      cat.group_ = std::move(g);
    } else {
      throw ParseError("unknown backend: " + backend);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed category spec: ") + e.what());
  }
  cat.validate();
  return cat;
}

void Category::validate() {
  const Tolerance& t = tol;
  if (conj_.size() != dims_.size() || label_names_.size() != dims_.size())
    throw ParseError("label tables inconsistent");
  for (int p = 0; p < rank(); ++p) {
    if (conj_[p] < 0 || conj_[p] >= rank() || conj_[conj_[p]] != p)
      throw ParseError("conjugation map is not an involution");
  }
  if (conj_[0] != 0) throw ParseError("unit label must be self-conjugate");

  if (is_pointed()) {
    const Complex w = pointed_->omega;
    if (std::abs(w * w * w - 1.0) > t.eps)
      throw InvalidCocycle("omega is not a third root of unity");
    return;
  }

  GroupData& g = *group_;
  // Generate the missing element matrices by walking the Cayley graph from
  // the identity, then verify the homomorphism property on the whole table.
  long sum_sq = 0;
  for (auto& ir : g.irreps) sum_sq += long(ir.dim) * ir.dim;
  if (sum_sq != g.order)
    throw InvalidIrrep("sum of squared dimensions != group order");

  for (std::size_t li = 0; li < g.irreps.size(); ++li) {
    auto& ir = g.irreps[li];
    for (int gen : g.generators) {
      if (ir.element_mats[gen].size() == 0)
        throw ParseError("irrep " + ir.name + " missing generator matrix");
    }
    ir.element_mats[g.identity] = cidentity(ir.dim);
    std::vector<int> frontier = {g.identity};
    std::vector<char> seen(g.order, 0);
    seen[g.identity] = 1;
    for (int gen : g.generators) seen[gen] = 1, frontier.push_back(gen);
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int h : frontier)
        for (int gen : g.generators) {
          const int hg = g.mult[h][gen];
          if (!seen[hg]) {
            seen[hg] = 1;
            ir.element_mats[hg] = ir.element_mats[h] * ir.element_mats[gen];
            next.push_back(hg);
          }
        }
      frontier = std::move(next);
    }
    for (int h = 0; h < g.order; ++h)
      if (!seen[h])
        throw ParseError("generators do not generate the group");

    for (int h = 0; h < g.order; ++h) {
      const CMatrix& m = ir.element_mats[h];
      if (!classify(m, t).unitary)
        throw InvalidIrrep("irrep " + ir.name + " not unitary at element " +
                           std::to_string(h));
      for (int k = 0; k < g.order; ++k) {
        if (max_abs(CMatrix(m * ir.element_mats[k]) -
                    ir.element_mats[g.mult[h][k]]) > t.eps)
          throw InvalidIrrep("irrep " + ir.name +
                             " violates the multiplication table at (" +
                             std::to_string(h) + "," + std::to_string(k) + ")");
      }
    }
  }
  // conj(D_p(g)) = C_p D_{conj p}(g) C_p*; second pass, so the conjugate
  // partner already has its element matrices.
  for (std::size_t li = 0; li < g.irreps.size(); ++li) {
    const auto& ir = g.irreps[li];
    if (!classify(ir.conj_unitary, t).unitary)
      throw InvalidIrrep("conj_unitary of " + ir.name + " is not unitary");
    const auto& irc = g.irreps[conj_[li]];
    if (irc.dim != ir.dim)
      throw InvalidIrrep("conjugate irreps must have equal dimension");
    for (int h = 0; h < g.order; ++h) {
      const CMatrix lhs = ir.element_mats[h].conjugate();
      const CMatrix rhs =
          ir.conj_unitary * irc.element_mats[h] * ir.conj_unitary.adjoint();
      if (max_abs(lhs - rhs) > t.eps)
        throw InvalidIrrep("conj_unitary of " + ir.name +
                           " does not intertwine the conjugate irrep");
    }
  }
  // Unit label is the trivial irrep; irreps pairwise inequivalent.
  for (int h = 0; h < g.order; ++h)
    if (std::abs(g.character(0, h) - Complex(1.0)) > t.eps)
      throw InvalidIrrep("label 0 is not the trivial irrep");
  for (std::size_t p = 0; p < g.irreps.size(); ++p)
    for (std::size_t q = 0; q <= p; ++q) {
      Complex ip = 0.0;
      for (int h = 0; h < g.order; ++h)
        ip += g.character(int(p), h) * std::conj(g.character(int(q), h));
      ip /= double(g.order);
      const Complex expect = (p == q) ? 1.0 : 0.0;
      if (std::abs(ip - expect) > t.eps)
        throw InvalidIrrep("characters not orthonormal: irreps " +
                           std::to_string(p) + "," + std::to_string(q));
    }
}

int Category::label_index(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (label_names_[i] == name) return i;
  throw ParseError("unknown label name: " + name);
}

const GroupData& Category::group() const {
  if (!group_) throw WrongBackend("category has no group backend");
  return *group_;
}

const PointedZ3Data& Category::pointed() const {
  if (!pointed_) throw WrongBackend("category has no pointed_z3 backend");
  return *pointed_;
}

Word Category::hat(const Word& w) const {
  return w.hat([this](int p) { return conj_[p]; });
}

int Category::word_dim(const Word& w) const {
  int d = 1;
  for (int l : w.letters()) d *= dims_[l];
  return d;
}

int Category::grade(const Word& w) const {
  int s = 0;
  for (int l : w.letters()) s = (s + l) % 3;
  return s;
}

CMatrix Category::word_matrix(const Word& w, int element) const {
  const GroupData& g = group();
  CMatrix m = cidentity(1);
  for (int l : w.letters()) m = kron(m, g.irreps[l].element_mats[element]);
  return m;
}

Intertwiner Category::identity_arrow(const Word& w) const {
  return Intertwiner{w, w, cidentity(word_dim(w))};
}

Intertwiner Category::lambda_(const Word& a) const {
  return Intertwiner{a, Word::tensor(a, Word::unit()), cidentity(word_dim(a))};
}

Intertwiner Category::rho_(const Word& a) const {
  return Intertwiner{a, Word::tensor(Word::unit(), a), cidentity(word_dim(a))};
}

Intertwiner Category::phi_(const Word& a, const Word& b, const Word& c) const {
  const Word src = Word::tensor(a, Word::tensor(b, c));
  const Word dst = Word::tensor(Word::tensor(a, b), c);
  CMatrix m = cidentity(word_dim(src));
  if (is_pointed()) m *= pointed_->cocycle(grade(a), grade(b), grade(c));
  return Intertwiner{src, dst, m};
}

const std::vector<Intertwiner>& Category::hom_basis(const Word& src,
                                                    const Word& dst) const {
  const auto key = std::make_pair(src, dst);
  {
    std::lock_guard<std::mutex> lock(hom_cache_->mutex);
    auto it = hom_cache_->entries.find(key);
    if (it != hom_cache_->entries.end()) return it->second;
  }

  std::vector<Intertwiner> basis;
  const int ds = word_dim(src), dd = word_dim(dst);
  if (is_pointed()) {
    if (grade(src) == grade(dst))
      basis.push_back(Intertwiner{src, dst, cidentity(1)});
  } else if (group().generators.empty()) {
    // Trivial group: every linear map intertwines.
    for (int i = 0; i < dd; ++i)
      for (int j = 0; j < ds; ++j) {
        CMatrix m = CMatrix::Zero(dd, ds);
        m(i, j) = std::sqrt(static_cast<double>(ds));
        basis.push_back(Intertwiner{src, dst, m});
      }
  } else {
    const GroupData& g = group();
    const int n = dd * ds;
    CMatrix constraints(static_cast<Eigen::Index>(g.generators.size()) * n, n);
    Eigen::Index row = 0;
    for (int gen : g.generators) {
      const CMatrix rs = word_matrix(src, gen);
      const CMatrix rd = word_matrix(dst, gen);
      // Row-major vec: vec(T A) = (I (x) A^T) vec(T), vec(B T) = (B (x) I) vec(T).
      constraints.block(row, 0, n, n) =
          kron(cidentity(dd), rs.transpose()) - kron(rd, cidentity(ds));
      row += n;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(constraints,
                                           Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() ? tol.eps * std::max(sv(0), 1.0) : 0.0;
    std::vector<CMatrix> raw;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k < sv.size() && sv(k) > cutoff) continue;
      CMatrix m(dd, ds);
      for (int i = 0; i < dd; ++i)
        for (int j = 0; j < ds; ++j) m(i, j) = svd.matrixV()(i * ds + j, k);
      raw.push_back(m);
    }
    if (!raw.empty()) {
      // Orthonormal for the scaled product, so t* t = 1 on irreducible
      // sources; deterministic order from the SVD, fixed phases.
      for (const CMatrix& m : orthonormalize(raw, Inner::Scaled, tol))
        basis.push_back(Intertwiner{src, dst, phase_fix(m, tol)});
    }
  }
  std::lock_guard<std::mutex> lock(hom_cache_->mutex);
  return hom_cache_->entries.emplace(key, std::move(basis)).first->second;
}

int Category::hom_dim(const Word& src, const Word& dst) const {
  return static_cast<int>(hom_basis(src, dst).size());
}

int Category::fusion_coeff(int t, int p, int q) const {
  return hom_dim(Word::leaf(t), Word::tensor(Word::leaf(p), Word::leaf(q)));
}

CoherenceReport Category::verify_coherence(const Tolerance& t,
                                           unsigned seed) const {
  CoherenceReport rep;
  rep.seed = seed;
  const int n = rank();
  const bool exhaustive = static_cast<long>(n) * n * n * n <= 10000;
  rep.exhaustive = exhaustive;

  std::vector<std::array<int, 2>> pairs;
  std::vector<std::array<int, 4>> quads;
  if (exhaustive) {
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) pairs.push_back({a, c});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) quads.push_back({a, b, c, d});
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 500; ++i) pairs.push_back({pick(rng), pick(rng)});
    for (int i = 0; i < 2000; ++i)
      quads.push_back({pick(rng), pick(rng), pick(rng), pick(rng)});
  }

  CoherenceCheck tri{"triangle-1.1a", 0.0, {}};
  for (const auto& [a, c] : pairs) {
    const Word wa = Word::leaf(a), wc = Word::leaf(c);
    const Intertwiner lhs = phi_(wa, Word::unit(), wc);
    const Intertwiner rhs =
        compose(tensor_arrow(lambda_(wa), identity_arrow(wc)),
                tensor_arrow(identity_arrow(wa), star(rho_(wc))));
    const double r = max_abs(lhs.mat - rhs.mat);
    if (r > tri.residual) tri = {"triangle-1.1a", r, {a, c}};
  }
  rep.checks.push_back(tri);

  CoherenceCheck pent{"pentagon-1.1b", 0.0, {}};
  for (const auto& [a, b, c, d] : quads) {
    const Word wa = Word::leaf(a), wb = Word::leaf(b), wc = Word::leaf(c),
               wd = Word::leaf(d);
    const Intertwiner lhs = compose(phi_(Word::tensor(wa, wb), wc, wd),
                                    phi_(wa, wb, Word::tensor(wc, wd)));
    const Intertwiner rhs =
        compose(tensor_arrow(phi_(wa, wb, wc), identity_arrow(wd)),
                compose(phi_(wa, Word::tensor(wb, wc), wd),
                        tensor_arrow(identity_arrow(wa), phi_(wb, wc, wd))));
    const double r = max_abs(lhs.mat - rhs.mat);
    if (r > pent.residual) pent = {"pentagon-1.1b", r, {a, b, c, d}};
  }
  rep.checks.push_back(pent);

  for (const auto& c : rep.checks)
    if (c.residual > t.eps) {
      std::string tuple;
      for (int v : c.worst_tuple) tuple += " " + std::to_string(v);
      throw CoherenceViolation(c.id + " residual " + std::to_string(c.residual) +
                               " at tuple" + tuple);
    }
  return rep;
}

}  // namespace tetrasym

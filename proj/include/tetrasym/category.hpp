#pragma once

// Concrete semisimple C*-categories with two backends:
//
//   group_rep   objects are tensor words of unitary irreps of a finite group;
//               arrows are intertwiners, the tensor product is strict at the
//               underlying-space level (Kronecker products), so the unitors
//               and the associativity arrows are index reshuffles (numerically
//               identity matrices).
//
//   pointed_z3  the omega-deformed pointed category on Z3: three invertible
//               objects graded mod 3, every word space one-dimensional, and
//               the associativity arrow the scalar cocycle omega_{pqr}.
//
// Conventions used throughout:
//   lambda_a : a -> a(x)1,  rho_a : a -> 1(x)a,
//   phi_{a,b,c} : a(x)(b(x)c) -> (a(x)b)(x)c,
//   arrows compose right to left, * is the matrix adjoint with words swapped.

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tetrasym/numeric.hpp"
#include "tetrasym/words.hpp"

namespace tetrasym {

struct Intertwiner {
  Word src, dst;
  CMatrix mat;  // rows = dim(dst), cols = dim(src)
};

Intertwiner star(const Intertwiner& t);
// f after g; requires g.dst == f.src as words (bracketing included).
Intertwiner compose(const Intertwiner& f, const Intertwiner& g);
Intertwiner tensor_arrow(const Intertwiner& s, const Intertwiner& t);
Complex as_scalar(const Intertwiner& t);  // 1x1 arrows only

struct GroupIrrep {
  std::string name;
  int dim = 1;
  int conj = 0;          // conjugate label
  CMatrix conj_unitary;  // C_p with conj(D_p(g)) = C_p D_{conj(p)}(g) C_p*
  std::vector<CMatrix> element_mats;  // one per group element
};

struct GroupData {
  int order = 1;
  int identity = 0;
  std::vector<int> generators;
  std::vector<std::vector<int>> mult;  // mult[g][h] = g h
  std::vector<GroupIrrep> irreps;
  Complex character(int label, int element) const;
};

struct PointedZ3Data {
  int omega_index = 0;  // omega = exp(2 pi i index / 3)
  Complex omega;
  // Test-fixture overrides of individual cocycle entries.
  std::map<std::array<int, 3>, Complex> tamper;
  // Cocycle value on graded components, nontrivial exactly on the six index
  // triples 111, 222, 112, 221, 211, 122.
  Complex cocycle(int p, int q, int r) const;
};

struct CoherenceCheck {
  std::string id;
  double residual = 0.0;
  std::vector<int> worst_tuple;
};

struct CoherenceReport {
  std::vector<CoherenceCheck> checks;
  bool exhaustive = true;
  unsigned seed = 0;
  double max_residual() const;
};

class Category {
 public:
  static Category load_file(const std::string& path);
  static Category load_string(const std::string& json_text);
  // Resolves a preset name or a path; see resolve_category_path.
  static Category load(const std::string& name_or_path);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(dims_.size()); }
  int dim(int label) const { return dims_[label]; }
  int conj(int label) const { return conj_[label]; }
  const std::string& label_name(int label) const { return label_names_[label]; }
  int label_index(const std::string& name) const;

  bool is_group() const { return group_.has_value(); }
  bool is_pointed() const { return pointed_.has_value(); }
  const GroupData& group() const;
  const PointedZ3Data& pointed() const;

  Word hat(const Word& w) const;
  int word_dim(const Word& w) const;
  int grade(const Word& w) const;  // pointed backend: sum of letters mod 3

  // Underlying representation of a word: the Kronecker product of letter
  // matrices in letter order (group backend).
  CMatrix word_matrix(const Word& w, int element) const;

  Intertwiner identity_arrow(const Word& w) const;
  Intertwiner lambda_(const Word& a) const;  // a -> a(x)1
  Intertwiner rho_(const Word& a) const;     // a -> 1(x)a
  Intertwiner phi_(const Word& a, const Word& b, const Word& c) const;

  // Orthonormal basis of Hom(src,dst) for the scaled Hilbert-Schmidt inner
  // product (on an irreducible source this is the basic-space product).
  // Cached; deterministic, each element phase-fixed.
  const std::vector<Intertwiner>& hom_basis(const Word& src,
                                            const Word& dst) const;
  int hom_dim(const Word& src, const Word& dst) const;
  int fusion_coeff(int t, int p, int q) const;  // N^t_{pq}

  // Triangle and pentagon residuals. Exhaustive when rank^4 <= 10^4,
  // otherwise sampled with the given seed (recorded in the report).
  CoherenceReport verify_coherence(const Tolerance& tol,
                                   unsigned seed = 1) const;

  Tolerance tol;  // default tolerance used by checks on this category

 private:
  Category() = default;
  void validate();

  std::string name_;
  std::vector<int> dims_;
  std::vector<int> conj_;
  std::vector<std::string> label_names_;
  std::optional<GroupData> group_;
  std::optional<PointedZ3Data> pointed_;

  // Read-mostly cache; entries are never mutated once inserted, map nodes are
  // stable, so returned references stay valid across concurrent inserts.
  struct HomCache {
    std::mutex mutex;
    std::map<std::pair<Word, Word>, std::vector<Intertwiner>> entries;
  };
  std::unique_ptr<HomCache> hom_cache_ = std::make_unique<HomCache>();
};

// Search order: literal path, path+".json", then the preset directory
// (TETRASYM_DATA env var, else the compiled-in data directory).
std::string resolve_category_path(const std::string& name_or_path);

}  // namespace tetrasym

#pragma once

// Tetrahedra s = (p,q,r,t,u,v), the block H_s of four basic intertwiner
// spaces, the S4 action induced by the Frobenius maps, the invariant
// functional Phi, and the normalized F-coefficients.
//
// Edge dictionary: p = (12), q = (23), r = (34), t = (14), u = (13), v = (24);
// reversed edges carry conjugate labels. The four faces hold
//   alpha in (u, p(x)q),  beta in (t, u(x)r),
//   gamma in (v, q(x)r),  delta in (t, p(x)v),
// and H_s = A* (x) B* (x) C (x) D over those spaces.

#include <array>
#include <map>
#include <vector>

#include "tetrasym/frobenius.hpp"

namespace tetrasym {

struct Tetra {
  std::array<int, 6> s{};  // p,q,r,t,u,v
  int p() const { return s[0]; }
  int q() const { return s[1]; }
  int r() const { return s[2]; }
  int t() const { return s[3]; }
  int u() const { return s[4]; }
  int v() const { return s[5]; }
  bool operator==(const Tetra& o) const { return s == o.s; }
  bool operator<(const Tetra& o) const { return s < o.s; }
  std::string str() const;
};

bool admissible(const Category& cat, const Tetra& s);
std::vector<Tetra> all_admissible(const Category& cat);

// Label action of an arbitrary vertex permutation (perm[i] = image of vertex
// i, 0-based); reversed edges pick up the conjugation.
Tetra tetra_transform(const Category& cat, const std::array<int, 4>& perm,
                      const Tetra& s);

enum class Gen { T12, T23, T34 };
std::array<int, 4> gen_perm(Gen g);

// The four basic spaces of H_s in slot order A,B,C,D.
std::array<BasicSpace, 4> tetra_spaces(const Category& cat, const Tetra& s);
int block_dim(const Category& cat, const Tetra& s);

// Phi evaluated on concrete face intertwiners (alpha and beta enter starred).
Complex phi_value(const Rigidity& rig, const Tetra& s, const Intertwiner& alpha,
                  const Intertwiner& beta, const Intertwiner& gamma,
                  const Intertwiner& delta);

// Independent evaluation of the same number through the recoupling overlap
// <(alpha (x) 1_r) beta, phi_{p,q,r} (1_p (x) gamma) delta> scaled by
// sqrt(d_p d_q d_r d_t); used as an oracle against the closed diagram.
Complex phi_value_overlap(const Rigidity& rig, const Tetra& s,
                          const Intertwiner& alpha, const Intertwiner& beta,
                          const Intertwiner& gamma, const Intertwiner& delta);

struct FTensor {
  Tetra s;
  std::array<int, 4> dims{};         // basis sizes of A,B,C,D
  std::vector<Complex> values;       // index ((i*dB+j)*dC+k)*dD+l
  Complex at(int i, int j, int k, int l) const;
};

FTensor f_tensor(const Rigidity& rig, const Tetra& s);

// The same tensor rescaled by 1/sqrt(d_p d_q d_r d_t); assembled over all
// admissible u,v for fixed (p,q,r,t) these are unitary in the multi-labels.
FTensor six_j_tensor(const Rigidity& rig, const Tetra& s);

// Generator action on H_s: an antilinear map H_s -> H_{target} given on
// coordinates by v -> mat conj(v), with basis tuples enumerated in slot order.
struct S4GenAction {
  Tetra target;
  CMatrix mat;
};
S4GenAction s4_generator_action(const Rigidity& rig, Gen g, const Tetra& s);

// Concrete transformed face tuple for one basis tuple of H_s.
std::array<Intertwiner, 4> s4_act_tuple(const Rigidity& rig, Gen g,
                                        const Tetra& s,
                                        const std::array<Intertwiner, 4>& faces);

// Max residual of the five defining S4 relations on H_s.
double verify_s4_relations(const Rigidity& rig, const Tetra& s);

// Max residual of Phi(tau X) = conj(Phi(X)) over the three generators and all
// basis tuples of H_s.
double verify_phi_invariance(const Rigidity& rig, const Tetra& s);

// Unitarity of the 6j block for fixed (p,q,r,t): the matrix indexed by
// (alpha,u,beta) x (gamma,v,delta) with entries F / sqrt(d_p d_q d_r d_t).
double verify_sixj_unitarity(const Rigidity& rig, int p, int q, int r, int t);

struct OrbitReport {
  std::vector<std::vector<Tetra>> orbits;  // sorted members, sorted by rep
  int admissible_count = 0;
  double reduction_ratio = 0.0;
};
OrbitReport orbit_report(const Category& cat);

// Transports the F-tensor from one representative per orbit along generator
// paths and compares with direct computation; returns the max residual.
double verify_orbit_transport(const Rigidity& rig);

struct GaugeDemo {
  Complex coeff_factor;   // conj of the tau_12 transport coefficient: omega
  Complex table_factor;   // conj of the fixed-basis value at the image: conj(omega)
  Complex product_a;      // their product: 1
  Complex value_222;      // fixed-b-basis value at (222)_0
  Complex value_111;      // fixed-b-basis value at (111)_0
  Complex product_b;      // value_222 * value_111 = omega^2 for every gauge
};

// Reproduces the fixed-basis computations for the pointed category: the
// tau_12 transform of the (101)_2 block in the canonical basis, and the
// gauge-independent product of the two transported block values, which equals
// omega^2 and rules out an S4-invariant fixed intertwiner set when omega != 1.
// Throws OmegaTrivial when omega = 1.
GaugeDemo coherent_gauge_demo(const Rigidity& rig, unsigned seed = 7);

}  // namespace tetrasym

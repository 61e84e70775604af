// Diagram automorphisms and folding: the fixed subspace h^tau with its
// orthogonal projection, restricted roots Delta^tau, theta_tau, the twisted
// affine Cartan matrix with comarks, and the component group
// pi(ker exp)/ker(exp)^tau.
//
// Coordinates on h^tau: the basis is the orbit sums of simple coroots
// u_O = sum_{i in O} alpha_i^vee ("u-coordinates"), so (Q^vee)^tau = Z^m.
// Covectors on h^tau are stored as their value vectors on that basis.
//
// Note on g0: the paper describes the fixed subalgebra g0 as having root
// system Delta^tau, which is non-reduced (type BC_n) when the base is A_{2n};
// the root system actually arising as roots of g0 is the reduced subsystem
// { lambda in Delta^tau : lambda/2 not in Delta^tau } (type B_n there), and
// that is what this module uses.

#pragma once

#include "tcc/linalg.hpp"
#include "tcc/rootsys.hpp"

#include <utility>
#include <vector>

namespace tcc {

struct DiagramAutomorphism {
  std::vector<int> perm; // node i of the base diagram maps to perm[i]
  int order = 1;         // r in {1, 2, 3}

  bool is_identity() const { return order == 1; }
};

// Complete list (including the identity), found by exhaustive search over
// node permutations with Cartan equivariance A_{s(i)s(j)} = A_{ij}.
std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs);

struct RestrictedRoot {
  QVec covector;        // values on the u-basis of h^tau
  int multiplicity = 0; // number of base roots restricting to it
};

struct FoldedSystem {
  RootSystem base;
  DiagramAutomorphism tau;
  std::vector<std::vector<int>> orbits; // tau-orbits of nodes, sorted by least node

  QMat htau_basis; // l x m, column O = u_O (indicator of the orbit)
  QMat proj;       // l x l orbit-averaging projection of h onto h^tau
  QMat gram;       // m x m Gram matrix of the u-basis under the base form

  std::vector<QVec> restricted_simple; // sigma_O, one covector per orbit
  std::vector<RestrictedRoot> delta_tau;
  bool nonreduced = false; // base A_{2n} with r = 2 (Delta^tau of type BC_n)

  RootSystem g0;              // abstract root system of the fixed subalgebra
  std::vector<QVec> g0_simple; // simple roots of g0 as covectors, catalog order

  QVec theta_tau;     // covector closing the alcove: theta_tau(h) <= 1/r
  IMat affine_cartan; // (m+1)x(m+1); node 0 is the affine node (root -theta_tau)
  IVec comarks;       // (c_0, ..., c_m), primitive positive left null vector

  QMat inv_lattice;  // basis of (Q^vee)^tau in u-coordinates (the identity)
  QMat proj_lattice; // basis of pi(Q^vee) in u-coordinates

  int m() const { return static_cast<int>(orbits.size()); }
  int r() const { return tau.order; }
};

FoldedSystem fold(const RootSystem& rs, const DiagramAutomorphism& tau);

// Restriction of a base root to h^tau (values on the u-basis).
QVec restrict_root(const FoldedSystem& fs, const IVec& root);

// u-coordinates of pi(h) for h in coroot coordinates, and the embedding back.
QVec restrict_h(const FoldedSystem& fs, const QVec& h);
QVec unrestrict_h(const FoldedSystem& fs, const QVec& u);

// Form on (h^tau)^* (covectors) and on h^tau (u-coordinates).
Rational restricted_form(const FoldedSystem& fs, const QVec& a, const QVec& b);
Rational restricted_norm2(const FoldedSystem& fs, const QVec& a);
Rational htau_form(const FoldedSystem& fs, const QVec& x, const QVec& y);

// Coroot of a restricted root, as a vector in u-coordinates.
QVec restricted_coroot(const FoldedSystem& fs, const QVec& covector);

// Value of a covector at a point of h^tau (both in u-coordinates).
Rational covector_value(const QVec& covector, const QVec& point);

// Weight multiset of the e^{2 pi i k/r}-eigenspace g_k on h^tau:
// k = 0 gives the g0 roots plus m copies of zero; k >= 1 gives the weights of
// the irreducible g0-representation with highest weight theta_tau.
std::vector<std::pair<QVec, int>> gk_weights(const FoldedSystem& fs, int k);

const IMat& twisted_affine_cartan(const FoldedSystem& fs);
const IVec& comarks(const FoldedSystem& fs);

// Invariant factors of pi(Q^vee)/(Q^vee)^tau; trivial for r = 1.
AbelianGroup component_group(const FoldedSystem& fs);

// The canonical nontrivial diagram automorphism used by the CLI's "outer"
// selector (for D4: an order-2 one; "triality" selects an order-3 one).
DiagramAutomorphism outer_automorphism(const RootSystem& rs, bool triality = false);
DiagramAutomorphism identity_automorphism(const RootSystem& rs);

} // namespace tcc

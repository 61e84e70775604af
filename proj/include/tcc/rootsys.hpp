// Exact finite root system core: Cartan catalog, reflection-closure root
// generation, normalized invariant form (long roots of squared length 2),
// coroots, chamber reduction and irreducible-representation weight systems.
//
// Conventions (fixed once, documented here because the literature varies):
//  * Node numbering per family follows the Bourbaki plates.
//  * Cartan matrix A_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), so the
//    symmetrizer d_i = (alpha_i, alpha_i)/2 obeys d_i A_ij = d_j A_ji and
//    <beta, alpha_k^vee> = (A b)_k for a root beta with root-basis coords b.
//  * Roots: integer vectors in the simple-root basis.  Cartan-subalgebra
//    vectors: rational vectors in the simple-coroot basis; the form there is
//    B_ij = A_ij / d_j.  Weights: rational vectors in the simple-root basis.

#pragma once

#include "tcc/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tcc {

struct SimpleType {
  char family = 'A'; // one of A,B,C,D,E,F,G after canonicalization
  int rank = 0;

  // Canonicalizes low-rank coincidences (C2->B2, D3->A3, B1/C1->A1) and
  // validates rank bounds; throws std::invalid_argument on invalid input.
  SimpleType(char family, int rank);
  SimpleType() = default;

  bool operator==(const SimpleType&) const = default;
  bool operator<(const SimpleType& o) const
  {
    return family != o.family ? family < o.family : rank < o.rank;
  }
  std::string str() const { return std::string(1, family) + std::to_string(rank); }
};

struct RootSystem {
  SimpleType type;
  IMat cartan;       // A, l x l
  QVec symmetrizer;  // d_i = (alpha_i, alpha_i)/2, long roots normalized to d = 1
  std::vector<IVec> positive_roots;
  IVec theta;        // highest root
  QMat form;         // B_ij = (alpha_i^vee, alpha_j^vee) on h, coroot basis

  int rank() const { return static_cast<int>(cartan.rows()); }
  int num_roots() const { return 2 * static_cast<int>(positive_roots.size()); }
  std::vector<IVec> all_roots() const; // positives then matching negatives
};

RootSystem build_root_system(SimpleType type);

// Catalog access (also used to recognize folded/stabilizer diagrams).
IMat cartan_matrix(SimpleType type);
QVec cartan_symmetrizer(SimpleType type);

// Squared length of a root/weight under the normalized form on h*.
Rational weight_norm2(const RootSystem& rs, const QVec& weight);
Rational weight_form(const RootSystem& rs, const QVec& a, const QVec& b);

// Form on h in coroot coordinates.
Rational form_data(const RootSystem& rs, const QVec& v, const QVec& w);

// Coroot alpha^vee = 2 nu^{-1}(alpha)/(alpha, alpha), coroot-basis coords
// (always integers); throws on the zero vector.
QVec coroot(const RootSystem& rs, const IVec& root);

// <weight, alpha_k^vee> for all k, i.e. the vector A * b (rational for
// general weights, integral iff the weight is integral).
QVec coroot_pairings(const RootSystem& rs, const QVec& weight);

// Value of a weight on an h-vector given in coroot coordinates.
Rational weight_value(const RootSystem& rs, const QVec& weight, const QVec& h);

// Weight SET of the irreducible representation with dominant integral
// highest weight lambda (simple-root-basis coordinates), via dominance-layer
// string subtraction; throws on non-dominant or non-integral input.
std::vector<QVec> weight_system(const RootSystem& rs, const QVec& lambda);

// Dimension of that irreducible representation (Weyl dimension formula).
Int weyl_dim(const RootSystem& rs, const QVec& lambda);

// Reduce an h-vector into the closed dominant chamber; returns the reduced
// vector and the simple reflection word in application order.
std::pair<QVec, std::vector<int>> chamber_reduce(const RootSystem& rs, QVec v);

// Simple reflection s_j acting on h (coroot coordinates).
QVec simple_reflect_h(const RootSystem& rs, int j, const QVec& v);

// Recognition of an integer generalized Cartan matrix of finite type: returns
// the canonical SimpleType and a node map perm with C(perm[i], perm[j]) equal
// to the catalog matrix entry (i, j); nullopt if no finite type matches.
std::optional<std::pair<SimpleType, std::vector<int>>> recognize_cartan(const IMat& C);

// Connected components of the node graph of a (generalized) Cartan matrix.
std::vector<std::vector<int>> cartan_components(const IMat& C);

} // namespace tcc

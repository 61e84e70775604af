// Stabilizers of (twisted) conjugacy classes from alcove face data: the kept
// sub-diagram of the affine Dynkin diagram, component-type recognition, the
// fundamental group pi1 = ker(exp)^tau / Q_H^vee via Smith normal form, the
// central quotient appearing in display labels, and the labels themselves.

#pragma once

#include "tcc/alcove.hpp"

#include <string>
#include <vector>

namespace tcc {

struct SubDiagram {
  std::vector<int> kept; // affine node tags (sorted); equals the tight walls
  IMat matrix;           // induced submatrix of the twisted affine Cartan matrix
};

struct StabilizerDescriptor {
  std::vector<int> kept;
  std::vector<SimpleType> components; // sorted canonical types
  int torus_rank = 0;
  int pi1_free_rank = 0;
  std::vector<Int> pi1_torsion;      // invariant factors > 1
  std::vector<Int> central_quotient; // invariant factors of F in "(...)/F"
  std::string label;
};

// Kept nodes of H's face (complement of the non-tight walls); throws
// std::invalid_argument if H.coords is outside the closed alcove.
SubDiagram stabilizer_diagram(const FoldedSystem& fs, const AlcovePoint& H);

// Connected components of the kept diagram matched against the Cartan
// catalog; throws std::logic_error if a component is not of finite type.
std::vector<SimpleType> recognize_components(const SubDiagram& sub);

struct Pi1Result {
  int free_rank = 0;
  std::vector<Int> torsion;
  std::vector<Int> central_quotient;
};

// pi1(Stab) = ker(exp)^tau / Q_H^vee where Q_H^vee is the lattice generated
// by the coroots of the kept node roots; the central quotient F additionally
// divides out the integral part of the form-orthogonal complement of Q_H^vee.
Pi1Result pi1_and_quotient(const FoldedSystem& fs, const AlcovePoint& H);

// dim Stab = dim h^tau + #{(lambda, k) : lambda nonzero gk-weight with
// multiplicity, lambda(H) + k/r integral}.
int stabilizer_dimension(const FoldedSystem& fs, const AlcovePoint& H);

StabilizerDescriptor describe_stabilizer(const FoldedSystem& fs, const AlcovePoint& H);

// Display label "(Cover_1 x ... x U1^d)/F" with simply connected cover names;
// rank-2 B/C prints as the paper's "Sp₄".
std::string label(const StabilizerDescriptor& desc);

} // namespace tcc

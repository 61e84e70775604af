// The fundamental domain a_tau of W^tau x pi(ker exp) acting on h^tau:
// wall inequalities, face classification, the (simplex) face lattice,
// reduction of arbitrary points into the domain, and the SU(n)
// diagonal-matrix chart.
//
// Points of h^tau are rational vectors in the u-basis (orbit sums of simple
// coroots).  Wall tags match the twisted affine Cartan matrix node indices:
// tag 0 is the affine wall theta_tau(h) <= 1/ord(tau), tag i >= 1 the finite
// wall sigma_i(h) >= 0.

#pragma once

#include "tcc/folding.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tcc {

struct Wall {
  QVec covector;   // values on the u-basis
  Rational bound;  // 0 for finite walls, 1/r for the affine wall
  int tag = 0;     // affine Cartan node index
  bool upper = false; // true: covector(x) <= bound; false: covector(x) >= bound

  // Nonnegative exactly on the closed alcove side of the wall.
  Rational slack(const QVec& x) const
  {
    Rational v = covector.dot(x);
    return upper ? bound - v : v - bound;
  }
};

struct Alcove {
  std::vector<Wall> walls; // indexed by tag: walls[0] affine, walls[i] finite
  int dim = 0;
};

struct AlcovePoint {
  QVec coords;
  std::vector<int> tight; // tags of walls met with equality, sorted
};

Alcove build_alcove(const FoldedSystem& fs);

// Classify a point: its tight wall set, or nullopt if outside the closed alcove.
std::optional<AlcovePoint> face_of(const Alcove& alc, const QVec& p);

// The alcove is a simplex; faces correspond exactly to the proper subsets of
// walls.  dim = alcove dim - |tight|.
struct Face {
  std::vector<int> tight;     // wall tags held with equality on the face
  std::vector<QVec> vertices; // vertices of the closed face
  int dim = 0;
};

struct FaceLattice {
  std::vector<QVec> vertices; // all alcove vertices
  std::vector<Face> faces;    // all faces, sorted by (dim, tight set)
};

FaceLattice vertices_and_faces(const Alcove& alc);

// A point in the relative interior of a face (the vertex barycenter).
QVec face_interior_point(const Face& f);

// One reduction step; applying the steps in order maps the input to the output.
struct ReductionStep {
  enum Kind { simple_reflection, theta_reflection, translation } kind;
  int node = -1; // finite node for simple_reflection
  QVec shift;    // translation vector (u-coordinates), in pi(Q^vee)
};

QVec apply_step(const FoldedSystem& fs, const ReductionStep& s, const QVec& x);

// Reduce h (u-coordinates) into the closed alcove; idempotent, orbit-constant.
std::pair<AlcovePoint, std::vector<ReductionStep>>
reduce_to_alcove(const FoldedSystem& fs, QVec h);

// SU(n+1) diagonal chart for base type A_n: u-coordinates -> the n+1 entries
// (x_1, ..., x_{n+1}) of the diagonal matrix exponent, summing to zero, and
// satisfying x_i = -x_{n+2-i} in the twisted case.  Throws for non-A bases.
QVec su_chart(const FoldedSystem& fs, const QVec& u);
QVec su_chart_inverse(const FoldedSystem& fs, const QVec& chart);

// Wall inequality expressed in chart coordinates (x_1, ..., x_{n+1}):
// returns coefficients c and bound b, normalized so that the coefficient
// vector is primitive integral, meaning c . x >= b (finite) or <= b (affine).
std::pair<QVec, Rational> chart_wall(const FoldedSystem& fs, const Wall& w);

} // namespace tcc

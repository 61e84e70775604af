// Floating-point verifier for the loop-group side of the correspondence on
// su(n): (twisted) loops as finite Fourier series, the coadjoint action
// (Y, a) -> (g Y g^{-1} - a g' g^{-1}, a), the monodromy ODE z' = -(1/a) Y z,
// the equivariance law z_Y = g z_X g(0)^{-1}, the symplectic two-form
// identity, and the numerical fixed-subalgebra oracle used by the stabilizer
// module.
//
// Conventions: form <A, B> = -Re tr(AB) (long roots norm^2 2); twist
// involution tau(g) = J conj(g) J^{-1} with J = antidiag(1, ..., 1) for odd n
// and antidiag(1, ..., 1, -1, ..., -1) for even n; exp on the diagonal chart
// is H -> e^{2 pi i H}.

#pragma once

#include "tcc/rational.hpp"

#include <Eigen/Dense>

#include <map>
#include <vector>

namespace tcc {

using CMat = Eigen::MatrixXcd;

// J_n defining the outer involution.
CMat twist_matrix(int n);

// Algebra and group automorphisms tau, plus the complex-linear extension
// used on Fourier modes.
CMat tau_group(const CMat& g);
CMat tau_algebra(const CMat& x);
CMat tau_complex_linear(const CMat& m); // -J M^T J^{-1}

// Invariant form and commutator.
double form(const CMat& a, const CMat& b); // -Re tr(ab)
CMat bracket(const CMat& a, const CMat& b);

// Finite Fourier series A(theta) = sum_k A_k e^{i k theta / r}, period
// 2 pi r; twisted loops satisfy A(theta) = tau(A(theta + 2 pi)).
struct AlgebraLoop {
  int n = 0;
  int r = 1; // twist order, 1 or 2
  std::map<int, CMat> modes;

  CMat eval(double theta) const;
  CMat deriv(double theta) const;
};

// Group-valued loop represented as the pointwise exponential of an algebra
// loop; g' g^{-1} is evaluated through the convergent dexp series.
struct GroupLoop {
  AlgebraLoop log;

  int n() const { return log.n; }
  int r() const { return log.r; }
  CMat eval(double theta) const;
  CMat dlog(double theta) const; // g'(theta) g(theta)^{-1}
};

// Seeded random loops with geometric mode decay; anti-hermitian, traceless,
// and satisfying the twist boundary condition exactly (mode projection).
AlgebraLoop sample_algebra_loop(int n, int twist, unsigned seed, int degree);
GroupLoop sample_group_loop(int n, int twist, unsigned seed, int degree);

// Max over a sample grid of |A(theta) - tau(A(theta + 2 pi))| (and the
// group-valued counterpart); zero for untwisted loops up to periodicity.
double boundary_defect(const AlgebraLoop& loop, int samples = 64);
double boundary_defect(const GroupLoop& loop, int samples = 64);

// Pointwise coadjoint formula g Y g^{-1} - a g' g^{-1} at one angle.
CMat coadjoint_pointwise(const AlgebraLoop& y, double a, const GroupLoop& g,
                         double theta);

// Full transform, re-sampled to a finite Fourier series by DFT over the
// period and re-projected onto the twist/anti-hermitian constraints.
AlgebraLoop coadjoint_transform(const AlgebraLoop& y, double a, const GroupLoop& g,
                                int grid = 512);

struct MonodromyResult {
  std::vector<CMat> samples; // z on the uniform grid over [0, 2 pi]
  CMat endpoint;             // z(2 pi)
  int steps = 0;
  double unitarity_drift = 0;  // max |z z^dagger - 1| before re-projection
  double halving_error = 0;    // |endpoint - endpoint at steps/2|
};

// RK4 with per-step polar re-unitarization; steps >= 64, a != 0.
MonodromyResult solve_monodromy(const AlgebraLoop& y, double a, int steps);

// Max over the grid of |z_Y(theta) - g(theta) z_X(theta) g(0)^{-1}| with
// Y = coadjoint_transform(X, a, g).
double check_equivariance(const AlgebraLoop& x, double a, const GroupLoop& g,
                          int steps);

struct TwoFormResult {
  double lhs = 0;      // 2 pi a sigma(eta) term (antisymmetrized)
  double rhs = 0;      // 2 pi a varpi-term + omega
  double residual = 0; // |lhs - rhs|
  double scale = 0;    // max(|omega|, 1)
};

// The symplectic identity 2 pi a sigma(eta) - 2 pi a F*varpi = omega on the
// orbit of a constant X in the Cartan subalgebra; B1, B2 generate the tangent
// vectors.  Composite Simpson quadrature with quad_points intervals.
TwoFormResult two_form_residual(const CMat& x, double a, const AlgebraLoop& b1,
                                const AlgebraLoop& b2, int quad_points = 1024);

// i * diag(chart) as an algebra element.
CMat chart_to_algebra(const QVec& chart);

// dim ker(X -> Ad(e^{2 pi i H}) tau(X) - X) on the real algebra su(n);
// singular values below 1e-9 count as zero.  twist is 1 or 2.
int fixed_subalgebra_dim(int n, int twist, const QVec& chart);

} // namespace tcc

// Level-a integrality of (twisted) conjugacy classes: the exact coroot-pairing
// test, exact enumeration of the integral classes in the alcove via a lattice
// congruence system, affine weight labels, rho_tau with the dual Coxeter
// number, and the orbit shift (X, a) -> (X + rho_tau, a + h_tau_vee).

#pragma once

#include "tcc/alcove.hpp"

#include <utility>
#include <vector>

namespace tcc {

struct IntegralClass {
  AlcovePoint point;
  Int level;
  IVec labels; // (m_0, ..., m_l) on the affine diagram, sum c_i m_i = level
};

// One condition a * (mu(H) + offset) in Z per (nonzero gk-weight, k) pair,
// with mu already carrying the coroot normalization 2/(lambda, lambda).
struct CongruenceSystem {
  std::vector<std::pair<QVec, Rational>> conditions;
};

CongruenceSystem congruence_system(const FoldedSystem& fs);

// True iff every condition holds at level a; throws std::invalid_argument on
// a = 0 (the Theorem requires a nonzero integer level).
bool is_integral(const FoldedSystem& fs, const AlcovePoint& H, const Int& a);

// All alcove points passing is_integral at level a >= 1, sorted
// lexicographically by coordinates; throws on a <= 0.
std::vector<IntegralClass> enumerate_integral(const FoldedSystem& fs, const Int& a);

// Affine weight labels of an integral point: m_i = a * <sigma_i-normalized
// pairing> for finite nodes, m_0 from the comark relation.
IVec weight_labels(const FoldedSystem& fs, const AlcovePoint& H, const Int& a);

// rho_tau = pi(nu^{-1}(half-sum of positive base roots)) in u-coordinates,
// and the dual Coxeter number h_tau_vee = sum of comarks.
std::pair<QVec, Int> rho_and_dual_coxeter(const FoldedSystem& fs);

// ((a H + rho_tau)/(a + h_tau_vee) reduced to the alcove, a + h_tau_vee);
// throws on a = 0 or a + h_tau_vee = 0.
std::pair<AlcovePoint, Int> orbit_shift(const FoldedSystem& fs, const AlcovePoint& H,
                                        const Int& a);

} // namespace tcc

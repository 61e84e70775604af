// Exact linear algebra kernel: Smith normal form over arbitrary-precision
// integers, rational solves/kernels, and integer-lattice quotients.

#pragma once

#include "tcc/rational.hpp"

#include <optional>
#include <vector>

namespace tcc {

// U * M * V = diag(diag) padded with zeros; U, V unimodular.
struct SmithForm {
  IMat U, V;
  std::vector<Int> diag; // nonzero invariant factors d_1 | d_2 | ... | d_r, positive
  int rank = 0;
};

SmithForm smith_form(IMat M);

// Invariant-factor description of a finitely generated abelian group.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion; // invariant factors > 1, each dividing the next

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
};

// Z^m modulo the lattice spanned by the columns of gens (m x k, any k).
AbelianGroup lattice_quotient(const IMat& gens);

// Quotient L1 / L2 for lattices spanned by the columns of rational matrices
// in a common ambient space; throws unless L2 is contained in L1.
AbelianGroup lattice_quotient(const QMat& L1, const QMat& L2);

// Basis (columns) of the right kernel of a rational matrix; exact.
QMat rational_kernel(const QMat& M);

// Basis (columns) of the saturated lattice { x in Z^n : M x = 0 }.
IMat integer_kernel(const IMat& M);

// Exact solution of M x = b; nullopt if inconsistent.
std::optional<QVec> rational_solve(const QMat& M, const QVec& b);

int rational_rank(const QMat& M);

// True iff v lies in the lattice spanned by the columns of L.
bool in_lattice(const QMat& L, const QVec& v);

} // namespace tcc

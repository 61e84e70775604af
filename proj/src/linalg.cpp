#include "tcc/linalg.hpp"

#include <Eigen/LU>

#include <stdexcept>

namespace tcc {

namespace {

// Row/column elementary operations tracked in the unimodular factors.
void swap_rows(IMat& M, IMat& U, Eigen::Index a, Eigen::Index b)
{
  M.row(a).swap(M.row(b));
  U.row(a).swap(U.row(b));
}

void swap_cols(IMat& M, IMat& V, Eigen::Index a, Eigen::Index b)
{
  M.col(a).swap(M.col(b));
  V.col(a).swap(V.col(b));
}

void add_row(IMat& M, IMat& U, Eigen::Index dst, Eigen::Index src, const Int& c)
{
  M.row(dst) += c * M.row(src);
  U.row(dst) += c * U.row(src);
}

void add_col(IMat& M, IMat& V, Eigen::Index dst, Eigen::Index src, const Int& c)
{
  M.col(dst) += c * M.col(src);
  V.col(dst) += c * V.col(src);
}

} // namespace

SmithForm smith_form(IMat M)
{
  const Eigen::Index m = M.rows(), n = M.cols();
  SmithForm sf;
  sf.U = IMat::Identity(m, m);
  sf.V = IMat::Identity(n, n);

  Eigen::Index t = 0;
  while (t < m && t < n) {
    // Find a pivot of minimal absolute value in the trailing block.
    Eigen::Index pi = -1, pj = -1;
    Int best = 0;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j)
        if (M(i, j) != 0 && (pi < 0 || abs(M(i, j)) < best)) {
          best = abs(M(i, j));
          pi = i;
          pj = j;
        }
    if (pi < 0)
      break; // trailing block is zero
    swap_rows(M, sf.U, t, pi);
    swap_cols(M, sf.V, t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i)
        if (M(i, t) != 0) {
          add_row(M, sf.U, i, t, -(M(i, t) / M(t, t)));
          if (M(i, t) != 0) { // nonzero remainder: smaller pivot found
            swap_rows(M, sf.U, t, i);
            clean = false;
          }
        }
      for (Eigen::Index j = t + 1; j < n; ++j)
        if (M(t, j) != 0) {
          add_col(M, sf.V, j, t, -(M(t, j) / M(t, t)));
          if (M(t, j) != 0) {
            swap_cols(M, sf.V, t, j);
            clean = false;
          }
        }
      if (!clean)
        continue;
      // Enforce divisibility: pivot must divide every trailing entry.
      for (Eigen::Index i = t + 1; i < m && clean; ++i)
        for (Eigen::Index j = t + 1; j < n && clean; ++j)
          if (M(i, j) % M(t, t) != 0) {
            add_row(M, sf.U, t, i, 1);
            clean = false;
          }
    }
    ++t;
  }
  sf.rank = static_cast<int>(t);
  for (Eigen::Index i = 0; i < t; ++i) {
    if (M(i, i) < 0) {
      M.row(i) = -M.row(i);
      sf.U.row(i) = -sf.U.row(i);
    }
    sf.diag.push_back(M(i, i));
  }
  return sf;
}

AbelianGroup lattice_quotient(const IMat& gens)
{
  SmithForm sf = smith_form(gens);
  AbelianGroup g;
  g.free_rank = static_cast<int>(gens.rows()) - sf.rank;
  for (const Int& d : sf.diag)
    if (d > 1)
      g.torsion.push_back(d);
  return g;
}

AbelianGroup lattice_quotient(const QMat& L1, const QMat& L2)
{
  // Express every generator of L2 in coordinates of L1's columns.
  QMat X(L1.cols(), L2.cols());
  for (Eigen::Index j = 0; j < L2.cols(); ++j) {
    auto x = rational_solve(L1, L2.col(j));
    if (!x)
      throw std::invalid_argument("lattice_quotient: L2 not contained in span(L1)");
    X.col(j) = *x;
  }
  IMat Xi(X.rows(), X.cols());
  for (Eigen::Index j = 0; j < X.cols(); ++j)
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
      if (!is_integer(X(i, j)))
        throw std::invalid_argument("lattice_quotient: L2 not a sublattice of L1");
      Xi(i, j) = q_num(X(i, j));
    }
  return lattice_quotient(Xi);
}

QMat rational_kernel(const QMat& M)
{
  if (M.rows() == 0)
    return QMat::Identity(M.cols(), M.cols());
  Eigen::FullPivLU<QMat> lu(M);
  lu.setThreshold(Rational(0));
  return lu.kernel();
}

IMat integer_kernel(const IMat& M)
{
  SmithForm sf = smith_form(M);
  // M V e_j = 0 exactly for the columns beyond the rank; the resulting
  // lattice V[:, rank:] is saturated because V is unimodular.
  const Eigen::Index n = M.cols();
  IMat K(n, n - sf.rank);
  for (Eigen::Index j = sf.rank; j < n; ++j)
    K.col(j - sf.rank) = sf.V.col(j);
  return K;
}

std::optional<QVec> rational_solve(const QMat& M, const QVec& b)
{
  Eigen::FullPivLU<QMat> lu(M);
  lu.setThreshold(Rational(0));
  QVec x = lu.solve(b);
  if ((M * x - b).isZero(Rational(0)))
    return x;
  return std::nullopt;
}

int rational_rank(const QMat& M)
{
  if (M.rows() == 0 || M.cols() == 0)
    return 0;
  Eigen::FullPivLU<QMat> lu(M);
  lu.setThreshold(Rational(0));
  return static_cast<int>(lu.rank());
}

bool in_lattice(const QMat& L, const QVec& v)
{
  auto x = rational_solve(L, v);
  if (!x)
    return false;
  for (Eigen::Index i = 0; i < x->size(); ++i)
    if (!is_integer((*x)(i)))
      return false;
  return true;
}

} // namespace tcc

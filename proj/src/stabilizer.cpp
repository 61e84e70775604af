#include "tcc/stabilizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcc {

namespace {

// Root covector attached to an affine node (the sign of the affine node's
// root -theta_tau does not matter for any lattice or pairing computed here).
QVec node_root(const FoldedSystem& fs, int tag)
{
  return tag == 0 ? fs.theta_tau : fs.restricted_simple[tag - 1];
}

std::string subscript(Int n)
{
  static const char* digits[10] = {"₀", "₁", "₂", "₃",
                                   "₄", "₅", "₆", "₇",
                                   "₈", "₉"};
  std::string dec = n.str(), out;
  for (char c : dec)
    out += digits[c - '0'];
  return out;
}

std::string cover_name(const SimpleType& t)
{
  switch (t.family) {
  case 'A':
    return "SU" + subscript(t.rank + 1);
  case 'B':
    if (t.rank == 2)
      return "Sp₄"; // paper's preferred name for the B2 = C2 coincidence
    return "Spin" + subscript(2 * t.rank + 1);
  case 'C':
    return "Sp" + subscript(2 * t.rank);
  case 'D':
    return "Spin" + subscript(2 * t.rank);
  default:
    return std::string(1, t.family) + subscript(t.rank);
  }
}

// Coroots of the kept node roots, as columns.
QMat kept_coroots(const FoldedSystem& fs, const std::vector<int>& kept)
{
  QMat C(fs.m(), static_cast<Eigen::Index>(kept.size()));
  for (size_t j = 0; j < kept.size(); ++j)
    C.col(static_cast<Eigen::Index>(j)) =
        restricted_coroot(fs, node_root(fs, kept[j]));
  return C;
}

} // namespace

SubDiagram stabilizer_diagram(const FoldedSystem& fs, const AlcovePoint& H)
{
  auto checked = face_of(build_alcove(fs), H.coords);
  if (!checked)
    throw std::invalid_argument("stabilizer_diagram: point outside the closed alcove");
  SubDiagram sub;
  sub.kept = checked->tight;
  const auto n = static_cast<Eigen::Index>(sub.kept.size());
  sub.matrix.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      sub.matrix(i, j) = fs.affine_cartan(sub.kept[i], sub.kept[j]);
  return sub;
}

std::vector<SimpleType> recognize_components(const SubDiagram& sub)
{
  std::vector<SimpleType> out;
  for (const auto& comp : cartan_components(sub.matrix)) {
    const auto n = static_cast<Eigen::Index>(comp.size());
    IMat block(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        block(i, j) = sub.matrix(comp[i], comp[j]);
    auto rec = recognize_cartan(block);
    if (!rec)
      throw std::logic_error("stabilizer sub-diagram component is not of finite type");
    out.push_back(rec->first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pi1Result pi1_and_quotient(const FoldedSystem& fs, const AlcovePoint& H)
{
  SubDiagram sub = stabilizer_diagram(fs, H);
  const int m = fs.m();
  Pi1Result res;
  if (sub.kept.empty()) {
    res.free_rank = m;
    return res;
  }
  QMat identity = QMat::Identity(m, m);
  QMat C = kept_coroots(fs, sub.kept);

  AbelianGroup pi1 = lattice_quotient(identity, C);
  res.free_rank = pi1.free_rank;
  res.torsion = pi1.torsion;

  // Form-orthogonal complement of span(Q_H^vee), saturated integral part.
  QMat ortho = C.transpose() * fs.gram; // rows cut out Q_H^perp
  Int scale = denominator_lcm(ortho);
  IMat iortho(ortho.rows(), ortho.cols());
  for (Eigen::Index i = 0; i < ortho.rows(); ++i)
    for (Eigen::Index j = 0; j < ortho.cols(); ++j)
      iortho(i, j) = q_num(ortho(i, j) * Rational(scale));
  IMat kernel = integer_kernel(iortho);

  QMat combined(m, C.cols() + kernel.cols());
  combined.leftCols(C.cols()) = C;
  for (Eigen::Index j = 0; j < kernel.cols(); ++j)
    for (Eigen::Index i = 0; i < m; ++i)
      combined(i, C.cols() + j) = Rational(kernel(i, j));

  AbelianGroup f = lattice_quotient(identity, combined);
  if (f.free_rank != 0)
    throw std::logic_error("central quotient lattice is not of full rank");
  res.central_quotient = f.torsion;
  return res;
}

int stabilizer_dimension(const FoldedSystem& fs, const AlcovePoint& H)
{
  int dim = fs.m();
  for (int k = 0; k < fs.r(); ++k)
    for (const auto& [lambda, mult] : gk_weights(fs, k)) {
      bool zero = true;
      for (Eigen::Index i = 0; i < lambda.size() && zero; ++i)
        zero = lambda(i) == 0;
      if (zero)
        continue;
      if (is_integer(covector_value(lambda, H.coords) + Rational(k, fs.r())))
        dim += mult;
    }
  return dim;
}

StabilizerDescriptor describe_stabilizer(const FoldedSystem& fs, const AlcovePoint& H)
{
  SubDiagram sub = stabilizer_diagram(fs, H);
  Pi1Result pi1 = pi1_and_quotient(fs, H);
  StabilizerDescriptor desc;
  desc.kept = sub.kept;
  desc.components = recognize_components(sub);
  desc.torus_rank = fs.m() - static_cast<int>(sub.kept.size());
  desc.pi1_free_rank = pi1.free_rank;
  desc.pi1_torsion = pi1.torsion;
  desc.central_quotient = pi1.central_quotient;
  desc.label = label(desc);
  return desc;
}

std::string label(const StabilizerDescriptor& desc)
{
  std::vector<std::string> parts;
  for (const SimpleType& t : desc.components)
    parts.push_back(cover_name(t));
  for (int i = 0; i < desc.torus_rank; ++i)
    parts.push_back("U₁");
  std::string product;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0)
      product += "×";
    product += parts[i];
  }
  if (desc.central_quotient.empty())
    return product;
  std::string f;
  for (size_t i = 0; i < desc.central_quotient.size(); ++i) {
    if (i > 0)
      f += "×";
    f += "ℤ" + subscript(desc.central_quotient[i]);
  }
  if (desc.central_quotient.size() > 1)
    f = "(" + f + ")";
  if (parts.size() > 1)
    product = "(" + product + ")";
  return product + "/" + f;
}

} // namespace tcc

#include "tcc/integral.hpp"

#include "tcc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcc {

CongruenceSystem congruence_system(const FoldedSystem& fs)
{
  CongruenceSystem sys;
  for (int k = 0; k < fs.r(); ++k)
    for (const auto& [lambda, mult] : gk_weights(fs, k)) {
      (void)mult;
      bool zero = true;
      for (Eigen::Index i = 0; i < lambda.size() && zero; ++i)
        zero = lambda(i) == 0;
      if (zero)
        continue;
      Rational norm = Rational(2) / restricted_norm2(fs, lambda);
      sys.conditions.emplace_back(norm * lambda, norm * Rational(k, fs.r()));
    }
  return sys;
}

bool is_integral(const FoldedSystem& fs, const AlcovePoint& H, const Int& a)
{
  if (a == 0)
    throw std::invalid_argument(
        "is_integral: the level must be a nonzero integer (a in Z \\ {0})");
  for (const auto& [mu, offset] : congruence_system(fs).conditions)
    if (!is_integer(Rational(a) * (covector_value(mu, H.coords) + offset)))
      return false;
  return true;
}

namespace {

// Enumerate integer vectors n in the per-coordinate ranges and collect the
// alcove points x0 + B n passing the exact wall test.
void scan_box(const Alcove& alc, const QMat& B, const QVec& x0,
              const std::vector<std::pair<Int, Int>>& ranges, int coord, IVec& n,
              std::vector<AlcovePoint>& out)
{
  if (coord == static_cast<int>(ranges.size())) {
    QVec h = x0;
    for (Eigen::Index j = 0; j < B.cols(); ++j)
      h += Rational(n(j)) * B.col(j);
    if (auto pt = face_of(alc, h))
      out.push_back(*pt);
    return;
  }
  for (Int v = ranges[coord].first; v <= ranges[coord].second; ++v) {
    n(coord) = v;
    scan_box(alc, B, x0, ranges, coord + 1, n, out);
  }
}

} // namespace

std::vector<IntegralClass> enumerate_integral(const FoldedSystem& fs, const Int& a)
{
  if (a <= 0)
    throw std::invalid_argument("enumerate_integral: the level must be a positive "
                                "integer (negative levels are sign-symmetric)");
  const int m = fs.m();
  CongruenceSystem sys = congruence_system(fs);
  const auto N = static_cast<Eigen::Index>(sys.conditions.size());

  // Conditions: a * (mu_i . H + o_i) in Z.  Clear denominators with a common
  // scale d: W H + c in (d/a') Z ... handled as integers below.
  QMat W(N, m);
  QVec t(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    W.row(i) = (Rational(a) * sys.conditions[i].first).transpose();
    t(i) = Rational(a) * sys.conditions[i].second;
  }
  Int d = denominator_lcm(W);
  for (Eigen::Index i = 0; i < N; ++i)
    d = boost::multiprecision::lcm(d, q_den(t(i)));
  IMat Wi(N, m);
  IVec c(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    for (Eigen::Index j = 0; j < m; ++j)
      Wi(i, j) = q_num(W(i, j) * Rational(d));
    c(i) = q_num(t(i) * Rational(d));
  }

  // W H + t in Z^N  <=>  Wi H = -c (mod d).  With U Wi V = S in Smith form
  // and y = V^{-1} H: s_j y_j = (-U c)_j (mod d).
  SmithForm sf = smith_form(Wi);
  if (sf.rank < m)
    throw std::logic_error("integrality congruence system is not of full rank");
  IVec b = -(sf.U * c);
  for (Eigen::Index j = sf.rank; j < N; ++j)
    if (b(j) % d != 0)
      return {}; // inconsistent: no integral classes at this level

  QVec y0(m);
  QMat B(m, m); // lattice basis in y-coordinates times V
  for (int j = 0; j < m; ++j)
    y0(j) = Rational(b(j), sf.diag[j]);
  QVec x0(m);
  for (int i = 0; i < m; ++i) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j)
      acc += Rational(sf.V(i, j)) * y0(j);
    x0(i) = acc;
    for (int j = 0; j < m; ++j)
      B(i, j) = Rational(sf.V(i, j)) * Rational(d, sf.diag[j]);
  }

  // Bounding box: lattice coordinates of the alcove vertices.
  Alcove alc = build_alcove(fs);
  FaceLattice fl = vertices_and_faces(alc);
  std::vector<std::pair<Int, Int>> ranges(m);
  bool first = true;
  for (const QVec& v : fl.vertices) {
    auto nv = rational_solve(B, v - x0);
    if (!nv)
      throw std::logic_error("integral lattice basis is singular");
    for (int j = 0; j < m; ++j) {
      // Vertices need not be lattice points; widen to the enclosing integers.
      Int lo = floor_q((*nv)(j)), hi = ceil_q((*nv)(j));
      if (first) {
        ranges[j] = {lo, hi};
      } else {
        ranges[j].first = std::min(ranges[j].first, lo);
        ranges[j].second = std::max(ranges[j].second, hi);
      }
    }
    first = false;
  }

  std::vector<AlcovePoint> pts;
  IVec n(m);
  scan_box(alc, B, x0, ranges, 0, n, pts);

  std::sort(pts.begin(), pts.end(), [](const AlcovePoint& p, const AlcovePoint& q) {
    for (Eigen::Index i = 0; i < p.coords.size(); ++i)
      if (p.coords(i) != q.coords(i))
        return p.coords(i) < q.coords(i);
    return false;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const AlcovePoint& p, const AlcovePoint& q) {
                          return p.coords == q.coords;
                        }),
            pts.end());

  std::vector<IntegralClass> out;
  for (const AlcovePoint& p : pts) {
    IntegralClass cls;
    cls.point = p;
    cls.level = a;
    cls.labels = weight_labels(fs, p, a);
    out.push_back(std::move(cls));
  }
  return out;
}

IVec weight_labels(const FoldedSystem& fs, const AlcovePoint& H, const Int& a)
{
  if (!is_integral(fs, H, a))
    throw std::invalid_argument("weight_labels: point is not integral at this level");
  const int m = fs.m();
  const IVec& cm = comarks(fs);
  IVec labels(m + 1);
  Int weighted = 0;
  for (int i = 1; i <= m; ++i) {
    const QVec& sigma = fs.restricted_simple[i - 1];
    Rational mi = Rational(a) * Rational(2) / restricted_norm2(fs, sigma)
                  * covector_value(sigma, H.coords);
    if (!is_integer(mi) || mi < 0)
      throw std::logic_error("weight label is not a nonnegative integer");
    labels(i) = q_num(mi);
    weighted += cm(i) * labels(i);
  }
  Int rem = a - weighted;
  if (rem % cm(0) != 0 || rem < 0)
    throw std::logic_error("affine weight label fails the comark relation");
  labels(0) = rem / cm(0);
  return labels;
}

std::pair<QVec, Int> rho_and_dual_coxeter(const FoldedSystem& fs)
{
  const RootSystem& rs = fs.base;
  QVec rho = QVec::Zero(rs.rank());
  for (const IVec& r : rs.positive_roots)
    for (int i = 0; i < rs.rank(); ++i)
      rho(i) += Rational(r(i), 2);
  // nu^{-1}(alpha_i) = d_i alpha_i^vee: coroot coordinates d_i * rho_i.
  QVec nu_rho(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    nu_rho(i) = rho(i) * rs.symmetrizer(i);
  QVec rho_tau = restrict_h(fs, nu_rho);
  Int h = 0;
  for (Eigen::Index i = 0; i < comarks(fs).size(); ++i)
    h += comarks(fs)(i);
  return {rho_tau, h};
}

std::pair<AlcovePoint, Int> orbit_shift(const FoldedSystem& fs, const AlcovePoint& H,
                                        const Int& a)
{
  if (a == 0)
    throw std::invalid_argument("orbit_shift: the level must be nonzero");
  auto [rho_tau, h] = rho_and_dual_coxeter(fs);
  Int shifted_level = a + h;
  if (shifted_level == 0)
    throw std::invalid_argument("orbit_shift: shifted level a + h_tau_vee is zero");
  QVec shifted = (Rational(a) * H.coords + rho_tau) / Rational(shifted_level);
  return {reduce_to_alcove(fs, shifted).first, shifted_level};
}

} // namespace tcc

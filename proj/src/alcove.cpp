#include "tcc/alcove.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcc {

namespace {

QVec primitive(QVec v)
{
  Int l = 1, g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    l = boost::multiprecision::lcm(l, q_den(v(i)));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    g = boost::multiprecision::gcd(g, q_num(v(i) * Rational(l)));
  if (g == 0)
    return v;
  return v * Rational(l, g);
}

} // namespace

Alcove build_alcove(const FoldedSystem& fs)
{
  Alcove alc;
  alc.dim = fs.m();
  Wall affine;
  affine.covector = fs.theta_tau;
  affine.bound = Rational(1, fs.r());
  affine.tag = 0;
  affine.upper = true;
  alc.walls.push_back(affine);
  for (int i = 0; i < fs.m(); ++i) {
    Wall w;
    w.covector = primitive(fs.restricted_simple[i]);
    w.bound = 0;
    w.tag = i + 1;
    w.upper = false;
    alc.walls.push_back(w);
  }
  return alc;
}

std::optional<AlcovePoint> face_of(const Alcove& alc, const QVec& p)
{
  AlcovePoint pt;
  pt.coords = p;
  for (const Wall& w : alc.walls) {
    Rational s = w.slack(p);
    if (s < 0)
      return std::nullopt;
    if (s == 0)
      pt.tight.push_back(w.tag);
  }
  std::sort(pt.tight.begin(), pt.tight.end());
  return pt;
}

FaceLattice vertices_and_faces(const Alcove& alc)
{
  const int m = alc.dim;
  FaceLattice fl;

  // The alcove is a simplex: each vertex omits exactly one wall.
  std::vector<QVec> vertex_of_omitted(m + 1);
  for (int omit = 0; omit <= m; ++omit) {
    QMat A(m, m);
    QVec b(m);
    int row = 0;
    for (const Wall& w : alc.walls) {
      if (w.tag == omit)
        continue;
      A.row(row) = w.covector.transpose();
      b(row) = w.bound;
      ++row;
    }
    auto x = rational_solve(A, b);
    if (!x)
      throw std::logic_error("alcove wall system is degenerate");
    vertex_of_omitted[omit] = *x;
    fl.vertices.push_back(*x);
  }
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (fl.vertices[i] == fl.vertices[j])
        throw std::logic_error("alcove vertices are not distinct");

  // Faces = proper subsets of walls; the face of tight set S is spanned by
  // the vertices omitting walls outside S.
  for (unsigned mask = 0; mask < (1u << (m + 1)); ++mask) {
    std::vector<int> tight;
    for (int t = 0; t <= m; ++t)
      if (mask & (1u << t))
        tight.push_back(t);
    if (static_cast<int>(tight.size()) > m)
      continue; // the full intersection is empty for a simplex
    Face f;
    f.tight = tight;
    f.dim = m - static_cast<int>(tight.size());
    for (int omit = 0; omit <= m; ++omit)
      if (!(mask & (1u << omit)))
        f.vertices.push_back(vertex_of_omitted[omit]);
    fl.faces.push_back(std::move(f));
  }
  std::sort(fl.faces.begin(), fl.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim)
      return a.dim < b.dim;
    return a.tight < b.tight;
  });
  return fl;
}

QVec face_interior_point(const Face& f)
{
  QVec p = QVec::Zero(f.vertices.front().size());
  for (const QVec& v : f.vertices)
    p += v;
  return p / Rational(static_cast<int>(f.vertices.size()));
}

QVec apply_step(const FoldedSystem& fs, const ReductionStep& s, const QVec& x)
{
  switch (s.kind) {
  case ReductionStep::simple_reflection: {
    const QVec& sig = fs.restricted_simple[s.node - 1];
    return x - covector_value(sig, x) * restricted_coroot(fs, sig);
  }
  case ReductionStep::theta_reflection:
    return x - covector_value(fs.theta_tau, x) * restricted_coroot(fs, fs.theta_tau);
  case ReductionStep::translation:
    return x + s.shift;
  }
  throw std::logic_error("unknown reduction step");
}

std::pair<AlcovePoint, std::vector<ReductionStep>>
reduce_to_alcove(const FoldedSystem& fs, QVec h)
{
  Alcove alc = build_alcove(fs);
  const int m = fs.m();
  QVec theta_cv = restricted_coroot(fs, fs.theta_tau);
  std::vector<ReductionStep> steps;
  int guard = 10000;
  while (true) {
    if (--guard < 0)
      throw std::logic_error("reduce_to_alcove exceeded the step guard");
    bool moved = false;
    for (int i = 0; i < m; ++i) {
      const QVec& sig = fs.restricted_simple[i];
      if (covector_value(sig, h) < 0) {
        ReductionStep s{ReductionStep::simple_reflection, i + 1, QVec()};
        h = apply_step(fs, s, h);
        steps.push_back(std::move(s));
        moved = true;
      }
    }
    if (moved)
      continue;
    if (covector_value(fs.theta_tau, h) > Rational(1, fs.r())) {
      // Affine reflection across theta_tau(x) = 1/r, recorded as its linear
      // reflection followed by the lattice translation theta_tau^vee / r.
      ReductionStep refl{ReductionStep::theta_reflection, -1, QVec()};
      h = apply_step(fs, refl, h);
      steps.push_back(std::move(refl));
      ReductionStep tr{ReductionStep::translation, -1, theta_cv / Rational(fs.r())};
      h = apply_step(fs, tr, h);
      steps.push_back(std::move(tr));
      continue;
    }
    break;
  }
  auto pt = face_of(alc, h);
  if (!pt)
    throw std::logic_error("reduction terminated outside the alcove");
  return {*pt, steps};
}

QVec su_chart(const FoldedSystem& fs, const QVec& u)
{
  if (fs.base.type.family != 'A')
    throw std::invalid_argument("su_chart requires base type A");
  const int n = fs.base.rank();
  QVec x = unrestrict_h(fs, u);
  QVec chart(n + 1);
  for (int i = 0; i <= n; ++i) {
    Rational prev = i > 0 ? x(i - 1) : Rational(0);
    Rational cur = i < n ? x(i) : Rational(0);
    chart(i) = cur - prev;
  }
  return chart;
}

QVec su_chart_inverse(const FoldedSystem& fs, const QVec& chart)
{
  if (fs.base.type.family != 'A')
    throw std::invalid_argument("su_chart requires base type A");
  const int n = fs.base.rank();
  if (chart.size() != n + 1)
    throw std::invalid_argument("su_chart_inverse: wrong chart dimension");
  Rational sum = 0;
  for (int i = 0; i <= n; ++i)
    sum += chart(i);
  if (sum != 0)
    throw std::invalid_argument("su_chart_inverse: chart entries must sum to zero");
  QVec x(n);
  Rational acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += chart(i);
    x(i) = acc;
  }
  // The point must lie in h^tau: coordinates constant on tau-orbits.
  for (const auto& orbit : fs.orbits)
    for (int k : orbit)
      if (x(k) != x(orbit[0]))
        throw std::invalid_argument("su_chart_inverse: point not tau-invariant");
  return restrict_h(fs, x);
}

std::pair<QVec, Rational> chart_wall(const FoldedSystem& fs, const Wall& w)
{
  if (fs.base.type.family != 'A')
    throw std::invalid_argument("chart_wall requires base type A");
  const int n = fs.base.rank();

  // Pull the wall functional back through the chart: chart basis vector e_j
  // maps to the coroot-coordinate point v with v_i = [i >= j] (cumulative
  // sums), then into u-coordinates.
  QVec c(n + 1);
  for (int j = 0; j <= n; ++j) {
    QVec v = QVec::Zero(n);
    for (int i = j; i < n; ++i)
      v(i) = 1;
    c(j) = covector_value(w.covector, restrict_h(fs, v));
  }

  // Canonical representative modulo the chart relations: untwisted, shift so
  // the coefficients sum to zero; twisted, fold onto the free coordinates
  // x_1..x_m using x_j = -x_{n+2-j} (and x_{(n+2)/2} = 0 when n is even).
  if (fs.r() == 1) {
    Rational mean = c.sum() / Rational(n + 1);
    for (int j = 0; j <= n; ++j)
      c(j) -= mean;
  } else {
    QVec folded = QVec::Zero(n + 1);
    for (int j = 0; j < (n + 1) / 2; ++j)
      folded(j) = c(j) - c(n - j);
    c = folded;
  }

  // Positive primitive scaling, preserving the inequality direction.
  Int l = 1, g = 0;
  for (int j = 0; j <= n; ++j)
    l = boost::multiprecision::lcm(l, q_den(c(j)));
  for (int j = 0; j <= n; ++j)
    g = boost::multiprecision::gcd(g, q_num(c(j) * Rational(l)));
  Rational scale = g == 0 ? Rational(1) : Rational(l, g);
  return {c * scale, w.bound * scale};
}

} // namespace tcc

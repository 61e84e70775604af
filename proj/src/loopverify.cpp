#include "tcc/loopverify.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace tcc {

namespace {

constexpr double kPi = 3.14159265358979323846;
const std::complex<double> kI(0.0, 1.0);

// exp of an anti-hermitian matrix via the spectral decomposition of -iX.
CMat exp_antihermitian(const CMat& x)
{
  Eigen::SelfAdjointEigenSolver<CMat> es(-kI * x);
  Eigen::VectorXcd phases = (kI * es.eigenvalues().array()).exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Nearest unitary (polar factor) via SVD.
CMat unitarize(const CMat& z)
{
  Eigen::JacobiSVD<CMat> svd(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

void require_twist(int r)
{
  if (r != 1 && r != 2)
    throw std::invalid_argument("twist order must be 1 or 2");
}

} // namespace

CMat twist_matrix(int n)
{
  if (n < 2)
    throw std::invalid_argument("twist_matrix: n >= 2 required");
  CMat j = CMat::Zero(n, n);
  for (int k = 0; k < n; ++k)
    j(k, n - 1 - k) = (n % 2 == 0 && k >= n / 2) ? -1.0 : 1.0;
  return j;
}

CMat tau_group(const CMat& g)
{
  CMat j = twist_matrix(static_cast<int>(g.rows()));
  return j * g.conjugate() * j.inverse();
}

CMat tau_algebra(const CMat& x) { return tau_group(x); }

CMat tau_complex_linear(const CMat& m)
{
  CMat j = twist_matrix(static_cast<int>(m.rows()));
  return -j * m.transpose() * j.inverse();
}

double form(const CMat& a, const CMat& b) { return -(a * b).trace().real(); }

CMat bracket(const CMat& a, const CMat& b) { return a * b - b * a; }

CMat AlgebraLoop::eval(double theta) const
{
  CMat out = CMat::Zero(n, n);
  for (const auto& [k, m] : modes)
    out += m * std::exp(kI * (k * theta / r));
  return out;
}

CMat AlgebraLoop::deriv(double theta) const
{
  CMat out = CMat::Zero(n, n);
  for (const auto& [k, m] : modes)
    out += m * (kI * (double(k) / r) * std::exp(kI * (k * theta / r)));
  return out;
}

CMat GroupLoop::eval(double theta) const { return exp_antihermitian(log.eval(theta)); }

CMat GroupLoop::dlog(double theta) const
{
  // g' g^{-1} = dexp_B(B') = sum_k ad_B^k(B') / (k+1)!
  CMat b = log.eval(theta);
  CMat term = log.deriv(theta);
  CMat out = term;
  for (int k = 1; k < 64; ++k) {
    term = bracket(b, term) / double(k + 1);
    out += term;
    if (term.norm() < 1e-18 * (1.0 + out.norm()))
      break;
  }
  return out;
}

namespace {

// Project the mode family onto loops that are anti-hermitian pointwise,
// traceless, and satisfy the twist boundary condition; all three projections
// commute, so the order is immaterial.
void project_modes(AlgebraLoop& loop)
{
  const int n = loop.n;
  std::map<int, CMat> src = loop.modes;
  auto mode = [&](int k) -> CMat {
    auto it = src.find(k);
    return it == src.end() ? CMat::Zero(n, n) : it->second;
  };
  std::map<int, CMat> out;
  for (const auto& [k, m] : src) {
    CMat a = (m - mode(-k).adjoint()) / 2.0; // A(theta) anti-hermitian
    a -= (a.trace() / double(n)) * CMat::Identity(n, n);
    if (loop.r == 2) {
      double eps = (k % 2 == 0) ? 1.0 : -1.0; // A_k = eps_k tau_C(A_k)
      a = (a + eps * tau_complex_linear(a)) / 2.0;
    }
    if (a.norm() > 1e-300)
      out[k] = a;
  }
  loop.modes = std::move(out);
}

} // namespace

AlgebraLoop sample_algebra_loop(int n, int twist, unsigned seed, int degree)
{
  require_twist(twist);
  if (n < 2 || degree < 0)
    throw std::invalid_argument("sample_algebra_loop: need n >= 2 and degree >= 0");
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  AlgebraLoop loop;
  loop.n = n;
  loop.r = twist;
  for (int k = -degree; k <= degree; ++k) {
    CMat m(n, n);
    double scale = 0.35 * std::pow(0.45, std::abs(k));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = scale * std::complex<double>(gauss(rng), gauss(rng));
    loop.modes[k] = m;
  }
  project_modes(loop);
  return loop;
}

GroupLoop sample_group_loop(int n, int twist, unsigned seed, int degree)
{
  return GroupLoop{sample_algebra_loop(n, twist, seed, degree)};
}

double boundary_defect(const AlgebraLoop& loop, int samples)
{
  double worst = 0;
  for (int j = 0; j < samples; ++j) {
    double theta = 2 * kPi * j / samples;
    CMat ahead = loop.eval(theta + 2 * kPi);
    CMat expected = loop.r == 2 ? CMat(tau_algebra(ahead)) : ahead;
    worst = std::max(worst, (loop.eval(theta) - expected).norm());
  }
  return worst;
}

double boundary_defect(const GroupLoop& loop, int samples)
{
  double worst = 0;
  for (int j = 0; j < samples; ++j) {
    double theta = 2 * kPi * j / samples;
    CMat ahead = loop.eval(theta + 2 * kPi);
    CMat expected = loop.r() == 2 ? CMat(tau_group(ahead)) : ahead;
    worst = std::max(worst, (loop.eval(theta) - expected).norm());
  }
  return worst;
}

CMat coadjoint_pointwise(const AlgebraLoop& y, double a, const GroupLoop& g,
                         double theta)
{
  CMat gt = g.eval(theta);
  return gt * y.eval(theta) * gt.adjoint() - a * g.dlog(theta);
}

AlgebraLoop coadjoint_transform(const AlgebraLoop& y, double a, const GroupLoop& g,
                                int grid)
{
  if (a == 0)
    throw std::invalid_argument("coadjoint_transform: level a must be nonzero");
  if (y.n != g.n() || y.r != g.r())
    throw std::invalid_argument("coadjoint_transform: mismatched loop shapes");
  if (grid < 8)
    throw std::invalid_argument("coadjoint_transform: grid too small");
  const int n = y.n, r = y.r, N = grid;
  std::vector<CMat> samples(N);
  double peak = 0;
  for (int j = 0; j < N; ++j) {
    samples[j] = coadjoint_pointwise(y, a, g, 2 * kPi * r * j / N);
    peak = std::max(peak, samples[j].norm());
  }
  AlgebraLoop out;
  out.n = n;
  out.r = r;
  for (int k = -(N / 2 - 1); k <= N / 2 - 1; ++k) {
    CMat m = CMat::Zero(n, n);
    for (int j = 0; j < N; ++j)
      m += samples[j] * std::exp(-kI * (2 * kPi * k * j / double(N)));
    m /= double(N);
    if (m.norm() > 1e-14 * std::max(peak, 1.0))
      out.modes[k] = m;
  }
  project_modes(out); // strip DFT round-off from the exact symmetries
  return out;
}

namespace {

CMat rk4_endpoint(const AlgebraLoop& y, double a, int steps,
                  std::vector<CMat>* samples, double* drift)
{
  const int n = y.n;
  const double h = 2 * kPi / steps;
  CMat z = CMat::Identity(n, n);
  if (samples)
    samples->push_back(z);
  auto f = [&](double theta, const CMat& w) { return CMat(-(1.0 / a) * y.eval(theta) * w); };
  for (int s = 0; s < steps; ++s) {
    double theta = s * h;
    CMat k1 = f(theta, z);
    CMat k2 = f(theta + h / 2, z + (h / 2) * k1);
    CMat k3 = f(theta + h / 2, z + (h / 2) * k2);
    CMat k4 = f(theta + h, z + h * k3);
    z += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    if (drift)
      *drift = std::max(*drift,
                        (z * z.adjoint() - CMat::Identity(n, n)).norm());
    z = unitarize(z);
    if (samples)
      samples->push_back(z);
  }
  return z;
}

} // namespace

MonodromyResult solve_monodromy(const AlgebraLoop& y, double a, int steps)
{
  if (a == 0)
    throw std::invalid_argument("solve_monodromy: level a must be nonzero");
  if (steps < 64)
    throw std::invalid_argument("solve_monodromy: at least 64 steps required");
  MonodromyResult res;
  res.steps = steps;
  res.endpoint = rk4_endpoint(y, a, steps, &res.samples, &res.unitarity_drift);
  CMat coarse = rk4_endpoint(y, a, steps / 2, nullptr, nullptr);
  res.halving_error = (res.endpoint - coarse).norm();
  return res;
}

double check_equivariance(const AlgebraLoop& x, double a, const GroupLoop& g,
                          int steps)
{
  AlgebraLoop y = coadjoint_transform(x, a, g);
  MonodromyResult zx = solve_monodromy(x, a, steps);
  MonodromyResult zy = solve_monodromy(y, a, steps);
  CMat g0inv = g.eval(0.0).adjoint();
  double worst = 0;
  for (int j = 0; j <= steps; ++j) {
    double theta = 2 * kPi * j / steps;
    CMat expected = g.eval(theta) * zx.samples[j] * g0inv;
    worst = std::max(worst, (zy.samples[j] - expected).norm());
  }
  return worst;
}

TwoFormResult two_form_residual(const CMat& x, double a, const AlgebraLoop& b1,
                                const AlgebraLoop& b2, int quad_points)
{
  if (a == 0)
    throw std::invalid_argument("two_form_residual: level a must be nonzero");
  if (quad_points < 2 || quad_points % 2 != 0)
    throw std::invalid_argument("two_form_residual: quad_points must be even, >= 2");
  if (b1.n != b2.n || b1.r != b2.r || x.rows() != b1.n)
    throw std::invalid_argument("two_form_residual: mismatched shapes");
  const int n = b1.n, N = quad_points;
  const double h = 2 * kPi / N;

  // z(theta) = exp(-theta X / a) through one spectral decomposition.
  Eigen::SelfAdjointEigenSolver<CMat> es(-kI * x);
  auto zfun = [&](double theta) {
    Eigen::VectorXcd phases = (-kI * (theta / a) * es.eigenvalues().array()).exp();
    return CMat(es.eigenvectors() * phases.asDiagonal() *
                es.eigenvectors().adjoint());
  };

  const CMat b10 = b1.eval(0.0), b20 = b2.eval(0.0);
  // Simpson accumulators for the four bilinear integrands and their 1<->2
  // transposes; everything is antisymmetrized at the end so that b1 == b2
  // yields exact zeros.
  double int_sigma_bracket = 0, int_xi12 = 0, int_xi21 = 0;
  double int_omega_bracket = 0, int_b12 = 0, int_b21 = 0;
  for (int j = 0; j <= N; ++j) {
    double theta = j * h;
    double w = (j == 0 || j == N) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    CMat z = zfun(theta);
    CMat ad1 = z * b10 * z.adjoint();
    CMat ad2 = z * b20 * z.adjoint();
    CMat v1 = b1.eval(theta), v2 = b2.eval(theta);
    CMat xi1 = v1 - ad1, xi2 = v2 - ad2;
    CMat xi1p = b1.deriv(theta) + (1.0 / a) * bracket(x, ad1);
    CMat xi2p = b2.deriv(theta) + (1.0 / a) * bracket(x, ad2);
    int_sigma_bracket += w * form(x, bracket(xi1, xi2));
    int_xi12 += w * form(xi1p, xi2);
    int_xi21 += w * form(xi2p, xi1);
    int_omega_bracket += w * form(x, bracket(v1, v2));
    int_b12 += w * form(b1.deriv(theta), v2);
    int_b21 += w * form(b2.deriv(theta), v1);
  }
  double sw = h / 3.0; // composite Simpson weight
  int_sigma_bracket *= sw;
  int_xi12 *= sw;
  int_xi21 *= sw;
  int_omega_bracket *= sw;
  int_b12 *= sw;
  int_b21 *= sw;

  // Antisymmetrized in B1 <-> B2: the symmetric parts of the xi' integral and
  // the dbeta boundary term <xi1(2 pi), xi2(2 pi)> cancel exactly (the form is
  // symmetric and xi(0) = 0), so the boundary term drops out here.
  CMat z2pi = zfun(2 * kPi);
  double lhs =
      int_sigma_bracket / (2 * kPi) + a / (4 * kPi) * (int_xi12 - int_xi21);

  // Boundary (varpi) term: tau(B(2 pi)) = B(0) from the twist boundary
  // condition, in both the twisted and untwisted cases.
  double vpi = a / (4 * kPi) *
               (form(z2pi * b10 * z2pi.adjoint(), b2.eval(2 * kPi)) -
                form(z2pi * b20 * z2pi.adjoint(), b1.eval(2 * kPi)));

  double om = int_omega_bracket / (2 * kPi) + a / (4 * kPi) * (int_b12 - int_b21);

  TwoFormResult res;
  res.lhs = lhs;
  res.rhs = vpi + om;
  res.residual = std::abs(lhs - res.rhs);
  res.scale = std::max(std::abs(om), 1.0);
  (void)n;
  return res;
}

CMat chart_to_algebra(const QVec& chart)
{
  const auto n = chart.size();
  CMat x = CMat::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    x(j, j) = kI * chart(j).convert_to<double>();
  return x;
}

int fixed_subalgebra_dim(int n, int twist, const QVec& chart)
{
  require_twist(twist);
  if (chart.size() != n)
    throw std::invalid_argument("fixed_subalgebra_dim: chart must have n entries");
  // Real basis of su(n): real antisymmetric, imaginary symmetric off-diagonal,
  // and imaginary diagonal traceless.
  std::vector<CMat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMat e = CMat::Zero(n, n);
      e(i, j) = 1;
      e(j, i) = -1;
      basis.push_back(e);
      CMat f = CMat::Zero(n, n);
      f(i, j) = kI;
      f(j, i) = kI;
      basis.push_back(f);
    }
  for (int i = 0; i + 1 < n; ++i) {
    CMat d = CMat::Zero(n, n);
    d(i, i) = kI;
    d(i + 1, i + 1) = -kI;
    basis.push_back(d);
  }
  const int dim = static_cast<int>(basis.size()); // n^2 - 1

  // u = exp(2 pi i diag(chart)).
  CMat u = CMat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    u(j, j) = std::exp(kI * (2 * kPi * chart(j).convert_to<double>()));

  Eigen::MatrixXd map(2 * n * n, dim);
  for (int c = 0; c < dim; ++c) {
    CMat img = twist == 2 ? CMat(tau_algebra(basis[c])) : basis[c];
    img = u * img * u.adjoint() - basis[c];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        map(2 * (i * n + j), c) = img(i, j).real();
        map(2 * (i * n + j) + 1, c) = img(i, j).imag();
      }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(map);
  int kernel = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) < 1e-9)
      ++kernel;
  return kernel;
}

} // namespace tcc

#include "tcc/folding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tcc {

namespace {

bool is_equivariant(const IMat& A, const std::vector<int>& perm)
{
  const int l = static_cast<int>(A.rows());
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (A(perm[i], perm[j]) != A(i, j))
        return false;
  return true;
}

int perm_order(const std::vector<int>& perm)
{
  const int l = static_cast<int>(perm.size());
  std::vector<int> cur(l);
  std::iota(cur.begin(), cur.end(), 0);
  for (int k = 1; k <= l + 1; ++k) {
    for (int i = 0; i < l; ++i)
      cur[i] = perm[cur[i]];
    bool id = true;
    for (int i = 0; i < l; ++i)
      id = id && cur[i] == i;
    if (id)
      return k;
  }
  throw std::logic_error("permutation order not found");
}

std::vector<Rational> key_of(const QVec& v)
{
  std::vector<Rational> k(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    k[i] = v(i);
  return k;
}

} // namespace

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs)
{
  const int l = rs.rank();
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<DiagramAutomorphism> out;
  do {
    if (is_equivariant(rs.cartan, perm))
      out.push_back({perm, perm_order(perm)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

DiagramAutomorphism identity_automorphism(const RootSystem& rs)
{
  std::vector<int> perm(rs.rank());
  std::iota(perm.begin(), perm.end(), 0);
  return {perm, 1};
}

DiagramAutomorphism outer_automorphism(const RootSystem& rs, bool triality)
{
  const int l = rs.rank();
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  if (triality) {
    if (!(rs.type.family == 'D' && l == 4))
      throw std::invalid_argument("triality exists only for D4");
    // Rotate the three outer nodes 1, 3, 4 (Bourbaki numbering).
    perm[0] = 2;
    perm[2] = 3;
    perm[3] = 0;
  } else if (rs.type.family == 'A' && l >= 2) {
    for (int i = 0; i < l; ++i)
      perm[i] = l - 1 - i;
  } else if (rs.type.family == 'D') {
    std::swap(perm[l - 2], perm[l - 1]);
  } else if (rs.type.family == 'E' && l == 6) {
    perm[0] = 5;
    perm[5] = 0;
    perm[2] = 4;
    perm[4] = 2;
  } else {
    throw std::invalid_argument("type " + rs.type.str() +
                                " has no nontrivial diagram automorphism");
  }
  if (!is_equivariant(rs.cartan, perm))
    throw std::logic_error("outer automorphism catalog entry not equivariant");
  return {perm, perm_order(perm)};
}

QVec restrict_root(const FoldedSystem& fs, const IVec& root)
{
  // Value of the root on each u_O: sum over the orbit of (A b)_k.
  QVec p = coroot_pairings(fs.base, root.cast<Rational>());
  QVec out = QVec::Zero(fs.m());
  for (int o = 0; o < fs.m(); ++o)
    for (int k : fs.orbits[o])
      out(o) += p(k);
  return out;
}

QVec restrict_h(const FoldedSystem& fs, const QVec& h)
{
  QVec u = QVec::Zero(fs.m());
  for (int o = 0; o < fs.m(); ++o) {
    for (int k : fs.orbits[o])
      u(o) += h(k);
    u(o) /= Rational(static_cast<int>(fs.orbits[o].size()));
  }
  return u;
}

QVec unrestrict_h(const FoldedSystem& fs, const QVec& u)
{
  return fs.htau_basis * u;
}

Rational htau_form(const FoldedSystem& fs, const QVec& x, const QVec& y)
{
  return (x.transpose() * fs.gram * y)(0, 0);
}

Rational restricted_form(const FoldedSystem& fs, const QVec& a, const QVec& b)
{
  auto y = rational_solve(fs.gram, b);
  if (!y)
    throw std::logic_error("degenerate Gram matrix on h^tau");
  return a.dot(*y);
}

Rational restricted_norm2(const FoldedSystem& fs, const QVec& a)
{
  return restricted_form(fs, a, a);
}

QVec restricted_coroot(const FoldedSystem& fs, const QVec& covector)
{
  auto y = rational_solve(fs.gram, covector);
  if (!y || covector.isZero())
    throw std::invalid_argument("restricted_coroot: zero or degenerate input");
  return *y * (Rational(2) / restricted_norm2(fs, covector));
}

Rational covector_value(const QVec& covector, const QVec& point)
{
  return covector.dot(point);
}

FoldedSystem fold(const RootSystem& rs, const DiagramAutomorphism& tau)
{
  const int l = rs.rank();
  if (static_cast<int>(tau.perm.size()) != l || !is_equivariant(rs.cartan, tau.perm))
    throw std::invalid_argument("tau is not a diagram automorphism of the base");
  if (perm_order(tau.perm) != tau.order)
    throw std::invalid_argument("tau has inconsistent order field");

  FoldedSystem fs;
  fs.base = rs;
  fs.tau = tau;

  // Orbits, sorted by least node; this fixes the finite node order.
  std::vector<bool> seen(l, false);
  for (int i = 0; i < l; ++i) {
    if (seen[i])
      continue;
    std::vector<int> orbit;
    int j = i;
    do {
      orbit.push_back(j);
      seen[j] = true;
      j = tau.perm[j];
    } while (j != i);
    std::sort(orbit.begin(), orbit.end());
    fs.orbits.push_back(orbit);
  }
  const int m = fs.m();

  fs.htau_basis = QMat::Zero(l, m);
  for (int o = 0; o < m; ++o)
    for (int k : fs.orbits[o])
      fs.htau_basis(k, o) = 1;

  fs.proj = QMat::Zero(l, l);
  for (int o = 0; o < m; ++o) {
    Rational inv(1, static_cast<int>(fs.orbits[o].size()));
    for (int i : fs.orbits[o])
      for (int j : fs.orbits[o])
        fs.proj(i, j) = inv;
  }

  fs.gram = fs.htau_basis.transpose() * rs.form * fs.htau_basis;

  for (int o = 0; o < m; ++o) {
    IVec e = IVec::Zero(l);
    e(fs.orbits[o][0]) = 1;
    fs.restricted_simple.push_back(restrict_root(fs, e));
  }

  // Restricted roots with multiplicities.
  std::map<std::vector<Rational>, std::pair<QVec, int>> restr;
  for (const IVec& b : rs.all_roots()) {
    QVec c = restrict_root(fs, b);
    auto [it, fresh] = restr.try_emplace(key_of(c), c, 0);
    ++it->second.second;
  }
  for (auto& [key, val] : restr)
    fs.delta_tau.push_back({val.first, val.second});

  auto in_delta = [&](const QVec& c) { return restr.count(key_of(c)) != 0; };
  fs.nonreduced = false;
  for (const RestrictedRoot& rr : fs.delta_tau)
    fs.nonreduced = fs.nonreduced || in_delta(rr.covector * Rational(1, 2));

  // g0 roots: restricted roots whose half is not restricted.
  std::vector<QVec> g0_roots;
  for (const RestrictedRoot& rr : fs.delta_tau)
    if (!in_delta(rr.covector * Rational(1, 2)))
      g0_roots.push_back(rr.covector);

  // Simple system of g0 = the restricted simple covectors; recognize its type.
  IMat C(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rational cij = Rational(2) *
                     restricted_form(fs, fs.restricted_simple[i], fs.restricted_simple[j]) /
                     restricted_norm2(fs, fs.restricted_simple[i]);
      if (!is_integer(cij))
        throw std::logic_error("non-integer restricted Cartan entry");
      C(i, j) = q_num(cij);
    }
  auto rec = recognize_cartan(C);
  if (!rec)
    throw std::logic_error("restricted Cartan matrix not of finite type");
  fs.g0 = build_root_system(rec->first);
  for (int k = 0; k < m; ++k)
    fs.g0_simple.push_back(fs.restricted_simple[rec->second[k]]);

  // Sanity: the g0 root count matches the reduced restricted subsystem.
  if (fs.g0.num_roots() != static_cast<int>(g0_roots.size()))
    throw std::logic_error("fixed-subalgebra root count mismatch");

  // theta_tau per the three-case rule.
  auto dominant = [&](const QVec& c) {
    for (int i = 0; i < m; ++i)
      if (restricted_form(fs, c, fs.restricted_simple[i]) < 0)
        return false;
    return true;
  };
  auto dominant_shortest = [&](const std::vector<QVec>& roots) {
    Rational minn;
    bool first = true;
    for (const QVec& c : roots) {
      Rational n2 = restricted_norm2(fs, c);
      if (first || n2 < minn) {
        minn = n2;
        first = false;
      }
    }
    for (const QVec& c : roots)
      if (restricted_norm2(fs, c) == minn && dominant(c))
        return c;
    throw std::logic_error("no dominant short restricted root");
  };
  if (tau.order == 1) {
    fs.theta_tau = restrict_root(fs, rs.theta);
  } else if (fs.nonreduced) {
    fs.theta_tau = Rational(2) * dominant_shortest(g0_roots);
  } else {
    std::vector<QVec> all;
    for (const RestrictedRoot& rr : fs.delta_tau)
      all.push_back(rr.covector);
    fs.theta_tau = dominant_shortest(all);
  }

  // Twisted affine Cartan matrix; node 0 carries the root -theta_tau.
  std::vector<QVec> anodes{-fs.theta_tau};
  for (int i = 0; i < m; ++i)
    anodes.push_back(fs.restricted_simple[i]);
  fs.affine_cartan = IMat(m + 1, m + 1);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      Rational cij = Rational(2) * restricted_form(fs, anodes[i], anodes[j]) /
                     restricted_norm2(fs, anodes[i]);
      if (!is_integer(cij))
        throw std::logic_error("non-integer affine Cartan entry");
      fs.affine_cartan(i, j) = q_num(cij);
    }

  // Comarks: primitive positive left null vector.
  QMat At = fs.affine_cartan.cast<Rational>().transpose();
  QMat K = rational_kernel(At);
  if (K.cols() != 1)
    throw std::logic_error("affine Cartan matrix does not have corank 1");
  Int scale = 1;
  for (int i = 0; i <= m; ++i)
    scale = boost::multiprecision::lcm(scale, q_den(K(i, 0)));
  IVec c(m + 1);
  Int g = 0;
  for (int i = 0; i <= m; ++i) {
    c(i) = q_num(K(i, 0) * Rational(scale));
    g = boost::multiprecision::gcd(g, c(i));
  }
  for (int i = 0; i <= m; ++i)
    c(i) /= g;
  if (c(0) < 0)
    c = -c;
  for (int i = 0; i <= m; ++i)
    if (c(i) <= 0)
      throw std::logic_error("comark vector not positive");
  fs.comarks = c;

  fs.inv_lattice = QMat::Identity(m, m);
  fs.proj_lattice = QMat::Zero(m, m);
  for (int o = 0; o < m; ++o)
    fs.proj_lattice(o, o) = Rational(1, static_cast<int>(fs.orbits[o].size()));

  return fs;
}

std::vector<std::pair<QVec, int>> gk_weights(const FoldedSystem& fs, int k)
{
  if (k < 0 || k >= fs.r())
    throw std::invalid_argument("gk_weights: k out of range [0, ord(tau))");
  const int m = fs.m();
  std::vector<std::pair<QVec, int>> out;
  if (k == 0) {
    for (const RestrictedRoot& rr : fs.delta_tau) {
      bool halved = false;
      for (const RestrictedRoot& other : fs.delta_tau)
        halved = halved || other.covector == rr.covector * Rational(1, 2);
      if (!halved)
        out.emplace_back(rr.covector, 1);
    }
    out.emplace_back(QVec::Zero(m), m);
    return out;
  }

  // Express theta_tau in g0 simple-root coordinates.
  QMat S(m, m);
  for (int j = 0; j < m; ++j)
    S.col(j) = fs.g0_simple[j];
  auto coords = rational_solve(S, fs.theta_tau);
  if (!coords)
    throw std::logic_error("theta_tau not in the g0 root lattice");
  std::vector<QVec> ws = weight_system(fs.g0, *coords);
  Int dim = weyl_dim(fs.g0, *coords);
  Int nonzero = 0;
  for (const QVec& w : ws) {
    if (w.isZero())
      continue;
    out.emplace_back(S * w, 1);
    ++nonzero;
  }
  Int zero_mult = dim - nonzero;
  if (zero_mult < 0)
    throw std::logic_error("negative zero-weight multiplicity");
  if (zero_mult > 0)
    out.emplace_back(QVec::Zero(m), static_cast<int>(zero_mult));
  return out;
}

const IMat& twisted_affine_cartan(const FoldedSystem& fs) { return fs.affine_cartan; }

const IVec& comarks(const FoldedSystem& fs) { return fs.comarks; }

AbelianGroup component_group(const FoldedSystem& fs)
{
  return lattice_quotient(fs.proj_lattice, fs.inv_lattice);
}

} // namespace tcc

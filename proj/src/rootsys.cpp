#include "tcc/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tcc {

namespace {

struct VecLess {
  template <typename V>
  bool operator()(const V& a, const V& b) const
  {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) < b(i))
        return true;
      if (b(i) < a(i))
        return false;
    }
    return false;
  }
};

} // namespace

SimpleType::SimpleType(char f, int r) : family(f), rank(r)
{
  // Canonicalize the classical low-rank coincidences first.
  if ((family == 'B' || family == 'C') && rank == 1)
    family = 'A';
  if (family == 'C' && rank == 2)
    family = 'B';
  if (family == 'D' && rank == 3)
    family = 'A';

  bool ok = false;
  switch (family) {
  case 'A': ok = rank >= 1; break;
  case 'B': ok = rank >= 2; break;
  case 'C': ok = rank >= 3; break; // C2 canonicalized to B2 above
  case 'D': ok = rank >= 4; break; // D3 canonicalized to A3 above
  case 'E': ok = rank >= 6 && rank <= 8; break;
  case 'F': ok = rank == 4; break;
  case 'G': ok = rank == 2; break;
  default: ok = false;
  }
  if (!ok)
    throw std::invalid_argument("invalid simple type " + std::string(1, f) +
                                std::to_string(r));
}

IMat cartan_matrix(SimpleType t)
{
  const int l = t.rank;
  IMat A = IMat::Identity(l, l) * 2;
  auto link = [&](int i, int j) { A(i, j) = A(j, i) = -1; };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i)
      link(i, i + 1);
  };
  switch (t.family) {
  case 'A':
    chain(0, l - 1);
    break;
  case 'B': // last simple root short
    chain(0, l - 1);
    A(l - 1, l - 2) = -2;
    break;
  case 'C': // last simple root long
    chain(0, l - 1);
    A(l - 2, l - 1) = -2;
    break;
  case 'D':
    chain(0, l - 3);
    link(l - 3, l - 2);
    link(l - 3, l - 1);
    break;
  case 'E': // Bourbaki: chain 1-3-4-...-l with node 2 on node 4
    link(0, 2);
    chain(2, l - 1);
    A(1, 2) = A(2, 1) = 0;
    link(1, 3);
    break;
  case 'F': // nodes 1,2 long; 3,4 short
    chain(0, 3);
    A(2, 1) = -2;
    break;
  case 'G': // node 1 short, node 2 long
    A(0, 1) = -3;
    A(1, 0) = -1;
    break;
  }
  return A;
}

QVec cartan_symmetrizer(SimpleType t)
{
  const int l = t.rank;
  QVec d = QVec::Constant(l, Rational(1));
  switch (t.family) {
  case 'B':
    d(l - 1) = Rational(1, 2);
    break;
  case 'C':
    for (int i = 0; i + 1 < l; ++i)
      d(i) = Rational(1, 2);
    break;
  case 'F':
    d(2) = d(3) = Rational(1, 2);
    break;
  case 'G':
    d(0) = Rational(1, 3);
    break;
  default:
    break;
  }
  return d;
}

RootSystem build_root_system(SimpleType type)
{
  RootSystem rs;
  rs.type = type;
  rs.cartan = cartan_matrix(type);
  rs.symmetrizer = cartan_symmetrizer(type);
  const int l = type.rank;

  // Reflection closure from the simple roots.
  std::set<IVec, VecLess> closure;
  std::vector<IVec> queue;
  for (int i = 0; i < l; ++i) {
    IVec e = IVec::Zero(l);
    e(i) = 1;
    closure.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IVec b = queue.back();
    queue.pop_back();
    for (int j = 0; j < l; ++j) {
      Int c = 0; // <beta, alpha_j^vee> = (A b)_j
      for (int i = 0; i < l; ++i)
        c += rs.cartan(j, i) * b(i);
      IVec s = b;
      s(j) -= c;
      if (closure.insert(s).second)
        queue.push_back(s);
    }
  }
  for (const IVec& b : closure) {
    bool nonneg = true;
    for (int i = 0; i < l; ++i)
      nonneg = nonneg && b(i) >= 0;
    if (nonneg)
      rs.positive_roots.push_back(b);
  }

  // Highest root: the unique root dominating all others coordinatewise.
  for (const IVec& cand : rs.positive_roots) {
    bool dominates = true;
    for (const IVec& b : rs.positive_roots)
      for (int i = 0; i < l && dominates; ++i)
        dominates = cand(i) >= b(i);
    if (dominates) {
      rs.theta = cand;
      break;
    }
  }
  if (rs.theta.size() == 0)
    throw std::logic_error("no dominance-maximal root found");

  rs.form = QMat(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      rs.form(i, j) = Rational(rs.cartan(i, j)) / rs.symmetrizer(j);
  return rs;
}

std::vector<IVec> RootSystem::all_roots() const
{
  std::vector<IVec> out = positive_roots;
  for (const IVec& b : positive_roots)
    out.push_back(-b);
  return out;
}

Rational weight_form(const RootSystem& rs, const QVec& a, const QVec& b)
{
  // (mu, la) = mu^T D A la with D = diag(d_i); D A is symmetric.
  Rational s = 0;
  const int l = rs.rank();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      s += a(i) * rs.symmetrizer(i) * Rational(rs.cartan(i, j)) * b(j);
  return s;
}

Rational weight_norm2(const RootSystem& rs, const QVec& weight)
{
  return weight_form(rs, weight, weight);
}

Rational form_data(const RootSystem& rs, const QVec& v, const QVec& w)
{
  Rational s = 0;
  const int l = rs.rank();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      s += v(i) * rs.form(i, j) * w(j);
  return s;
}

QVec coroot(const RootSystem& rs, const IVec& root)
{
  if (root.isZero())
    throw std::invalid_argument("coroot of the zero vector");
  QVec b = root.cast<Rational>();
  Rational n2 = weight_norm2(rs, b);
  QVec cv(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    cv(i) = Rational(2) * rs.symmetrizer(i) * b(i) / n2;
  return cv;
}

QVec coroot_pairings(const RootSystem& rs, const QVec& weight)
{
  QVec p = QVec::Zero(rs.rank());
  for (int k = 0; k < rs.rank(); ++k)
    for (int i = 0; i < rs.rank(); ++i)
      p(k) += Rational(rs.cartan(k, i)) * weight(i);
  return p;
}

Rational weight_value(const RootSystem& rs, const QVec& weight, const QVec& h)
{
  return coroot_pairings(rs, weight).dot(h);
}

std::vector<QVec> weight_system(const RootSystem& rs, const QVec& lambda)
{
  QVec p = coroot_pairings(rs, lambda);
  for (int k = 0; k < rs.rank(); ++k)
    if (!is_integer(p(k)) || p(k) < 0)
      throw std::invalid_argument("weight_system: highest weight not dominant integral");

  // String subtraction: from each known weight mu with <mu, alpha_j^vee> = c > 0,
  // the weights mu - alpha_j, ..., mu - c*alpha_j all occur.
  std::set<QVec, VecLess> seen;
  std::vector<QVec> queue{lambda};
  seen.insert(lambda);
  while (!queue.empty()) {
    QVec mu = queue.back();
    queue.pop_back();
    QVec c = coroot_pairings(rs, mu);
    for (int j = 0; j < rs.rank(); ++j) {
      Int top = q_num(c(j));
      for (Int k = 1; k <= top; ++k) {
        QVec nu = mu;
        nu(j) -= Rational(k);
        if (seen.insert(nu).second)
          queue.push_back(nu);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Int weyl_dim(const RootSystem& rs, const QVec& lambda)
{
  QVec rho = QVec::Zero(rs.rank());
  for (const IVec& b : rs.positive_roots)
    rho += b.cast<Rational>() * Rational(1, 2);
  Rational num = 1, den = 1;
  for (const IVec& b : rs.positive_roots) {
    QVec bq = b.cast<Rational>();
    num *= weight_form(rs, lambda + rho, bq);
    den *= weight_form(rs, rho, bq);
  }
  Rational dim = num / den;
  if (!is_integer(dim))
    throw std::logic_error("Weyl dimension formula gave a non-integer");
  return q_num(dim);
}

QVec simple_reflect_h(const RootSystem& rs, int j, const QVec& v)
{
  // alpha_j(v) = (A^T v)_j in coroot coordinates.
  Rational val = 0;
  for (int k = 0; k < rs.rank(); ++k)
    val += Rational(rs.cartan(k, j)) * v(k);
  QVec out = v;
  out(j) -= val;
  return out;
}

std::pair<QVec, std::vector<int>> chamber_reduce(const RootSystem& rs, QVec v)
{
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < rs.rank(); ++j) {
      Rational val = 0;
      for (int k = 0; k < rs.rank(); ++k)
        val += Rational(rs.cartan(k, j)) * v(k);
      if (val < 0) {
        v(j) -= val;
        word.push_back(j);
        changed = true;
      }
    }
  }
  return {std::move(v), std::move(word)};
}

std::vector<std::vector<int>> cartan_components(const IMat& C)
{
  const int n = static_cast<int>(C.rows());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0)
      continue;
    std::vector<int> stack{s}, nodes;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      nodes.push_back(i);
      for (int j = 0; j < n; ++j)
        if (j != i && comp[j] < 0 && C(i, j) != 0) {
          comp[j] = comp[i];
          stack.push_back(j);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(nodes);
  }
  return out;
}

std::optional<std::pair<SimpleType, std::vector<int>>> recognize_cartan(const IMat& C)
{
  const int l = static_cast<int>(C.rows());
  if (l == 0 || C.cols() != l)
    return std::nullopt;
  std::vector<SimpleType> candidates;
  auto add = [&](char f, int r) {
    try {
      SimpleType t(f, r);
      if (t.rank == l &&
          std::find(candidates.begin(), candidates.end(), t) == candidates.end())
        candidates.push_back(t);
    } catch (const std::invalid_argument&) {
    }
  };
  for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
    add(f, l);

  for (const SimpleType& t : candidates) {
    IMat cat = cartan_matrix(t);
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool match = true;
      for (int i = 0; i < l && match; ++i)
        for (int j = 0; j < l && match; ++j)
          match = C(perm[i], perm[j]) == cat(i, j);
      if (match)
        return std::make_pair(t, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

} // namespace tcc

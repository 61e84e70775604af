#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tcc/alcove.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace tcc;

namespace {

FoldedSystem folded(char fam, int rank, bool outer, bool triality = false)
{
  RootSystem rs = build_root_system(SimpleType(fam, rank));
  return fold(rs, outer ? outer_automorphism(rs, triality) : identity_automorphism(rs));
}

QVec random_qvec(std::mt19937& rng, int n)
{
  std::uniform_int_distribution<int> num(-8, 8), den(1, 5);
  QVec v(n);
  for (int i = 0; i < n; ++i)
    v(i) = Rational(num(rng), den(rng));
  return v;
}

QVec qvec(std::initializer_list<Rational> xs)
{
  QVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rational& x : xs)
    v(i++) = x;
  return v;
}

std::multiset<std::vector<Rational>> chart_ineqs_as_sets(const FoldedSystem& fs,
                                                         const Alcove& alc)
{
  // Flatten (coeffs, bound, upper) into a vector key for set comparison:
  // upper encoded by negating everything so all inequalities read ">= ".
  std::multiset<std::vector<Rational>> out;
  for (const Wall& w : alc.walls) {
    auto [c, b] = chart_wall(fs, w);
    std::vector<Rational> key;
    Rational sign = w.upper ? Rational(-1) : Rational(1);
    for (Eigen::Index i = 0; i < c.size(); ++i)
      key.push_back(sign * c(i));
    key.push_back(sign * -b); // constant term of c.x - b >= 0
    out.insert(key);
  }
  return out;
}

std::vector<Rational> ineq_key(const std::vector<Rational>& coeffs, Rational bound,
                               bool upper)
{
  std::vector<Rational> key;
  Rational sign = upper ? Rational(-1) : Rational(1);
  for (const Rational& c : coeffs)
    key.push_back(sign * c);
  key.push_back(sign * -bound);
  return key;
}

// The paper's four displayed SU domains, as chart inequalities.
std::multiset<std::vector<Rational>> expected_su_domain(int n, bool twisted)
{
  std::multiset<std::vector<Rational>> out;
  auto coeff = [&](std::initializer_list<std::pair<int, Rational>> terms) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (auto [idx, val] : terms)
      c[idx] = val;
    return c;
  };
  if (!twisted) {
    // x_1 >= x_2 >= ... >= x_{n+1}, x_1 - x_{n+1} <= 1.
    for (int i = 0; i + 1 <= n; ++i)
      out.insert(ineq_key(coeff({{i, 1}, {i + 1, -1}}), 0, false));
    out.insert(ineq_key(coeff({{0, 1}, {n, -1}}), 1, true));
    return out;
  }
  int m = (n + 1) / 2;
  if (n == 2) {
    // Twisted SU(3): 0 <= x_1 <= 1/4.
    out.insert(ineq_key(coeff({{0, 1}}), 0, false));
    out.insert(ineq_key(coeff({{0, 1}}), Rational(1, 4), true));
    return out;
  }
  // x_1 >= ... >= x_m >= 0 in both twisted families.
  for (int i = 0; i + 1 < m; ++i)
    out.insert(ineq_key(coeff({{i, 1}, {i + 1, -1}}), 0, false));
  out.insert(ineq_key(coeff({{m - 1, 1}}), 0, false));
  if (n % 2 == 1) {
    // Twisted SU(2m): closing wall x_1 + x_2 <= 1/2 (highest short root of
    // C_m; the paper's "x_1 + x_m" display is the m = 2 special case).
    out.insert(ineq_key(coeff({{0, 1}, {1, 1}}), Rational(1, 2), true));
  } else {
    // Twisted SU(2m+1), m > 1: x_1 <= 1/4.
    out.insert(ineq_key(coeff({{0, 1}}), Rational(1, 4), true));
  }
  return out;
}

std::vector<FoldedSystem> catalog()
{
  std::vector<FoldedSystem> out;
  out.push_back(folded('A', 1, false));
  out.push_back(folded('A', 2, false));
  out.push_back(folded('A', 4, false));
  out.push_back(folded('B', 3, false));
  out.push_back(folded('C', 3, false));
  out.push_back(folded('D', 4, false));
  out.push_back(folded('F', 4, false));
  out.push_back(folded('G', 2, false));
  out.push_back(folded('A', 2, true));
  out.push_back(folded('A', 3, true));
  out.push_back(folded('A', 4, true));
  out.push_back(folded('A', 5, true));
  out.push_back(folded('D', 4, true));
  out.push_back(folded('D', 4, true, true));
  out.push_back(folded('D', 5, true));
  out.push_back(folded('E', 6, true));
  return out;
}

// Orbit fold on a rank-1 folded system whose domain is [0, t/2] with
// translation lattice step t: independent oracle for reduce_to_alcove.
Rational line_fold(Rational x, Rational t)
{
  Rational r = x - Rational(floor_q(x / t)) * t; // x mod t, in [0, t)
  Rational s = t - r;
  return r < s ? r : s;
}

} // namespace

TEST_CASE("build_alcove: wall count, shape, barycenter interior")
{
  for (const FoldedSystem& fs : catalog()) {
    Alcove alc = build_alcove(fs);
    CHECK(alc.dim == fs.m());
    REQUIRE(static_cast<int>(alc.walls.size()) == fs.m() + 1);
    CHECK(alc.walls[0].upper);
    CHECK(alc.walls[0].bound == Rational(1, fs.r()));
    CHECK(alc.walls[0].covector == fs.theta_tau);
    for (int i = 1; i <= fs.m(); ++i) {
      CHECK_FALSE(alc.walls[i].upper);
      CHECK(alc.walls[i].bound == 0);
      CHECK(alc.walls[i].tag == i);
    }

    FaceLattice fl = vertices_and_faces(alc);
    REQUIRE(static_cast<int>(fl.vertices.size()) == fs.m() + 1);
    // Barycenter is interior: all slacks strictly positive.
    QVec bary = QVec::Zero(fs.m());
    for (const QVec& v : fl.vertices)
      bary += v;
    bary /= Rational(fs.m() + 1);
    for (const Wall& w : alc.walls)
      CHECK(w.slack(bary) > 0);
  }
}

TEST_CASE("build_alcove: (A1, id) is the segment [0, 1/2]")
{
  FoldedSystem fs = folded('A', 1, false);
  Alcove alc = build_alcove(fs);
  // Finite wall x >= 0, affine wall 2x <= 1.
  CHECK(alc.walls[1].covector == qvec({1}));
  CHECK(alc.walls[0].covector == qvec({2}));
  CHECK(alc.walls[0].bound == 1);
  FaceLattice fl = vertices_and_faces(alc);
  std::set<Rational> verts{fl.vertices[0](0), fl.vertices[1](0)};
  CHECK(verts == std::set<Rational>({Rational(0), Rational(1, 2)}));
}

TEST_CASE("build_alcove: (A2, swap) is 0 <= x <= 1/4")
{
  FoldedSystem fs = folded('A', 2, true);
  Alcove alc = build_alcove(fs);
  CHECK(alc.walls[1].covector == qvec({1}));
  CHECK(alc.walls[0].covector == qvec({2})); // theta_tau = twice the short root
  CHECK(alc.walls[0].bound == Rational(1, 2));
  FaceLattice fl = vertices_and_faces(alc);
  std::set<Rational> verts{fl.vertices[0](0), fl.vertices[1](0)};
  CHECK(verts == std::set<Rational>({Rational(0), Rational(1, 4)}));
}

TEST_CASE("build_alcove: (A3, swap) in the diagonal chart")
{
  FoldedSystem fs = folded('A', 3, true);
  Alcove alc = build_alcove(fs);

  // Chart walls: x1 - x2 >= 0, x2 >= 0, x1 + x2 <= 1/2.
  auto got = chart_ineqs_as_sets(fs, alc);
  std::multiset<std::vector<Rational>> want;
  want.insert(ineq_key({1, -1, 0, 0}, 0, false));
  want.insert(ineq_key({0, 1, 0, 0}, 0, false));
  want.insert(ineq_key({1, 1, 0, 0}, Rational(1, 2), true));
  CHECK(got == want);

  // Vertices (0,0), (1/2,0), (1/4,1/4) in the chart; u-coordinates
  // (0,0), (1/2,1/2), (1/4,1/2).
  FaceLattice fl = vertices_and_faces(alc);
  std::set<std::pair<Rational, Rational>> uverts, want_u{
      {0, 0}, {Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(1, 2)}};
  std::set<std::pair<Rational, Rational>> cverts, want_c{
      {0, 0}, {Rational(1, 2), 0}, {Rational(1, 4), Rational(1, 4)}};
  for (const QVec& v : fl.vertices) {
    uverts.insert({v(0), v(1)});
    QVec ch = su_chart(fs, v);
    cverts.insert({ch(0), ch(1)});
    // Twisted chart constraint x_i = -x_{n+2-i}.
    CHECK(ch(2) == -ch(1));
    CHECK(ch(3) == -ch(0));
  }
  CHECK(uverts == want_u);
  CHECK(cverts == want_c);

  // Triangle combinatorics: 3 vertices, 3 edges, 1 interior face.
  int by_dim[3] = {0, 0, 0};
  for (const Face& f : fl.faces)
    ++by_dim[f.dim];
  CHECK(by_dim[0] == 3);
  CHECK(by_dim[1] == 3);
  CHECK(by_dim[2] == 1);
  REQUIRE(fl.faces.size() == 7);
}

TEST_CASE("chart walls reproduce the four displayed SU(n) domains, n <= 8")
{
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    FoldedSystem fs = folded('A', n, false);
    CHECK(chart_ineqs_as_sets(fs, build_alcove(fs)) == expected_su_domain(n, false));
  }
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    FoldedSystem fs = folded('A', n, true);
    CHECK(chart_ineqs_as_sets(fs, build_alcove(fs)) == expected_su_domain(n, true));
  }
}

TEST_CASE("face_of: tight sets and not-contained")
{
  FoldedSystem fs = folded('A', 3, true);
  Alcove alc = build_alcove(fs);

  // Chart (1/5, 1/10): u = (1/5, 3/10), strictly interior.
  auto interior = face_of(alc, qvec({Rational(1, 5), Rational(3, 10)}));
  REQUIRE(interior.has_value());
  CHECK(interior->tight.empty());

  // Chart (1/4, 1/4): u = (1/4, 1/2); tight = {affine, sigma_1}.
  auto edge = face_of(alc, qvec({Rational(1, 4), Rational(1, 2)}));
  REQUIRE(edge.has_value());
  CHECK(edge->tight == std::vector<int>({0, 1}));

  // Outside.
  CHECK_FALSE(face_of(alc, qvec({Rational(1), Rational(0)})).has_value());
  CHECK_FALSE(face_of(alc, qvec({Rational(1, 2), Rational(3, 4)})).has_value());

  FoldedSystem a2 = folded('A', 2, true);
  CHECK_FALSE(face_of(build_alcove(a2), qvec({Rational(1, 2)})).has_value());
}

TEST_CASE("vertices_and_faces: faces are proper wall subsets with correct tight sets")
{
  std::mt19937 rng(41);
  for (const FoldedSystem& fs : catalog()) {
    if (fs.m() > 4)
      continue;
    Alcove alc = build_alcove(fs);
    FaceLattice fl = vertices_and_faces(alc);
    CHECK(static_cast<size_t>(1 << (fs.m() + 1)) - 1 == fl.faces.size());
    for (const Face& f : fl.faces) {
      CHECK(f.dim == fs.m() - static_cast<int>(f.tight.size()));
      // A relative-interior point has exactly the face's tight set.
      auto pt = face_of(alc, face_interior_point(f));
      REQUIRE(pt.has_value());
      CHECK(pt->tight == f.tight);
    }
    // Vertices have full tight sets.
    for (const QVec& v : fl.vertices) {
      auto pt = face_of(alc, v);
      REQUIRE(pt.has_value());
      CHECK(static_cast<int>(pt->tight.size()) == fs.m());
    }
  }
}

TEST_CASE("reduce_to_alcove: worked rank-1 examples against the line oracle")
{
  FoldedSystem a1 = folded('A', 1, false);
  auto [p1, w1] = reduce_to_alcove(a1, qvec({Rational(7, 10)}));
  CHECK(p1.coords(0) == Rational(3, 10));
  CHECK_FALSE(w1.empty());

  FoldedSystem a2 = folded('A', 2, true);
  auto [p2, w2] = reduce_to_alcove(a2, qvec({Rational(3, 10)}));
  CHECK(p2.coords(0) == Rational(1, 5));

  // Point already inside: identity with empty witness.
  auto [p3, w3] = reduce_to_alcove(a1, qvec({Rational(1, 3)}));
  CHECK(p3.coords(0) == Rational(1, 3));
  CHECK(w3.empty());

  // Random sweep against the independent fold-the-line oracle.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-60, 60), den(1, 12);
  for (int it = 0; it < 200; ++it) {
    Rational x(num(rng), den(rng));
    CHECK(reduce_to_alcove(a1, qvec({x})).first.coords(0) == line_fold(x, 1));
    CHECK(reduce_to_alcove(a2, qvec({x})).first.coords(0)
          == line_fold(x, Rational(1, 2)));
  }
}

TEST_CASE("reduce_to_alcove: witness replay, idempotence, lattice translations")
{
  std::mt19937 rng(11);
  for (const FoldedSystem& fs : catalog()) {
    Alcove alc = build_alcove(fs);
    for (int it = 0; it < 10; ++it) {
      QVec h = random_qvec(rng, fs.m());
      auto [pt, steps] = reduce_to_alcove(fs, h);
      CHECK(face_of(alc, pt.coords).has_value());

      // Replaying the witness maps the input to the output.
      QVec replay = h;
      for (const ReductionStep& s : steps) {
        replay = apply_step(fs, s, replay);
        if (s.kind == ReductionStep::translation)
          CHECK(in_lattice(fs.proj_lattice, s.shift));
      }
      CHECK(replay == pt.coords);

      // Idempotence.
      auto [pt2, steps2] = reduce_to_alcove(fs, pt.coords);
      CHECK(pt2.coords == pt.coords);
      CHECK(pt2.tight == pt.tight);
      CHECK(steps2.empty());
    }
  }
}

TEST_CASE("reduce_to_alcove: constant on W^tau x pi(Q^vee) orbits")
{
  std::mt19937 rng(23);
  for (const FoldedSystem& fs : catalog()) {
    std::uniform_int_distribution<int> kind(0, 2), node(1, fs.m()),
        latt(-2, 2);
    for (int it = 0; it < 6; ++it) {
      QVec h = random_qvec(rng, fs.m());
      QVec base = reduce_to_alcove(fs, h).first.coords;
      QVec moved = h;
      for (int s = 0; s < 6; ++s) {
        switch (kind(rng)) {
        case 0:
          moved = apply_step(fs, {ReductionStep::simple_reflection, node(rng), QVec()},
                             moved);
          break;
        case 1:
          moved = apply_step(fs, {ReductionStep::theta_reflection, -1, QVec()}, moved);
          break;
        default: {
          QVec shift = QVec::Zero(fs.m());
          for (Eigen::Index j = 0; j < fs.proj_lattice.cols(); ++j)
            shift += Rational(latt(rng)) * fs.proj_lattice.col(j);
          moved = apply_step(fs, {ReductionStep::translation, -1, shift}, moved);
          break;
        }
        }
      }
      CHECK(reduce_to_alcove(fs, moved).first.coords == base);
    }
  }
}

TEST_CASE("su_chart: worked examples and round trips")
{
  // SU(2): coroot coordinate x <-> (x, -x).
  FoldedSystem a1 = folded('A', 1, false);
  QVec ch = su_chart(a1, qvec({Rational(1, 3)}));
  CHECK(ch == qvec({Rational(1, 3), Rational(-1, 3)}));
  CHECK(su_chart_inverse(a1, ch) == qvec({Rational(1, 3)}));

  // (A3, swap): (u, v) <-> (x1, x2) = (u, v - u).
  FoldedSystem a3 = folded('A', 3, true);
  QVec ch3 = su_chart(a3, qvec({Rational(1, 5), Rational(1, 2)}));
  CHECK(ch3 == qvec({Rational(1, 5), Rational(3, 10), Rational(-3, 10),
                     Rational(-1, 5)}));
  CHECK(su_chart_inverse(a3, ch3) == qvec({Rational(1, 5), Rational(1, 2)}));

  // SU(3) untwisted: entries sum to zero.
  FoldedSystem a2 = folded('A', 2, false);
  QVec ch2 = su_chart(a2, qvec({Rational(2, 7), Rational(-1, 7)}));
  CHECK(ch2.sum() == 0);
  CHECK(su_chart_inverse(a2, ch2) == qvec({Rational(2, 7), Rational(-1, 7)}));

  // Random round trips, untwisted and twisted, plus the twist constraint.
  std::mt19937 rng(5);
  for (int n = 1; n <= 6; ++n) {
    FoldedSystem fu = folded('A', n, false);
    for (int it = 0; it < 5; ++it) {
      QVec u = random_qvec(rng, fu.m());
      QVec c = su_chart(fu, u);
      CHECK(c.sum() == 0);
      CHECK(su_chart_inverse(fu, c) == u);
    }
    if (n >= 2) {
      FoldedSystem ft = folded('A', n, true);
      for (int it = 0; it < 5; ++it) {
        QVec u = random_qvec(rng, ft.m());
        QVec c = su_chart(ft, u);
        CHECK(c.sum() == 0);
        for (int i = 0; i <= n; ++i)
          CHECK(c(i) == -c(n - i));
        CHECK(su_chart_inverse(ft, c) == u);
      }
    }
  }

  // Errors: non-A base; non-invariant chart point.
  FoldedSystem b2 = folded('B', 2, false);
  CHECK_THROWS_AS(su_chart(b2, qvec({0, 0})), std::invalid_argument);
  FoldedSystem ft = folded('A', 3, true);
  CHECK_THROWS_AS(su_chart_inverse(ft, qvec({1, 0, -1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(su_chart_inverse(ft, qvec({1, 0, 0, 0})), std::invalid_argument);
}

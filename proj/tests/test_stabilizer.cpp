#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tcc/stabilizer.hpp"

#include <map>
#include <set>
#include <vector>

using namespace tcc;

namespace {

FoldedSystem folded(char fam, int rank, bool outer, bool triality = false)
{
  RootSystem rs = build_root_system(SimpleType(fam, rank));
  return fold(rs, outer ? outer_automorphism(rs, triality) : identity_automorphism(rs));
}

QVec qvec(std::initializer_list<Rational> xs)
{
  QVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rational& x : xs)
    v(i++) = x;
  return v;
}

AlcovePoint point_at(const FoldedSystem& fs, const QVec& coords)
{
  auto pt = face_of(build_alcove(fs), coords);
  REQUIRE(pt.has_value());
  return *pt;
}

// Map each face's tight set to its stabilizer label.
std::map<std::vector<int>, std::string> face_labels(const FoldedSystem& fs)
{
  std::map<std::vector<int>, std::string> out;
  for (const Face& f : vertices_and_faces(build_alcove(fs)).faces) {
    AlcovePoint pt = point_at(fs, face_interior_point(f));
    out[f.tight] = describe_stabilizer(fs, pt).label;
  }
  return out;
}

std::vector<FoldedSystem> catalog()
{
  std::vector<FoldedSystem> out;
  out.push_back(folded('A', 1, false));
  out.push_back(folded('A', 3, false));
  out.push_back(folded('B', 3, false));
  out.push_back(folded('C', 2, false));
  out.push_back(folded('D', 4, false));
  out.push_back(folded('F', 4, false));
  out.push_back(folded('G', 2, false));
  out.push_back(folded('A', 2, true));
  out.push_back(folded('A', 3, true));
  out.push_back(folded('A', 4, true));
  out.push_back(folded('A', 5, true));
  out.push_back(folded('D', 4, true));
  out.push_back(folded('D', 4, true, true));
  out.push_back(folded('E', 6, true));
  return out;
}

} // namespace

TEST_CASE("Figure 1: untwisted C2 panel (the right-triangle drawing)")
{
  FoldedSystem fs = folded('C', 2, false);
  auto labels = face_labels(fs);
  REQUIRE(labels.size() == 7);
  // C2 canonicalizes to B2 (Spin(5) presentation): node 1 long, node 2 short.
  CHECK(labels[{}] == "U₁×U₁");
  CHECK(labels[{1}] == "SU₂×U₁");
  CHECK(labels[{2}] == "(SU₂×U₁)/ℤ₂");
  CHECK(labels[{0}] == "SU₂×U₁");
  CHECK(labels[{1, 2}] == "Sp₄");     // H = 0, the identity class
  CHECK(labels[{0, 2}] == "Sp₄");     // the central class
  CHECK(labels[{0, 1}] == "SU₂×SU₂"); // Spin(4) inside Spin(5)
  // The drawing's label multiset: two Sp₄ vertices, one SU₂×SU₂ vertex, one
  // quotient edge, two plain SU₂×U₁ edges, torus interior.
  std::multiset<std::string> all;
  for (const auto& [tight, l] : labels)
    all.insert(l);
  CHECK(all
        == std::multiset<std::string>({"Sp₄", "Sp₄", "SU₂×SU₂", "SU₂×U₁",
                                       "SU₂×U₁", "(SU₂×U₁)/ℤ₂", "U₁×U₁"}));
}

TEST_CASE("Figure 1: twisted A3 panel (the flat-triangle drawing)")
{
  FoldedSystem fs = folded('A', 3, true);
  auto labels = face_labels(fs);
  REQUIRE(labels.size() == 7);
  CHECK(labels[{}] == "U₁×U₁");
  CHECK(labels[{1}] == "(SU₂×U₁)/ℤ₂");
  CHECK(labels[{2}] == "SU₂×U₁");
  CHECK(labels[{0}] == "(SU₂×U₁)/ℤ₂");
  CHECK(labels[{1, 2}] == "Sp₄");
  CHECK(labels[{0, 2}] == "Sp₄");
  CHECK(labels[{0, 1}] == "(SU₂×SU₂)/ℤ₂");
}

TEST_CASE("stabilizer_diagram: kept sets and recognized types")
{
  FoldedSystem fs = folded('A', 3, true);

  // Interior point: nothing kept, pure torus.
  AlcovePoint interior = point_at(fs, qvec({Rational(1, 5), Rational(3, 10)}));
  SubDiagram sub = stabilizer_diagram(fs, interior);
  CHECK(sub.kept.empty());
  CHECK(recognize_components(sub).empty());
  CHECK(describe_stabilizer(fs, interior).label == "U₁×U₁");

  // Origin: full finite diagram, type C2 (canonicalized B2).
  AlcovePoint origin = point_at(fs, qvec({0, 0}));
  SubDiagram at0 = stabilizer_diagram(fs, origin);
  CHECK(at0.kept == std::vector<int>({1, 2}));
  CHECK(recognize_components(at0) == std::vector<SimpleType>({SimpleType('C', 2)}));

  // Chart (1/2, 0) = u (1/2, 1/2): kept {affine, sigma_2}, again type C2.
  AlcovePoint v = point_at(fs, qvec({Rational(1, 2), Rational(1, 2)}));
  SubDiagram atv = stabilizer_diagram(fs, v);
  CHECK(atv.kept == std::vector<int>({0, 2}));
  CHECK(recognize_components(atv) == std::vector<SimpleType>({SimpleType('C', 2)}));

  // Chart (1/4, 1/4) = u (1/4, 1/2): kept {affine, sigma_1}, type A1 x A1.
  AlcovePoint w = point_at(fs, qvec({Rational(1, 4), Rational(1, 2)}));
  SubDiagram atw = stabilizer_diagram(fs, w);
  CHECK(atw.kept == std::vector<int>({0, 1}));
  CHECK(recognize_components(atw)
        == std::vector<SimpleType>({SimpleType('A', 1), SimpleType('A', 1)}));

  // Single kept node -> [A1].
  FoldedSystem a1 = folded('A', 1, false);
  CHECK(recognize_components(stabilizer_diagram(a1, point_at(a1, qvec({0}))))
        == std::vector<SimpleType>({SimpleType('A', 1)}));

  // Outside the alcove -> error.
  AlcovePoint bogus;
  bogus.coords = qvec({Rational(2), Rational(0)});
  CHECK_THROWS_AS(stabilizer_diagram(fs, bogus), std::invalid_argument);
}

TEST_CASE("F4 footnote: a vertex of the untwisted F4 alcove has type B4")
{
  FoldedSystem fs = folded('F', 4, false);
  bool found = false;
  for (const QVec& v : vertices_and_faces(build_alcove(fs)).vertices) {
    auto comps = recognize_components(stabilizer_diagram(fs, point_at(fs, v)));
    if (comps == std::vector<SimpleType>({SimpleType('B', 4)}))
      found = true;
  }
  CHECK(found);
}

TEST_CASE("pi1_and_quotient: worked examples")
{
  // Untwisted origin: simply connected stabilizer (the full group).
  for (auto spec : {std::pair<char, int>{'A', 3}, {'C', 2}, {'D', 4}, {'G', 2}}) {
    FoldedSystem fs = folded(spec.first, spec.second, false);
    AlcovePoint origin = point_at(fs, QVec::Zero(fs.m()));
    Pi1Result r = pi1_and_quotient(fs, origin);
    CHECK(r.free_rank == 0);
    CHECK(r.torsion.empty());
    CHECK(r.central_quotient.empty());
  }

  // Twisted A3 edges (spec'd pair): diagonal edge has F = Z/2, bottom edge not.
  FoldedSystem fs = folded('A', 3, true);
  // Chart (1/5, 1/5) = u (1/5, 2/5).
  Pi1Result diag = pi1_and_quotient(fs, point_at(fs, qvec({Rational(1, 5), Rational(2, 5)})));
  CHECK(diag.free_rank == 1);
  CHECK(diag.torsion.empty());
  CHECK(diag.central_quotient == std::vector<Int>({2}));
  // Chart (1/5, 0) = u (1/5, 1/5).
  Pi1Result bottom =
      pi1_and_quotient(fs, point_at(fs, qvec({Rational(1, 5), Rational(1, 5)})));
  CHECK(bottom.free_rank == 1);
  CHECK(bottom.torsion.empty());
  CHECK(bottom.central_quotient.empty());

  // Twisted A3 vertex chart (1/4,1/4): pi1 = Z/2 (the SO(4)-type stabilizer).
  Pi1Result so4 = pi1_and_quotient(fs, point_at(fs, qvec({Rational(1, 4), Rational(1, 2)})));
  CHECK(so4.free_rank == 0);
  CHECK(so4.torsion == std::vector<Int>({2}));
  CHECK(so4.central_quotient == std::vector<Int>({2}));

  // Twisted A2: identity class is the non-simply-connected fixed group
  // (SO(3)); the vertex x = 1/4 is simply connected.
  FoldedSystem a2 = folded('A', 2, true);
  Pi1Result at0 = pi1_and_quotient(a2, point_at(a2, qvec({0})));
  CHECK(at0.free_rank == 0);
  CHECK(at0.torsion == std::vector<Int>({2}));
  CHECK(describe_stabilizer(a2, point_at(a2, qvec({0}))).label == "SU₂/ℤ₂");
  Pi1Result atq = pi1_and_quotient(a2, point_at(a2, qvec({Rational(1, 4)})));
  CHECK(atq.free_rank == 0);
  CHECK(atq.torsion.empty());
  CHECK(describe_stabilizer(a2, point_at(a2, qvec({Rational(1, 4)}))).label == "SU₂");
}

TEST_CASE("properties across the catalog: every face of every alcove")
{
  for (const FoldedSystem& fs : catalog()) {
    Alcove alc = build_alcove(fs);
    FaceLattice fl = vertices_and_faces(alc);
    std::map<std::vector<int>, std::vector<int>> kept_of_tight;

    for (const Face& f : fl.faces) {
      AlcovePoint pt = point_at(fs, face_interior_point(f));
      SubDiagram sub = stabilizer_diagram(fs, pt);
      // Wall/diagram duality: kept = tight walls of the face.
      CHECK(sub.kept == f.tight);
      kept_of_tight[f.tight] = sub.kept;

      // Containment Q_H^vee subset ker(exp)^tau = Z^m.
      QMat identity = QMat::Identity(fs.m(), fs.m());
      for (int tag : sub.kept) {
        QVec cr = restricted_coroot(
            fs, tag == 0 ? fs.theta_tau : fs.restricted_simple[tag - 1]);
        CHECK(in_lattice(identity, cr));
      }

      StabilizerDescriptor desc = describe_stabilizer(fs, pt);
      // Rank bookkeeping and pi1 free rank.
      int comp_rank = 0;
      for (const SimpleType& t : desc.components)
        comp_rank += t.rank;
      CHECK(desc.torus_rank + comp_rank == fs.m());
      CHECK(desc.pi1_free_rank == desc.torus_rank);

      // Dimension consistency: weight-counted dimension equals
      // dim h^tau + #roots of the recognized component types.
      int root_count = 0;
      for (const SimpleType& t : desc.components)
        root_count += build_root_system(t).num_roots();
      CHECK(stabilizer_dimension(fs, pt) == fs.m() + root_count);
    }

    // Face monotonicity: smaller faces keep more nodes.
    for (const Face& f : fl.faces)
      for (const Face& g : fl.faces) {
        // g's closure contains f iff g.tight is a subset of f.tight.
        bool subset = std::includes(f.tight.begin(), f.tight.end(),
                                    g.tight.begin(), g.tight.end());
        if (subset)
          CHECK(std::includes(kept_of_tight[f.tight].begin(),
                              kept_of_tight[f.tight].end(),
                              kept_of_tight[g.tight].begin(),
                              kept_of_tight[g.tight].end()));
      }
  }
}

TEST_CASE("labels: formatting rules")
{
  StabilizerDescriptor d;
  d.components = {SimpleType('C', 2)};
  CHECK(label(d) == "Sp₄");
  d.components = {SimpleType('B', 4)};
  CHECK(label(d) == "Spin₉");
  d.components = {SimpleType('C', 3)};
  CHECK(label(d) == "Sp₆");
  d.components = {SimpleType('D', 5)};
  CHECK(label(d) == "Spin₁₀");
  d.components = {SimpleType('E', 6)};
  CHECK(label(d) == "E₆");
  d.components = {SimpleType('A', 1), SimpleType('A', 1)};
  d.central_quotient = {2};
  CHECK(label(d) == "(SU₂×SU₂)/ℤ₂");
  d.components = {SimpleType('A', 1)};
  d.torus_rank = 1;
  d.central_quotient.clear();
  CHECK(label(d) == "SU₂×U₁");
  d.central_quotient = {2};
  CHECK(label(d) == "(SU₂×U₁)/ℤ₂");
  d.components.clear();
  d.torus_rank = 2;
  d.central_quotient.clear();
  CHECK(label(d) == "U₁×U₁");
}

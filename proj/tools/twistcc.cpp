// twistcc: command-line front end for the (twisted) conjugacy-class toolkit.
//
// Commands:
//   classify  alcove faces of (G, tau) with stabilizer labels, or a single
//             point report via reduce_to_alcove; table/json/svg output.
//   integral  level-a integral classes with weight labels; table/json.
//   verify    floating-point loop-group verifier (type A only): equivariance
//             and two-form residuals against fixed tolerances.
//   info      structural summary of the folded system.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.
// Rationals are printed exactly ("p/q"); floats (verify only) use 12
// significant digits.  Output is plain text (NO_COLOR is trivially honored).

#include "tcc/integral.hpp"
#include "tcc/loopverify.hpp"
#include "tcc/stabilizer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace tcc;
using ordered_json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SimpleType parse_group(const std::string& s)
{
  try {
    if (s.size() > 2 && (s.rfind("su", 0) == 0 || s.rfind("SU", 0) == 0)) {
      int n = std::stoi(s.substr(2));
      if (n < 2)
        throw UsageError("su(n) requires n >= 2");
      return SimpleType('A', n - 1);
    }
    if (s.size() < 2)
      throw UsageError("group must be like A3, C2, D4 or su4");
    return SimpleType(static_cast<char>(std::toupper(s[0])),
                      std::stoi(s.substr(1)));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("invalid group '" + s + "': " + e.what());
  }
}

FoldedSystem make_folded(const SimpleType& type, const std::string& twist)
{
  RootSystem rs = build_root_system(type);
  try {
    if (twist == "id")
      return fold(rs, identity_automorphism(rs));
    if (twist == "outer")
      return fold(rs, outer_automorphism(rs, false));
    if (twist == "triality")
      return fold(rs, outer_automorphism(rs, true));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("--twist must be one of id, outer, triality");
}

QVec parse_point(const std::string& csv, int expected)
{
  std::vector<Rational> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    vals.push_back(parse_rational(item));
  if (static_cast<int>(vals.size()) != expected)
    throw UsageError("--point needs " + std::to_string(expected) +
                     " comma-separated rationals");
  QVec p(expected);
  for (int i = 0; i < expected; ++i)
    p(i) = vals[static_cast<size_t>(i)];
  return p;
}

std::string coords_str(const QVec& v)
{
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out += (i ? ", " : "") + to_string(v(i));
  return out + ")";
}

ordered_json coords_json(const QVec& v)
{
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    arr.push_back(to_string(v(i)));
  return arr;
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

std::string pi1_str(const StabilizerDescriptor& d)
{
  std::vector<std::string> parts;
  if (d.pi1_free_rank == 1)
    parts.push_back("ℤ");
  else if (d.pi1_free_rank > 1)
    parts.push_back("ℤ^" + std::to_string(d.pi1_free_rank));
  for (const Int& t : d.pi1_torsion)
    parts.push_back("ℤ" + subscript(t));
  if (parts.empty())
    return "1";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i)
    out += (i ? "×" : "") + parts[i];
  return out;
}

ordered_json pi1_json(const StabilizerDescriptor& d)
{
  ordered_json torsion = ordered_json::array();
  for (const Int& t : d.pi1_torsion)
    torsion.push_back(t.str());
  return ordered_json{{"free_rank", d.pi1_free_rank}, {"torsion", torsion}};
}

bool is_type_a(const FoldedSystem& fs) { return fs.base.type.family == 'A'; }

std::string chart_str(const FoldedSystem& fs, const QVec& u)
{
  return is_type_a(fs) ? coords_str(su_chart(fs, u)) : "-";
}

ordered_json chart_json(const FoldedSystem& fs, const QVec& u)
{
  if (!is_type_a(fs))
    return nullptr;
  return coords_json(su_chart(fs, u));
}

std::string twist_name(const FoldedSystem& fs)
{
  if (fs.r() == 1)
    return "id";
  return fs.r() == 3 ? "triality" : "outer";
}

struct FaceReport {
  Face face;
  QVec interior;
  StabilizerDescriptor desc;
  int dim_stab = 0;
};

std::vector<FaceReport> face_reports(const FoldedSystem& fs)
{
  Alcove alc = build_alcove(fs);
  std::vector<FaceReport> out;
  for (const Face& f : vertices_and_faces(alc).faces) {
    FaceReport rep;
    rep.face = f;
    rep.interior = face_interior_point(f);
    auto pt = face_of(alc, rep.interior);
    rep.desc = describe_stabilizer(fs, *pt);
    rep.dim_stab = stabilizer_dimension(fs, *pt);
    out.push_back(std::move(rep));
  }
  return out;
}

std::string tight_str(const std::vector<int>& tight)
{
  std::string out = "{";
  for (size_t i = 0; i < tight.size(); ++i)
    out += (i ? "," : "") + std::to_string(tight[i]);
  return out + "}";
}

std::string fmt_double(double x)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// ---------------------------------------------------------------- classify

void print_face_table(const FoldedSystem& fs, const std::vector<FaceReport>& reps)
{
  std::cout << "group " << fs.base.type.str() << "  twist " << twist_name(fs)
            << "  (m = " << fs.m() << ", r = " << fs.r() << ")\n";
  std::cout << "faces: " << reps.size() << "\n";
  std::cout << "dim  tight      coords              chart                         "
               "dimStab  stabilizer            pi1\n";
  for (const FaceReport& r : reps) {
    std::printf("%-4d %-10s %-19s %-29s %-8d %-21s %s\n", r.face.dim,
                tight_str(r.face.tight).c_str(), coords_str(r.interior).c_str(),
                chart_str(fs, r.interior).c_str(), r.dim_stab,
                r.desc.label.c_str(), pi1_str(r.desc).c_str());
  }
}

ordered_json face_json(const FoldedSystem& fs, const FaceReport& r)
{
  return ordered_json{{"dim", r.face.dim},
                      {"tight", r.face.tight},
                      {"coords", coords_json(r.interior)},
                      {"chart", chart_json(fs, r.interior)},
                      {"dimension", r.dim_stab},
                      {"stabilizer", r.desc.label},
                      {"pi1", pi1_json(r.desc)}};
}

// 2-dimensional alcove rendered as an SVG 1.1 picture with face labels.
std::string render_svg(const FoldedSystem& fs, const std::vector<FaceReport>& reps)
{
  if (fs.m() != 2)
    throw UsageError("svg output requires a 2-dimensional alcove (dim h^tau = 2)");
  auto planar = [&](const QVec& u) -> std::pair<double, double> {
    if (is_type_a(fs)) {
      QVec c = su_chart(fs, u);
      return {c(0).convert_to<double>(), c(1).convert_to<double>()};
    }
    return {u(0).convert_to<double>(), u(1).convert_to<double>()};
  };
  FaceLattice fl = vertices_and_faces(build_alcove(fs));
  double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
  std::vector<std::pair<double, double>> verts;
  for (const QVec& v : fl.vertices) {
    auto p = planar(v);
    verts.push_back(p);
    xmin = std::min(xmin, p.first);
    xmax = std::max(xmax, p.first);
    ymin = std::min(ymin, p.second);
    ymax = std::max(ymax, p.second);
  }
  double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  auto sx = [&](double x) { return 60 + 400 * (x - xmin) / span; };
  auto sy = [&](double y) { return 460 - 400 * (y - ymin) / span; };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"640\" height=\"520\">\n";
  svg << "  <polygon points=\"";
  for (size_t i = 0; i < verts.size(); ++i)
    svg << (i ? " " : "") << sx(verts[i].first) << "," << sy(verts[i].second);
  svg << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const FaceReport& r : reps) {
    auto p = planar(r.interior);
    svg << "  <text x=\"" << sx(p.first) << "\" y=\"" << sy(p.second)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << r.desc.label
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

int cmd_classify(const SimpleType& type, const std::string& twist,
                 const std::string& point, const std::string& format)
{
  FoldedSystem fs = make_folded(type, twist);
  if (!point.empty()) {
    QVec p = parse_point(point, fs.m());
    auto [reduced, steps] = reduce_to_alcove(fs, p);
    StabilizerDescriptor desc = describe_stabilizer(fs, reduced);
    int dim = stabilizer_dimension(fs, reduced);
    if (format == "json") {
      ordered_json out{{"group", type.str()},
                       {"twist", twist_name(fs)},
                       {"point", coords_json(p)},
                       {"reduced", coords_json(reduced.coords)},
                       {"chart", chart_json(fs, reduced.coords)},
                       {"tight", reduced.tight},
                       {"dimension", dim},
                       {"stabilizer", desc.label},
                       {"pi1", pi1_json(desc)}};
      std::cout << out.dump(2) << "\n";
    } else if (format == "table") {
      std::cout << "group " << type.str() << "  twist " << twist_name(fs) << "\n";
      std::cout << "point:      " << coords_str(p) << "\n";
      std::cout << "reduced:    " << coords_str(reduced.coords) << " ("
                << steps.size() << " reduction steps)\n";
      std::cout << "chart:      " << chart_str(fs, reduced.coords) << "\n";
      std::cout << "tight:      " << tight_str(reduced.tight) << "\n";
      std::cout << "dimension:  " << dim << "\n";
      std::cout << "stabilizer: " << desc.label << "\n";
      std::cout << "pi1:        " << pi1_str(desc) << "\n";
    } else {
      throw UsageError("--point reports support table or json format");
    }
    return 0;
  }
  std::vector<FaceReport> reps = face_reports(fs);
  if (format == "table") {
    print_face_table(fs, reps);
  } else if (format == "json") {
    ordered_json faces = ordered_json::array();
    for (const FaceReport& r : reps)
      faces.push_back(face_json(fs, r));
    ordered_json out{
        {"group", type.str()}, {"twist", twist_name(fs)}, {"faces", faces}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "svg") {
    std::cout << render_svg(fs, reps);
  } else {
    throw UsageError("--format must be table, json or svg");
  }
  return 0;
}

// ---------------------------------------------------------------- integral

int cmd_integral(const SimpleType& type, const std::string& twist, long long level,
                 const std::string& format)
{
  FoldedSystem fs = make_folded(type, twist);
  if (level <= 0)
    throw UsageError("the level must be a nonzero integer (a in Z \\ {0}); "
                     "negative levels match positive ones by sign symmetry");
  std::vector<IntegralClass> classes = enumerate_integral(fs, Int(level));
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const IntegralClass& c : classes) {
      ordered_json labels = ordered_json::array();
      for (Eigen::Index i = 0; i < c.labels.size(); ++i)
        labels.push_back(c.labels(i).convert_to<long long>());
      StabilizerDescriptor desc = describe_stabilizer(fs, c.point);
      arr.push_back(ordered_json{{"coords", coords_json(c.point.coords)},
                                 {"chart", chart_json(fs, c.point.coords)},
                                 {"labels", labels},
                                 {"stabilizer", desc.label}});
    }
    ordered_json out{{"group", type.str()},
                     {"twist", twist_name(fs)},
                     {"level", level},
                     {"classes", arr}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "table") {
    std::cout << "group " << type.str() << "  twist " << twist_name(fs)
              << "  level " << level << "\n";
    std::cout << "coords              chart                         labels"
                 "          stabilizer\n";
    for (const IntegralClass& c : classes) {
      std::string labels = "[";
      for (Eigen::Index i = 0; i < c.labels.size(); ++i)
        labels += (i ? "," : "") + c.labels(i).str();
      labels += "]";
      StabilizerDescriptor desc = describe_stabilizer(fs, c.point);
      std::printf("%-19s %-29s %-15s %s\n", coords_str(c.point.coords).c_str(),
                  chart_str(fs, c.point.coords).c_str(), labels.c_str(),
                  desc.label.c_str());
    }
    std::cout << "count: " << classes.size() << "\n";
  } else {
    throw UsageError("--format must be table or json for integral");
  }
  return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const SimpleType& type, const std::string& twist, long long level,
               int samples, unsigned seed, int steps, const std::string& format)
{
  if (type.family != 'A')
    throw UsageError("matrix verifier supports type A only");
  const int n = type.rank + 1;
  if (n > 5)
    throw UsageError("matrix verifier supports su(n) with n <= 5");
  if (level == 0)
    throw UsageError("the level must be a nonzero integer (a in Z \\ {0})");
  if (samples < 1 || steps < 64)
    throw UsageError("verify needs --samples >= 1 and --steps >= 64");
  FoldedSystem fs = make_folded(type, twist);
  const int r = fs.r();
  const double a = static_cast<double>(level);

  // Constant X in h^tau for the two-form identity: the alcove barycenter.
  FaceLattice fl = vertices_and_faces(build_alcove(fs));
  QVec interior = face_interior_point(fl.faces.back());
  for (const Face& f : fl.faces)
    if (f.dim == fs.m())
      interior = face_interior_point(f);
  CMat x_const = chart_to_algebra(su_chart(fs, interior));

  std::vector<double> eq_res, tf_res;
  for (int i = 0; i < samples; ++i) {
    AlgebraLoop x = sample_algebra_loop(n, r, seed + 17 * i, 2);
    GroupLoop g = sample_group_loop(n, r, seed + 17 * i + 7, 2);
    eq_res.push_back(check_equivariance(x, a, g, steps));
    AlgebraLoop b1 = sample_algebra_loop(n, r, seed + 17 * i + 11, 2);
    AlgebraLoop b2 = sample_algebra_loop(n, r, seed + 17 * i + 13, 2);
    TwoFormResult tf = two_form_residual(x_const, a, b1, b2, 1024);
    tf_res.push_back(tf.residual / tf.scale);
  }
  auto stats = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return std::pair<double, double>{v[v.size() / 2], v.back()};
  };
  auto [eq_med, eq_max] = stats(eq_res);
  auto [tf_med, tf_max] = stats(tf_res);
  const double tol = 1e-6;
  bool pass = eq_max < tol && tf_max < tol;

  if (format == "json") {
    ordered_json out{{"group", type.str()},
                     {"twist", twist_name(fs)},
                     {"level", level},
                     {"samples", samples},
                     {"steps", steps},
                     {"equivariance", ordered_json{{"median", fmt_double(eq_med)},
                                                   {"max", fmt_double(eq_max)}}},
                     {"two_form", ordered_json{{"median", fmt_double(tf_med)},
                                               {"max", fmt_double(tf_max)}}},
                     {"tolerance", fmt_double(tol)},
                     {"pass", pass}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "group " << type.str() << "  twist " << twist_name(fs)
              << "  level " << level << "  samples " << samples << "  steps "
              << steps << "\n";
    std::cout << "equivariance residual: median " << fmt_double(eq_med)
              << "  max " << fmt_double(eq_max) << "\n";
    std::cout << "two-form rel residual: median " << fmt_double(tf_med)
              << "  max " << fmt_double(tf_max) << "\n";
    std::cout << "tolerance " << fmt_double(tol) << ": "
              << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

// -------------------------------------------------------------------- info

int cmd_info(const SimpleType& type, const std::string& twist)
{
  FoldedSystem fs = make_folded(type, twist);
  auto [rho, h] = rho_and_dual_coxeter(fs);
  std::cout << "group " << type.str() << "  twist " << twist_name(fs) << "\n";
  std::cout << "rank m = " << fs.m() << ", twist order r = " << fs.r() << "\n";
  std::cout << "twisted affine Cartan matrix:\n";
  const IMat& ac = twisted_affine_cartan(fs);
  for (Eigen::Index i = 0; i < ac.rows(); ++i) {
    std::cout << "  ";
    for (Eigen::Index j = 0; j < ac.cols(); ++j)
      std::cout << (j ? " " : "") << ac(i, j);
    std::cout << "\n";
  }
  std::cout << "comarks: ";
  for (Eigen::Index i = 0; i < comarks(fs).size(); ++i)
    std::cout << (i ? " " : "") << comarks(fs)(i);
  std::cout << "\n";
  std::cout << "dual Coxeter number: " << h << "\n";
  std::cout << "rho_tau: " << coords_str(rho) << "\n";
  std::cout << "alcove vertices:";
  for (const QVec& v : vertices_and_faces(build_alcove(fs)).vertices)
    std::cout << " " << coords_str(v);
  std::cout << "\n";
  AbelianGroup cg = component_group(fs);
  std::cout << "component group invariant factors:";
  if (cg.trivial())
    std::cout << " (trivial)";
  if (cg.free_rank > 0)
    std::cout << " Z^" << cg.free_rank;
  for (const Int& t : cg.torsion)
    std::cout << " " << t.str();
  std::cout << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"twisted conjugacy class toolkit"};
  app.require_subcommand(1);

  std::string group, twist = "id", point, format = "table";
  long long level = 1;
  int samples = 5, steps = 4096;
  unsigned seed = 0;

  auto add_common = [&](CLI::App* sub, bool with_format = true) {
    sub->add_option("group", group, "group, e.g. A3, C2, D4 or su4")->required();
    sub->add_option("--twist", twist, "diagram automorphism: id, outer, triality");
    if (with_format)
      sub->add_option("--format", format, "output format");
  };

  CLI::App* classify = app.add_subcommand("classify", "alcove faces and stabilizers");
  add_common(classify);
  classify->add_option("--point", point, "rational u-coordinates, e.g. 1/5,1/10");

  CLI::App* integral = app.add_subcommand("integral", "level-a integral classes");
  add_common(integral);
  integral->add_option("--level", level, "integral level a")->required();

  CLI::App* verify = app.add_subcommand("verify", "loop-group verifier (type A)");
  add_common(verify);
  verify->add_option("--level", level, "level a (nonzero)");
  verify->add_option("--samples", samples, "number of random samples");
  verify->add_option("--seed", seed, "PRNG seed");
  verify->add_option("--steps", steps, "monodromy solver steps");

  CLI::App* info = app.add_subcommand("info", "folded-system summary");
  add_common(info, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    SimpleType type = parse_group(group);
    if (classify->parsed())
      return cmd_classify(type, twist, point, format);
    if (integral->parsed())
      return cmd_integral(type, twist, level, format);
    if (verify->parsed())
      return cmd_verify(type, twist, level, samples, seed, steps, format);
    return cmd_info(type, twist);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

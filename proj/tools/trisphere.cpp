// Command-line interface: coordinate conversion, classification, extremal
// triangle solvers, figure-data export, orbit listing, and Monte Carlo
// sampling of the symmetric measure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trisphere/export_data.hpp"
#include "trisphere/group.hpp"
#include "trisphere/sampling.hpp"
#include "trisphere/solvers.hpp"

using nlohmann::json;
using namespace trisphere;

namespace {

// Exit codes: 0 success, 2 usage, 3 invalid triangle, 4 solver/certificate
// failure, 5 I/O.
constexpr int kExitUsage = 2;
constexpr int kExitInvalidTriangle = 3;
constexpr int kExitSolver = 4;
constexpr int kExitIo = 5;

json point_json(const SpherePoint& p) { return {p.x, p.y, p.z}; }
json sides_json(const TriangleSides& t) { return {t.a, t.b, t.c}; }

json record(const std::string& command, json inputs, json results) {
  return {{"command", command}, {"inputs", std::move(inputs)},
          {"results", std::move(results)}};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json solver_json(const SolverResult& r) {
  json j = {{"point", point_json(r.point)},
            {"sides", sides_json(r.sides)},
            {"inradius", r.inradius},
            {"classification", classify(r.sides).names()}};
  if (r.t0) j["t0"] = *r.t0;
  if (r.alpha) j["alpha"] = *r.alpha;
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  out << content;
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

struct ConvertedTriangle {
  TriangleSides sides;
  SpherePoint point;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical model of planar-triangle shape space"};
  app.require_subcommand(1);
  std::cout.precision(15);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON on stdout");
  double tol = kClassifyTol;
  app.add_option("--tol", tol, "classification tolerance")->capture_default_str();

  // convert
  auto* convert = app.add_subcommand("convert", "translate between side lengths and sphere coordinates");
  std::vector<double> conv_sides, conv_point;
  convert->add_option("--sides", conv_sides, "three side lengths (any scale)")->expected(3);
  convert->add_option("--point", conv_point, "sphere point x y z")->expected(3);

  // classify
  auto* cls = app.add_subcommand("classify", "classify a triangle by its side lengths");
  std::vector<double> cls_sides;
  cls->add_option("--sides", cls_sides, "three side lengths (any scale)")
      ->expected(3)->required();

  // solve
  auto* solve = app.add_subcommand("solve", "extremal triangle solvers");
  std::string constraint;
  solve->add_option("constraint", constraint, "none|ordered|obtuse|acute|extremes")
      ->required()
      ->check(CLI::IsMember({"none", "ordered", "obtuse", "acute", "extremes"}));

  // export
  auto* exp = app.add_subcommand("export", "write figure-reproduction data");
  std::string what, format = "csv", out_path = "-";
  int samples = 360;
  std::vector<double> view = {1, 1, 1};
  exp->add_option("what", what, "tiling|right-curve|figure")
      ->required()->check(CLI::IsMember({"tiling", "right-curve", "figure"}));
  exp->add_option("--samples", samples, "points per polyline")
      ->check(CLI::Range(2, 1000000))->capture_default_str();
  exp->add_option("--format", format, "csv|json|svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}))->capture_default_str();
  exp->add_option("--out", out_path, "output path, - for stdout")->capture_default_str();
  exp->add_option("--view", view, "SVG view axis")->expected(3);

  // sample
  auto* sample = app.add_subcommand("sample", "Monte Carlo sampling of the symmetric measure");
  std::uint64_t n = 0, seed = 0;
  int shards = 1;
  sample->add_option("n", n, "number of samples")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "RNG seed")->capture_default_str();
  sample->add_option("--shards", shards, "worker count (result is shard-independent)")
      ->check(CLI::Range(1, 256))->capture_default_str();

  // orbit
  auto* orbit = app.add_subcommand("orbit", "print the 48 hyperoctahedral images of a point");
  std::vector<double> orbit_point;
  orbit->add_option("--point", orbit_point, "sphere point x y z")->expected(3)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*convert) {
      if (conv_sides.empty() == conv_point.empty()) {
        std::cerr << "convert: give exactly one of --sides or --point\n";
        return kExitUsage;
      }
      ConvertedTriangle ct{};
      if (!conv_sides.empty()) {
        ct.sides = normalize_perimeter(conv_sides[0], conv_sides[1], conv_sides[2]);
        ct.point = point_from_sides(ct.sides);
      } else {
        ct.point = normalize(Vec3{conv_point[0], conv_point[1], conv_point[2]});
        ct.sides = sides_from_point(ct.point);
      }
      SCoords s = s_coords(ct.sides);
      if (as_json) {
        print_json(record("convert",
                          {{"sides", conv_sides}, {"point", conv_point}},
                          {{"sides", sides_json(ct.sides)},
                           {"s_coords", {s.sa, s.sb, s.sc}},
                           {"point", point_json(ct.point)}}));
      } else {
        std::cout << "sides    " << ct.sides.a << ' ' << ct.sides.b << ' '
                  << ct.sides.c << "\n";
        std::cout << "s-coords " << s.sa << ' ' << s.sb << ' ' << s.sc << "\n";
        std::cout << "point    " << ct.point.x << ' ' << ct.point.y << ' '
                  << ct.point.z << "\n";
      }
    } else if (*cls) {
      TriangleSides t = normalize_perimeter(cls_sides[0], cls_sides[1], cls_sides[2]);
      auto names = classify(t, tol).names();
      if (as_json) {
        print_json(record("classify", {{"sides", cls_sides}, {"tol", tol}},
                          {{"flags", names}}));
      } else {
        for (std::size_t i = 0; i < names.size(); ++i)
          std::cout << names[i] << (i + 1 < names.size() ? " " : "\n");
      }
    } else if (*solve) {
      json results;
      if (constraint == "none") {
        results = solver_json(least_symmetric());
      } else if (constraint == "ordered") {
        results = solver_json(least_symmetric_ordered());
      } else if (constraint == "obtuse") {
        SolverResult r = least_symmetric_obtuse();
        verify_certificate(CertificateKind::obtuse, *r.alpha);
        results = solver_json(r);
        results["certificate"] = "degree-24 palindromic polynomial";
      } else if (constraint == "acute") {
        SolverResult r = least_symmetric_acute();
        verify_certificate(CertificateKind::acute, *r.alpha);
        results = solver_json(r);
        results["certificate"] = "degree-52 palindromic polynomial";
      } else {
        auto [mac, mob] = most_acute_and_most_obtuse();
        results = {{"most_acute", solver_json(mac)}, {"most_obtuse", solver_json(mob)}};
      }
      print_json(record("solve", {{"constraint", constraint}}, results));
    } else if (*exp) {
      ExportBundle b;
      if (what == "tiling")
        b = make_tiling(samples);
      else if (what == "right-curve")
        b = make_right_curve(samples);
      else
        b = make_figure(samples);
      std::string content;
      if (format == "csv")
        content = to_csv(b);
      else if (format == "svg")
        content = to_svg(b, {view[0], view[1], view[2]});
      else
        content = record("export",
                         {{"what", what}, {"samples", samples}},
                         bundle_json(b)).dump(2) + "\n";
      if (out_path == "-")
        std::cout << content;
      else
        write_file(out_path, content);
    } else if (*sample) {
      SampleReport r = run_sample(n, seed, shards, tol);
      json fr(r.fractions);
      json body = {{"n", r.n},
                   {"seed", r.seed},
                   {"shards", r.shards},
                   {"fractions", fr},
                   {"mean_symmetry_distance", r.mean_symmetry_distance}};
      if (as_json) {
        print_json(record("sample", {{"n", n}, {"seed", seed}, {"shards", shards}}, body));
      } else {
        std::cout << "n " << r.n << " seed " << r.seed << "\n";
        for (const auto& [k, v] : r.fractions) std::cout << k << " " << v << "\n";
        std::cout << "mean_symmetry_distance " << r.mean_symmetry_distance << "\n";
      }
    } else if (*orbit) {
      SpherePoint p = normalize(Vec3{orbit_point[0], orbit_point[1], orbit_point[2]});
      if (as_json) {
        json imgs = json::array();
        for (const auto& g : b3_elements()) imgs.push_back(point_json(apply(g, p)));
        print_json(record("orbit", {{"point", orbit_point}}, {{"images", imgs}}));
      } else {
        for (const auto& g : b3_elements()) {
          SpherePoint q = apply(g, p);
          std::cout << q.x << ' ' << q.y << ' ' << q.z << "\n";
        }
      }
    }
  } catch (const NotATriangle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidTriangle;
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidTriangle;
  } catch (const SolverFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const CertificateFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

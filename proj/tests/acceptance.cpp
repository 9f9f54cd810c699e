// Acceptance suite: one pass/fail line per criterion. Expects the CLI binary
// path as argv[1] (used by the determinism criterion).

#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <set>
#include <string>

#include "trisphere/export_data.hpp"
#include "trisphere/group.hpp"
#include "trisphere/loci.hpp"
#include "trisphere/sampling.hpp"
#include "trisphere/solvers.hpp"
#include "test_util.hpp"

using namespace trisphere;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("criterion %d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++g_failures;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

double round4(double v) { return std::round(v * 1e4) / 1e4; }

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

const double r2 = std::sqrt(2.0);
const double r3 = std::sqrt(3.0);

// Criterion 1: the least symmetric triangle.
void criterion1() {
  SolverResult r = least_symmetric();
  bool ok = near(r.sides.a, (28 + 2 * r2) / 97, 1e-12) &&
            near(r.sides.b, (82 - 8 * r2) / 97, 1e-12) &&
            near(r.sides.c, (84 + 6 * r2) / 97, 1e-12);
  // 4-decimal approximations. The published rounding of c is 0.9535
  // (= (84 + 6 sqrt 2)/97 to 4 places).
  ok = ok && round4(r.sides.a) == 0.3178 && round4(r.sides.b) == 0.7287 &&
       round4(r.sides.c) == 0.9535;
  ok = ok && near(r.sides.b / r.sides.a, 3 - 1 / r2, 1e-12) &&
       near(r.sides.c / r.sides.a, 3.0, 1e-12);
  report(1, ok, "least symmetric triangle sides and ratio");
}

// Criterion 2: incenter and inradius of T.
void criterion2() {
  SolverResult r = least_symmetric();
  double n = std::sqrt(13 + 6 * r2);
  bool ok = near(r.point.x, (1 + 2 * r2) / n, 1e-14) &&
            near(r.point.y, (1 + r2) / n, 1e-14) &&
            near(r.point.z, 1 / n, 1e-14) &&
            near(r.inradius, std::asin(std::sqrt((13 - 6 * r2) / 97)), 1e-10);
  report(2, ok, "incenter of the fundamental domain");
}

// Criterion 3: incenter of D (the 1:4:5 degenerate triangle).
void criterion3() {
  SolverResult r = least_symmetric_ordered();
  double r5 = std::sqrt(5.0);
  bool ok = near(r.point.x, 2 / r5, 1e-14) && near(r.point.y, 1 / r5, 1e-14) &&
            near(r.point.z, 0.0, 1e-14);
  ok = ok && near(r.sides.a, 0.2, 1e-14) && near(r.sides.b, 0.8, 1e-14) &&
       near(r.sides.c, 1.0, 1e-14);
  ok = ok && near(r.inradius, std::acos(3 / std::sqrt(10.0)), 1e-10);
  report(3, ok, "incenter of the ordered chamber (1:4:5 triangle)");
}

// Criterion 4: the least symmetric obtuse triangle.
void criterion4() {
  SolverResult r = least_symmetric_obtuse();
  bool ok = near(r.point.x, 0.817293, 1e-6) && near(r.point.y, 0.542464, 1e-6) &&
            near(r.point.z, 0.194334, 1e-6);
  ok = ok && near(r.sides.a, 0.332032, 1e-6) && near(r.sides.b, 0.705733, 1e-6) &&
       near(r.sides.c, 0.962234, 1e-6);
  ok = ok && near(r.inradius, 0.195578, 1e-6) && r.alpha &&
       near(*r.alpha, 0.140112, 1e-6);
  try {
    PolynomialCertificate c = verify_certificate(CertificateKind::obtuse, *r.alpha);
    ok = ok && (c.bracket_hi - c.bracket_lo) < 1e-12;
  } catch (const Error&) {
    ok = false;
  }
  report(4, ok, "least symmetric obtuse triangle and degree-24 certificate");
}

// Criterion 5: the least symmetric acute triangle.
void criterion5() {
  SolverResult r = least_symmetric_acute();
  bool ok = near(r.point.x, 0.670125, 1e-6) && near(r.point.y, 0.571734, 1e-6) &&
            near(r.point.z, 0.473343, 1e-6);
  ok = ok && near(r.sides.a, 0.550933, 1e-6) && near(r.sides.b, 0.673120, 1e-6) &&
       near(r.sides.c, 0.775946, 1e-6);
  ok = ok && near(r.inradius, 0.069629, 1e-6) && r.alpha &&
       near(*r.alpha, 0.069912, 1e-6);
  try {
    PolynomialCertificate c = verify_certificate(CertificateKind::acute, *r.alpha);
    ok = ok && (c.bracket_hi - c.bracket_lo) < 1e-12;
  } catch (const Error&) {
    ok = false;
  }
  report(5, ok, "least symmetric acute triangle and degree-52 certificate");
}

// Criterion 6: distances from the two symmetric points to the right locus.
void criterion6() {
  double want_eq = std::acos((r2 - 1 + 2 * std::sqrt(r2 - 1)) / r3);
  double want_deg = std::acos(std::sqrt(2 * (r2 - 1)));
  bool ok = near(distance_to_right({1 / r3, 1 / r3, 1 / r3}), want_eq, 1e-8) &&
            near(distance_to_right({1 / r2, 1 / r2, 0}), want_deg, 1e-8);
  report(6, ok, "equilateral and degenerate-isosceles distances to right locus");
}

// Criterion 7: the inscribed circle of the acute solution is larger than the
// circle around the equilateral point (tangent to the ring of six inscribed
// circles, radius t0 - inradius) by about 0.000333.
void criterion7() {
  SolverResult r = least_symmetric_acute();
  double ring_gap = *r.t0 - r.inradius;
  double gap = std::abs(r.inradius - ring_gap);
  report(7, near(gap, 0.000333, 1e-5), "acute-solution vs equilateral circle gap");
}

// Criterion 8: property suites.
void criterion8() {
  bool ok = true;

  // Group axioms over all 48^2 products.
  const auto& g = b3_elements();
  ok = ok && g.size() == 48;
  std::set<std::pair<std::array<int, 3>, std::array<int, 3>>> elems;
  for (const auto& e : g) elems.insert({e.perm, e.sign});
  ok = ok && elems.size() == 48 &&
       elems.count({SignedPermutation::identity().perm,
                    SignedPermutation::identity().sign}) == 1;
  for (const auto& a : g) {
    ok = ok && elems.count({inverse(a).perm, inverse(a).sign}) == 1;
    for (const auto& b : g) {
      SignedPermutation c = compose(a, b);
      ok = ok && elems.count({c.perm, c.sign}) == 1;
    }
  }

  // Coordinate round trips on 1e4 random triangles.
  test_util::Rng rng(1001);
  for (int i = 0; i < 10000 && ok; ++i) {
    TriangleSides t = rng.triangle_sides();
    TriangleSides back = sides_from_point(point_from_sides(t));
    ok = near(back.a, t.a, 1e-12) && near(back.b, t.b, 1e-12) &&
         near(back.c, t.c, 1e-12);
  }

  // B3-invariance of both distance functions on 1e3 random points.
  for (int i = 0; i < 1000 && ok; ++i) {
    SpherePoint p = rng.sphere_point();
    double ds = distance_to_symmetric(p);
    double dr = distance_to_right(p);
    for (const auto& e : g) {
      ok = ok && near(distance_to_symmetric(apply(e, p)), ds, 1e-12) &&
           near(distance_to_right(apply(e, p)), dr, 1e-12);
      if (!ok) break;
    }
  }

  // Dense-sampling oracles.
  for (int rep = 0; rep < 20 && ok; ++rep) {
    SpherePoint p = rng.sphere_point();
    GreatCircle c{rng.sphere_point()};
    Vec3 nrm = c.normal.vec();
    Vec3 seedv = std::abs(nrm.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    SpherePoint u = normalize(cross(nrm, seedv));
    SpherePoint w = normalize(cross(nrm, u.vec()));
    double best = std::numbers::pi;
    for (int i = 0; i < 200000; ++i) {
      double th = 2 * std::numbers::pi * i / 200000;
      Vec3 v = u.vec() * std::cos(th) + w.vec() * std::sin(th);
      best = std::min(best, geodesic_distance(p, {v.x, v.y, v.z}));
    }
    ok = ok && near(point_circle_distance(p, c), best, 1e-4);
  }
  for (int rep = 0; rep < 5 && ok; ++rep) {
    SpherePoint p = rng.sphere_point();
    double best = std::numbers::pi;
    for (int i = 0; i <= 100000; ++i) {
      double th = (std::numbers::pi / 2) * i / 100000;
      SpherePoint q = right_curve_point(std::sin(th));
      for (const auto& e : g) best = std::min(best, geodesic_distance(apply(e, p), q));
    }
    ok = ok && near(distance_to_right(p), best, 1e-4);
  }

  report(8, ok, "group axioms, round trips, invariance, sampling oracles");
}

// Quadrature oracle for the obtuse fraction. Within the chamber
// 0 <= z <= y <= x the obtuse region lies between the wall x = y and the
// right curve; in cylindrical equal-area coordinates its area is
// int_0^{sqrt(2)-1} (pi/4 - phi_c(z)) dz with
// cos(2 phi_c) = sqrt(s^2 + 4s - 4)/s, s = 1 - z^2.
double obtuse_fraction_quadrature() {
  auto f = [](double z) {
    double s = 1 - z * z;
    double disc = s * s + 4 * s - 4;
    if (disc < 0) disc = 0;
    double phi = 0.5 * std::acos(std::min(1.0, std::sqrt(disc) / s));
    return std::numbers::pi / 4 - phi;
  };
  const int n = 1 << 21;  // composite Simpson
  double a = 0, b = std::sqrt(2.0) - 1;
  double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  double area = sum * h / 3;
  return area / (std::numbers::pi / 12);
}

// Criterion 9: sampling determinism and agreement with the quadrature oracle.
void criterion9(const std::string& cli) {
  bool ok = true;
  if (!cli.empty()) {
    std::string base = cli + " --json sample 200000 --seed 7";
    std::string a = run_command(base + " --shards 1");
    std::string b = run_command(base + " --shards 1");
    std::string c = run_command(base + " --shards 3");
    ok = !a.empty() && a == b;
    // Shard-count independence: all report fields except the shard count.
    auto ja = nlohmann::json::parse(a), jc = nlohmann::json::parse(c);
    ja["results"].erase("shards");
    jc["results"].erase("shards");
    ja["inputs"].erase("shards");
    jc["inputs"].erase("shards");
    ok = ok && ja == jc;
  } else {
    ok = false;
  }

  SampleReport r = run_sample(1000000, 2024, 4);
  double f = r.fractions.at("obtuse");
  double oracle = obtuse_fraction_quadrature();
  double se = std::sqrt(oracle * (1 - oracle) / 1e6);
  ok = ok && std::abs(f - oracle) <= 3 * se;
  report(9, ok, "sampling determinism and obtuse fraction vs quadrature");
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(cli);
  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}

#pragma once

// Symmetry loci on the sphere: the six isosceles great circles, the three
// degenerate great circles, and the quartic curve of right triangles with
// geodesic distance functions to each locus.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "trisphere/group.hpp"
#include "trisphere/minimize.hpp"
#include "trisphere/sphere.hpp"

namespace trisphere {

// The nine great circles of symmetric (isosceles or degenerate) triangles.
struct SymmetryLoci {
  std::array<GreatCircle, 6> isosceles;  // x -+ y = 0, y -+ z = 0, z -+ x = 0
  std::array<GreatCircle, 3> degenerate;  // x = 0, y = 0, z = 0
};

inline const SymmetryLoci& symmetry_loci() {
  static const SymmetryLoci loci = [] {
    SymmetryLoci l;
    l.isosceles = {GreatCircle::through_normal({1, -1, 0}),
                   GreatCircle::through_normal({1, 1, 0}),
                   GreatCircle::through_normal({0, 1, -1}),
                   GreatCircle::through_normal({0, 1, 1}),
                   GreatCircle::through_normal({-1, 0, 1}),
                   GreatCircle::through_normal({1, 0, 1})};
    l.degenerate = {GreatCircle::through_normal({1, 0, 0}),
                    GreatCircle::through_normal({0, 1, 0}),
                    GreatCircle::through_normal({0, 0, 1})};
    return l;
  }();
  return loci;
}

inline double distance_to_isosceles(const SpherePoint& p) {
  const auto& l = symmetry_loci();
  double d = std::numbers::pi;
  for (const auto& c : l.isosceles) d = std::min(d, point_circle_distance(p, c));
  return d;
}

inline double distance_to_symmetric(const SpherePoint& p) {
  const auto& l = symmetry_loci();
  double d = distance_to_isosceles(p);
  for (const auto& c : l.degenerate) d = std::min(d, point_circle_distance(p, c));
  return d;
}

// Canonical branch of the right-triangle locus: the arc of
// (1-x^2)^2 + (1-y^2)^2 = (1-z^2)^2 on the sphere with y, z >= 0,
// parametrized by x in [0, 1]. The full locus is its B_3 orbit.
inline SpherePoint right_curve_point(double x) {
  if (x < 0 || x > 1) throw OutOfDomain("right_curve_point: x outside [0,1]");
  double w = std::sqrt((1 - x * x) / (1 + x * x));
  return {x, w, x * w};
}

// Residual of the defining quartic, for verification.
inline double right_curve_residual(const SpherePoint& p) {
  double a = 1 - p.x * p.x, b = 1 - p.y * p.y, c = 1 - p.z * p.z;
  return a * a + b * b - c * c;
}

namespace detail {

// The curve is scanned in the angle variable th with x = sin(th), which has
// bounded parametrization speed everywhere (d/dx blows up at x = 1).
inline SpherePoint right_curve_angle(double th) {
  double x = std::sin(th);
  double c2 = std::cos(th) * std::cos(th);
  double w = std::sqrt(c2 / (2 - c2));
  return {x, w, x * w};
}

inline constexpr int kCurveScanSamples = 256;

inline const std::array<SpherePoint, kCurveScanSamples + 1>& curve_scan_table() {
  static const auto table = [] {
    std::array<SpherePoint, kCurveScanSamples + 1> t{};
    for (int i = 0; i <= kCurveScanSamples; ++i)
      t[i] = right_curve_angle((std::numbers::pi / 2) * i / kCurveScanSamples);
    return t;
  }();
  return table;
}

// Minimum geodesic distance from p to the canonical branch: uniform scan to
// bracket, then golden-section refinement.
inline double distance_to_canonical_branch(const SpherePoint& p) {
  const auto& table = curve_scan_table();
  int best = 0;
  double best_dot = -2;
  for (int i = 0; i <= kCurveScanSamples; ++i) {
    double d = dot(p.vec(), table[i].vec());
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  double h = (std::numbers::pi / 2) / kCurveScanSamples;
  double lo = std::max(0.0, (best - 1) * h);
  double hi = std::min(std::numbers::pi / 2, (best + 1) * h);
  auto f = [&](double th) { return geodesic_distance(p, right_curve_angle(th)); };
  double th = golden_section_minimize(f, lo, hi, 1e-13);
  return std::min({f(th), f(lo), f(hi)});
}

}  // namespace detail

// Exact distance to the full right-triangle locus: minimum over the B_3
// orbit of the canonical branch.
inline double distance_to_right(const SpherePoint& p) {
  double d = std::numbers::pi;
  for (const auto& g : b3_elements())
    d = std::min(d, detail::distance_to_canonical_branch(apply(g, p)));
  return d;
}

// Distance from a point on a bisector arc to the canonical right-curve
// branch, as a function of the arc parameter.
inline double curve_wall_distance(double t, const ArcParametrization& arc) {
  return detail::distance_to_canonical_branch(arc_point(arc, t));
}

}  // namespace trisphere

#pragma once

// Extremal-triangle solvers: closed-form incenters of the chambers D and T,
// the curved-wall farthest-point problems for obtuse and acute triangles,
// and integer polynomial certificates for the roots alpha and alpha-tilde.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "trisphere/loci.hpp"
#include "trisphere/minimize.hpp"
#include "trisphere/triangle.hpp"

namespace trisphere {

struct SolverResult {
  SpherePoint point;
  TriangleSides sides;
  double inradius = 0;            // distance to each boundary component, radians
  std::optional<double> t0;       // arc parameter of the farthest point
  std::optional<double> alpha;    // tan(t0 / 2)
};

struct PolynomialCertificate {
  std::vector<std::int64_t> coefficients;  // highest degree first
  double root = 0;
  double bracket_lo = 0, bracket_hi = 0;
};

enum class CertificateKind { obtuse, acute };

// Integer coefficients of the two even palindromic polynomials whose
// smallest positive roots are alpha and alpha-tilde. Highest degree first,
// odd-degree coefficients (all zero) omitted.
inline const std::vector<std::int64_t>& certificate_coefficients(CertificateKind k) {
  static const std::vector<std::int64_t> deg24 = {
      16,      -992,    9689,   -36232, 100908, -197080, 238166,
      -197080, 100908,  -36232, 9689,   -992,   16};
  static const std::vector<std::int64_t> deg52 = {
      131072,          -30081024,       715784192,       -10181738496,
      83609604096,     -443259328512,   1410471953408,   -1858643071488,
      18137673285920,  -14367112128688, 56162265469488,  -73041229883512,
      73382345772378,  -122601623733111, 73382345772378, -73041229883512,
      56162265469488,  -14367112128688, 18137673285920,  -1858643071488,
      1410471953408,   -443259328512,   83609604096,     -10181738496,
      715784192,       -30081024,       131072};
  return k == CertificateKind::obtuse ? deg24 : deg52;
}

namespace detail {

struct TwoSum {
  double s, e;
};

inline TwoSum two_sum(double a, double b) {
  double s = a + b;
  double bv = s - a;
  double e = (a - (s - bv)) + (b - bv);
  return {s, e};
}

inline TwoSum two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Compensated Horner evaluation of the even polynomial in w = z^2. The
// degree-52 certificate mixes coefficients up to ~1.2e14 with near-total
// cancellation at the root, so plain double Horner loses the sign.
inline double eval_even_poly(std::span<const std::int64_t> coeffs, double z) {
  double w = z * z;
  double s = static_cast<double>(coeffs[0]);
  double err = 0;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    TwoSum p = two_prod(s, w);
    TwoSum q = two_sum(p.s, static_cast<double>(coeffs[i]));
    s = q.s;
    err = err * w + (p.e + q.e);
  }
  return s + err;
}

}  // namespace detail

// Certifies that `root` brackets a sign change of the corresponding integer
// polynomial within width 1e-12, and that it is the smallest positive root
// (no sign change on (0, root) at step 1e-4).
inline PolynomialCertificate verify_certificate(CertificateKind kind, double root) {
  const auto& coeffs = certificate_coefficients(kind);
  auto eval = [&](double z) { return detail::eval_even_poly(coeffs, z); };

  double h = 6.25e-14;
  double lo = 0, hi = 0;
  bool bracketed = false;
  while (h <= 5.0e-13) {
    double fl = eval(root - h), fh = eval(root + h);
    if (fl == 0 || fh == 0 || (fl > 0) != (fh > 0)) {
      lo = root - h;
      hi = root + h;
      bracketed = true;
      break;
    }
    h *= 2;
  }
  if (!bracketed)
    throw CertificateFailure("verify_certificate: no sign change within 1e-12 of candidate");

  // Smallest-positive-root scan: both polynomials are positive at 0 and have
  // no other root below the candidate on this grid.
  double prev = eval(0.0);
  for (double z = 1e-4; z < lo; z += 1e-4) {
    double v = eval(z);
    if ((v > 0) != (prev > 0))
      throw CertificateFailure("verify_certificate: earlier positive root found");
    prev = v;
  }
  return {coeffs, root, lo, hi};
}

// Inward-oriented walls of the fundamental domain T: x - y = 0, y - z = 0,
// z = 0, with 0 <= z <= y <= x inside.
inline std::array<GreatCircle, 3> walls_of_T() {
  return {GreatCircle::through_normal({1, -1, 0}),
          GreatCircle::through_normal({0, 1, -1}),
          GreatCircle::through_normal({0, 0, 1})};
}

// Inward-oriented walls of the double-cover chamber D: x - y = 0, y - z = 0,
// y + z = 0, with |z| <= y <= x inside.
inline std::array<GreatCircle, 3> walls_of_D() {
  return {GreatCircle::through_normal({1, -1, 0}),
          GreatCircle::through_normal({0, 1, -1}),
          GreatCircle::through_normal({0, 1, 1})};
}

// Bisector of x - y = 0 and z = 0 inside T (the circle -x + y + sqrt(2) z = 0),
// through the degenerate isosceles point at t = 0.
inline ArcParametrization obtuse_bisector_arc() {
  double r2 = std::sqrt(2.0);
  return ArcParametrization::make({1 / r2, 1 / r2, 0}, {0.5, -0.5, 1 / r2});
}

// Bisector of x - y = 0 and y - z = 0 (the circle x - 2y + z = 0), through
// the equilateral point at t = 0.
inline ArcParametrization acute_bisector_arc() {
  double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  return ArcParametrization::make({1 / r3, 1 / r3, 1 / r3}, {1 / r2, 0, -1 / r2});
}

// The incenter of T: the least symmetric triangle. Computed numerically from
// the angle bisectors and checked against the closed form
// (1 + 2 sqrt 2, 1 + sqrt 2, 1) / sqrt(13 + 6 sqrt 2).
inline SolverResult least_symmetric() {
  auto w = walls_of_T();
  Incenter inc = incenter_of_circular_triangle(w[0], w[1], w[2]);
  double r2 = std::sqrt(2.0);
  double n = std::sqrt(13 + 6 * r2);
  SpherePoint closed = {(1 + 2 * r2) / n, (1 + r2) / n, 1 / n};
  if (std::abs(inc.point.x - closed.x) > 1e-14 ||
      std::abs(inc.point.y - closed.y) > 1e-14 ||
      std::abs(inc.point.z - closed.z) > 1e-14)
    throw SolverFailure("least_symmetric: incenter disagrees with closed form");
  return {inc.point, sides_from_point(inc.point), inc.radius, {}, {}};
}

// The incenter of D: the least symmetric ordered triangle, which turns out
// to be the degenerate 1:4:5 triangle.
inline SolverResult least_symmetric_ordered() {
  auto w = walls_of_D();
  Incenter inc = incenter_of_circular_triangle(w[0], w[1], w[2]);
  return {inc.point, sides_from_point(inc.point), inc.radius, {}, {}};
}

namespace detail {

// Smallest t > 0 at which the distance from the bisector arc to the right
// curve equals the distance to the straight walls: scan to bracket the first
// sign change, then bisection.
template <typename WallFn>
SolverResult farthest_point_on_bisector(const ArcParametrization& arc,
                                        WallFn&& wall_distance,
                                        double wall_factor) {
  auto f = [&](double t) { return curve_wall_distance(t, arc) - wall_distance(t); };
  constexpr int kSteps = 1024;
  double t_hi = std::numbers::pi / 2;
  double prev_t = 0;
  double t0 = -1;
  for (int k = 1; k <= kSteps; ++k) {
    double t = t_hi * k / kSteps;
    if (f(t) <= 0) {
      t0 = bisect(f, prev_t, t, 1e-13);
      break;
    }
    prev_t = t;
  }
  if (t0 < 0) throw SolverFailure("farthest_point_on_bisector: no bracket found");
  SpherePoint p = arc_point(arc, t0);
  double alpha = std::tan(t0 / 2);
  // sin(t0) = 2 alpha / (1 + alpha^2); inradius = arcsin(sin(t0) * wall_factor)
  double inradius = std::asin(2 * alpha * wall_factor / (1 + alpha * alpha));
  return {p, sides_from_point(p), inradius, t0, alpha};
}

}  // namespace detail

// Least symmetric obtuse triangle: farthest point of the region O bounded by
// x - y = 0, z = 0 and the right curve. Wall distance along the bisector is
// arcsin(sin t / sqrt 2).
inline SolverResult least_symmetric_obtuse() {
  return detail::farthest_point_on_bisector(
      obtuse_bisector_arc(),
      [](double t) { return std::asin(std::sin(t) / std::sqrt(2.0)); },
      1.0 / std::sqrt(2.0));
}

// Least symmetric acute triangle: farthest point of the region A bounded by
// x - y = 0, y - z = 0 and the right curve. Wall distance along the bisector
// is arcsin(sin t / 2).
inline SolverResult least_symmetric_acute() {
  return detail::farthest_point_on_bisector(
      acute_bisector_arc(),
      [](double t) { return std::asin(std::sin(t) / 2.0); }, 0.5);
}

// The most acute triangle (equilateral) and the most obtuse (degenerate
// isosceles, sides (1/2, 1/2, 1)), each with its distance to the right locus.
inline std::pair<SolverResult, SolverResult> most_acute_and_most_obtuse() {
  double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  SpherePoint eq = {1 / r3, 1 / r3, 1 / r3};
  SpherePoint deg = {1 / r2, 1 / r2, 0};
  SolverResult acute{eq, sides_from_point(eq), distance_to_right(eq), {}, {}};
  SolverResult obtuse{deg, sides_from_point(deg), distance_to_right(deg), {}, {}};
  return {acute, obtuse};
}

}  // namespace trisphere

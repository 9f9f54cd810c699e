#pragma once

// Coordinates on triangle space: side lengths normalized to perimeter 2,
// tangent-circle coordinates (s_a, s_b, s_c), sphere coordinates, and
// triangle classification.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "trisphere/errors.hpp"
#include "trisphere/sphere.hpp"

namespace trisphere {

// Side lengths (a, b, c) with a + b + c = 2. Use make() or
// normalize_perimeter() to construct.
struct TriangleSides {
  double a = 0, b = 0, c = 0;

  double operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }

  static TriangleSides make(double a, double b, double c) {
    if (a < -kUnitTol || b < -kUnitTol || c < -kUnitTol)
      throw DegenerateInput("TriangleSides: negative side length");
    if (std::abs(a + b + c - 2.0) > kUnitTol)
      throw NotATriangle("TriangleSides: perimeter is not 2");
    // With perimeter 2 the triangle inequalities reduce to each side <= 1.
    if (a > 1 + kUnitTol || b > 1 + kUnitTol || c > 1 + kUnitTol)
      throw NotATriangle("TriangleSides: triangle inequality violated");
    return {a, b, c};
  }
};

// Radii of the three mutually tangent circles centered at the vertices;
// equivalently s_a = 1 - a etc. at perimeter 2. Components sum to 1.
struct SCoords {
  double sa = 0, sb = 0, sc = 0;
};

inline TriangleSides normalize_perimeter(double a, double b, double c) {
  if (a < 0 || b < 0 || c < 0)
    throw DegenerateInput("normalize_perimeter: negative side length");
  double s = a + b + c;
  if (s <= 0) throw DegenerateInput("normalize_perimeter: zero perimeter");
  double k = 2.0 / s;
  return TriangleSides::make(a * k, b * k, c * k);
}

inline SCoords s_coords(const TriangleSides& t) {
  return {1.0 - t.a, 1.0 - t.b, 1.0 - t.c};
}

// Square-root symmetrization: the representative of the triangle in the
// closed positive octant of the sphere.
inline SpherePoint point_from_sides(const TriangleSides& t) {
  SCoords s = s_coords(t);
  auto root = [](double v) { return std::sqrt(std::max(v, 0.0)); };
  Vec3 v{root(s.sa), root(s.sb), root(s.sc)};
  return normalize(v);
}

inline TriangleSides sides_from_point(const SpherePoint& p) {
  return {1.0 - p.x * p.x, 1.0 - p.y * p.y, 1.0 - p.z * p.z};
}

struct ShapeClass {
  bool equilateral = false;
  bool isosceles = false;
  bool scalene = false;
  bool degenerate = false;
  bool doubly_degenerate = false;
  bool right = false;
  bool acute = false;
  bool obtuse = false;

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (equilateral) out.push_back("equilateral");
    if (isosceles) out.push_back("isosceles");
    if (scalene) out.push_back("scalene");
    if (degenerate) out.push_back("degenerate");
    if (doubly_degenerate) out.push_back("doubly_degenerate");
    if (right) out.push_back("right");
    if (acute) out.push_back("acute");
    if (obtuse) out.push_back("obtuse");
    return out;
  }
};

inline constexpr double kClassifyTol = 1e-9;

// Flags overlap by design: a triangle can be e.g. both isosceles and
// degenerate. Right/acute/obtuse are reported only for non-degenerate
// triangles.
inline ShapeClass classify(const TriangleSides& t, double tol = kClassifyTol) {
  ShapeClass s;
  bool ab = std::abs(t.a - t.b) < tol;
  bool bc = std::abs(t.b - t.c) < tol;
  bool ca = std::abs(t.c - t.a) < tol;
  s.equilateral = ab && bc && ca;
  s.isosceles = ab || bc || ca;
  s.scalene = !s.isosceles;

  double mx = std::max({t.a, t.b, t.c});
  s.degenerate = std::abs(mx - 1.0) < tol;
  int near_one = (std::abs(t.a - 1.0) < tol) + (std::abs(t.b - 1.0) < tol) +
                 (std::abs(t.c - 1.0) < tol);
  s.doubly_degenerate = near_one >= 2;

  if (!s.degenerate) {
    // Compare the largest squared side against the sum of the other two.
    double q = t.a * t.a + t.b * t.b + t.c * t.c - 2.0 * mx * mx;
    if (std::abs(q) < tol)
      s.right = true;
    else if (q > 0)
      s.acute = true;
    else
      s.obtuse = true;
  }
  return s;
}

}  // namespace trisphere

#pragma once

// Spherical primitives: points on S^2, oriented great circles, geodesic
// distances, arc parametrizations, angle bisectors and incenters of
// spherical triangles bounded by great circles.

#include <array>
#include <cmath>
#include <utility>

#include "trisphere/errors.hpp"

namespace trisphere {

// Single absolute tolerance used by all unit-norm and orthogonality
// predicates in this library.
inline constexpr double kUnitTol = 1e-12;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// A point on the unit sphere. Construct via normalize() or from_unit().
struct SpherePoint {
  double x = 0, y = 0, z = 0;

  constexpr Vec3 vec() const { return {x, y, z}; }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr SpherePoint antipode() const { return {-x, -y, -z}; }
};

inline SpherePoint normalize(const Vec3& v) {
  double n = norm(v);
  if (n <= 0) throw DegenerateInput("normalize: zero vector");
  return {v.x / n, v.y / n, v.z / n};
}

inline bool is_unit(const Vec3& v, double tol = kUnitTol) {
  return std::abs(dot(v, v) - 1.0) <= 2 * tol;
}

// Checked constructor for coordinates already known to be unit.
inline SpherePoint from_unit(double x, double y, double z) {
  if (!is_unit(Vec3{x, y, z})) throw DegenerateInput("from_unit: not a unit vector");
  return {x, y, z};
}

inline double clamp_unit(double c) { return c < -1.0 ? -1.0 : (c > 1.0 ? 1.0 : c); }

// Geodesic (great-circle) distance, in [0, pi].
inline double geodesic_distance(const SpherePoint& p, const SpherePoint& q) {
  return std::acos(clamp_unit(dot(p.vec(), q.vec())));
}

// Oriented great circle, stored as the unit normal of its defining plane.
// Reversing the normal gives the same point set with opposite orientation.
struct GreatCircle {
  SpherePoint normal;

  static GreatCircle through_normal(const Vec3& n) { return {normalize(n)}; }
  GreatCircle reversed() const { return {normal.antipode()}; }
};

// Minimum geodesic distance from p to the circle, in [0, pi/2].
inline double point_circle_distance(const SpherePoint& p, const GreatCircle& c) {
  return std::asin(clamp_unit(std::abs(dot(p.vec(), c.normal.vec()))));
}

// Great circle whose points are equidistant from c1 and c2. With one normal
// facing into the wedge and the other facing out, this is the internal
// bisector; flipping one normal yields the other bisector.
inline GreatCircle bisector(const GreatCircle& c1, const GreatCircle& c2) {
  double d = dot(c1.normal.vec(), c2.normal.vec());
  if (std::abs(d) >= 1.0 - kUnitTol)
    throw CoincidentCircles("bisector: circles have parallel normals");
  return GreatCircle::through_normal(c1.normal.vec() + c2.normal.vec());
}

// The antipodal pair of intersection points of two great circles.
inline std::pair<SpherePoint, SpherePoint> intersect(const GreatCircle& c1,
                                                     const GreatCircle& c2) {
  Vec3 v = cross(c1.normal.vec(), c2.normal.vec());
  if (norm(v) <= kUnitTol)
    throw CoincidentCircles("intersect: circles have parallel normals");
  SpherePoint p = normalize(v);
  return {p, p.antipode()};
}

// Geodesic arc p(t) = cos(t) u1 + sin(t) u2 with u1, u2 orthonormal.
struct ArcParametrization {
  SpherePoint u1, u2;

  static ArcParametrization make(const SpherePoint& u1, const SpherePoint& u2) {
    if (std::abs(dot(u1.vec(), u2.vec())) > kUnitTol)
      throw DegenerateInput("ArcParametrization: basis not orthogonal");
    return {u1, u2};
  }
};

inline SpherePoint arc_point(const ArcParametrization& arc, double t) {
  Vec3 v = arc.u1.vec() * std::cos(t) + arc.u2.vec() * std::sin(t);
  return {v.x, v.y, v.z};
}

struct Incenter {
  SpherePoint point;
  double radius = 0;  // common distance to the three circles, radians
};

// Incenter of the spherical triangle bounded by three great circles whose
// normals are oriented toward the triangle interior. The incenter is the
// intersection of the internal angle bisectors; with inward normals n_i the
// internal bisector of the wedge (c_i, c_j) is the circle with normal
// n_i - n_j, since interior points satisfy p.n_i = p.n_j there.
inline Incenter incenter_of_circular_triangle(const GreatCircle& c1,
                                              const GreatCircle& c2,
                                              const GreatCircle& c3) {
  SpherePoint p{};
  try {
    GreatCircle b12 = bisector(c1, c2.reversed());
    GreatCircle b13 = bisector(c1, c3.reversed());
    auto [q, q2] = intersect(b12, b13);
    p = q;
  } catch (const CoincidentCircles&) {
    throw NoTriangle("incenter: degenerate circle configuration");
  }
  // Pick the antipode lying inside the chamber (positive side of all normals).
  auto inside = [&](const SpherePoint& q) {
    return dot(q.vec(), c1.normal.vec()) > 0 && dot(q.vec(), c2.normal.vec()) > 0 &&
           dot(q.vec(), c3.normal.vec()) > 0;
  };
  if (!inside(p)) {
    p = p.antipode();
    if (!inside(p)) throw NoTriangle("incenter: no interior intersection point");
  }
  double d1 = point_circle_distance(p, c1);
  double d2 = point_circle_distance(p, c2);
  double d3 = point_circle_distance(p, c3);
  double lo = std::min({d1, d2, d3}), hi = std::max({d1, d2, d3});
  if (hi - lo > 1e-10) throw NoTriangle("incenter: bisectors are not concurrent");
  return {p, (d1 + d2 + d3) / 3.0};
}

}  // namespace trisphere

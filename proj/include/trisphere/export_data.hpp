#pragma once

// Figure-reproduction data: sampled symmetry circles, the B_3 orbit of the
// right-triangle curve, and the named extremal points with their radii,
// serialized to CSV, JSON, or SVG.

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "trisphere/loci.hpp"
#include "trisphere/solvers.hpp"

#include <json.hpp>

namespace trisphere {

struct Polyline {
  std::string label;
  std::vector<SpherePoint> points;
};

struct Marker {
  std::string label;
  SpherePoint point;
  double radius = 0;
};

struct ExportBundle {
  std::vector<Polyline> polylines;
  std::vector<Marker> markers;
};

namespace detail {

// Closed polyline sampling a great circle.
inline Polyline sample_circle(const std::string& label, const GreatCircle& c,
                              int samples) {
  Vec3 n = c.normal.vec();
  Vec3 seed = std::abs(n.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  SpherePoint u = normalize(cross(n, seed));
  SpherePoint w = normalize(cross(n, u.vec()));
  Polyline line{label, {}};
  for (int i = 0; i <= samples; ++i) {
    double th = 2 * std::numbers::pi * i / samples;
    Vec3 v = u.vec() * std::cos(th) + w.vec() * std::sin(th);
    line.points.push_back({v.x, v.y, v.z});
  }
  return line;
}

}  // namespace detail

// The nine symmetry circles (six isosceles, three degenerate).
inline ExportBundle make_tiling(int samples) {
  const auto& loci = symmetry_loci();
  ExportBundle b;
  static const char* iso[6] = {"iso_x-y", "iso_x+y", "iso_y-z",
                               "iso_y+z", "iso_z-x", "iso_z+x"};
  for (int i = 0; i < 6; ++i)
    b.polylines.push_back(detail::sample_circle(iso[i], loci.isosceles[i], samples));
  static const char* deg[3] = {"deg_x", "deg_y", "deg_z"};
  for (int i = 0; i < 3; ++i)
    b.polylines.push_back(detail::sample_circle(deg[i], loci.degenerate[i], samples));
  return b;
}

// The B_3 orbit of the canonical right-curve branch, one polyline per group
// element.
inline ExportBundle make_right_curve(int samples) {
  ExportBundle b;
  const auto& elems = b3_elements();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    Polyline line{"right_" + std::to_string(k), {}};
    for (int i = 0; i < samples; ++i) {
      double x = static_cast<double>(i) / (samples - 1);
      line.points.push_back(apply(elems[k], right_curve_point(x)));
    }
    b.polylines.push_back(std::move(line));
  }
  return b;
}

// All loci plus markers for the four named extremal points.
inline ExportBundle make_figure(int samples) {
  ExportBundle b = make_tiling(samples);
  ExportBundle rc = make_right_curve(samples);
  for (auto& line : rc.polylines) b.polylines.push_back(std::move(line));
  SolverResult ls = least_symmetric();
  SolverResult lso = least_symmetric_ordered();
  SolverResult lsob = least_symmetric_obtuse();
  SolverResult lsac = least_symmetric_acute();
  b.markers.push_back({"least_symmetric", ls.point, ls.inradius});
  b.markers.push_back({"least_symmetric_ordered", lso.point, lso.inradius});
  b.markers.push_back({"least_symmetric_obtuse", lsob.point, lsob.inradius});
  b.markers.push_back({"least_symmetric_acute", lsac.point, lsac.inradius});
  return b;
}

inline std::string to_csv(const ExportBundle& b) {
  std::ostringstream os;
  os.precision(15);
  os << "label,x,y,z\n";
  for (const auto& line : b.polylines)
    for (const auto& p : line.points)
      os << line.label << ',' << p.x << ',' << p.y << ',' << p.z << '\n';
  for (const auto& m : b.markers)
    os << m.label << ',' << m.point.x << ',' << m.point.y << ',' << m.point.z << '\n';
  return os.str();
}

inline nlohmann::json bundle_json(const ExportBundle& b) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& line : b.polylines) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : line.points) pts.push_back({p.x, p.y, p.z});
    lines.push_back({{"label", line.label}, {"points", pts}});
  }
  nlohmann::json markers = nlohmann::json::array();
  for (const auto& m : b.markers)
    markers.push_back({{"label", m.label},
                       {"point", {m.point.x, m.point.y, m.point.z}},
                       {"radius", m.radius}});
  return {{"polylines", lines}, {"markers", markers}};
}

// Orthographic projection along `view`; only the front hemisphere is drawn.
inline std::string to_svg(const ExportBundle& b, const Vec3& view = {1, 1, 1}) {
  SpherePoint v = normalize(view);
  Vec3 seed = std::abs(v.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  SpherePoint u = normalize(cross(v.vec(), seed));
  SpherePoint w = normalize(cross(v.vec(), u.vec()));
  auto px = [&](const SpherePoint& p) { return dot(p.vec(), u.vec()); };
  auto py = [&](const SpherePoint& p) { return dot(p.vec(), w.vec()); };
  auto front = [&](const SpherePoint& p) { return dot(p.vec(), v.vec()) >= 0; };

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
  os << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#ccc\" "
        "stroke-width=\"0.005\"/>\n";
  for (const auto& line : b.polylines) {
    std::vector<SpherePoint> run;
    auto flush = [&] {
      if (run.size() < 2) {
        run.clear();
        return;
      }
      os << "<polyline fill=\"none\" stroke=\"#336\" stroke-width=\"0.004\" points=\"";
      for (const auto& p : run) os << px(p) << ',' << -py(p) << ' ';
      os << "\"/>\n";
      run.clear();
    };
    for (const auto& p : line.points) {
      if (front(p))
        run.push_back(p);
      else
        flush();
    }
    flush();
  }
  for (const auto& m : b.markers) {
    if (!front(m.point)) continue;
    os << "<circle cx=\"" << px(m.point) << "\" cy=\"" << -py(m.point)
       << "\" r=\"0.012\" fill=\"#c33\"/>\n";
    if (m.radius > 0)
      os << "<circle cx=\"" << px(m.point) << "\" cy=\"" << -py(m.point) << "\" r=\""
         << std::sin(m.radius) << "\" fill=\"none\" stroke=\"#c33\" "
            "stroke-width=\"0.003\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace trisphere

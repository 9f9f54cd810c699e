#pragma once

// Monte Carlo sampling of the uniform (symmetric) measure: points uniform on
// S^2 via normalized Gaussian triples, pushed forward to triangles.
//
// Determinism contract: each sample is generated from a counter-based RNG
// keyed by (seed, sample index), and per-block partial sums are merged in
// block order, so the report is bit-identical for any shard count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "trisphere/loci.hpp"
#include "trisphere/triangle.hpp"

namespace trisphere {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
  return (splitmix64(state) >> 11) * 0x1.0p-53;
}

// Unit vector from three standard normals (Box-Muller).
inline SpherePoint sample_sphere(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed ^ (0x2545f4914f6cdd1dULL * (index + 1));
  for (;;) {
    double u1 = uniform01(state);
    double u2 = uniform01(state);
    double u3 = uniform01(state);
    double u4 = uniform01(state);
    if (u1 <= 0 || u3 <= 0) continue;
    double r1 = std::sqrt(-2 * std::log(u1));
    double r2 = std::sqrt(-2 * std::log(u3));
    Vec3 v{r1 * std::cos(2 * std::numbers::pi * u2),
           r1 * std::sin(2 * std::numbers::pi * u2),
           r2 * std::cos(2 * std::numbers::pi * u4)};
    if (norm(v) > 0) return normalize(v);
  }
}

}  // namespace detail

struct SampleReport {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  int shards = 1;
  std::map<std::string, double> fractions;
  double mean_symmetry_distance = 0;
};

inline SampleReport run_sample(std::uint64_t n, std::uint64_t seed, int shards = 1,
                               double tol = kClassifyTol) {
  constexpr std::uint64_t kBlock = 65536;
  struct BlockPartial {
    std::uint64_t counts[8] = {};
    double dist_sum = 0;
  };
  std::uint64_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<BlockPartial> partials(nblocks);

  auto run_block = [&](std::uint64_t b) {
    BlockPartial& out = partials[b];
    std::uint64_t end = std::min(n, (b + 1) * kBlock);
    for (std::uint64_t j = b * kBlock; j < end; ++j) {
      SpherePoint p = detail::sample_sphere(seed, j);
      ShapeClass s = classify(sides_from_point(p), tol);
      out.counts[0] += s.equilateral;
      out.counts[1] += s.isosceles;
      out.counts[2] += s.scalene;
      out.counts[3] += s.degenerate;
      out.counts[4] += s.doubly_degenerate;
      out.counts[5] += s.right;
      out.counts[6] += s.acute;
      out.counts[7] += s.obtuse;
      out.dist_sum += distance_to_symmetric(p);
    }
  };

  if (shards <= 1) {
    for (std::uint64_t b = 0; b < nblocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < shards; ++w)
      workers.emplace_back([&, w] {
        for (std::uint64_t b = w; b < nblocks; b += shards) run_block(b);
      });
    for (auto& t : workers) t.join();
  }

  std::uint64_t counts[8] = {};
  double dist_sum = 0;
  for (const auto& part : partials) {
    for (int i = 0; i < 8; ++i) counts[i] += part.counts[i];
    dist_sum += part.dist_sum;
  }

  SampleReport r;
  r.n = n;
  r.seed = seed;
  r.shards = shards;
  static const char* kNames[8] = {"equilateral", "isosceles",         "scalene",
                                  "degenerate",  "doubly_degenerate", "right",
                                  "acute",       "obtuse"};
  for (int i = 0; i < 8; ++i)
    r.fractions[kNames[i]] = static_cast<double>(counts[i]) / static_cast<double>(n);
  r.mean_symmetry_distance = dist_sum / static_cast<double>(n);
  return r;
}

}  // namespace trisphere

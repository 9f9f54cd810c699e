#pragma once

// The hyperoctahedral group B_3 of signed permutations acting on the sphere,
// and canonicalization into the fundamental domain 0 <= z <= y <= x.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "trisphere/sphere.hpp"

namespace trisphere {

// g acts by (g.p)[i] = sign[i] * p[perm[i]]. As a matrix this is orthogonal
// with integer entries.
struct SignedPermutation {
  std::array<int, 3> perm = {0, 1, 2};
  std::array<int, 3> sign = {1, 1, 1};

  static SignedPermutation identity() { return {}; }

  bool operator==(const SignedPermutation& o) const {
    return perm == o.perm && sign == o.sign;
  }

  // Row-major 3x3 matrix.
  std::array<std::array<int, 3>, 3> matrix() const {
    std::array<std::array<int, 3>, 3> m{};
    for (int i = 0; i < 3; ++i) m[i][perm[i]] = sign[i];
    return m;
  }
};

inline SpherePoint apply(const SignedPermutation& g, const SpherePoint& p) {
  return {g.sign[0] * p[g.perm[0]], g.sign[1] * p[g.perm[1]],
          g.sign[2] * p[g.perm[2]]};
}

// (g o h)(p) = g(h(p))
inline SignedPermutation compose(const SignedPermutation& g,
                                 const SignedPermutation& h) {
  SignedPermutation r;
  for (int i = 0; i < 3; ++i) {
    r.perm[i] = h.perm[g.perm[i]];
    r.sign[i] = g.sign[i] * h.sign[g.perm[i]];
  }
  return r;
}

inline SignedPermutation inverse(const SignedPermutation& g) {
  SignedPermutation r;
  for (int i = 0; i < 3; ++i) {
    r.perm[g.perm[i]] = i;
    r.sign[g.perm[i]] = g.sign[i];
  }
  return r;
}

// All 48 elements of B_3, in a fixed order (identity first).
inline const std::vector<SignedPermutation>& b3_elements() {
  static const std::vector<SignedPermutation> elems = [] {
    std::vector<SignedPermutation> v;
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms)
      for (int s = 0; s < 8; ++s)
        v.push_back({{p[0], p[1], p[2]},
                     {(s & 1) ? -1 : 1, (s & 2) ? -1 : 1, (s & 4) ? -1 : 1}});
    // Put the identity first.
    std::swap(v[0], *std::find(v.begin(), v.end(), SignedPermutation::identity()));
    return v;
  }();
  return elems;
}

struct Canonical {
  SpherePoint point;
  SignedPermutation g;  // apply(g, original) == point
};

// Orbit representative with 0 <= z <= y <= x, obtained by taking absolute
// values and sorting in descending order. The representative is unique; when
// coordinates tie or vanish the returned group element is one of several
// valid choices.
inline Canonical canonicalize(const SpherePoint& p) {
  std::array<int, 3> idx = {0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return std::abs(p[i]) > std::abs(p[j]);
  });
  SignedPermutation g;
  for (int i = 0; i < 3; ++i) {
    g.perm[i] = idx[i];
    g.sign[i] = p[idx[i]] < 0 ? -1 : 1;
  }
  return {apply(g, p), g};
}

inline bool in_fundamental_domain(const SpherePoint& p, double tol = kUnitTol) {
  return p.z >= -tol && p.z <= p.y + tol && p.y <= p.x + tol;
}

// Membership in the double-cover chamber |z| <= y <= x (ascending side
// lengths, sign of z free).
inline bool in_ordered_domain(const SpherePoint& p, double tol = kUnitTol) {
  return std::abs(p.z) <= p.y + tol && p.y <= p.x + tol;
}

}  // namespace trisphere

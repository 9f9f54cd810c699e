#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include "trisphere/group.hpp"
#include "trisphere/triangle.hpp"
#include "test_util.hpp"

using namespace trisphere;
using Catch::Approx;

TEST_CASE("b3_elements is the full hyperoctahedral group") {
  const auto& g = b3_elements();
  REQUIRE(g.size() == 48);
  CHECK(g[0] == SignedPermutation::identity());

  std::set<std::pair<std::array<int, 3>, std::array<int, 3>>> distinct;
  for (const auto& e : g) distinct.insert({e.perm, e.sign});
  CHECK(distinct.size() == 48);

  // Closure and inverses.
  auto contains = [&](const SignedPermutation& e) {
    return std::find(g.begin(), g.end(), e) != g.end();
  };
  for (const auto& a : g) {
    CHECK(contains(inverse(a)));
    CHECK(compose(a, inverse(a)) == SignedPermutation::identity());
    for (const auto& b : g) CHECK(contains(compose(a, b)));
  }

  // Orthogonal integer matrices: one +-1 per row and column.
  for (const auto& e : g) {
    auto m = e.matrix();
    for (int i = 0; i < 3; ++i) {
      int row = 0, col = 0;
      for (int j = 0; j < 3; ++j) {
        row += m[i][j] * m[i][j];
        col += m[j][i] * m[j][i];
      }
      CHECK(row == 1);
      CHECK(col == 1);
    }
  }

  // Element orders divide |B3| = 48.
  for (const auto& e : g) {
    SignedPermutation p = e;
    int order = 1;
    while (!(p == SignedPermutation::identity())) {
      p = compose(p, e);
      ++order;
      REQUIRE(order <= 48);
    }
    CHECK(48 % order == 0);
  }
}

TEST_CASE("apply") {
  double r5 = std::sqrt(5.0);
  SpherePoint p{2 / r5, 1 / r5, 0};
  SpherePoint q = apply(SignedPermutation::identity(), p);
  CHECK(q.x == p.x);
  CHECK(q.y == p.y);
  CHECK(q.z == p.z);

  // Swap x and z, flip the sign of y.
  SignedPermutation g{{2, 1, 0}, {1, -1, 1}};
  SpherePoint r = apply(g, p);
  CHECK(r.x == 0.0);
  CHECK(r.y == -1 / r5);
  CHECK(r.z == 2 / r5);

  // Isometry.
  test_util::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    SpherePoint a = rng.sphere_point(), b = rng.sphere_point();
    for (const auto& e : b3_elements()) {
      CHECK(std::abs(geodesic_distance(apply(e, a), apply(e, b)) -
                     geodesic_distance(a, b)) < 1e-15);
    }
  }
}

TEST_CASE("group action permutes side lengths") {
  test_util::Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    SpherePoint p = rng.sphere_point();
    TriangleSides base = sides_from_point(p);
    std::array<double, 3> want = {base.a, base.b, base.c};
    std::sort(want.begin(), want.end());
    for (const auto& g : b3_elements()) {
      TriangleSides t = sides_from_point(apply(g, p));
      std::array<double, 3> got = {t.a, t.b, t.c};
      std::sort(got.begin(), got.end());
      CHECK(std::abs(got[0] - want[0]) < 1e-15);
      CHECK(std::abs(got[1] - want[1]) < 1e-15);
      CHECK(std::abs(got[2] - want[2]) < 1e-15);
    }
  }
}

TEST_CASE("canonicalize") {
  double r5 = std::sqrt(5.0);
  auto [q, g] = canonicalize({-1 / r5, 0, 2 / r5});
  CHECK(q.x == 2 / r5);
  CHECK(q.y == 1 / r5);
  CHECK(q.z == 0.0);
  SpherePoint check = apply(g, {-1 / r5, 0, 2 / r5});
  CHECK(check.x == q.x);
  CHECK(check.y == q.y);
  CHECK(check.z == q.z);

  // Fixed point of the domain.
  SpherePoint in = normalize({3, 2, 1});
  auto [q2, g2] = canonicalize(in);
  CHECK(q2.x == in.x);
  CHECK(q2.y == in.y);
  CHECK(q2.z == in.z);

  test_util::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    SpherePoint p = rng.sphere_point();
    SpherePoint rep = canonicalize(p).point;
    CHECK(in_fundamental_domain(rep));
    // Idempotent and constant across the whole orbit.
    SpherePoint again = canonicalize(rep).point;
    CHECK(again.x == rep.x);
    for (const auto& e : b3_elements()) {
      SpherePoint other = canonicalize(apply(e, p)).point;
      CHECK(other.x == rep.x);
      CHECK(other.y == rep.y);
      CHECK(other.z == rep.z);
    }
  }
}

TEST_CASE("in_fundamental_domain") {
  CHECK(in_fundamental_domain({1, 0, 0}));
  CHECK(in_fundamental_domain({0.825943, 0.520841, 0.215739}));
  CHECK_FALSE(in_fundamental_domain({0, 1, 0}));
  double r2 = std::sqrt(2.0);
  CHECK(in_ordered_domain({1 / r2, 1 / r2, 0}));
  CHECK(in_ordered_domain(normalize({3, 2, -1})));
  CHECK_FALSE(in_fundamental_domain(normalize({3, 2, -1})));
}

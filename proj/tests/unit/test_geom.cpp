#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "emst/errors.hpp"
#include "emst/geom.hpp"
#include "emst/memmodel.hpp"
#include "emst/rng.hpp"

using namespace emst;

namespace {

Site site(double x, double y, SiteId idx = 0) { return {x, y, idx}; }

// Clockwise angle in [0, 2pi) from base to cand, with 0 mapped to a full turn.
double cw_angle(Vec2 base, Vec2 cand) {
  double a = std::atan2(base.y, base.x) - std::atan2(cand.y, cand.x);
  while (a <= 0.0) a += 2.0 * std::numbers::pi;
  while (a > 2.0 * std::numbers::pi) a -= 2.0 * std::numbers::pi;
  return a;
}

}  // namespace

TEST_SUITE("geom") {
  TEST_CASE("sq_dist on hand-checked pairs") {
    CHECK(sq_dist(site(0, 0), site(0, 0)) == 0.0);
    CHECK(sq_dist(site(0, 0), site(3, 4)) == 25.0);
    CHECK(sq_dist(site(1, 2), site(-2, 6)) == 25.0);
  }

  TEST_CASE("sq_dist is symmetric") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> c(-100, 100);
    for (int k = 0; k < 500; ++k) {
      const Site a = site(c(gen), c(gen));
      const Site b = site(c(gen), c(gen));
      CHECK(sq_dist(a, b) == sq_dist(b, a));
    }
  }

  TEST_CASE("edge_less orders by length, then endpoints") {
    CHECK(edge_less({0, 1, 4.0}, {2, 3, 9.0}));
    CHECK(edge_less({0, 1, 4.0}, {0, 2, 4.0}));
    const EdgeKey e{0, 1, 4.0};
    CHECK_FALSE(edge_less(e, e));
  }

  TEST_CASE("edge_less is a strict total order") {
    // Small value ranges force plenty of ties in every component.
    std::mt19937_64 gen(5);
    std::uniform_int_distribution<int> len(0, 3);
    std::uniform_int_distribution<SiteId> id(0, 3);
    auto random_key = [&] {
      SiteId u = id(gen);
      SiteId v = id(gen);
      if (u == v) v = u + 1;
      if (u > v) std::swap(u, v);
      return EdgeKey{u, v, static_cast<double>(len(gen))};
    };
    for (int k = 0; k < 3000; ++k) {
      const EdgeKey a = random_key();
      const EdgeKey b = random_key();
      const EdgeKey c = random_key();
      CHECK_FALSE(edge_less(a, a));
      const int trichotomy = int(edge_less(a, b)) + int(edge_less(b, a)) + int(a == b);
      CHECK(trichotomy == 1);
      if (edge_less(a, b) && edge_less(b, c)) CHECK(edge_less(a, c));
    }
  }

  TEST_CASE("make_edge is canonical") {
    const EdgeKey e = make_edge(site(3, 4, 7), site(0, 0, 2));
    CHECK(e.u == 2);
    CHECK(e.v == 7);
    CHECK(e.sq_len == 25.0);
  }

  TEST_CASE("in_lens examples") {
    const Site u = site(0, 0, 0);
    const Site v = site(2, 0, 1);
    CHECK(in_lens(site(1, 0.1, 2), u, v));
    CHECK_FALSE(in_lens(u, u, v));
    CHECK_FALSE(in_lens(site(1, 1.8, 2), u, v));
  }

  TEST_CASE("in_lens is symmetric in u and v") {
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int k = 0; k < 3000; ++k) {
      const Site w = site(c(gen), c(gen), 0);
      const Site u = site(c(gen), c(gen), 1);
      const Site v = site(c(gen), c(gen), 2);
      if (sq_dist(u, v) == 0.0) continue;
      CHECK(in_lens(w, u, v) == in_lens(w, v, u));
      CHECK(in_lens_ordered(w, u, v) == in_lens_ordered(w, v, u));
    }
  }

  TEST_CASE("ordered lens agrees with the strict lens away from ties") {
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> c(0, 10);
    for (int k = 0; k < 5000; ++k) {
      const Site w = site(c(gen), c(gen), 0);
      const Site u = site(c(gen), c(gen), 1);
      const Site v = site(c(gen), c(gen), 2);
      const double uv = sq_dist(u, v);
      if (sq_dist(u, w) == uv || sq_dist(v, w) == uv) continue;
      CHECK(in_lens_ordered(w, u, v) == in_lens(w, u, v));
    }
  }

  TEST_CASE("cocircular sites keep degree at most six") {
    // The twelve lattice points on x^2 + y^2 = 25 plus the center: the strict
    // lens would connect the center to all twelve.
    const std::vector<Vec2> ring = {{5, 0}, {4, 3}, {3, 4}, {0, 5}, {-3, 4}, {-4, 3}, {-5, 0},
                                    {-4, -3}, {-3, -4}, {0, -5}, {3, -4}, {4, -3}, {0, 0}};
    PointSet ps(ring);
    std::vector<int> degree(ring.size(), 0);
    for (const EdgeKey& e : rng_oracle(ps)) {
      ++degree[e.u];
      ++degree[e.v];
    }
    CHECK(*std::max_element(degree.begin(), degree.end()) <= 6);
  }

  TEST_CASE("cw_angle_rank examples") {
    const Vec2 east{1, 0};
    CHECK(cw_angle_rank(east, {0, -1}) < cw_angle_rank(east, {-1, 0}));
    CHECK(cw_angle_rank(east, {-1, 0}) < cw_angle_rank(east, {0, 1}));
    std::vector<Vec2> cands = {{-1, -1}, {0, -1}, {1, -1}};
    std::sort(cands.begin(), cands.end(),
              [&](Vec2 a, Vec2 b) { return cw_angle_rank(east, a) < cw_angle_rank(east, b); });
    CHECK(cands[0].x == 1);
    CHECK(cands[1].x == 0);
    CHECK(cands[2].x == -1);
  }

  TEST_CASE("the base direction itself ranks last") {
    const Vec2 base{2, 1};
    const CwAngleRank self = cw_angle_rank(base, {4, 2});
    CHECK(self.sector() == 3);
    for (Vec2 c : {Vec2{0, 1}, Vec2{-1, 0}, Vec2{1, -5}, Vec2{-2, -1}}) CHECK(cw_angle_rank(base, c) < self);
    CHECK(same_angle(cw_angle_rank(base, {1, 3}), cw_angle_rank(base, {2, 6})));
  }

  TEST_CASE("cw_angle_rank rejects zero vectors") {
    CHECK_THROWS_AS(cw_angle_rank({0, 0}, {1, 0}), InputError);
    CHECK_THROWS_AS(cw_angle_rank({1, 0}, {0, 0}), InputError);
  }

  TEST_CASE("cw_angle_rank agrees with an atan2 clockwise sweep") {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> c(-1, 1);
    int compared = 0;
    for (int k = 0; k < 20000; ++k) {
      const Vec2 base{c(gen), c(gen)};
      const Vec2 a{c(gen), c(gen)};
      const Vec2 b{c(gen), c(gen)};
      const double ta = cw_angle(base, a);
      const double tb = cw_angle(base, b);
      if (std::abs(ta - tb) < 1e-9) continue;
      ++compared;
      CHECK((cw_angle_rank(base, a) < cw_angle_rank(base, b)) == (ta < tb));
    }
    CHECK(compared > 19000);
  }
}

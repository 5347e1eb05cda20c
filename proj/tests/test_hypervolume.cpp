#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hvapprox/hypervolume.hpp"
#include "test_util.hpp"

using namespace hvapprox;
using hvtest::Rng;

TEST_CASE("three-point set on the linear front") {
  const Front front = Front::linear(-1, 3);
  const PointSet points(front, {1.0, 1.6, 2.0});
  CHECK(hvtest::close_abs(hyp2d(front, points, {0.5, 0.25}), 1.865, 1e-12));
}

TEST_CASE("single box") {
  const Front front = Front::reciprocal(4);  // f(2) = 2
  const PointSet points(front, {2.0});
  CHECK(hvtest::close_abs(hyp2d(front, points, {0, 0}), 4.0, 1e-12));
}

TEST_CASE("reciprocal telescoped expansion") {
  // HYP for c/x with reference (0,0) telescopes to
  // c*mu - c*(x1/x2 + ... + x_{mu-1}/x_mu).
  const Front front = Front::reciprocal(2);
  const PointSet points(front, {1.0, std::sqrt(2.0), 2.0});
  CHECK(hvtest::close_abs(hyp2d(front, points, {0, 0}),
                          6.0 - 2.0 * std::sqrt(2.0), 1e-12));
}

TEST_CASE("clipping drops non-contributing points and flags empty sets") {
  const Front front = Front::linear(-1, 3);
  const PointSet points(front, {1.0, 1.6, 2.0});

  // r2 = 1.5 removes the two right points (f-values 1.4 and 1).
  const HypResult partial = hyp2d_info(front, points, {0.0, 1.5});
  CHECK(partial.contributing == 1);
  CHECK(partial.dropped == 2);
  CHECK(hvtest::close_abs(partial.value, 1.0 * 0.5, 1e-12));

  const HypResult empty = hyp2d_info(front, points, {2.0, 2.0});
  CHECK(empty.no_contributing_points());
  CHECK(empty.value == 0.0);
}

TEST_CASE("contributions: worked example and removal identity") {
  const Front front = Front::linear(-1, 3);
  const PointSet points(front, {1.0, 1.6, 2.0});
  const ReferencePoint ref{0.5, 0.25};

  const auto contrib = contributions(front, points, ref);
  REQUIRE(contrib.size() == 3);
  CHECK(hvtest::close_abs(contrib[1], 0.24, 1e-12));

  // Removing point i decreases the hypervolume by exactly contrib[i].
  const double full = hyp2d(front, points, ref);
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<double> rest;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) rest.push_back(points[j]);
    const double without = hyp2d(front, PointSet(front, rest), ref);
    CHECK(hvtest::close_abs(full - without, contrib[i], 1e-12));
  }
}

TEST_CASE("contribution of a single point equals its hypervolume") {
  const Front front = Front::reciprocal(3);
  const PointSet points(front, {1.7});
  const ReferencePoint ref{0.2, 0.1};
  const auto contrib = contributions(front, points, ref);
  REQUIRE(contrib.size() == 1);
  CHECK(contrib[0] == doctest::Approx(hyp2d(front, points, ref)));
}

TEST_CASE("duplicate coordinates are merged and add nothing") {
  const Front front = Front::linear(-1, 3);
  const PointSet with_dup(front, {1.0, 1.6, 1.6, 2.0});
  const PointSet without(front, {1.0, 1.6, 2.0});
  CHECK(with_dup.size() == 3);
  CHECK(hyp2d(front, with_dup, {0.5, 0.25}) ==
        hyp2d(front, without, {0.5, 0.25}));
}

TEST_CASE("removal identity on random instances") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const Front front = hvtest::random_front(rng);
    const int mu = rng.uniform_int(1, 7);
    const PointSet points(front, hvtest::random_xs(rng, front, mu));
    const ReferencePoint ref{front.x_min() - rng.uniform(0, 1),
                             front.y_min() - rng.uniform(0, 1)};
    const auto contrib = contributions(front, points, ref);
    const double full = hyp2d(front, points, ref);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points.size() == 1) break;
      std::vector<double> rest;
      for (std::size_t j = 0; j < points.size(); ++j)
        if (j != i) rest.push_back(points[j]);
      const double without = hyp2d(front, PointSet(front, rest), ref);
      CHECK(hvtest::close_rel(full - without, contrib[i], 1e-9));
    }
    const double sum = std::accumulate(contrib.begin(), contrib.end(), 0.0);
    CHECK(sum <= full * (1 + 1e-12));
  }
}

TEST_CASE("adding a front point never decreases the hypervolume") {
  Rng rng(102);
  for (int trial = 0; trial < 150; ++trial) {
    const Front front = hvtest::random_front(rng);
    const int mu = rng.uniform_int(1, 6);
    auto xs = hvtest::random_xs(rng, front, mu);
    const ReferencePoint ref{front.x_min() - rng.uniform(0, 2),
                             front.y_min() - rng.uniform(0, 2)};
    const double before = hyp2d(front, PointSet(front, xs), ref);
    xs.push_back(rng.uniform(front.x_min(), front.x_max()));
    const double after = hyp2d(front, PointSet(front, xs), ref);
    CHECK(after >= before - 1e-12 * std::max(1.0, before));
  }
}

TEST_CASE("hypervolume is nonincreasing in the reference point") {
  Rng rng(103);
  for (int trial = 0; trial < 150; ++trial) {
    const Front front = hvtest::random_front(rng);
    const int mu = rng.uniform_int(1, 6);
    const PointSet points(front, hvtest::random_xs(rng, front, mu));
    const ReferencePoint ref{front.x_min() - rng.uniform(0, 1),
                             front.y_min() - rng.uniform(0, 1)};
    const double base = hyp2d(front, points, ref);
    const double d1 = rng.uniform(0, 0.5);
    const double d2 = rng.uniform(0, 0.5);
    CHECK(hyp2d(front, points, {ref.r1 + d1, ref.r2}) <= base + 1e-12);
    CHECK(hyp2d(front, points, {ref.r1, ref.r2 + d2}) <= base + 1e-12);
  }
}

TEST_CASE("single-point translation identity") {
  const Front front = Front::linear(-1.5, 4);
  const PointSet points(front, {1.3});
  const ReferencePoint ref{0.4, 0.2};
  const double a = 0.3, b = 0.7;
  const double base = hyp2d(front, points, ref);
  const double shifted = hyp2d(front, points, {ref.r1 - a, ref.r2 - b});
  const double expected = base + a * (front.eval(1.3) - ref.r2) +
                          b * (1.3 - ref.r1) + a * b;
  CHECK(shifted == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("agreement with an independent integration estimate") {
  Rng rng(104);
  for (int trial = 0; trial < 30; ++trial) {
    const Front front = hvtest::random_front(rng);
    const int mu = rng.uniform_int(1, 8);
    const PointSet points(front, hvtest::random_xs(rng, front, mu));
    const ReferencePoint ref{front.x_min() - rng.uniform(0.1, 1.0),
                             front.y_min() - rng.uniform(0.1, 1.0)};
    const double exact = hyp2d(front, points, ref);
    const double estimate =
        hvtest::grid_hyp_estimate(front, points, ref, 40000);
    CHECK(hvtest::close_rel(exact, estimate, 1e-3));
  }
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "fractlip/metric_space.hpp"
#include "test_util.hpp"

using namespace fractlip;

TEST_SUITE("metric_space") {

TEST_CASE("validate accepts the smallest metric space") {
  const auto space = FiniteMetricSpace::validate({{0, 1}, {1, 0}});
  CHECK(space.size() == 2);
  CHECK(space.distance(0, 1) == 1.0);
  CHECK(space.labels()[1] == "p1");
}

TEST_CASE("validate rejects asymmetric input") {
  CHECK_THROWS_AS(FiniteMetricSpace::validate({{0, 1}, {2, 0}}), AsymmetricMatrix);
  try {
    FiniteMetricSpace::validate({{0, 1}, {2, 0}});
  } catch (const AsymmetricMatrix& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
  }
}

TEST_CASE("validate rejects a triangle violation with its witness") {
  try {
    FiniteMetricSpace::validate({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    FAIL("expected TriangleViolation");
  } catch (const TriangleViolation& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 2);
    CHECK(e.k == 1);
  }
}

TEST_CASE("validate rejects the remaining invariant breaks") {
  CHECK_THROWS_AS(FiniteMetricSpace::validate({{0, -1}, {-1, 0}}), NegativeDistance);
  CHECK_THROWS_AS(FiniteMetricSpace::validate({{0, 0}, {0, 0}}), DuplicatePoint);
  CHECK_THROWS_AS(FiniteMetricSpace::validate({{1, 2}, {2, 0}}), NonzeroDiagonal);
  CHECK_THROWS_AS(FiniteMetricSpace::validate({{0, 1}, {1, 0}, {1, 1}}), BadInput);
}

TEST_CASE("validate agrees with a direct invariant check on random matrices") {
  std::mt19937_64 rng(20240521);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 5);
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = 0.5 + unit(rng);
    // Half the trials get a random corruption.
    if (trial % 2) {
      const std::size_t i = rng() % n;
      std::size_t j = rng() % n;
      if (j == i) j = (j + 1) % n;
      switch (trial % 8) {
        case 1: m[i][j] = -m[i][j]; break;
        case 3: m[i][j] = 0.0; break;
        case 5: m[i][j] = m[i][j] + 5.0; break;  // breaks symmetry or triangle
        default: m[i][i] = 1.0; break;
      }
    }

    bool expect_ok = true;
    for (std::size_t i = 0; i < n && expect_ok; ++i) {
      if (m[i][i] != 0.0) expect_ok = false;
      for (std::size_t j = 0; j < n && expect_ok; ++j) {
        if (j != i && !(m[i][j] > 0.0)) expect_ok = false;
        if (m[i][j] != m[j][i]) expect_ok = false;
        for (std::size_t k = 0; k < n && expect_ok; ++k)
          if (m[i][j] > m[i][k] + m[k][j]) expect_ok = false;
      }
    }

    if (expect_ok) {
      CHECK_NOTHROW(FiniteMetricSpace::validate(m));
    } else {
      CHECK_THROWS_AS(FiniteMetricSpace::validate(m), ValidationError);
    }
  }
}

TEST_CASE("from_points computes the chosen metric") {
  PointCloud line{{{0.0}, {1.0 / 3.0}, {1.0}}, MetricKind::euclidean};
  const auto space = FiniteMetricSpace::from_points(line);
  CHECK(space.distance(0, 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(space.distance(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  PointCloud plane{{{0.0, 0.0}, {3.0, 4.0}}, MetricKind::euclidean};
  CHECK(FiniteMetricSpace::from_points(plane).distance(0, 1) == 5.0);

  plane.kind = MetricKind::chebyshev;
  CHECK(FiniteMetricSpace::from_points(plane).distance(0, 1) == 4.0);

  PointCloud dup{{{1.0, 2.0}, {1.0, 2.0}}, MetricKind::euclidean};
  CHECK_THROWS_AS(FiniteMetricSpace::from_points(dup), DuplicatePoint);
}

TEST_CASE("scale multiplies every distance and round-trips within 1 ulp") {
  const auto space = FiniteMetricSpace::validate({{0, 1}, {1, 0}});
  CHECK(scale(space, 3.0).distance(0, 1) == 3.0);
  CHECK(scale(space, 1.0).distance(0, 1) == 1.0);
  CHECK_THROWS_AS(scale(space, 0.0), NonPositiveScale);
  CHECK_THROWS_AS(scale(space, -2.0), NonPositiveScale);

  std::mt19937_64 rng(7);
  const auto random = testutil::random_band_space(6, rng);
  const double r = 0.37;
  const auto back = scale(scale(random, r), 1.0 / r);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const double expect = random.distance(i, j);
      const double got = back.distance(i, j);
      CHECK(got >= std::nextafter(expect, -1.0));
      CHECK(got <= std::nextafter(expect, 2.0));
    }
  CHECK(scale(random, r).diameter() ==
        doctest::Approx(r * random.diameter()).epsilon(1e-15));
}

TEST_CASE("gapped_union separates parts by a constant gap") {
  const auto pair = FiniteMetricSpace::validate({{0, 1}, {1, 0}});
  const auto point = FiniteMetricSpace::validate({{0.0}});

  const auto two_points = gapped_union({point, point}, 1.0);
  CHECK(two_points.space.size() == 2);
  CHECK(two_points.space.distance(0, 1) == 1.0);

  const auto four = gapped_union({pair, pair}, 2.0);
  CHECK(four.space.size() == 4);
  CHECK(four.part == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(four.space.distance(0, 2) == 2.0);
  CHECK(four.space.distance(1, 3) == 2.0);
  CHECK(four.space.distance(0, 1) == 1.0);
  CHECK_NOTHROW(FiniteMetricSpace::validate(four.space.matrix()));

  CHECK_THROWS_AS(gapped_union({pair, pair}, 0.4), GapTooSmall);
}

TEST_CASE("gapped_union cross distances equal the gap for every part pair") {
  std::mt19937_64 rng(99);
  const auto a = testutil::random_band_space(3, rng);
  const auto b = testutil::random_band_space(2, rng);
  const auto c = testutil::random_band_space(4, rng);
  const auto glued = gapped_union({a, b, c}, 2.0);
  for (std::size_t i = 0; i < glued.space.size(); ++i)
    for (std::size_t j = i + 1; j < glued.space.size(); ++j)
      if (glued.part[i] != glued.part[j]) CHECK(glued.space.distance(i, j) == 2.0);
  CHECK_NOTHROW(FiniteMetricSpace::validate(glued.space.matrix()));
}

}  // TEST_SUITE

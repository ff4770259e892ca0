#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fractlip/fractal_gen.hpp"
#include "fractlip/ultra.hpp"

using namespace fractlip;

TEST_SUITE("fractal_gen") {

TEST_CASE("cantor endpoints at small depths") {
  const auto d0 = cantor_endpoints(0);
  REQUIRE(d0.points.size() == 2);
  CHECK(d0.points[0][0] == 0.0);
  CHECK(d0.points[1][0] == 1.0);

  const auto d1 = cantor_endpoints(1);
  REQUIRE(d1.points.size() == 4);
  CHECK(d1.points[1][0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(d1.points[2][0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  const auto d2 = cantor_endpoints(2);
  REQUIRE(d2.points.size() == 8);
  double min_gap = 1.0;
  for (std::size_t i = 1; i < d2.points.size(); ++i)
    min_gap = std::min(min_gap, d2.points[i][0] - d2.points[i - 1][0]);
  CHECK(min_gap == doctest::Approx(1.0 / 9.0).epsilon(1e-12));

  CHECK_THROWS_AS(cantor_endpoints(21), DepthTooLarge);
}

TEST_CASE("cantor endpoints stay sorted and distinct") {
  const auto cloud = cantor_endpoints(6);
  REQUIRE(cloud.points.size() == 128);
  for (std::size_t i = 1; i < cloud.points.size(); ++i)
    CHECK(cloud.points[i - 1][0] < cloud.points[i][0]);
}

TEST_CASE("cantor endpoints lie in 2^m intervals of length 3^-m") {
  const std::size_t depth = 6;
  const auto cloud = cantor_endpoints(depth);
  for (std::size_t m = 1; m <= depth; ++m) {
    const double width = std::pow(3.0, -static_cast<double>(m));
    // Points sorted: group greedily into runs spanning at most `width`.
    std::size_t intervals = 1;
    double start = cloud.points[0][0];
    for (const auto& p : cloud.points)
      if (p[0] - start > width * (1.0 + 1e-12)) {
        ++intervals;
        start = p[0];
      }
    CHECK(intervals == (std::size_t{1} << m));
  }
}

TEST_CASE("ifs_sample reproduces the cantor construction at depth 1") {
  IfsSpec spec;
  spec.arity = 1;
  spec.maps = {{1.0 / 3.0, {0.0}}, {1.0 / 3.0, {2.0 / 3.0}}};
  const auto box = ifs_bounding_box(spec);
  CHECK(box[0].first == doctest::Approx(0.0));
  CHECK(box[0].second == doctest::Approx(1.0));

  const auto sample = ifs_sample(spec, 1);
  REQUIRE(sample.points.size() == 2);
  std::vector<double> xs{sample.points[0][0], sample.points[1][0]};
  std::sort(xs.begin(), xs.end());
  CHECK(xs[0] == doctest::Approx(0.0));
  CHECK(xs[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("ifs_sample counts cylinders") {
  IfsSpec spec;
  spec.arity = 1;
  spec.maps = {{0.2, {0.0}}, {0.2, {0.4}}, {0.2, {0.8}}};
  CHECK(ifs_sample(spec, 2).points.size() == 9);

  // All sampled points must be distinct under strong separation.
  const auto sample = ifs_sample(spec, 3);
  std::set<double> uniq;
  for (const auto& p : sample.points) uniq.insert(p[0]);
  CHECK(uniq.size() == sample.points.size());
}

TEST_CASE("homogeneous ifs distances recurse by the ratio") {
  // Within each depth-1 cylinder, the depth-k sample is an r-scaled copy of
  // the depth-(k-1) sample, so its distance multiset is the scaled one.
  IfsSpec spec;
  spec.arity = 1;
  spec.maps = {{1.0 / 3.0, {0.0}}, {1.0 / 3.0, {2.0 / 3.0}}};
  const std::size_t depth = 4;
  const auto prev = ifs_sample(spec, depth - 1);
  const auto cur = ifs_sample(spec, depth);
  const std::size_t block = prev.points.size();
  REQUIRE(cur.points.size() == 2 * block);

  std::vector<double> scaled;
  for (std::size_t i = 0; i < block; ++i)
    for (std::size_t j = i + 1; j < block; ++j)
      scaled.push_back(std::fabs(prev.points[i][0] - prev.points[j][0]) / 3.0);
  std::sort(scaled.begin(), scaled.end());

  for (std::size_t cyl = 0; cyl < 2; ++cyl) {
    std::vector<double> within;
    for (std::size_t i = 0; i < block; ++i)
      for (std::size_t j = i + 1; j < block; ++j)
        within.push_back(std::fabs(cur.points[cyl * block + i][0] -
                                   cur.points[cyl * block + j][0]));
    std::sort(within.begin(), within.end());
    REQUIRE(within.size() == scaled.size());
    for (std::size_t k = 0; k < within.size(); ++k)
      CHECK(within[k] == doctest::Approx(scaled[k]).epsilon(1e-12));
  }

  // Cross-cylinder distances stay above the cylinder gap.
  double min_cross = 1.0;
  for (std::size_t i = 0; i < block; ++i)
    for (std::size_t j = 0; j < block; ++j)
      min_cross = std::min(min_cross, std::fabs(cur.points[i][0] -
                                                cur.points[block + j][0]));
  CHECK(min_cross > 1.0 / 3.0 - 1e-12);
}

TEST_CASE("overlapping maps violate strong separation") {
  IfsSpec spec;
  spec.arity = 1;
  spec.maps = {{0.6, {0.0}}, {0.6, {0.2}}};
  CHECK_THROWS_AS(check_ssc(spec), SscViolation);
  CHECK_THROWS_AS(ifs_sample(spec, 1), SscViolation);

  IfsSpec fine;
  fine.arity = 1;
  fine.maps = {{0.2, {0.0}}, {0.2, {0.4}}, {0.2, {0.8}}};
  CHECK_THROWS_AS(ifs_sample(fine, 14), TooManyPoints);  // 3^14 > 10^6
}

TEST_CASE("mcmullen dimension formula") {
  CarpetSpec spec;
  spec.rows = 9;
  spec.cols = 81;
  // 8 cells: 3 in row 0, 5 in row 4.
  spec.cells = {{0, 0}, {10, 0}, {20, 0}, {1, 4}, {12, 4}, {30, 4}, {47, 4}, {61, 4}};
  CHECK(spec.distinct_rows() == 2);
  CHECK(mcmullen_dimension(spec) ==
        doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-12));

  CarpetSpec full;
  full.rows = 3;
  full.cols = 3;
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t r = 0; r < 3; ++r) full.cells.push_back({c, r});
  CHECK(mcmullen_dimension(full) == doctest::Approx(2.0).epsilon(1e-12));

  CarpetSpec single;
  single.rows = 3;
  single.cols = 3;
  single.cells = {{1, 1}};
  CHECK(mcmullen_dimension(single) == doctest::Approx(0.0));
}

TEST_CASE("carpet_sample emits |D|^depth distinct points") {
  CarpetSpec spec;
  spec.rows = 2;
  spec.cols = 3;
  spec.cells = {{0, 0}, {2, 1}};
  const auto sample = carpet_sample(spec, 3);
  REQUIRE(sample.points.size() == 8);
  std::set<std::pair<double, double>> uniq;
  for (const auto& p : sample.points) uniq.insert({p[0], p[1]});
  CHECK(uniq.size() == 8);
  CHECK_THROWS_AS(carpet_sample(spec, 25), TooManyPoints);
}

TEST_CASE("ultrametric tree space distances follow the ancestor level") {
  const auto two = ultrametric_tree_space({2}, {1.0});
  REQUIRE(two.size() == 2);
  CHECK(two.distance(0, 1) == 1.0);

  const auto four = ultrametric_tree_space({2, 2}, {1.0, 1.0 / 3.0});
  REQUIRE(four.size() == 4);
  CHECK(four.distance(0, 1) == 1.0 / 3.0);
  CHECK(four.distance(2, 3) == 1.0 / 3.0);
  CHECK(four.distance(0, 2) == 1.0);
  CHECK(four.distance(1, 3) == 1.0);

  CHECK_THROWS_AS(ultrametric_tree_space({2, 2}, {1.0, 1.5}), NonDecreasingDiameters);
  CHECK_THROWS_AS(ultrametric_tree_space({2, 2}, {1.0, 0.0}), NonDecreasingDiameters);
}

TEST_CASE("tree spaces are ultrametric and satisfy the ball dichotomy") {
  const auto space = ultrametric_tree_space({3, 2, 2}, {1.0, 0.4, 0.1});
  CHECK(is_ultrametric(space).ok);
  for (double r : {0.1, 0.4, 1.0, 0.25}) CHECK(ball_partition_check(space, r));
  CHECK_NOTHROW(FiniteMetricSpace::validate(space.matrix()));
}

}  // TEST_SUITE

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fractlip/metric_space.hpp"

namespace fractlip {

// Centers are always points of the space and balls are closed; this shifts
// covering counts by at most a constant factor and never the dimension.
//
// Closed-ball membership snaps boundary ties: structural samples place
// points whose ideal distance equals the radius exactly, and coordinate
// rounding perturbs those distances by a few ulps of the diameter. The
// snap window is far below any honest structure scale.
inline constexpr double kCoverBoundarySlack = 64 * 2.220446049250313e-16;

inline bool cover_ball_contains(double d, double r, double scale) {
  return d <= r + kCoverBoundarySlack * (r > scale ? r : scale);
}

struct CoverReport {
  double r = 0.0;
  std::size_t count = 0;
  std::vector<std::size_t> centers;
  bool exact = false;
};

// Greedy cover: the lowest-index uncovered point becomes the next center.
std::vector<std::size_t> greedy_cover_centers(const Metric& metric, double r);
CoverReport covering_number_greedy(const Metric& metric, double r);

// Minimal cover by branch-and-bound over the n candidate balls; n <= size_cap
// (TooManyPoints otherwise). Deterministic: the reported centers are the
// lexicographically least optimal selection.
CoverReport covering_number_exact(const Metric& metric, double r,
                                  std::size_t size_cap = 64);

struct BoxDimEstimate {
  std::vector<double> radii;
  std::vector<std::size_t> counts;
  double slope = 0.0;
  double residual = 0.0;  // RMS residual of the fit
};

// Least-squares slope of log(count) against log(1/r) using greedy counts.
// Radii must be positive with at least two distinct values
// (DegenerateRadii otherwise).
BoxDimEstimate box_dimension_estimate(const Metric& metric,
                                      const std::vector<double>& radii);

// Cover counts b_n at radii 3^-n and the b_n/2^n trajectory; the trend
// verdicts are heuristics for whether the space can look like a Lipschitz
// image of the middle-third Cantor set.
struct CantorImageReport {
  std::vector<std::size_t> b;            // b[k] = cover count at 3^-(k+1)
  std::vector<bool> count_exact;         // per-n: exact solver vs greedy
  std::vector<double> ratios;            // b_n / 2^n
  std::vector<double> partial_sums;      // running sum of b_n / 2^n
  double sup_ratio = 0.0;
  std::string verdict;  // sufficient-condition-passes | necessary-condition-fails
                        // | inconclusive
};

CantorImageReport cantor_image_test(const Metric& metric, std::size_t depth_max);

// Exact minimal set cover over bitmask sets (universe <= 64 elements).
// Returns the lexicographically least optimal selection of set indices.
std::vector<std::size_t> exact_set_cover(std::uint64_t universe,
                                         const std::vector<std::uint64_t>& sets);

}  // namespace fractlip

#include "fractlip/cover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace fractlip {

std::vector<std::size_t> greedy_cover_centers(const Metric& metric, double r) {
  if (!(r > 0.0)) throw BadInput("radius must be positive");
  const std::size_t n = metric.size();
  const double scale = metric.diameter();
  std::vector<std::size_t> centers;
  std::vector<bool> covered(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    if (covered[p]) continue;
    centers.push_back(p);
    covered[p] = true;
    for (std::size_t q = p + 1; q < n; ++q)
      if (!covered[q] && cover_ball_contains(metric.distance(p, q), r, scale))
        covered[q] = true;
  }
  return centers;
}

namespace {

// Every reported cover is re-checked before it leaves the module.
void assert_covers(const Metric& metric, const std::vector<std::size_t>& centers,
                   double r) {
  const std::size_t n = metric.size();
  const double scale = metric.diameter();
  for (std::size_t p = 0; p < n; ++p) {
    bool hit = false;
    for (std::size_t c : centers)
      if (cover_ball_contains(metric.distance(c, p), r, scale)) {
        hit = true;
        break;
      }
    if (!hit) throw VerificationFailure("cover check failed: point uncovered");
  }
}

}  // namespace

CoverReport covering_number_greedy(const Metric& metric, double r) {
  CoverReport report;
  report.r = r;
  report.centers = greedy_cover_centers(metric, r);
  report.count = report.centers.size();
  report.exact = false;
  assert_covers(metric, report.centers, r);
  return report;
}

namespace {

struct SetCoverState {
  const std::vector<std::uint64_t>& sets;
  std::uint64_t universe;
  std::size_t best_count;
  std::vector<std::size_t> best_pick;
  std::vector<std::size_t> pick;

  // Candidate sets per element, precomputed for the branching rule.
  std::vector<std::vector<std::size_t>> covering;
};

void cover_search(SetCoverState& st, std::uint64_t uncovered) {
  if (uncovered == 0) {
    if (st.pick.size() < st.best_count) {
      st.best_count = st.pick.size();
      st.best_pick = st.pick;
    }
    return;
  }
  if (st.pick.size() + 1 >= st.best_count) return;

  // Simple admissible bound: remaining picks cannot beat the largest set.
  std::size_t largest = 0;
  for (std::uint64_t s : st.sets)
    largest = std::max<std::size_t>(largest, std::popcount(s & uncovered));
  if (largest == 0) return;  // uncoverable residue
  const std::size_t lb =
      (static_cast<std::size_t>(std::popcount(uncovered)) + largest - 1) / largest;
  if (st.pick.size() + lb >= st.best_count) return;

  // Branch on the uncovered element with the fewest candidate sets.
  std::size_t pivot = 64;
  std::size_t fewest = std::numeric_limits<std::size_t>::max();
  for (std::size_t e = 0; e < 64; ++e) {
    if (!(uncovered & (std::uint64_t{1} << e))) continue;
    std::size_t cnt = 0;
    for (std::size_t idx : st.covering[e])
      if (st.sets[idx] & uncovered) ++cnt;
    if (cnt < fewest) {
      fewest = cnt;
      pivot = e;
    }
  }
  for (std::size_t idx : st.covering[pivot]) {
    st.pick.push_back(idx);
    cover_search(st, uncovered & ~st.sets[idx]);
    st.pick.pop_back();
  }
}

// Can `universe` be covered with at most `slots` sets drawn from indices
// >= `first`? Used for the lexicographic reconstruction.
bool coverable(const std::vector<std::uint64_t>& sets, std::uint64_t uncovered,
               std::size_t slots, std::size_t first) {
  if (uncovered == 0) return true;
  if (slots == 0) return false;
  for (std::size_t idx = first; idx < sets.size(); ++idx)
    if (sets[idx] & uncovered)
      if (coverable(sets, uncovered & ~sets[idx], slots - 1, idx + 1)) return true;
  return false;
}

}  // namespace

std::vector<std::size_t> exact_set_cover(std::uint64_t universe,
                                         const std::vector<std::uint64_t>& sets) {
  if (universe == 0) return {};

  // Greedy warm start gives the initial incumbent.
  std::vector<std::size_t> greedy;
  std::uint64_t uncovered = universe;
  while (uncovered) {
    std::size_t best_idx = sets.size();
    int best_gain = 0;
    for (std::size_t idx = 0; idx < sets.size(); ++idx) {
      const int gain = std::popcount(sets[idx] & uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best_idx = idx;
      }
    }
    if (best_idx == sets.size()) throw BadInput("sets do not cover the universe");
    greedy.push_back(best_idx);
    uncovered &= ~sets[best_idx];
  }

  SetCoverState st{sets, universe, greedy.size(), greedy, {}, {}};
  st.covering.resize(64);
  for (std::size_t e = 0; e < 64; ++e)
    if (universe & (std::uint64_t{1} << e))
      for (std::size_t idx = 0; idx < sets.size(); ++idx)
        if (sets[idx] & (std::uint64_t{1} << e)) st.covering[e].push_back(idx);
  cover_search(st, universe);

  // Rebuild the lexicographically least optimal selection.
  const std::size_t k = st.best_count;
  std::vector<std::size_t> result;
  uncovered = universe;
  std::size_t from = 0;
  for (std::size_t slot = 0; slot < k && uncovered; ++slot) {
    for (std::size_t idx = from; idx < sets.size(); ++idx) {
      if (!(sets[idx] & uncovered)) continue;
      if (coverable(sets, uncovered & ~sets[idx], k - slot - 1, idx + 1)) {
        result.push_back(idx);
        uncovered &= ~sets[idx];
        from = idx + 1;
        break;
      }
    }
  }
  if (uncovered) throw VerificationFailure("set-cover reconstruction failed");
  return result;
}

CoverReport covering_number_exact(const Metric& metric, double r,
                                  std::size_t size_cap) {
  if (!(r > 0.0)) throw BadInput("radius must be positive");
  const std::size_t n = metric.size();
  if (n > size_cap || n > 64)
    throw TooManyPoints("exact covering caps at n = " +
                        std::to_string(std::min<std::size_t>(size_cap, 64)));

  const double scale = metric.diameter();
  std::vector<std::uint64_t> balls(n, 0);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t p = 0; p < n; ++p)
      if (cover_ball_contains(metric.distance(c, p), r, scale))
        balls[c] |= std::uint64_t{1} << p;
  const std::uint64_t universe =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  CoverReport report;
  report.r = r;
  report.centers = exact_set_cover(universe, balls);
  report.count = report.centers.size();
  report.exact = true;
  assert_covers(metric, report.centers, r);
  return report;
}

BoxDimEstimate box_dimension_estimate(const Metric& metric,
                                      const std::vector<double>& radii) {
  if (radii.size() < 2) throw DegenerateRadii("need at least two radii");
  for (double r : radii)
    if (!(r > 0.0)) throw DegenerateRadii("radii must be positive");

  BoxDimEstimate est;
  est.radii = radii;
  est.counts.reserve(radii.size());
  for (double r : radii) est.counts.push_back(covering_number_greedy(metric, r).count);

  // OLS of y = log(count) on x = log(1/r).
  const std::size_t m = radii.size();
  double sx = 0.0, sy = 0.0;
  std::vector<double> xs(m), ys(m);
  for (std::size_t k = 0; k < m; ++k) {
    xs[k] = std::log(1.0 / radii[k]);
    ys[k] = std::log(static_cast<double>(est.counts[k]));
    sx += xs[k];
    sy += ys[k];
  }
  const double mx = sx / static_cast<double>(m);
  const double my = sy / static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
  }
  if (sxx == 0.0) throw DegenerateRadii("radii are all equal");
  est.slope = sxy / sxx;

  double ss = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double pred = my + est.slope * (xs[k] - mx);
    ss += (ys[k] - pred) * (ys[k] - pred);
  }
  est.residual = std::sqrt(ss / static_cast<double>(m));
  return est;
}

CantorImageReport cantor_image_test(const Metric& metric, std::size_t depth_max) {
  constexpr std::size_t kMaxDepth = 20;
  if (depth_max > kMaxDepth) throw DepthTooLarge(depth_max, kMaxDepth);
  if (depth_max == 0) throw BadInput("depth_max must be >= 1");

  CantorImageReport report;
  const bool use_exact = metric.size() <= 64;
  double pow2 = 1.0;
  double running = 0.0;
  for (std::size_t n = 1; n <= depth_max; ++n) {
    const double r = std::pow(3.0, -static_cast<double>(n));
    const std::size_t count = use_exact ? covering_number_exact(metric, r).count
                                        : covering_number_greedy(metric, r).count;
    pow2 *= 2.0;
    const double ratio = static_cast<double>(count) / pow2;
    running += ratio;
    report.b.push_back(count);
    report.count_exact.push_back(use_exact);
    report.ratios.push_back(ratio);
    report.partial_sums.push_back(running);
    report.sup_ratio = std::max(report.sup_ratio, ratio);
  }

  // Trend verdicts on the summand b_n/2^n (thresholds are artifact
  // conventions, not theory): three consecutive growth steps above 1.1
  // fail the necessary condition; a decreasing tail passes the
  // sufficient one.
  const auto& t = report.ratios;
  bool fails = false;
  for (std::size_t k = 0; k + 3 < t.size(); ++k)
    if (t[k + 1] > 1.1 * t[k] && t[k + 2] > 1.1 * t[k + 1] &&
        t[k + 3] > 1.1 * t[k + 2])
      fails = true;
  bool tail_decreasing = t.size() >= 2;
  const std::size_t window = std::min<std::size_t>(3, t.size() - 1);
  for (std::size_t k = t.size() - window; k < t.size() && tail_decreasing; ++k)
    if (!(t[k] < t[k - 1])) tail_decreasing = false;
  report.verdict = fails ? "necessary-condition-fails"
                         : (tail_decreasing ? "sufficient-condition-passes"
                                            : "inconclusive");
  return report;
}

}  // namespace fractlip

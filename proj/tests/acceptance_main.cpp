// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned in code; the wall-clock budgets are part of the
// criteria and are enforced.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fractlip/chain_energy.hpp"
#include "fractlip/cover.hpp"
#include "fractlip/fractal_gen.hpp"
#include "fractlip/holder.hpp"
#include "fractlip/io.hpp"
#include "fractlip/lip_cover.hpp"
#include "fractlip/min_chain.hpp"
#include "fractlip/selfsimilar.hpp"
#include "fractlip/ultra.hpp"

using namespace fractlip;

namespace {

const double kCantorExponent = std::log(2.0) / std::log(3.0);

struct Criterion {
  int id;
  std::string summary;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

FiniteMetricSpace random_band_space(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> band(1.0, 2.0);
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dist[i][j] = dist[j][i] = band(rng);
  return FiniteMetricSpace::validate(dist);
}

FiniteMetricSpace random_tree_space(std::mt19937_64& rng, std::size_t max_leaves) {
  for (;;) {
    const std::size_t depth = 1 + rng() % 3;
    std::vector<std::size_t> arities;
    std::size_t leaves = 1;
    for (std::size_t k = 0; k < depth; ++k) {
      arities.push_back(2 + rng() % 3);
      leaves *= arities.back();
    }
    if (leaves > max_leaves) continue;
    std::vector<double> diams;
    double d = 1.0;
    std::uniform_real_distribution<double> shrink(0.2, 0.8);
    for (std::size_t k = 0; k < depth; ++k) {
      diams.push_back(d);
      d *= shrink(rng);
    }
    return ultrametric_tree_space(arities, diams);
  }
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return order;
}

// 1. DP vs brute-force chain enumeration.
bool criterion_oracle(std::string& detail) {
  std::mt19937_64 rng(101);
  const double exponents[] = {0.5, kCantorExponent, 1.0, 2.0};
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 9;  // up to 10
    const auto space = random_band_space(n, rng);
    const auto order = identity_order(n);
    for (double s : exponents) {
      const double dp = chain_energy(space, order, s);
      const double bf = chain_energy_bruteforce(space, order, s);
      worst = std::max(worst, std::fabs(dp - bf));
    }
  }
  detail = "500 spaces x 4 exponents, worst |dp - bf| = " + std::to_string(worst);
  return worst <= 1e-12;
}

// 2. Prefix superadditivity and lower-bound inequalities.
bool criterion_prefix_inequalities(std::string& detail) {
  std::mt19937_64 rng(202);
  std::size_t violations = 0;
  std::size_t checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + rng() % 8;  // up to 10
    const auto space = random_band_space(n, rng);
    auto order = identity_order(n);
    std::shuffle(order.begin(), order.end(), rng);
    const double s = (trial % 2) ? 0.75 : 1.5;

    const auto slice = [&](std::size_t i, std::size_t j) {
      std::vector<std::size_t> part(order.begin() + static_cast<std::ptrdiff_t>(i),
                                    order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      return chain_energy(space, part, s);
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double whole = slice(0, j);
        const double head = slice(0, i);
        const double tail = slice(i, j);
        const double step = pow_s(space.distance(order[i], order[j]), s);
        ++checked;
        if (head + tail > whole + 1e-12) ++violations;
        if (whole - head < tail - 1e-12) ++violations;
        if (tail < step - 1e-12) ++violations;
      }
  }
  detail = std::to_string(checked) + " splits, " + std::to_string(violations) +
           " violations";
  return violations == 0;
}

// 3. Sorted cantor endpoints: energy 1 + n/2, optimal for small depths.
bool criterion_cantor_recursion(std::string& detail) {
  double worst = 0.0;
  for (std::size_t depth = 1; depth <= 12; ++depth) {
    const PointCloud cloud = cantor_endpoints(depth);
    PointCloudMetric metric(cloud);
    const double value = chain_energy_sorted(metric, kCantorExponent);
    const double expect = 1.0 + static_cast<double>(depth) / 2.0;
    worst = std::max(worst, std::fabs(value - expect));
  }
  if (worst > 1e-9) {
    detail = "worst deviation from 1 + n/2 is " + std::to_string(worst);
    return false;
  }
  for (std::size_t depth = 1; depth <= 2; ++depth) {
    const auto space = FiniteMetricSpace::from_points(cantor_endpoints(depth));
    const auto best = min_chain_exact(space, kCantorExponent, 0, 8);
    const double sorted = chain_energy_sorted(space, kCantorExponent);
    if (!best.exact || std::fabs(best.value - sorted) > 1e-12) {
      detail = "sorted order not optimal at depth " + std::to_string(depth);
      return false;
    }
  }
  detail = "depths 1..12 match 1 + n/2 (worst " + std::to_string(worst) +
           "); sorted optimal at depths 1..2";
  return true;
}

// 4. Net-tree order stays below the cover-sum bound on all fixtures.
bool criterion_net_bound(std::string& detail) {
  std::vector<FiniteMetricSpace> fixtures;
  for (std::size_t depth = 1; depth <= 6; ++depth)
    fixtures.push_back(FiniteMetricSpace::from_points(cantor_endpoints(depth)));
  fixtures.push_back(ultrametric_tree_space({2, 2}, {1.0, 1.0 / 3.0}));
  fixtures.push_back(ultrametric_tree_space({3, 2, 2}, {1.0, 0.4, 0.1}));
  fixtures.push_back(ultrametric_tree_space({4, 4}, {1.0, 0.2}));
  for (std::size_t grid : {9, 17, 33}) {
    PointCloud cloud;
    cloud.kind = MetricKind::euclidean;
    for (std::size_t i = 0; i < grid; ++i)
      cloud.points.push_back(
          {static_cast<double>(i) / static_cast<double>(grid - 1)});
    fixtures.push_back(FiniteMetricSpace::from_points(cloud));
  }

  std::size_t violations = 0;
  std::size_t cases = 0;
  for (const auto& space : fixtures)
    for (double u : {0.25, 1.0 / 3.0, 0.5})
      for (double s : {0.7, 0.75, 1.0}) {
        const auto nto = net_tree_order(space, u);
        const double z = chain_energy(space, nto.order, s);
        const double bound = net_cover_bound(nto.tree, s);
        ++cases;
        if (z > bound) ++violations;
      }
  detail = std::to_string(cases) + " fixture/u/s cases, " +
           std::to_string(violations) + " violations";
  return violations == 0;
}

// 5. Exact-order parametrizations are 1-Hoelder onto [0, minimum].
bool criterion_parametrization(std::string& detail) {
  std::mt19937_64 rng(505);
  const double exponents[] = {0.5, 0.8, 1.25};
  double worst_c = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 8;  // up to 9
    const auto space = random_band_space(n, rng);
    const double s = exponents[trial % 3];
    const auto best = min_chain_exact(space, s);
    const auto param = build_parametrization(space, best.order, s);
    const auto cert = verify_holder(param.anchors, space, param.images, param.alpha);
    worst_c = std::max(worst_c, cert.worst_c);
    if (param.anchors.front() != 0.0 || param.ell != best.value) {
      detail = "anchors do not span [0, minimum] exactly";
      return false;
    }
  }
  detail = "200 spaces, worst certified C = " + std::to_string(worst_c);
  return worst_c <= 1.0 + 1e-12;
}

// 6. Box-dimension regressions on the cantor sample and a carpet sample.
bool criterion_box_dimension(std::string& detail) {
  const PointCloud cantor = cantor_endpoints(12);
  PointCloudMetric cantor_metric(cantor);
  std::vector<double> radii;
  for (int k = 1; k <= 10; ++k) radii.push_back(std::pow(3.0, -k));
  const auto cantor_est = box_dimension_estimate(cantor_metric, radii);
  const double cantor_err = std::fabs(cantor_est.slope - kCantorExponent);

  CarpetSpec spec;
  spec.rows = 9;
  spec.cols = 81;
  spec.cells = {{0, 0}, {10, 0}, {20, 0}, {1, 4}, {12, 4}, {30, 4}, {47, 4}, {61, 4}};
  PointCloud carpet = carpet_sample(spec, 3);
  carpet.kind = MetricKind::chebyshev;  // box geometry for the regression
  PointCloudMetric carpet_metric(carpet);
  std::vector<double> carpet_radii;
  for (int k = 1; k <= 3; ++k) carpet_radii.push_back(std::pow(9.0, -k));
  const auto carpet_est = box_dimension_estimate(carpet_metric, carpet_radii);
  const double target = mcmullen_dimension(spec);  // log_3 2
  const double carpet_err = std::fabs(carpet_est.slope - target);

  detail = "cantor slope " + std::to_string(cantor_est.slope) + " (err " +
           std::to_string(cantor_err) + "), carpet slope " +
           std::to_string(carpet_est.slope) + " (err " + std::to_string(carpet_err) +
           ")";
  return cantor_err <= 0.05 && carpet_err <= 0.1 &&
         std::fabs(target - kCantorExponent) <= 1e-12;
}

// 7. Retraction/extension/ball-partition suite on random tree spaces.
bool criterion_ultrametric(std::string& detail) {
  std::mt19937_64 rng(707);
  std::size_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto space = random_tree_space(rng, 64);
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < space.size(); ++i)
      if (rng() % 3 == 0) subset.push_back(i);
    if (subset.empty()) subset.push_back(rng() % space.size());

    const auto g = retraction(space, subset);
    for (std::size_t a : subset)
      if (g.image[a] != a) ++violations;
    if (!verify_lipschitz(space, space, g, 1.0).ok) ++violations;

    // Extension of a random map into a small target keeps its constant.
    const auto target = random_band_space(4, rng);
    MapTable f;
    f.image.resize(subset.size());
    for (auto& v : f.image) v = rng() % target.size();
    double certified = 0.0;
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t j = i + 1; j < subset.size(); ++j) {
        const double dy =
            f.image[i] == f.image[j] ? 0.0 : target.distance(f.image[i], f.image[j]);
        certified = std::max(certified, dy / space.distance(subset[i], subset[j]));
      }
    const auto ext = extend_lipschitz(space, subset, target, f, certified);
    for (std::size_t k = 0; k < subset.size(); ++k)
      if (ext.image[subset[k]] != f.image[k]) ++violations;
    if (!verify_lipschitz(space, target, ext, certified).ok) ++violations;
  }

  // Ball dichotomy at every level radius of a few deterministic trees.
  for (const auto& arities :
       std::vector<std::vector<std::size_t>>{{2, 2, 2}, {3, 3}, {2, 3, 2}}) {
    std::vector<double> diams;
    double d = 1.0;
    for (std::size_t k = 0; k < arities.size(); ++k) {
      diams.push_back(d);
      d *= 0.31;
    }
    const auto space = ultrametric_tree_space(arities, diams);
    for (double r : diams)
      if (!ball_partition_check(space, r)) ++violations;
  }
  detail = "1000 instances, " + std::to_string(violations) + " violations";
  return violations == 0;
}

// 8. Cover-number identities: scaling, unions of copies, separated targets.
bool criterion_cover_identities(std::string& detail) {
  std::mt19937_64 rng(808);
  std::size_t failures = 0;

  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_band_space(2 + rng() % 3, rng);   // <= 4
    const auto b = random_band_space(2 + rng() % 5, rng);   // <= 6
    const std::size_t base = f_cover_number(a, b).k;
    for (double r : {0.5, 2.0, 3.0})
      if (f_cover_number(scale(a, r), scale(b, r)).k != base) ++failures;
  }

  for (int trial = 0; trial < 100; ++trial) {
    const auto a0 = random_band_space(2, rng);
    const auto b = random_band_space(2 + rng() % 5, rng);  // <= 6
    const auto scaled = scale(a0, 0.5);
    const std::size_t quotient = (f_cover_number(scaled, b).k + 1) / 2;

    const double small_gap = std::max(scaled.diameter(), 0.51 * b.diameter());
    const auto a_small = gapped_union({scaled, scaled}, small_gap);
    if (f_cover_number(a_small.space, b).k < quotient) ++failures;

    const double big_gap = std::max(scaled.diameter(), b.diameter());
    const auto a_big = gapped_union({scaled, scaled}, big_gap);
    if (f_cover_number(a_big.space, b).k != quotient) ++failures;
  }

  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_band_space(2 + rng() % 2, rng);  // <= 3
    const auto b1 = random_band_space(2, rng);
    const auto b2 = random_band_space(1 + rng() % 3, rng);  // <= 3
    const double gap =
        std::max({a.diameter() * 1.01, b1.diameter(), b2.diameter()});
    const auto b = gapped_union({b1, b2}, gap);
    const std::size_t whole = f_cover_number(a, b.space).k;
    const std::size_t parts = f_cover_number(a, b1).k + f_cover_number(a, b2).k;
    if (whole != parts) ++failures;
  }

  detail = "300 identity instances, " + std::to_string(failures) + " failures";
  return failures == 0;
}

// 9. Power sums that reach 1 have integer exponents.
bool criterion_power_sums(std::string& detail) {
  std::mt19937_64 rng(909);
  const std::uint64_t qs[] = {2, 3, 5, 6, 10};
  std::size_t ones = 0;
  std::size_t failures = 0;
  for (std::uint64_t q : qs) {
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<Rational> exps;
      if (trial % 2 == 0) {
        // True instance: split 1 = q^0 by replacing q^e with q copies of
        // q^(e-1); exponents stay integral and the sum stays 1.
        std::vector<long long> raw{0};
        const int steps = 1 + static_cast<int>(rng() % 3);
        for (int step = 0; step < steps; ++step) {
          const std::size_t pick = rng() % raw.size();
          const long long e = raw[pick];
          raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(pick));
          for (std::uint64_t c = 0; c < q && raw.size() < 40; ++c)
            raw.push_back(e - 1);
        }
        for (long long e : raw) exps.emplace_back(e, 1);
      } else {
        const std::size_t m = 1 + rng() % 4;
        for (std::size_t i = 0; i < m; ++i)
          exps.emplace_back(-1 - static_cast<long long>(rng() % 8),
                            1 + static_cast<long long>(rng() % 5));
      }
      const auto check = power_sum_check(q, exps);
      if (check.sums_to_one) {
        ++ones;
        if (!check.all_integer) ++failures;
      }
      if (trial % 2 == 0 && !check.sums_to_one) ++failures;  // generator sanity
    }
  }
  detail = "10000 tuples, " + std::to_string(ones) + " summed to one, " +
           std::to_string(failures) + " failures";
  return failures == 0;
}

// 10. Compatibility verdicts and refinement invariance.
bool criterion_compatibility(std::string& detail) {
  const HomogeneousSelfSimilar cantor{2, 1.0 / 3.0};

  const auto compatible =
      lipschitz_onto_compatibility(cantor, {1.0 / 3.0, 1.0 / 9.0, 1.0 / 9.0});
  const double beta = std::pow(3.0, -std::log(3.0) / std::log(2.0));
  const auto incompatible = lipschitz_onto_compatibility(cantor, {beta, beta, beta});
  const auto mismatch = lipschitz_onto_compatibility(cantor, {1.0 / 3.0, 1.0 / 4.0});
  if (compatible.verdict != CompatibilityVerdict::compatible ||
      incompatible.verdict != CompatibilityVerdict::incompatible ||
      mismatch.verdict != CompatibilityVerdict::dimension_mismatch) {
    detail = "worked examples: " + to_string(compatible.verdict) + "/" +
             to_string(incompatible.verdict) + "/" + to_string(mismatch.verdict);
    return false;
  }

  std::mt19937_64 rng(1010);
  const HomogeneousSelfSimilar refined{4, 1.0 / 9.0};
  std::size_t disagreements = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> ratios;
    const int kind = trial % 3;
    if (kind == 0) {
      std::vector<int> exps{1, 1};
      for (int step = 0; step < static_cast<int>(rng() % 3); ++step) {
        const std::size_t pick = rng() % exps.size();
        const int e = exps[pick];
        exps.erase(exps.begin() + static_cast<std::ptrdiff_t>(pick));
        exps.push_back(e + 1);
        exps.push_back(e + 1);
      }
      for (int e : exps) ratios.push_back(std::pow(1.0 / 3.0, e));
    } else if (kind == 1) {
      const std::size_t m = 3 + rng() % 4;
      ratios.assign(
          m, std::pow(static_cast<double>(m), -std::log(3.0) / std::log(2.0)));
    } else {
      std::uniform_real_distribution<double> ratio(0.1, 0.6);
      ratios = {ratio(rng), ratio(rng)};
    }
    if (lipschitz_onto_compatibility(cantor, ratios).verdict !=
        lipschitz_onto_compatibility(refined, ratios).verdict)
      ++disagreements;
  }
  detail = "worked examples ok; 50 refinement pairs, " +
           std::to_string(disagreements) + " disagreements";
  return disagreements == 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "chain-energy DP equals brute force (1e-12)", 10.0, criterion_oracle},
      {2, "prefix chain inequalities (1e-12 slack)", 10.0,
       criterion_prefix_inequalities},
      {3, "sorted cantor energy is 1 + n/2 (1e-9), optimal at small depth", 30.0,
       criterion_cantor_recursion},
      {4, "net-tree order bounded by the cover sum", 30.0, criterion_net_bound},
      {5, "exact-order parametrization is 1-Hoelder onto [0, minimum]", 60.0,
       criterion_parametrization},
      {6, "box-dimension slopes match the fixtures", 60.0, criterion_box_dimension},
      {7, "retractions/extensions and the ball dichotomy", 30.0,
       criterion_ultrametric},
      {8, "cover-number identities hold with integer equality", 120.0,
       criterion_cover_identities},
      {9, "power sums reaching 1 have integer exponents", 60.0,
       criterion_power_sums},
      {10, "compatibility verdicts and refinement invariance", 10.0,
       criterion_compatibility},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > criterion.budget_seconds) {
      ok = false;
      detail += " [over budget " + std::to_string(criterion.budget_seconds) + "s]";
    }
    std::printf("%s criterion %2d: %s (%s) [%.2fs]\n", ok ? "PASS" : "FAIL",
                criterion.id, criterion.summary.c_str(), detail.c_str(), seconds);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

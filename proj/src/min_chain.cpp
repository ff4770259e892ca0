#include "fractlip/min_chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fractlip/cover.hpp"

namespace fractlip {

namespace {

struct BranchState {
  const Metric& metric;
  double s = 1.0;
  std::uint64_t budget = 0;  // 0 = unlimited
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  double incumbent = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_order{};
  std::vector<std::size_t> prefix{};
  std::vector<double> longest{};  // longest chain value ending at prefix[k]
  std::vector<bool> used{};
};

void search(BranchState& st) {
  const std::size_t n = st.metric.size();
  if (st.budget && st.nodes >= st.budget) {
    st.budget_hit = true;
    return;
  }
  ++st.nodes;

  const std::size_t placed = st.prefix.size();
  if (placed == n) {
    const double value = st.longest.back();
    if (value < st.incumbent) {
      st.incumbent = value;
      st.best_order = st.prefix;
    }
    return;
  }
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (st.used[cand]) continue;
    // Reversal canonicalization: the last element must exceed the first.
    if (placed + 1 == n && cand < st.prefix.front()) continue;

    double ext = 0.0;
    double bound = 0.0;
    for (std::size_t k = 0; k < placed; ++k) {
      const double reach =
          st.longest[k] + pow_s(st.metric.distance(st.prefix[k], cand), st.s);
      ext = std::max(ext, reach);
      bound = std::max(bound, st.longest[k]);
    }
    bound = std::max(bound, ext);
    if (bound >= st.incumbent) continue;

    st.prefix.push_back(cand);
    st.longest.push_back(ext);
    st.used[cand] = true;
    search(st);
    st.used[cand] = false;
    st.longest.pop_back();
    st.prefix.pop_back();
    if (st.budget_hit) return;
  }
}

MinChainResult nearest_neighbor_order(const Metric& metric, double s) {
  const std::size_t n = metric.size();
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<bool> used(n, false);
  order.push_back(0);
  used[0] = true;
  for (std::size_t step = 1; step < n; ++step) {
    const std::size_t cur = order.back();
    std::size_t pick = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t cand = 0; cand < n; ++cand)
      if (!used[cand] && metric.distance(cur, cand) < best) {
        best = metric.distance(cur, cand);
        pick = cand;
      }
    order.push_back(pick);
    used[pick] = true;
  }
  MinChainResult res;
  res.value = chain_energy(metric, order, s);
  res.order = std::move(order);
  res.exact = false;
  res.method = "nearest_neighbor";
  return res;
}

MinChainResult two_opt_order(const Metric& metric, double s) {
  MinChainResult res = nearest_neighbor_order(metric, s);
  const std::size_t n = res.order.size();
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::reverse(res.order.begin() + static_cast<std::ptrdiff_t>(i),
                     res.order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        const double candidate = chain_energy(metric, res.order, s);
        if (candidate < res.value) {
          res.value = candidate;
          improved = true;
        } else {
          std::reverse(res.order.begin() + static_cast<std::ptrdiff_t>(i),
                       res.order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        }
      }
  }
  res.method = "two_opt";
  return res;
}

}  // namespace

MinChainResult min_chain_exact(const Metric& metric, double s,
                               std::uint64_t node_budget, std::size_t max_points) {
  const std::size_t n = metric.size();
  if (n == 0) throw EmptyOrder();
  if (!(s > 0.0)) throw BadInput("exponent s must be > 0");
  if (n > max_points)
    throw TooManyPoints("exact solver guarded at n = " + std::to_string(max_points));

  MinChainResult res;
  res.method = "exact";
  if (n == 1) {
    res.order = {0};
    res.value = 0.0;
    res.exact = true;
    res.nodes_explored = 1;
    return res;
  }

  BranchState st{metric, s, node_budget};
  // Heuristic fallback so a budgeted run always has a complete order. The
  // incumbent starts one ulp above the warm value: orders tying it are then
  // still explored, and the first optimum found in the index-ascending DFS
  // is the lexicographically least one.
  {
    MinChainResult warm = nearest_neighbor_order(metric, s);
    if (warm.order.front() > warm.order.back())
      std::reverse(warm.order.begin(), warm.order.end());
    st.incumbent = std::nextafter(warm.value, std::numeric_limits<double>::infinity());
    st.best_order = std::move(warm.order);
  }
  st.prefix.reserve(n);
  st.longest.reserve(n);
  st.used.assign(n, false);
  search(st);

  res.order = std::move(st.best_order);
  res.value = chain_energy(metric, res.order, s);
  res.exact = !st.budget_hit;
  res.nodes_explored = st.nodes;
  return res;
}

MinChainResult min_chain_line(const PointCloud& cloud, double s,
                              std::size_t cross_check_cap) {
  if (cloud.arity() != 1) throw BadInput("min_chain_line expects a 1-D cloud");
  const std::size_t n = cloud.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cloud.points[a][0] < cloud.points[b][0];
  });

  PointCloudMetric metric(cloud);
  MinChainResult res;
  res.value = chain_energy(metric, order, s);
  res.order = std::move(order);
  res.method = "sorted";
  res.exact = false;
  if (n <= cross_check_cap) {
    const MinChainResult exact = min_chain_exact(metric, s, 0, cross_check_cap);
    res.nodes_explored = exact.nodes_explored;
    res.exact = exact.exact && std::fabs(exact.value - res.value) <= 1e-12;
  }
  return res;
}

MinChainResult min_chain_heuristic(const Metric& metric, double s,
                                   ChainHeuristic strategy, double u) {
  if (metric.size() == 0) throw EmptyOrder();
  if (!(s > 0.0)) throw BadInput("exponent s must be > 0");
  switch (strategy) {
    case ChainHeuristic::nearest_neighbor:
      return nearest_neighbor_order(metric, s);
    case ChainHeuristic::two_opt:
      return two_opt_order(metric, s);
    case ChainHeuristic::net_tree: {
      NetTreeOrder nto = net_tree_order(metric, u);
      MinChainResult res;
      res.value = chain_energy(metric, nto.order, s);
      res.order = std::move(nto.order);
      res.method = "net_tree";
      res.exact = false;
      return res;
    }
  }
  throw BadInput("unknown heuristic strategy");
}

std::vector<double> NetTree::level_sizes() const {
  std::vector<double> sizes;
  sizes.reserve(levels.size());
  for (const auto& level : levels) sizes.push_back(static_cast<double>(level.size()));
  return sizes;
}

NetTreeOrder net_tree_order(const Metric& metric, double u) {
  if (!(u > 0.0) || !(u < 1.0)) throw BadInput("u must lie in (0,1)");
  const std::size_t n = metric.size();
  if (n == 0) throw EmptyOrder();

  NetTree tree;
  tree.u = u;
  tree.diam = metric.diameter();

  if (n == 1) {
    tree.radii = {0.0};
    tree.levels = {{0}};
    tree.parents = {{}};
    return NetTreeOrder{{0}, std::move(tree)};
  }

  const double min_pos = metric.min_positive_distance();
  double radius = tree.diam;
  for (;;) {
    tree.radii.push_back(radius);
    tree.levels.push_back(greedy_cover_centers(metric, radius));
    // Stop once balls of this radius are singletons, so the level holds
    // every point (same membership rule as the covers themselves).
    if (!cover_ball_contains(min_pos, radius, tree.diam)) break;
    radius *= u;
  }

  // Parent of a level-(n+1) center: nearest level-n center within the
  // level-n radius, ties resolved toward the earlier-ordered center.
  tree.parents.resize(tree.levels.size());
  for (std::size_t lvl = 1; lvl < tree.levels.size(); ++lvl) {
    const auto& above = tree.levels[lvl - 1];
    const double reach = tree.radii[lvl - 1];
    tree.parents[lvl].resize(tree.levels[lvl].size());
    for (std::size_t k = 0; k < tree.levels[lvl].size(); ++k) {
      const std::size_t child = tree.levels[lvl][k];
      std::size_t best_pos = above.size();
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t pos = 0; pos < above.size(); ++pos) {
        const double d = metric.distance(above[pos], child);
        if (cover_ball_contains(d, reach, tree.diam) && d < best_d) {
          best_d = d;
          best_pos = pos;
        }
      }
      tree.parents[lvl][k] = best_pos;  // cover property guarantees a hit
    }
  }

  // Branch of a point = positions of its ancestors per level; the deepest
  // level lists every point, so branches are total and pairwise distinct.
  const std::size_t depth = tree.depth();
  const auto& leaves = tree.levels[depth];
  std::vector<std::size_t> leaf_pos(n);
  for (std::size_t k = 0; k < leaves.size(); ++k) leaf_pos[leaves[k]] = k;

  std::vector<std::vector<std::size_t>> branch(n, std::vector<std::size_t>(depth + 1));
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t pos = leaf_pos[p];
    for (std::size_t lvl = depth;; --lvl) {
      branch[p][lvl] = pos;
      if (lvl == 0) break;
      pos = tree.parents[lvl][pos];
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return branch[a] < branch[b]; });
  return NetTreeOrder{std::move(order), std::move(tree)};
}

double net_cover_bound(const std::vector<double>& level_sizes, double s, double u,
                       double diam) {
  if (!(u > 0.0) || !(u < 1.0)) throw BadInput("u must lie in (0,1)");
  if (!(s > 0.0)) throw BadInput("exponent s must be > 0");
  if (level_sizes.empty()) throw BadInput("level sizes must be nonempty");
  if (diam == 0.0) return 0.0;

  const double us = std::pow(u, s);
  if (!(us < 1.0)) throw DivergentSum();

  double sum = 0.0;
  double weight = 1.0;  // u^{ns}
  for (std::size_t lvl = 1; lvl < level_sizes.size(); ++lvl) {
    weight *= us;
    sum += level_sizes[lvl] * weight;
  }
  // Levels continue with constant size past the deepest one.
  sum += level_sizes.back() * weight * us / (1.0 - us);

  const double prefactor = std::pow(2.0 * diam / (u * (1.0 - u)), s);
  return prefactor * sum;
}

double net_cover_bound(const NetTree& tree, double s) {
  return net_cover_bound(tree.level_sizes(), s, tree.u, tree.diam);
}

MinChainResult min_chain_energy(const Metric& metric, double s, MinChainMode mode) {
  if (mode == MinChainMode::exact) return min_chain_exact(metric, s);
  return min_chain_heuristic(metric, s, ChainHeuristic::two_opt);
}

std::vector<ProfileRow> dimension_profile(const Metric& metric,
                                          const std::vector<double>& s_grid,
                                          double u) {
  if (s_grid.empty()) throw BadInput("s grid must be nonempty");
  const std::size_t n = metric.size();

  const NetTreeOrder nto = net_tree_order(metric, u);
  std::vector<ProfileRow> rows;
  rows.reserve(s_grid.size());
  for (double s : s_grid) {
    ProfileRow row;
    row.s = s;
    MinChainResult best;
    if (n <= 12) {
      best = min_chain_exact(metric, s);
    } else {
      // two_opt recomputes the full DP per candidate move; past ~200
      // points a profile row would take minutes, so fall back to the
      // nearest-neighbor order there.
      best = n <= 192 ? min_chain_heuristic(metric, s, ChainHeuristic::two_opt)
                      : min_chain_heuristic(metric, s, ChainHeuristic::nearest_neighbor);
      const double nt_value = chain_energy(metric, nto.order, s);
      if (nt_value < best.value) {
        best.value = nt_value;
        best.order = nto.order;
        best.method = "net_tree";
        best.exact = false;
      }
    }
    row.delta = best.value;
    row.method = best.exact ? "exact" : best.method;
    row.bound = net_cover_bound(nto.tree, s);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fractlip

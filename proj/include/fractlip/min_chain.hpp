#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fractlip/chain_energy.hpp"
#include "fractlip/metric_space.hpp"

namespace fractlip {

struct MinChainResult {
  double value = 0.0;
  std::vector<std::size_t> order;
  bool exact = false;
  std::string method;
  std::uint64_t nodes_explored = 0;
};

// Exact minimum of the chain energy over all orders, by branch-and-bound
// over prefixes. The bound is the largest prefix chain value ending at any
// placed point; appending edges of nonnegative weight never decreases the
// final value, so pruning on it is sound. The search is restricted to
// orders with first index < last index (reversal symmetry) and candidates
// are expanded in increasing index order, so the reported order is the
// lexicographically least optimum within that canonical half.
//
// node_budget 0 means unlimited; when the budget runs out the best
// incumbent is returned with exact = false. n > max_points throws
// TooManyPoints (default guard 12, overridable).
MinChainResult min_chain_exact(const Metric& metric, double s,
                               std::uint64_t node_budget = 0,
                               std::size_t max_points = 12);

// Chain energy of the ascending order of a 1-D cloud. exact is set only
// when n <= cross_check_cap and min_chain_exact reproduced the value in
// this same call; ascending-order optimality is never assumed untested.
MinChainResult min_chain_line(const PointCloud& cloud, double s,
                              std::size_t cross_check_cap = 12);

enum class ChainHeuristic { nearest_neighbor, two_opt, net_tree };

// Upper bounds for the exact minimum (exact = false always).
//  - nearest_neighbor: greedy from index 0, ties to the lowest index.
//  - two_opt: first-improvement segment-reversal passes on the
//    nearest-neighbor order until a full pass finds no improvement; the
//    full DP is recomputed per candidate move.
//  - net_tree: the hierarchical-cover lexicographic order (see below), u
//    taken from the `u` argument.
MinChainResult min_chain_heuristic(const Metric& metric, double s,
                                   ChainHeuristic strategy, double u = 0.5);

// Hierarchical greedy covers at radii diam*u^n with parent links and
// per-level orders. Level 0 is a single center; the deepest level contains
// every point (its radius is below the smallest positive distance).
struct NetTree {
  double u = 0.5;
  double diam = 0.0;
  std::vector<double> radii;                     // radii[n] = diam * u^n
  std::vector<std::vector<std::size_t>> levels;  // center point indices, level order
  std::vector<std::vector<std::size_t>> parents; // parents[n][k]: position in level n-1
                                                 // of the parent of levels[n][k]; empty
                                                 // for n = 0
  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
  std::vector<double> level_sizes() const;
};

struct NetTreeOrder {
  std::vector<std::size_t> order;
  NetTree tree;
};

// Builds the net tree (greedy covers seeded at the lowest-index uncovered
// point, nearest eligible parent with ties to the earlier-ordered one) and
// orders the points by lexicographic comparison of root-to-leaf branches.
NetTreeOrder net_tree_order(const Metric& metric, double u);

// (2*diam/(u(1-u)))^s * sum_{n>=1} a_n u^{ns}, with a_n the level sizes
// extended constantly past the deepest level; the tail is summed in closed
// form. Upper-bounds the chain energy of the net-tree order.
double net_cover_bound(const std::vector<double>& level_sizes, double s, double u,
                       double diam);
double net_cover_bound(const NetTree& tree, double s);

// Order-minimal chain energy of the full space; delegates to the exact
// solver or the two-opt heuristic.
enum class MinChainMode { exact, heuristic };
MinChainResult min_chain_energy(const Metric& metric, double s,
                                MinChainMode mode = MinChainMode::exact);

struct ProfileRow {
  double s = 0.0;
  double delta = 0.0;
  std::string method;
  double bound = 0.0;
};

// One row per exponent: order-minimal energy (exact for n <= 12, otherwise
// the best of the applicable heuristics) and the net-cover bound at u.
std::vector<ProfileRow> dimension_profile(const Metric& metric,
                                          const std::vector<double>& s_grid,
                                          double u);

}  // namespace fractlip

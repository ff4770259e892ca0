#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "fractlip/metric_space.hpp"

namespace fractlip {

// d^s; metric validity guarantees d > 0 for distinct points.
inline double pow_s(double d, double s) { return std::exp(s * std::log(d)); }

// Chain energy of the ordered sequence: the maximum over index chains
// first = i_1 < ... < i_k = last of sum d(x_{i_j}, x_{i_j+1})^s.
// O(n^2) dynamic program: L[0] = 0, L[j] = max_{i<j}(L[i] + d^s); answer L[n-1].
// `order` must be a permutation of 0..n-1 over the metric's points.
double chain_energy(const Metric& metric, const std::vector<std::size_t>& order,
                    double s);

// Convenience: chain energy of 0..n-1 in index order.
double chain_energy_sorted(const Metric& metric, double s);

// Direct enumeration of every chain; n <= 20. The independent oracle for
// chain_energy.
double chain_energy_bruteforce(const Metric& metric,
                               const std::vector<std::size_t>& order, double s);

// Prefix energies L[i] = chain energy of order[0..i]; the DP table itself.
std::vector<double> chain_energy_prefixes(const Metric& metric,
                                          const std::vector<std::size_t>& order,
                                          double s);

struct OrderedChain {
  std::vector<std::size_t> order;
  double s = 1.0;
  double value = 0.0;  // cached chain energy of `order`
};

OrderedChain make_chain(const Metric& metric, std::vector<std::size_t> order, double s);

// Throws EmptyOrder / BadInput unless `order` is a permutation of 0..n-1.
void check_order(const Metric& metric, const std::vector<std::size_t>& order);

}  // namespace fractlip

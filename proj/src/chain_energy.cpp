#include "fractlip/chain_energy.hpp"

#include <algorithm>
#include <cmath>

namespace fractlip {

void check_order(const Metric& metric, const std::vector<std::size_t>& order) {
  if (order.empty()) throw EmptyOrder();
  // Chain energies are well defined on any duplicate-free sequence of
  // points; full-permutation orders are enforced where a type requires one.
  std::vector<bool> seen(metric.size(), false);
  for (std::size_t v : order) {
    if (v >= metric.size() || seen[v])
      throw BadInput("order indices must be distinct points of the space");
    seen[v] = true;
  }
}

std::vector<double> chain_energy_prefixes(const Metric& metric,
                                          const std::vector<std::size_t>& order,
                                          double s) {
  check_order(metric, order);
  if (!(s > 0.0)) throw BadInput("exponent s must be > 0");
  const std::size_t n = order.size();
  std::vector<double> best(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    double acc = best[0] + pow_s(metric.distance(order[0], order[j]), s);
    for (std::size_t i = 1; i < j; ++i)
      acc = std::max(acc, best[i] + pow_s(metric.distance(order[i], order[j]), s));
    best[j] = acc;
  }
  return best;
}

double chain_energy(const Metric& metric, const std::vector<std::size_t>& order,
                    double s) {
  return chain_energy_prefixes(metric, order, s).back();
}

double chain_energy_sorted(const Metric& metric, double s) {
  std::vector<std::size_t> order(metric.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return chain_energy(metric, order, s);
}

double chain_energy_bruteforce(const Metric& metric,
                               const std::vector<std::size_t>& order, double s) {
  check_order(metric, order);
  if (!(s > 0.0)) throw BadInput("exponent s must be > 0");
  const std::size_t n = order.size();
  if (n > 20) throw TooManyPoints("brute-force chain enumeration caps at n = 20");
  if (n == 1) return 0.0;

  // Chains are first + any subset of the interior + last.
  const std::size_t interior = n - 2;
  double best = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << interior); ++mask) {
    double sum = 0.0;
    std::size_t prev = order[0];
    for (std::size_t b = 0; b < interior; ++b)
      if (mask & (std::size_t{1} << b)) {
        sum += pow_s(metric.distance(prev, order[b + 1]), s);
        prev = order[b + 1];
      }
    sum += pow_s(metric.distance(prev, order[n - 1]), s);
    best = std::max(best, sum);
  }
  return best;
}

OrderedChain make_chain(const Metric& metric, std::vector<std::size_t> order, double s) {
  if (order.size() != metric.size())
    throw BadInput("an ordered chain must visit every point exactly once");
  const double value = chain_energy(metric, order, s);
  return OrderedChain{std::move(order), s, value};
}

}  // namespace fractlip

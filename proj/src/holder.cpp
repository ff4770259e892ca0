#include "fractlip/holder.hpp"

#include <cmath>

#include "fractlip/chain_energy.hpp"

namespace fractlip {

HolderParametrization build_parametrization(const Metric& metric,
                                            const std::vector<std::size_t>& order,
                                            double s) {
  HolderParametrization param;
  param.anchors = chain_energy_prefixes(metric, order, s);
  param.images = order;
  param.alpha = 1.0 / s;
  param.constant = 1.0;
  param.ell = param.anchors.back();

  const HolderCertificate cert =
      verify_holder(param.anchors, metric, param.images, param.alpha);
  if (cert.worst_c > 1.0 + 1e-9)
    throw VerificationFailure("prefix anchors are not 1-Hoelder: worst C = " +
                              std::to_string(cert.worst_c));
  return param;
}

HolderCertificate verify_holder(const std::vector<double>& anchors,
                                const Metric& target,
                                const std::vector<std::size_t>& map, double alpha) {
  if (anchors.size() != map.size()) throw BadInput("anchor/map size mismatch");
  if (map.empty()) throw BadInput("map table must be total and nonempty");
  if (!(alpha > 0.0)) throw BadInput("alpha must be > 0");
  for (std::size_t idx : map)
    if (idx >= target.size()) throw BadInput("map image out of range");

  HolderCertificate cert;
  const std::size_t n = anchors.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::fabs(anchors[i] - anchors[j]);
      const double dist = map[i] == map[j] ? 0.0 : target.distance(map[i], map[j]);
      if (gap == 0.0) {
        if (dist != 0.0) throw InfiniteConstant(i, j);
        continue;
      }
      const double ratio = dist / std::pow(gap, alpha);
      if (ratio > cert.worst_c) {
        cert.worst_c = ratio;
        cert.witness_i = i;
        cert.witness_j = j;
      }
    }
  return cert;
}

}  // namespace fractlip

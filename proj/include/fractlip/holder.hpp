#pragma once

#include <cstddef>
#include <vector>

#include "fractlip/metric_space.hpp"

namespace fractlip {

struct HolderParametrization {
  std::vector<double> anchors;       // increasing reals in [0, ell], anchors[0] = 0
  std::vector<std::size_t> images;   // point indices, images[i] sits at anchors[i]
  double alpha = 1.0;                // 1/s
  double constant = 1.0;             // certified C
  double ell = 0.0;                  // anchors.back()
};

// Anchors are the prefix chain energies of the order; the map anchor ->
// point is (1/s)-Hoelder with constant 1 by the prefix-difference
// inequality, re-verified numerically here (VerificationFailure would
// indicate an implementation bug).
HolderParametrization build_parametrization(const Metric& metric,
                                            const std::vector<std::size_t>& order,
                                            double s);

struct HolderCertificate {
  double worst_c = 0.0;
  std::size_t witness_i = 0, witness_j = 0;  // maximizing pair (anchor indices)
};

// worst_C = max over pairs of d(map[i], map[j]) / |a_i - a_j|^alpha.
// Equal anchors must map to equal points; otherwise InfiniteConstant with
// the witness pair.
HolderCertificate verify_holder(const std::vector<double>& anchors,
                                const Metric& target,
                                const std::vector<std::size_t>& map, double alpha);

}  // namespace fractlip

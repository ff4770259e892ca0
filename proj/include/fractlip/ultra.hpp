#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fractlip/metric_space.hpp"

namespace fractlip {

// A total map between spaces, stored as the image index per domain point.
struct MapTable {
  std::vector<std::size_t> image;
};

struct UltrametricCheck {
  bool ok = true;
  // On failure, (x, y, z) with d(x,y) > max(d(x,z), d(y,z)).
  std::size_t x = 0, y = 0, z = 0;
};

// Exhaustive triple check of d(x,y) <= max(d(x,z), d(y,z)), exact
// comparisons on stored values.
UltrametricCheck is_ultrametric(const Metric& metric);

struct LipschitzCheck {
  bool ok = true;
  double worst_ratio = 0.0;
  std::size_t witness_i = 0, witness_j = 0;
};

// max over pairs of d_Y(f(i), f(j)) / d_X(i, j) <= L (closed inequality).
LipschitzCheck verify_lipschitz(const Metric& domain, const Metric& codomain,
                                const MapTable& f, double L);

// Lipschitz-1 retraction of an ultrametric space onto a nonempty subset:
// identity on the subset; elsewhere the image is the canonical
// representative (lowest subset index) of the sphere of radius
// dist(x, subset) around x. The representative depends only on the sphere
// as a point set, so equal spheres share one image. Throws NotUltrametric
// or EmptySubset; the Lipschitz-1 property is re-verified before returning.
MapTable retraction(const Metric& metric, const std::vector<std::size_t>& subset);

// Extension f(g(x)) of f: A -> Y along the retraction g: X -> A; keeps the
// certified constant and restricts to f on A exactly. `f.image[k]` is the
// image of subset[k]. Throws NotLipschitzOnA when f violates L on A.
MapTable extend_lipschitz(const Metric& domain, const std::vector<std::size_t>& subset,
                          const Metric& codomain, const MapTable& f, double L);

// Every pair of closed r-balls is disjoint or identical (requires an
// ultrametric input).
bool ball_partition_check(const Metric& metric, double r);

}  // namespace fractlip

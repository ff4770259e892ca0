#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fractlip/metric_space.hpp"

namespace fractlip {

// Interval endpoints of the depth-level middle-`hole` Cantor construction
// over [0,1], sorted ascending; 2^(depth+1) points. depth <= 20.
PointCloud cantor_endpoints(std::size_t depth, double hole = 1.0 / 3.0);

// Similarity IFS on R^d restricted to positive ratios and translations.
struct IfsSpec {
  struct Map {
    double ratio;                     // in (0,1)
    std::vector<double> translation;  // arity d
  };
  std::vector<Map> maps;
  std::size_t arity = 1;
};

// Axis-aligned bounding box of the attractor (the box fixed point of the
// map system), one (lo, hi) pair per coordinate.
std::vector<std::pair<double, double>> ifs_bounding_box(const IfsSpec& spec);

// Depth-1 bounding-box images must be pairwise disjoint (the separation
// check used at generation time); throws SscViolation with the offending
// pair otherwise.
void check_ssc(const IfsSpec& spec);

// One representative per depth-level cylinder: the image of the bounding
// box's lower-left corner under each length-`depth` composition.
// maps^depth <= 10^6 (TooManyPoints otherwise).
PointCloud ifs_sample(const IfsSpec& spec, std::size_t depth);

// Bedford-McMullen pattern: m rows, n columns (m <= n), cells (col, row).
struct CarpetSpec {
  std::size_t rows = 2;     // m
  std::size_t cols = 2;     // n
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // subset D

  void validate() const;
  std::size_t distinct_rows() const;  // |pi(D)|, projection to the row index
};

// Cylinder representatives (images of the origin) at the given depth;
// |D|^depth <= 10^6.
PointCloud carpet_sample(const CarpetSpec& spec, std::size_t depth);

// log_m |pi(D)| + log_n (|D| / |pi(D)|), the carpet's upper box dimension.
double mcmullen_dimension(const CarpetSpec& spec);

// Leaves of the rooted tree with the given per-level arities;
// d(x,y) = level_diams[depth of the least common ancestor].
// level_diams must be strictly decreasing and positive; product of
// arities <= 10^5.
FiniteMetricSpace ultrametric_tree_space(const std::vector<std::size_t>& arities,
                                         const std::vector<double>& level_diams);

// Deterministic random euclidean cloud in [0,1]^dim (CLI `gen random`).
PointCloud random_cloud(std::size_t n, std::size_t dim, std::uint64_t seed);

}  // namespace fractlip

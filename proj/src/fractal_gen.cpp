#include "fractlip/fractal_gen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace fractlip {

PointCloud cantor_endpoints(std::size_t depth, double hole) {
  constexpr std::size_t kMaxDepth = 20;
  if (depth > kMaxDepth) throw DepthTooLarge(depth, kMaxDepth);
  if (!(hole > 0.0) || !(hole < 1.0)) throw BadInput("hole must be in (0,1)");

  const double keep = (1.0 - hole) / 2.0;
  std::vector<std::pair<double, double>> intervals{{0.0, 1.0}};
  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<std::pair<double, double>> next;
    next.reserve(intervals.size() * 2);
    for (const auto& [a, b] : intervals) {
      const double w = (b - a) * keep;
      next.emplace_back(a, a + w);
      next.emplace_back(b - w, b);
    }
    intervals = std::move(next);
  }

  PointCloud cloud;
  cloud.kind = MetricKind::euclidean;
  cloud.points.reserve(intervals.size() * 2);
  for (const auto& [a, b] : intervals) {
    cloud.points.push_back({a});
    cloud.points.push_back({b});
  }
  return cloud;
}

namespace {

void check_ifs_shape(const IfsSpec& spec) {
  if (spec.maps.empty()) throw BadInput("IFS needs at least one map");
  if (spec.arity == 0) throw BadInput("IFS arity must be >= 1");
  for (const auto& m : spec.maps) {
    if (!(m.ratio > 0.0) || !(m.ratio < 1.0))
      throw BadInput("IFS ratios must lie in (0,1)");
    if (m.translation.size() != spec.arity)
      throw BadInput("IFS translation arity mismatch");
  }
}

}  // namespace

std::vector<std::pair<double, double>> ifs_bounding_box(const IfsSpec& spec) {
  check_ifs_shape(spec);
  std::vector<std::pair<double, double>> box(spec.arity);
  for (std::size_t c = 0; c < spec.arity; ++c) {
    // Coordinatewise the box fixed point solves lo = min_i(r_i*lo + t_ic),
    // hi = max_i(r_i*hi + t_ic); both maps are contractions.
    double lo = spec.maps[0].translation[c] / (1.0 - spec.maps[0].ratio);
    double hi = lo;
    for (int iter = 0; iter < 512; ++iter) {
      double nlo = std::numeric_limits<double>::infinity();
      double nhi = -std::numeric_limits<double>::infinity();
      for (const auto& m : spec.maps) {
        nlo = std::min(nlo, m.ratio * lo + m.translation[c]);
        nhi = std::max(nhi, m.ratio * hi + m.translation[c]);
      }
      const bool stable = nlo == lo && nhi == hi;
      lo = nlo;
      hi = nhi;
      if (stable) break;
    }
    box[c] = {lo, hi};
  }
  return box;
}

void check_ssc(const IfsSpec& spec) {
  const auto box = ifs_bounding_box(spec);
  const std::size_t m = spec.maps.size();
  std::vector<std::vector<std::pair<double, double>>> images(m);
  for (std::size_t i = 0; i < m; ++i) {
    images[i].resize(spec.arity);
    for (std::size_t c = 0; c < spec.arity; ++c)
      images[i][c] = {spec.maps[i].ratio * box[c].first + spec.maps[i].translation[c],
                      spec.maps[i].ratio * box[c].second + spec.maps[i].translation[c]};
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      bool separated = false;
      for (std::size_t c = 0; c < spec.arity && !separated; ++c)
        separated = images[i][c].second < images[j][c].first ||
                    images[j][c].second < images[i][c].first;
      if (!separated) throw SscViolation(i, j);
    }
}

PointCloud ifs_sample(const IfsSpec& spec, std::size_t depth) {
  check_ssc(spec);
  constexpr double kMaxPoints = 1e6;
  const std::size_t m = spec.maps.size();
  if (std::pow(static_cast<double>(m), static_cast<double>(depth)) > kMaxPoints)
    throw TooManyPoints("maps^depth exceeds 10^6");

  const auto box = ifs_bounding_box(spec);
  std::vector<double> seed(spec.arity);
  for (std::size_t c = 0; c < spec.arity; ++c) seed[c] = box[c].first;

  std::vector<std::vector<double>> current{seed};
  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<std::vector<double>> next;
    next.reserve(current.size() * m);
    for (const auto& map : spec.maps)
      for (const auto& p : current) {
        std::vector<double> q(spec.arity);
        for (std::size_t c = 0; c < spec.arity; ++c)
          q[c] = map.ratio * p[c] + map.translation[c];
        next.push_back(std::move(q));
      }
    current = std::move(next);
  }

  PointCloud cloud;
  cloud.kind = MetricKind::euclidean;
  cloud.points = std::move(current);
  return cloud;
}

void CarpetSpec::validate() const {
  if (rows < 2 || cols < 2) throw BadInput("carpet needs m >= 2 and n >= 2");
  if (rows > cols) throw BadInput("carpet requires m <= n");
  if (cells.empty()) throw BadInput("carpet pattern must be nonempty");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [col, row] : cells) {
    if (col >= cols || row >= rows) throw BadInput("carpet cell out of range");
    if (!seen.insert({col, row}).second) throw BadInput("duplicate carpet cell");
  }
}

std::size_t CarpetSpec::distinct_rows() const {
  std::set<std::size_t> rows_used;
  for (const auto& cell : cells) rows_used.insert(cell.second);
  return rows_used.size();
}

PointCloud carpet_sample(const CarpetSpec& spec, std::size_t depth) {
  spec.validate();
  constexpr double kMaxPoints = 1e6;
  if (std::pow(static_cast<double>(spec.cells.size()), static_cast<double>(depth)) >
      kMaxPoints)
    throw TooManyPoints("|D|^depth exceeds 10^6");

  std::vector<std::pair<double, double>> current{{0.0, 0.0}};
  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<std::pair<double, double>> next;
    next.reserve(current.size() * spec.cells.size());
    for (const auto& [col, row] : spec.cells)
      for (const auto& [x, y] : current)
        next.emplace_back((x + static_cast<double>(col)) / static_cast<double>(spec.cols),
                          (y + static_cast<double>(row)) / static_cast<double>(spec.rows));
    current = std::move(next);
  }

  PointCloud cloud;
  cloud.kind = MetricKind::euclidean;
  cloud.points.reserve(current.size());
  for (const auto& [x, y] : current) cloud.points.push_back({x, y});
  return cloud;
}

double mcmullen_dimension(const CarpetSpec& spec) {
  spec.validate();
  const double rows_hit = static_cast<double>(spec.distinct_rows());
  const double total = static_cast<double>(spec.cells.size());
  const double row_term = std::log(rows_hit) / std::log(static_cast<double>(spec.rows));
  const double col_term =
      std::log(total / rows_hit) / std::log(static_cast<double>(spec.cols));
  return row_term + col_term;
}

FiniteMetricSpace ultrametric_tree_space(const std::vector<std::size_t>& arities,
                                         const std::vector<double>& level_diams) {
  if (arities.empty() || arities.size() != level_diams.size())
    throw BadInput("arities and level_diams must be nonempty and equally long");
  for (std::size_t a : arities)
    if (a < 1) throw BadInput("arities must be >= 1");
  for (std::size_t k = 0; k < level_diams.size(); ++k) {
    if (!(level_diams[k] > 0.0)) throw NonDecreasingDiameters();
    if (k > 0 && !(level_diams[k] < level_diams[k - 1])) throw NonDecreasingDiameters();
  }

  constexpr std::size_t kMaxLeaves = 100000;
  std::size_t leaves = 1;
  for (std::size_t a : arities) {
    if (leaves > kMaxLeaves / a + 1) throw TooManyPoints("leaf count exceeds 10^5");
    leaves *= a;
  }
  if (leaves > kMaxLeaves) throw TooManyPoints("leaf count exceeds 10^5");

  // Leaf index in mixed radix; the first differing digit is the LCA depth.
  const std::size_t levels = arities.size();
  std::vector<std::size_t> stride(levels, 1);
  for (std::size_t k = levels; k-- > 1;) stride[k - 1] = stride[k] * arities[k];

  std::vector<double> flat(leaves * leaves, 0.0);
  std::vector<std::string> labels(leaves);
  for (std::size_t i = 0; i < leaves; ++i) {
    std::string label;
    for (std::size_t k = 0; k < levels; ++k) {
      if (k) label += ".";
      label += std::to_string((i / stride[k]) % arities[k]);
    }
    labels[i] = label;
  }
  for (std::size_t i = 0; i < leaves; ++i)
    for (std::size_t j = i + 1; j < leaves; ++j) {
      std::size_t depth = 0;
      while ((i / stride[depth]) % arities[depth] == (j / stride[depth]) % arities[depth])
        ++depth;
      flat[i * leaves + j] = level_diams[depth];
      flat[j * leaves + i] = level_diams[depth];
    }
  return space_from_level_metric(std::move(flat), std::move(labels));
}

PointCloud random_cloud(std::size_t n, std::size_t dim, std::uint64_t seed) {
  if (n == 0 || dim == 0) throw BadInput("random cloud needs n >= 1 and dim >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PointCloud cloud;
  cloud.kind = MetricKind::euclidean;
  cloud.points.resize(n, std::vector<double>(dim));
  for (auto& p : cloud.points)
    for (double& c : p) c = unit(rng);
  // Coinciding draws are astronomically unlikely but would poison
  // from_points later; regenerate the offender deterministically.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      while (cloud.points[i] == cloud.points[j])
        for (double& c : cloud.points[j]) c = unit(rng);
  return cloud;
}

}  // namespace fractlip

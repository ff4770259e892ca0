#include "fractlip/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fractlip {

double Metric::diameter() const {
  const std::size_t n = size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, distance(i, j));
  return best;
}

double Metric::min_positive_distance() const {
  const std::size_t n = size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) best = std::min(best, distance(i, j));
  return best;
}

std::size_t PointCloud::arity() const {
  if (points.empty()) throw BadInput("point cloud is empty");
  const std::size_t d = points.front().size();
  if (d == 0) throw BadInput("point tuples must have arity >= 1");
  for (const auto& p : points)
    if (p.size() != d) throw BadInput("point tuples have inconsistent arity");
  return d;
}

double point_distance(const std::vector<double>& a, const std::vector<double>& b,
                      MetricKind kind) {
  if (kind == MetricKind::chebyshev) {
    double m = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) m = std::max(m, std::fabs(a[c] - b[c]));
    return m;
  }
  if (a.size() == 1) return std::fabs(a[0] - b[0]);
  double acc = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double diff = a[c] - b[c];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

PointCloudMetric::PointCloudMetric(const PointCloud& cloud) : cloud_(&cloud) {
  cloud.arity();  // validates shape up front
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return labels;
}

FiniteMetricSpace::FiniteMetricSpace(unchecked_t, std::vector<double> flat_dist,
                                     std::vector<std::string> labels)
    : dist_(std::move(flat_dist)), labels_(std::move(labels)) {
  n_ = labels_.size();
  check_basic();
}

void FiniteMetricSpace::check_basic() const {
  if (dist_.size() != n_ * n_) throw BadInput("distance matrix is not n x n");
  for (std::size_t i = 0; i < n_; ++i) {
    if (distance(i, i) != 0.0) throw NonzeroDiagonal(i);
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double d = distance(i, j);
      if (d != distance(j, i)) throw AsymmetricMatrix(i, j);
      if (std::isnan(d) || d < 0.0) throw NegativeDistance(i, j);
      if (d == 0.0) throw DuplicatePoint(i, j);
    }
  }
}

FiniteMetricSpace FiniteMetricSpace::validate(
    const std::vector<std::vector<double>>& dist, std::vector<std::string> labels) {
  const std::size_t n = dist.size();
  for (const auto& row : dist)
    if (row.size() != n) throw BadInput("distance matrix is not square");
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw BadInput("label count does not match matrix size");

  std::vector<double> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = dist[i][j];
  FiniteMetricSpace space(unchecked_t{}, std::move(flat), std::move(labels));

  // Exact triangle inequality on stored values; tolerance here would mask
  // generator bugs.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = space.distance(i, k);
      for (std::size_t j = i + 1; j < n; ++j)
        if (space.distance(i, j) > dik + space.distance(k, j))
          throw TriangleViolation(i, j, k);
    }
  return space;
}

FiniteMetricSpace FiniteMetricSpace::from_points(const PointCloud& cloud) {
  cloud.arity();
  const std::size_t n = cloud.size();
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = point_distance(cloud.points[i], cloud.points[j], cloud.kind);
      if (d == 0.0) throw DuplicatePoint(i, j);
      flat[i * n + j] = d;
      flat[j * n + i] = d;
    }
  return FiniteMetricSpace(unchecked_t{}, std::move(flat), default_labels(n));
}

std::vector<std::vector<double>> FiniteMetricSpace::matrix() const {
  std::vector<std::vector<double>> rows(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = distance(i, j);
  return rows;
}

FiniteMetricSpace scale(const FiniteMetricSpace& space, double r) {
  if (!(r > 0.0)) throw NonPositiveScale();
  std::vector<double> flat = space.dist_;
  for (double& d : flat) d *= r;
  return FiniteMetricSpace(FiniteMetricSpace::unchecked_t{}, std::move(flat),
                           space.labels_);
}

GappedUnion gapped_union(const std::vector<FiniteMetricSpace>& parts, double gap) {
  if (parts.empty()) throw BadInput("gapped_union needs at least one part");
  if (!(gap > 0.0)) throw BadInput("gap must be positive");
  double max_diam = 0.0;
  std::size_t total = 0;
  for (const auto& p : parts) {
    max_diam = std::max(max_diam, p.diameter());
    total += p.size();
  }
  if (gap < max_diam) throw GapTooSmall(gap, max_diam);

  std::vector<double> flat(total * total, gap);
  std::vector<std::string> labels(total);
  std::vector<std::size_t> part_of(total);
  std::size_t offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    for (std::size_t i = 0; i < part.size(); ++i) {
      labels[offset + i] = std::to_string(p) + "/" + part.labels()[i];
      part_of[offset + i] = p;
      for (std::size_t j = 0; j < part.size(); ++j)
        flat[(offset + i) * total + (offset + j)] = part.distance(i, j);
    }
    offset += part.size();
  }
  return GappedUnion{
      FiniteMetricSpace(FiniteMetricSpace::unchecked_t{}, std::move(flat),
                        std::move(labels)),
      std::move(part_of)};
}

FiniteMetricSpace space_from_level_metric(std::vector<double> dist,
                                          std::vector<std::string> labels) {
  return FiniteMetricSpace(FiniteMetricSpace::unchecked_t{}, std::move(dist),
                           std::move(labels));
}

}  // namespace fractlip

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fractlip/errors.hpp"

namespace fractlip {

// Read-only view of a finite metric: enough for every algorithm in the
// library. FiniteMetricSpace stores the full matrix; PointCloudMetric
// evaluates distances on demand so large 1-D/2-D samples never materialize
// an n x n matrix.
class Metric {
 public:
  virtual ~Metric() = default;
  virtual std::size_t size() const = 0;
  virtual double distance(std::size_t i, std::size_t j) const = 0;

  double diameter() const;                // 0 when size() <= 1
  double min_positive_distance() const;   // +inf when size() <= 1
};

enum class MetricKind { euclidean, chebyshev };

struct PointCloud {
  std::vector<std::vector<double>> points;
  MetricKind kind = MetricKind::euclidean;

  std::size_t size() const { return points.size(); }
  // Common arity of all tuples; throws BadInput on ragged or empty tuples.
  std::size_t arity() const;
};

double point_distance(const std::vector<double>& a, const std::vector<double>& b,
                      MetricKind kind);

class PointCloudMetric final : public Metric {
 public:
  explicit PointCloudMetric(const PointCloud& cloud);

  std::size_t size() const override { return cloud_->size(); }
  double distance(std::size_t i, std::size_t j) const override {
    return point_distance(cloud_->points[i], cloud_->points[j], cloud_->kind);
  }

 private:
  const PointCloud* cloud_;  // non-owning; caller keeps the cloud alive
};

class FiniteMetricSpace;
struct GappedUnion;

class FiniteMetricSpace final : public Metric {
 public:
  // Full validation: symmetry, zero diagonal, positive off-diagonal entries,
  // and the exact (no tolerance) triangle inequality on stored values.
  // Throws AsymmetricMatrix / NegativeDistance / NonzeroDiagonal /
  // DuplicatePoint / TriangleViolation with witness indices.
  static FiniteMetricSpace validate(const std::vector<std::vector<double>>& dist,
                                    std::vector<std::string> labels = {});

  // Distance matrix from coordinates; metric by construction, so only the
  // quadratic checks run. Throws DuplicatePoint on coinciding tuples.
  static FiniteMetricSpace from_points(const PointCloud& cloud);

  std::size_t size() const override { return n_; }
  double distance(std::size_t i, std::size_t j) const override {
    return dist_[i * n_ + j];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::vector<double>> matrix() const;

 private:
  friend FiniteMetricSpace scale(const FiniteMetricSpace&, double);
  friend GappedUnion gapped_union(const std::vector<FiniteMetricSpace>&, double);
  friend FiniteMetricSpace space_from_level_metric(std::vector<double> dist,
                                                   std::vector<std::string> labels);

  struct unchecked_t {};
  FiniteMetricSpace(unchecked_t, std::vector<double> flat_dist,
                    std::vector<std::string> labels);

  // Symmetry / diagonal / sign / distinctness; O(n^2).
  void check_basic() const;

  std::size_t n_ = 0;
  std::vector<double> dist_;  // row-major n x n
  std::vector<std::string> labels_;
};

// Every distance multiplied by r (> 0, else NonPositiveScale).
FiniteMetricSpace scale(const FiniteMetricSpace& space, double r);

struct GappedUnion {
  FiniteMetricSpace space;
  std::vector<std::size_t> part;  // part index per point
};

// Disjoint union with all cross-part distances equal to `gap`.
// Requires gap >= max part diameter (GapTooSmall otherwise), which makes the
// result a metric with constant separation between parts.
GappedUnion gapped_union(const std::vector<FiniteMetricSpace>& parts, double gap);

std::vector<std::string> default_labels(std::size_t n);

// Internal factory for generators whose output is a metric by construction
// (runs only the quadratic checks). `dist` is row-major n x n.
FiniteMetricSpace space_from_level_metric(std::vector<double> dist,
                                          std::vector<std::string> labels);

}  // namespace fractlip

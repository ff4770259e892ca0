#include "fractlip/ultra.hpp"

#include <algorithm>
#include <limits>

namespace fractlip {

UltrametricCheck is_ultrametric(const Metric& metric) {
  const std::size_t n = metric.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const double dxy = metric.distance(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (dxy > std::max(metric.distance(x, z), metric.distance(y, z)))
          return UltrametricCheck{false, x, y, z};
      }
    }
  return UltrametricCheck{};
}

LipschitzCheck verify_lipschitz(const Metric& domain, const Metric& codomain,
                                const MapTable& f, double L) {
  if (f.image.size() != domain.size()) throw BadInput("map table is not total");
  if (L < 0.0) throw BadInput("Lipschitz constant must be >= 0");
  for (std::size_t idx : f.image)
    if (idx >= codomain.size()) throw BadInput("map image out of range");

  LipschitzCheck check;
  const std::size_t n = domain.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dy =
          f.image[i] == f.image[j] ? 0.0 : codomain.distance(f.image[i], f.image[j]);
      const double ratio = dy / domain.distance(i, j);
      if (ratio > check.worst_ratio) {
        check.worst_ratio = ratio;
        check.witness_i = i;
        check.witness_j = j;
      }
    }
  check.ok = check.worst_ratio <= L;
  return check;
}

namespace {

void require_ultrametric(const Metric& metric) {
  const UltrametricCheck check = is_ultrametric(metric);
  if (!check.ok) throw NotUltrametric(check.x, check.y, check.z);
}

}  // namespace

MapTable retraction(const Metric& metric, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw EmptySubset();
  const std::size_t n = metric.size();
  for (std::size_t a : subset)
    if (a >= n) throw BadInput("subset index out of range");
  require_ultrametric(metric);

  std::vector<bool> in_subset(n, false);
  for (std::size_t a : subset) in_subset[a] = true;

  MapTable g;
  g.image.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (in_subset[x]) {
      g.image[x] = x;
      continue;
    }
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n; ++a)
      if (in_subset[a]) r = std::min(r, metric.distance(x, a));
    // Lowest subset index on the sphere of radius r around x; this choice
    // depends only on the sphere as a set.
    std::size_t rep = n;
    for (std::size_t a = 0; a < n && rep == n; ++a)
      if (in_subset[a] && metric.distance(x, a) == r) rep = a;
    g.image[x] = rep;
  }

  const LipschitzCheck check = verify_lipschitz(metric, metric, g, 1.0);
  if (!check.ok)
    throw VerificationFailure("retraction is not Lipschitz-1 (worst ratio " +
                              std::to_string(check.worst_ratio) + ")");
  return g;
}

MapTable extend_lipschitz(const Metric& domain, const std::vector<std::size_t>& subset,
                          const Metric& codomain, const MapTable& f, double L) {
  if (f.image.size() != subset.size())
    throw BadInput("f must be defined exactly on the subset");

  // Certify f on A first, with the same ratio comparison verify_lipschitz
  // uses, so a constant certified there is accepted here bit for bit.
  {
    const std::size_t m = subset.size();
    for (std::size_t idx : f.image)
      if (idx >= codomain.size()) throw BadInput("map image out of range");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const double dy =
            f.image[i] == f.image[j] ? 0.0 : codomain.distance(f.image[i], f.image[j]);
        if (dy / domain.distance(subset[i], subset[j]) > L)
          throw NotLipschitzOnA(subset[i], subset[j]);
      }
  }

  const MapTable g = retraction(domain, subset);
  std::vector<std::size_t> pos_in_subset(domain.size(), domain.size());
  for (std::size_t k = 0; k < subset.size(); ++k) pos_in_subset[subset[k]] = k;

  MapTable extension;
  extension.image.resize(domain.size());
  for (std::size_t x = 0; x < domain.size(); ++x)
    extension.image[x] = f.image[pos_in_subset[g.image[x]]];
  return extension;
}

bool ball_partition_check(const Metric& metric, double r) {
  if (!(r > 0.0)) throw BadInput("radius must be positive");
  require_ultrametric(metric);
  const std::size_t n = metric.size();

  std::vector<std::vector<bool>> balls(n, std::vector<bool>(n, false));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t p = 0; p < n; ++p) balls[c][p] = metric.distance(c, p) <= r;

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      bool intersect = false;
      for (std::size_t p = 0; p < n && !intersect; ++p)
        intersect = balls[x][p] && balls[y][p];
      if (intersect && balls[x] != balls[y]) return false;
    }
  return true;
}

}  // namespace fractlip

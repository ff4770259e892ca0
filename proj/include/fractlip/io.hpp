#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fractlip/metric_space.hpp"

namespace fractlip {

// CSV matrix format: first line `n`, then n comma-separated rows.
// Numbers are written with round-trip precision (%.17g).
void write_matrix_csv(std::ostream& out, const FiniteMetricSpace& space);
FiniteMetricSpace read_matrix_csv(std::istream& in);

// Space JSON: {"labels":[...], "dist":[[...]], "points": optional}.
// The optional coordinates are carried through round trips untouched.
struct SpaceDocument {
  FiniteMetricSpace space;
  std::optional<PointCloud> cloud;
};

void write_space_json(std::ostream& out, const FiniteMetricSpace& space,
                      const std::optional<PointCloud>& cloud = std::nullopt);
SpaceDocument read_space_json(std::istream& in);

// Point cloud JSON: {"points":[[...]], "metric":"euclidean"|"chebyshev"}.
void write_cloud_json(std::ostream& out, const PointCloud& cloud);
PointCloud read_cloud_json(std::istream& in);

// Loads either schema; JSON files with a "dist" key become spaces, JSON
// files with only "points" become clouds, ".csv"-style content is a matrix.
struct LoadedInput {
  std::optional<FiniteMetricSpace> space;
  std::optional<PointCloud> cloud;
};
LoadedInput load_input_file(const std::string& path);

// Materializes a FiniteMetricSpace from whichever member is present.
FiniteMetricSpace as_space(const LoadedInput& input);

std::string format_double(double v);  // %.17g, locale-independent

}  // namespace fractlip

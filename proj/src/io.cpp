#include "fractlip/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace fractlip {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_matrix_csv(std::ostream& out, const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  out << n << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ",";
      out << format_double(space.distance(i, j));
    }
    out << "\n";
  }
}

namespace {

double parse_cell(const std::string& cell, std::size_t line, std::size_t field) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || (end && *end != '\0'))
    throw MalformedFile("non-numeric cell '" + cell + "'", line, field);
  return v;
}

}  // namespace

FiniteMetricSpace read_matrix_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw MalformedFile("missing size line", 1, 1);
  std::size_t n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoul(header, &pos);
    while (pos < header.size() && (header[pos] == ' ' || header[pos] == '\r')) ++pos;
    if (pos != header.size()) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw MalformedFile("first line must be the point count", 1, 1);
  }

  std::vector<std::vector<double>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string line;
    if (!std::getline(in, line)) throw MalformedFile("missing matrix row", i + 2, 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    std::size_t field = 1;
    while (std::getline(ss, cell, ',')) row.push_back(parse_cell(cell, i + 2, field++));
    if (row.size() != n)
      throw MalformedFile("expected " + std::to_string(n) + " cells, got " +
                              std::to_string(row.size()),
                          i + 2, row.size() + 1);
    rows.push_back(std::move(row));
  }
  return FiniteMetricSpace::validate(rows);
}

namespace {

const char* kind_name(MetricKind kind) {
  return kind == MetricKind::euclidean ? "euclidean" : "chebyshev";
}

MetricKind kind_from_name(const std::string& name) {
  if (name == "euclidean") return MetricKind::euclidean;
  if (name == "chebyshev") return MetricKind::chebyshev;
  throw MalformedFile("unknown metric kind '" + name + "'", 1, 1);
}

ordered_json cloud_to_json(const PointCloud& cloud) {
  ordered_json j;
  j["points"] = cloud.points;
  j["metric"] = kind_name(cloud.kind);
  return j;
}

PointCloud cloud_from_json(const ordered_json& j) {
  PointCloud cloud;
  if (!j.contains("points") || !j["points"].is_array())
    throw MalformedFile("missing \"points\" array", 1, 1);
  cloud.points = j["points"].get<std::vector<std::vector<double>>>();
  if (j.contains("metric")) cloud.kind = kind_from_name(j["metric"].get<std::string>());
  return cloud;
}

ordered_json parse_json(std::istream& in) {
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedFile(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
}

}  // namespace

void write_space_json(std::ostream& out, const FiniteMetricSpace& space,
                      const std::optional<PointCloud>& cloud) {
  ordered_json j;
  j["labels"] = space.labels();
  j["dist"] = space.matrix();
  if (cloud) {
    j["points"] = cloud->points;
    j["metric"] = kind_name(cloud->kind);
  }
  out << j.dump(2) << "\n";
}

SpaceDocument read_space_json(std::istream& in) {
  const ordered_json j = parse_json(in);
  if (!j.contains("dist") || !j["dist"].is_array())
    throw MalformedFile("missing \"dist\" matrix", 1, 1);
  std::vector<std::vector<double>> dist;
  try {
    dist = j["dist"].get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception&) {
    throw MalformedFile("\"dist\" must be a matrix of numbers", 1, 1);
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    try {
      labels = j["labels"].get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
      throw MalformedFile("\"labels\" must be an array of strings", 1, 1);
    }
  }
  SpaceDocument doc{FiniteMetricSpace::validate(dist, std::move(labels)),
                    std::nullopt};
  if (j.contains("points")) doc.cloud = cloud_from_json(j);
  return doc;
}

void write_cloud_json(std::ostream& out, const PointCloud& cloud) {
  out << cloud_to_json(cloud).dump(2) << "\n";
}

PointCloud read_cloud_json(std::istream& in) {
  return cloud_from_json(parse_json(in));
}

LoadedInput load_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open '" + path + "'");

  // Sniff: JSON starts with '{'; everything else is CSV matrix format.
  char first = 0;
  in >> std::ws;
  first = static_cast<char>(in.peek());
  LoadedInput result;
  if (first == '{') {
    const ordered_json j = parse_json(in);
    if (j.contains("dist")) {
      std::stringstream replay(j.dump());
      SpaceDocument doc = read_space_json(replay);
      result.space = std::move(doc.space);
      result.cloud = std::move(doc.cloud);
    } else {
      result.cloud = cloud_from_json(j);
    }
  } else {
    result.space = read_matrix_csv(in);
  }
  return result;
}

FiniteMetricSpace as_space(const LoadedInput& input) {
  if (input.space) return *input.space;
  if (input.cloud) return FiniteMetricSpace::from_points(*input.cloud);
  throw BadInput("input contains neither a matrix nor points");
}

}  // namespace fractlip

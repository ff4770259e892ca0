#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fractlip {

// Base of all library errors. `code()` is a stable machine-readable tag;
// what() carries the human-readable message including witness data.
class Error : public std::runtime_error {
 public:
  const std::string& code() const noexcept { return code_; }

 protected:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}

 private:
  std::string code_;
};

// Bad input data or parameters. CLI maps these to exit status 2.
class ValidationError : public Error {
 protected:
  using Error::Error;
};

// Instance exceeds a hard size/budget cap. CLI maps these to exit status 3.
class CapacityError : public Error {
 protected:
  using Error::Error;
};

struct AsymmetricMatrix : ValidationError {
  std::size_t i, j;
  AsymmetricMatrix(std::size_t i, std::size_t j)
      : ValidationError("AsymmetricMatrix",
                        "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                            "] != dist[" + std::to_string(j) + "][" +
                            std::to_string(i) + "]"),
        i(i),
        j(j) {}
};

struct NegativeDistance : ValidationError {
  std::size_t i, j;
  NegativeDistance(std::size_t i, std::size_t j)
      : ValidationError("NegativeDistance",
                        "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                            "] < 0"),
        i(i),
        j(j) {}
};

struct NonzeroDiagonal : ValidationError {
  std::size_t i;
  explicit NonzeroDiagonal(std::size_t i)
      : ValidationError("NonzeroDiagonal",
                        "dist[" + std::to_string(i) + "][" + std::to_string(i) +
                            "] != 0"),
        i(i) {}
};

struct DuplicatePoint : ValidationError {
  std::size_t i, j;
  DuplicatePoint(std::size_t i, std::size_t j)
      : ValidationError("DuplicatePoint",
                        "points " + std::to_string(i) + " and " +
                            std::to_string(j) + " coincide"),
        i(i),
        j(j) {}
};

struct TriangleViolation : ValidationError {
  std::size_t i, j, k;
  TriangleViolation(std::size_t i, std::size_t j, std::size_t k)
      : ValidationError("TriangleViolation",
                        "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                            "] > dist[" + std::to_string(i) + "][" +
                            std::to_string(k) + "] + dist[" + std::to_string(k) +
                            "][" + std::to_string(j) + "]"),
        i(i),
        j(j),
        k(k) {}
};

struct NonPositiveScale : ValidationError {
  NonPositiveScale() : ValidationError("NonPositiveScale", "scale factor must be > 0") {}
};

struct GapTooSmall : ValidationError {
  double gap, required;
  GapTooSmall(double gap, double required)
      : ValidationError("GapTooSmall",
                        "gap " + std::to_string(gap) +
                            " is below the largest part diameter " +
                            std::to_string(required)),
        gap(gap),
        required(required) {}
};

struct MalformedFile : ValidationError {
  std::size_t line, field;
  MalformedFile(const std::string& what, std::size_t line, std::size_t field)
      : ValidationError("MalformedFile",
                        what + " (line " + std::to_string(line) + ", field " +
                            std::to_string(field) + ")"),
        line(line),
        field(field) {}
};

// Generic parameter misuse that has no dedicated witness payload.
struct BadInput : ValidationError {
  explicit BadInput(const std::string& msg) : ValidationError("BadInput", msg) {}
};

struct DepthTooLarge : CapacityError {
  explicit DepthTooLarge(std::size_t depth, std::size_t cap)
      : CapacityError("DepthTooLarge", "depth " + std::to_string(depth) +
                                           " exceeds cap " + std::to_string(cap)) {}
};

struct TooManyPoints : CapacityError {
  explicit TooManyPoints(const std::string& msg) : CapacityError("TooManyPoints", msg) {}
};

struct SearchSpaceTooLarge : CapacityError {
  explicit SearchSpaceTooLarge(const std::string& msg)
      : CapacityError("SearchSpaceTooLarge", msg) {}
};

struct SscViolation : ValidationError {
  std::size_t i, j;
  SscViolation(std::size_t i, std::size_t j)
      : ValidationError("SscViolation", "depth-1 images " + std::to_string(i) +
                                            " and " + std::to_string(j) +
                                            " of the bounding box overlap"),
        i(i),
        j(j) {}
};

struct NonDecreasingDiameters : ValidationError {
  NonDecreasingDiameters()
      : ValidationError("NonDecreasingDiameters",
                        "level diameters must be strictly decreasing and positive") {}
};

struct EmptyOrder : ValidationError {
  EmptyOrder() : ValidationError("EmptyOrder", "order must contain at least one point") {}
};

struct DegenerateRadii : ValidationError {
  explicit DegenerateRadii(const std::string& msg) : ValidationError("DegenerateRadii", msg) {}
};

struct NotUltrametric : ValidationError {
  std::size_t x, y, z;
  NotUltrametric(std::size_t x, std::size_t y, std::size_t z)
      : ValidationError("NotUltrametric",
                        "d(" + std::to_string(x) + "," + std::to_string(y) +
                            ") > max of the two distances through " +
                            std::to_string(z)),
        x(x),
        y(y),
        z(z) {}
};

struct EmptySubset : ValidationError {
  EmptySubset() : ValidationError("EmptySubset", "subset must be nonempty") {}
};

struct NotLipschitzOnA : ValidationError {
  std::size_t i, j;
  NotLipschitzOnA(std::size_t i, std::size_t j)
      : ValidationError("NotLipschitzOnA",
                        "map violates the Lipschitz constant on pair (" +
                            std::to_string(i) + "," + std::to_string(j) + ")"),
        i(i),
        j(j) {}
};

struct InfiniteConstant : ValidationError {
  std::size_t i, j;
  InfiniteConstant(std::size_t i, std::size_t j)
      : ValidationError("InfiniteConstant",
                        "equal anchors " + std::to_string(i) + " and " +
                            std::to_string(j) + " map to distinct points"),
        i(i),
        j(j) {}
};

struct VerificationFailure : Error {
  explicit VerificationFailure(const std::string& msg)
      : Error("VerificationFailure", msg) {}
};

struct NoRoot : ValidationError {
  explicit NoRoot(const std::string& msg) : ValidationError("NoRoot", msg) {}
};

struct InvalidRatio : ValidationError {
  explicit InvalidRatio(const std::string& msg) : ValidationError("InvalidRatio", msg) {}
};

struct DivergentSum : ValidationError {
  DivergentSum() : ValidationError("DivergentSum", "geometric tail does not converge") {}
};

}  // namespace fractlip

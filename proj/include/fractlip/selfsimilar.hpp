#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fractlip/errors.hpp"

namespace fractlip {

// q pieces of common ratio r; q * r^s = 1 at the similarity dimension s.
struct HomogeneousSelfSimilar {
  std::uint64_t branches = 2;  // q >= 2
  double ratio = 1.0 / 3.0;    // r in (0,1)

  double dimension() const;  // log q / log(1/r)
};

// Largest k with q = n^k for an integer n.
unsigned max_integer_root(std::uint64_t q);

// Unique root s of sum beta_j^s = 1 (strictly decreasing from m to 0);
// bisection to absolute tolerance 1e-13 with residual below 1e-12.
// Requires at least two ratios, each in (0,1); NoRoot for a single ratio.
double moran_dimension(const std::vector<double>& ratios);

struct Rational {
  long long num = 0;
  long long den = 1;  // > 0 after normalization

  Rational() = default;
  Rational(long long n, long long d);
  bool is_integer() const { return den == 1; }
};

struct PowerSumCheck {
  bool sums_to_one = false;  // |sum q^{r_i} - 1| <= 1e-20 at 256-bit precision
  bool all_integer = false;  // exact on the rational inputs
};

// Evaluates sum q^{r_i} with high-precision exponentials (~77 significant
// digits) so the 1e-20 tolerance is meaningful.
PowerSumCheck power_sum_check(std::uint64_t q, const std::vector<Rational>& exponents);

enum class CompatibilityVerdict { dimension_mismatch, compatible, incompatible };

std::string to_string(CompatibilityVerdict v);

struct CompatibilityReport {
  double s_a = 0.0;
  double s_b = 0.0;
  double dimension_gap = 0.0;
  unsigned k = 1;
  std::vector<double> alphas;     // alpha_j = log beta_j / log r
  std::vector<double> multiples;  // k * alpha_j, integer when compatible
  CompatibilityVerdict verdict = CompatibilityVerdict::incompatible;
  double tolerance = 1e-9;
};

// Decides whether the homogeneous system (q, r) admits a Lipschitz onto map
// to the system with ratios B (equal-dimension self-similar sets with
// strong separation): compatible iff every log beta_j / log(r^(1/k)) is a
// positive integer, k the maximal integer root of q. Ratios may optionally
// be given symbolically as exponents beta_j = r^(p_j/q_j); integrality is
// then decided by exact integer arithmetic.
CompatibilityReport lipschitz_onto_compatibility(
    const HomogeneousSelfSimilar& a, const std::vector<double>& b_ratios,
    double tol = 1e-9,
    const std::optional<std::vector<Rational>>& exact_exponents = std::nullopt);

}  // namespace fractlip

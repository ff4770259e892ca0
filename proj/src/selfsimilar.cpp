#include "fractlip/selfsimilar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <mpfr.h>

namespace fractlip {

double HomogeneousSelfSimilar::dimension() const {
  if (branches < 2) throw InvalidRatio("branch count must be >= 2");
  if (!(ratio > 0.0) || !(ratio < 1.0)) throw InvalidRatio("ratio must lie in (0,1)");
  return std::log(static_cast<double>(branches)) / std::log(1.0 / ratio);
}

namespace {

// Exact n^k with overflow saturation.
std::uint64_t checked_pow(std::uint64_t n, unsigned k) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n != 0 && acc > std::numeric_limits<std::uint64_t>::max() / n)
      return std::numeric_limits<std::uint64_t>::max();
    acc *= n;
  }
  return acc;
}

}  // namespace

unsigned max_integer_root(std::uint64_t q) {
  if (q < 2) throw BadInput("q must be >= 2");
  const unsigned max_k = static_cast<unsigned>(std::floor(std::log2(static_cast<double>(q)))) + 1;
  for (unsigned k = max_k; k >= 2; --k) {
    std::uint64_t n = static_cast<std::uint64_t>(
        std::llround(std::pow(static_cast<double>(q), 1.0 / k)));
    // Rounding can land one off; probe the neighborhood exactly.
    for (std::uint64_t cand = n > 1 ? n - 1 : 1; cand <= n + 1; ++cand)
      if (cand >= 2 && checked_pow(cand, k) == q) return k;
  }
  return 1;
}

double moran_dimension(const std::vector<double>& ratios) {
  if (ratios.empty()) throw InvalidRatio("ratio list must be nonempty");
  for (double b : ratios)
    if (!(b > 0.0) || !(b < 1.0)) throw InvalidRatio("ratios must lie in (0,1)");
  if (ratios.size() == 1)
    throw NoRoot("a single contracting ratio has no positive Moran root");

  const auto residual = [&](double s) {
    double sum = 0.0;
    for (double b : ratios) sum += std::pow(b, s);
    return sum - 1.0;
  };

  double lo = 0.0;   // residual(0) = m - 1 > 0
  double hi = 1.0;
  while (residual(hi) > 0.0) hi *= 2.0;

  // The residual is strictly decreasing; bisect until the bracket is far
  // tighter than the 1e-13 contract so the residual bound 1e-12 holds too.
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw BadInput("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

PowerSumCheck power_sum_check(std::uint64_t q, const std::vector<Rational>& exponents) {
  if (q < 2) throw BadInput("q must be >= 2");

  constexpr mpfr_prec_t kPrec = 256;  // ~77 significant decimal digits
  mpfr_t sum, term, root, tol;
  mpfr_inits2(kPrec, sum, term, root, tol, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(sum, 1);

  for (const Rational& e : exponents) {
    // q^{num/den} = (q^{1/den})^{num}
    mpfr_set_ui(root, static_cast<unsigned long>(q), MPFR_RNDN);
    mpfr_rootn_ui(root, root, static_cast<unsigned long>(e.den), MPFR_RNDN);
    mpfr_pow_si(term, root, static_cast<long>(e.num), MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
  }

  mpfr_sub_ui(sum, sum, 1, MPFR_RNDN);
  mpfr_abs(sum, sum, MPFR_RNDN);
  mpfr_set_str(tol, "1e-20", 10, MPFR_RNDN);

  PowerSumCheck check;
  check.sums_to_one = mpfr_cmp(sum, tol) <= 0;
  check.all_integer =
      std::all_of(exponents.begin(), exponents.end(),
                  [](const Rational& e) { return e.is_integer(); });

  mpfr_clears(sum, term, root, tol, static_cast<mpfr_ptr>(nullptr));
  return check;
}

std::string to_string(CompatibilityVerdict v) {
  switch (v) {
    case CompatibilityVerdict::dimension_mismatch:
      return "DimensionMismatch";
    case CompatibilityVerdict::compatible:
      return "Compatible";
    case CompatibilityVerdict::incompatible:
      return "Incompatible";
  }
  return "?";
}

CompatibilityReport lipschitz_onto_compatibility(
    const HomogeneousSelfSimilar& a, const std::vector<double>& b_ratios,
    double tol, const std::optional<std::vector<Rational>>& exact_exponents) {
  if (b_ratios.empty()) throw InvalidRatio("B needs at least one ratio");
  for (double b : b_ratios)
    if (!(b > 0.0) || !(b < 1.0)) throw InvalidRatio("ratios must lie in (0,1)");
  if (!(tol > 0.0)) throw BadInput("tolerance must be positive");
  if (exact_exponents && exact_exponents->size() != b_ratios.size())
    throw BadInput("exact exponent count must match the ratio count");

  CompatibilityReport report;
  report.tolerance = tol;
  report.s_a = a.dimension();
  report.k = max_integer_root(a.branches);

  const double log_r = std::log(a.ratio);
  for (double b : b_ratios) report.alphas.push_back(std::log(b) / log_r);
  for (double alpha : report.alphas)
    report.multiples.push_back(static_cast<double>(report.k) * alpha);

  report.s_b = moran_dimension(b_ratios);
  report.dimension_gap = std::fabs(report.s_a - report.s_b);

  // Dimension premise. With symbolic exponents the Moran sum becomes
  // sum q^{-p_j/q_j}, decided at high precision instead of via tol.
  bool dims_equal;
  if (exact_exponents) {
    std::vector<Rational> negated;
    negated.reserve(exact_exponents->size());
    for (const Rational& e : *exact_exponents) negated.emplace_back(-e.num, e.den);
    dims_equal = power_sum_check(a.branches, negated).sums_to_one;
  } else {
    dims_equal = report.dimension_gap <= tol;
  }

  if (!dims_equal) {
    report.verdict = CompatibilityVerdict::dimension_mismatch;
    return report;
  }

  bool compatible = true;
  if (exact_exponents) {
    for (const Rational& e : *exact_exponents) {
      // k * p/q must be a positive integer.
      const long long scaled = static_cast<long long>(report.k) * e.num;
      if (e.num <= 0 || scaled % e.den != 0) compatible = false;
    }
  } else {
    for (double m : report.multiples) {
      const double nearest = std::round(m);
      if (nearest < 1.0 || std::fabs(m - nearest) > tol) compatible = false;
    }
  }
  report.verdict =
      compatible ? CompatibilityVerdict::compatible : CompatibilityVerdict::incompatible;
  return report;
}

}  // namespace fractlip

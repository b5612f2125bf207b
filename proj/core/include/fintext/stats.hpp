#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fintext {

/// Descriptive moments of a sample. Standard deviation uses the n-1
/// denominator; skewness is the standardized third central moment and
/// kurtosis is reported in excess form (normal = 0). Shape moments are
/// absent for degenerate samples (n < 2 or zero variance).
struct SummaryStats {
  std::size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::optional<double> std_dev;
  std::optional<double> skewness;
  std::optional<double> excess_kurtosis;

  /// Throws DataError("degenerate sample") when the moment is absent.
  double skewness_or_throw() const;
  double excess_kurtosis_or_throw() const;
};

/// Throws DataError on an empty sample.
SummaryStats summary_stats(std::span<const double> samples);

/// Midpoint-of-central-order-statistics median (input need not be sorted).
double median_of(std::vector<double> values);

struct TestResult {
  std::string method;
  double statistic = 0.0;
  double p_value = 1.0;
  std::optional<std::pair<double, double>> ci95;
  std::vector<std::size_t> group_sizes;
  std::optional<std::uint64_t> seed;
};

/// Percentile bootstrap of the sample median against a zero null:
/// `replicates` resamples with replacement, 2.5/97.5-percentile interval,
/// p = min(1, 2*min(Pr*(median <= 0), Pr*(median >= 0))) with zero medians
/// counted on both sides. Bit-reproducible for a given (samples, replicates,
/// seed). Requires n >= 2.
TestResult bootstrap_median_test(std::span<const double> samples,
                                 std::size_t replicates, std::uint64_t seed);

/// One-sample two-sided t-test of mean zero (reference statistic emitted
/// alongside the bootstrap). Requires n >= 2 and nonzero variance.
TestResult one_sample_t_test(std::span<const double> samples);

/// Kruskal-Wallis rank test with mid-rank ties and the tie-correction
/// divisor; p from chi-squared with (groups - 1) degrees of freedom.
/// Throws DataError when every pooled observation is identical.
TestResult kruskal_wallis(const std::vector<std::vector<double>>& groups);

/// Bartlett's equal-variance test; p from chi-squared with (groups - 1)
/// degrees of freedom. Every group needs >= 2 observations and nonzero
/// variance.
TestResult bartlett(const std::vector<std::vector<double>>& groups);

}  // namespace fintext

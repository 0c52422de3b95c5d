#pragma once

// Descriptive statistics, paired and Welch t-tests, and the Student t CDF.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace collabmap::stats {

struct Sample {
  std::string label;
  std::vector<double> values;
  std::size_t n = 0;
  double mean = 0.0;
  std::optional<double> variance;  // divisor n-1; absent when n == 1
};

/// Throws EmptySample.
Sample descriptive(std::span<const double> values, std::string label = {});

enum class TestKind { paired, welch };
std::string_view to_string(TestKind k);

struct TestResult {
  double t = 0.0;
  double df = 0.0;
  double p_one = 0.5;  // tail on the side of the observed difference
  double p_two = 1.0;
  TestKind kind = TestKind::paired;
};

/// Regularized incomplete beta I_x(a, b); `y` must equal 1 - x and is passed
/// separately so callers can supply it without cancellation.
double incomplete_beta(double a, double b, double x, double y);

/// P(T <= t) for Student's t with `df` > 0 degrees of freedom. Throws InvalidDf.
double t_cdf(double t, double df);

/// d_i = xs_i - ys_i. Throws LengthMismatch, EmptySample (n < 2), ZeroVariance.
TestResult paired_t(std::span<const double> xs, std::span<const double> ys);

/// t = (mean_a - mean_b) / sqrt(var_a/n_a + var_b/n_b), Welch-Satterthwaite df.
/// Throws EmptySample (n < 2) and ZeroVariance (both variances 0).
TestResult welch_t(const Sample& a, const Sample& b);

}  // namespace collabmap::stats

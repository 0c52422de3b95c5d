#include "collabmap/stats.hpp"

#include <cmath>
#include <limits>

#include "collabmap/error.hpp"

namespace collabmap::stats {

Sample descriptive(std::span<const double> values, std::string label) {
  if (values.empty()) fail(ErrorCode::EmptySample, label.empty() ? "sample" : label);
  Sample s;
  s.label = std::move(label);
  s.values.assign(values.begin(), values.end());
  s.n = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.variance = ss / static_cast<double>(s.n - 1);
  }
  return s;
}

std::string_view to_string(TestKind k) { return k == TestKind::paired ? "paired" : "welch"; }

namespace {

// Continued fraction for I_x(a, b) (modified Lentz), valid for x < (a+1)/(a+b+2).
double beta_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 100000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace

double incomplete_beta(double a, double b, double x, double y) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double front = std::exp(a * std::log(x) + b * std::log(y) - log_beta(a, b));
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_fraction(a, b, x) / a;
  return 1.0 - front * beta_fraction(b, a, y) / b;
}

double t_cdf(double t, double df) {
  if (!(df > 0.0) || std::isnan(df)) fail(ErrorCode::InvalidDf, std::to_string(df));
  if (t == 0.0) return 0.5;
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  // P(|T| > |t|) = I_x(df/2, 1/2) with x = df / (df + t^2)
  const double t2 = t * t;
  const double x = df / (df + t2);
  const double y = t2 / (df + t2);
  const double tail = 0.5 * incomplete_beta(0.5 * df, 0.5, x, y);
  return t > 0 ? 1.0 - tail : tail;
}

namespace {

TestResult finish(double t, double df, TestKind kind) {
  TestResult r;
  r.t = t;
  r.df = df;
  r.kind = kind;
  const double lower = t_cdf(-std::fabs(t), df);
  r.p_one = lower;
  r.p_two = std::min(1.0, 2.0 * std::min(lower, 1.0 - lower));
  return r;
}

}  // namespace

TestResult paired_t(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    fail(ErrorCode::LengthMismatch, std::to_string(xs.size()) + " vs " + std::to_string(ys.size()));
  }
  if (xs.size() < 2) fail(ErrorCode::EmptySample, "paired test needs at least 2 pairs");
  std::vector<double> d(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) d[i] = xs[i] - ys[i];
  bool constant = true;
  for (double v : d) constant = constant && v == d.front();
  if (constant) fail(ErrorCode::ZeroVariance, "all paired differences are equal");
  Sample s = descriptive(d);
  const double n = static_cast<double>(s.n);
  const double t = s.mean / std::sqrt(*s.variance / n);
  return finish(t, n - 1.0, TestKind::paired);
}

TestResult welch_t(const Sample& a, const Sample& b) {
  if (a.n < 2 || b.n < 2 || !a.variance || !b.variance) {
    fail(ErrorCode::EmptySample, "Welch test needs at least 2 observations per group");
  }
  const double va = *a.variance / static_cast<double>(a.n);
  const double vb = *b.variance / static_cast<double>(b.n);
  if (va == 0.0 && vb == 0.0) fail(ErrorCode::ZeroVariance, "both groups are constant");
  const double se2 = va + vb;
  const double t = (a.mean - b.mean) / std::sqrt(se2);
  const double df = se2 * se2 / (va * va / static_cast<double>(a.n - 1) +
                                 vb * vb / static_cast<double>(b.n - 1));
  return finish(t, df, TestKind::welch);
}

}  // namespace collabmap::stats

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace modone {

// Round to 12 significant decimal digits (the working precision of the
// worksheet this library reproduces).
inline double round_sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", x);
  return std::strtod(buf, nullptr);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

inline double exponential_cdf(double s) { return s > 0.0 ? 1.0 - std::exp(-s) : 0.0; }

// One-sample Kolmogorov-Smirnov distance of `sample` to a continuous cdf.
inline double ks_distance(std::vector<double> sample,
                          const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

inline double sample_mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Unbiased sample standard deviation.
inline double sample_stddev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = sample_mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

struct MonteCarloEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
};

}  // namespace modone

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modone/rng.hpp"

namespace modone {

// Fractional part mapped to [0, 1).  x just below an integer can round to 1
// under x - floor(x); that case is folded back to 0.
inline double frac(double x) {
  double f = x - std::floor(x);
  return f < 1.0 ? f : 0.0;
}

struct GeneratorMeta {
  std::string name;
  double alpha = 0.0;
  std::uint64_t seed = 0;
};

// A sorted finite sequence on the unit circle [0, 1).  Immutable after
// construction; construction enforces the range and ordering invariants.
class OrderedPointArray {
 public:
  OrderedPointArray(std::vector<double> points, GeneratorMeta meta)
      : pts_(std::move(points)), meta_(std::move(meta)) {
    if (pts_.empty())
      throw std::invalid_argument("OrderedPointArray: need at least one point");
    double prev = 0.0;
    for (double p : pts_) {
      if (!(p >= 0.0 && p < 1.0))
        throw std::invalid_argument("OrderedPointArray: point outside [0,1)");
      if (p < prev)
        throw std::invalid_argument("OrderedPointArray: points not sorted");
      prev = p;
    }
  }

  std::int64_t size() const { return static_cast<std::int64_t>(pts_.size()); }
  double operator[](std::int64_t i) const { return pts_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& points() const { return pts_; }
  const GeneratorMeta& meta() const { return meta_; }

 private:
  std::vector<double> pts_;
  GeneratorMeta meta_;
};

// frac(m*alpha), m = 1..n.  alpha is reduced mod 1 first, so alpha and
// alpha + k generate identical arrays whenever alpha + k is exact in double.
inline OrderedPointArray gen_malpha(double alpha, std::int64_t n) {
  if (!std::isfinite(alpha))
    throw std::invalid_argument("gen_malpha: alpha must be finite");
  if (n < 1) throw std::invalid_argument("gen_malpha: n must be >= 1");
  const double a = frac(alpha);
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (std::int64_t m = 1; m <= n; ++m)
    pts[static_cast<std::size_t>(m - 1)] = frac(static_cast<double>(m) * a);
  std::stable_sort(pts.begin(), pts.end());
  return OrderedPointArray(std::move(pts), {"malpha", alpha, 0});
}

// frac(sqrt(m*alpha)), m = 1..n.  The square root is taken in one operation
// on the double product, matching the worksheet pipeline; fractional parts
// are accurate to roughly 1e-13 absolute for m <= 1e4.  Perfect squares
// (alpha = 1) are kept; callers may filter.
inline OrderedPointArray gen_sqrt_malpha(double alpha, std::int64_t n) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("gen_sqrt_malpha: alpha must be positive");
  if (n < 1) throw std::invalid_argument("gen_sqrt_malpha: n must be >= 1");
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (std::int64_t m = 1; m <= n; ++m)
    pts[static_cast<std::size_t>(m - 1)] = frac(std::sqrt(static_cast<double>(m) * alpha));
  std::stable_sort(pts.begin(), pts.end());
  return OrderedPointArray(std::move(pts), {"sqrt_malpha", alpha, 0});
}

// n independent uniform draws on [0, 1), sorted.  Deterministic per seed.
inline OrderedPointArray gen_iid_uniform(std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_iid_uniform: n must be >= 1");
  Rng rng(seed);
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (auto& p : pts) p = rng.uniform01();
  std::stable_sort(pts.begin(), pts.end());
  return OrderedPointArray(std::move(pts), {"iid_uniform", 0.0, seed});
}

// Applies an integrated density N(x) pointwise: xi -> N(xi).  When the input
// has limiting density N', the output is uniformly distributed.  The cdf must
// map [0,1) into [0,1) with cdf(0) = 0; a decreasing sample is rejected.
inline OrderedPointArray rescale_by_density(const OrderedPointArray& in,
                                            const std::function<double(double)>& cdf) {
  if (std::abs(cdf(0.0)) > 1e-12)
    throw std::invalid_argument("rescale_by_density: cdf(0) must be 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(in.size()));
  double prev = -1.0;
  for (double p : in.points()) {
    const double y = cdf(p);
    if (!(y >= 0.0 && y < 1.0))
      throw std::invalid_argument("rescale_by_density: cdf value outside [0,1)");
    if (y < prev - 1e-12)
      throw std::invalid_argument("rescale_by_density: non-monotone cdf sample");
    prev = y;
    out.push_back(y);
  }
  std::stable_sort(out.begin(), out.end());
  GeneratorMeta meta = in.meta();
  meta.name += "|rescaled";
  return OrderedPointArray(std::move(out), std::move(meta));
}

}  // namespace modone

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "modone/point_array.hpp"
#include "modone/rng.hpp"
#include "modone/stats_util.hpp"

namespace modone {

enum class GapConvention { Circular, OpenChain };

// Normalized gaps s_j = N (xi_{j+1} - xi_j), dimensionless (units of the mean
// spacing 1/N).  Circular includes the wrap gap xi_1 + 1 - xi_N and the N
// gaps sum to N; open-chain drops it (worksheet convention, N-1 gaps).
struct GapStatistics {
  std::vector<double> gaps;
  GapConvention convention = GapConvention::Circular;
};

// Probability mass of window counts: k -> P(count = k).
struct CountDistribution {
  std::map<std::int64_t, double> masses;
  double mean_L = 0.0;

  double total_mass() const {
    double s = 0.0;
    for (const auto& [k, m] : masses) s += m;
    return s;
  }
  double mean() const {
    double s = 0.0;
    for (const auto& [k, m] : masses) s += static_cast<double>(k) * m;
    return s;
  }
};

struct Histogram {
  double bin_width = 0.0;
  int num_bins = 0;
  std::vector<double> masses;    // per bin, normalized by the sample count
  std::vector<double> outliers;  // values >= num_bins*bin_width, ascending
  std::size_t sample_count = 0;

  double outlier_mass() const {
    return sample_count == 0
               ? 0.0
               : static_cast<double>(outliers.size()) / static_cast<double>(sample_count);
  }
};

namespace detail {
inline double window_length(const OrderedPointArray& pts, double L) {
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::invalid_argument("window length L must be positive");
  const double ell = L / static_cast<double>(pts.size());
  if (!(ell <= 1.0))
    throw std::invalid_argument("window length ell = L/n must be <= 1");
  return ell;
}
}  // namespace detail

// Number of points in [x0 - ell/2, x0 + ell/2) mod 1, ell = L/n.
// Half-open on the right, matching chi on [-1/2, 1/2).
inline std::int64_t count_in_window(const OrderedPointArray& pts, double x0, double L) {
  const double ell = detail::window_length(pts, L);
  const std::int64_t n = pts.size();
  if (ell == 1.0) return n;
  const double a = frac(x0 - 0.5 * ell);
  const double b = frac(x0 + 0.5 * ell);
  const auto& v = pts.points();
  const auto idx = [&](double t) {
    return static_cast<std::int64_t>(std::lower_bound(v.begin(), v.end(), t) - v.begin());
  };
  if (a < b) return idx(b) - idx(a);
  if (a > b) return (n - idx(a)) + idx(b);
  return ell > 0.5 ? n : 0;  // endpoints collapsed by rounding
}

// Exact E_N(k, L): Lebesgue measure of {x0 : count = k}, by a circular sweep
// over the 2N event positions xi_j -/+ ell/2.  The count as a function of x0
// is piecewise constant; masses sum to 1 and the mean equals L.
inline CountDistribution count_distribution_exact(const OrderedPointArray& pts, double L) {
  const double ell = detail::window_length(pts, L);
  const std::int64_t n = pts.size();
  CountDistribution dist;
  if (ell == 1.0) {
    dist.masses[n] = 1.0;
    dist.mean_L = static_cast<double>(n);
    return dist;
  }

  struct Event {
    double pos;
    int delta;
  };
  std::vector<Event> ev;
  ev.reserve(static_cast<std::size_t>(2 * n));
  for (double p : pts.points()) {
    ev.push_back({frac(p - 0.5 * ell), +1});
    ev.push_back({frac(p + 0.5 * ell), -1});
  }
  std::sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) { return x.pos < y.pos; });

  // Window membership at x0 = 0: xi_j in [-ell/2, ell/2) mod 1.
  std::int64_t count = 0;
  for (double p : pts.points())
    if (frac(p + 0.5 * ell) < ell) ++count;

  double prev = 0.0;
  std::size_t i = 0;
  while (i < ev.size()) {
    const double pos = ev[i].pos;
    if (pos > prev) {
      dist.masses[count] += pos - prev;
      prev = pos;
    }
    int delta = 0;
    while (i < ev.size() && ev[i].pos == pos) delta += ev[i++].delta;
    count += delta;
  }
  if (prev < 1.0) dist.masses[count] += 1.0 - prev;

  dist.mean_L = dist.mean();
  return dist;
}

inline GapStatistics gap_statistics(const OrderedPointArray& pts, GapConvention convention) {
  const std::int64_t n = pts.size();
  if (n < 2) throw std::invalid_argument("gap_statistics: need at least two points");
  const double scale = static_cast<double>(n);
  GapStatistics gs;
  gs.convention = convention;
  gs.gaps.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i + 1 < n; ++i) gs.gaps.push_back(scale * (pts[i + 1] - pts[i]));
  if (convention == GapConvention::Circular)
    gs.gaps.push_back(scale * (pts[0] + 1.0 - pts[n - 1]));
  return gs;
}

// Bins [i*w, (i+1)*w), i = 0..num_bins-1; values at or beyond the last edge
// are kept individually as outliers.  Masses are normalized by the total gap
// count, outliers included.
inline Histogram gap_histogram(const GapStatistics& gaps, double bin_width, int num_bins) {
  if (!(bin_width > 0.0)) throw std::invalid_argument("gap_histogram: bin_width must be > 0");
  if (num_bins < 1) throw std::invalid_argument("gap_histogram: num_bins must be >= 1");
  Histogram h;
  h.bin_width = bin_width;
  h.num_bins = num_bins;
  h.sample_count = gaps.gaps.size();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(num_bins), 0);
  for (double g : gaps.gaps) {
    const auto idx = static_cast<std::int64_t>(std::floor(g / bin_width));
    if (idx >= num_bins)
      h.outliers.push_back(g);
    else
      ++counts[static_cast<std::size_t>(std::max<std::int64_t>(idx, 0))];
  }
  std::sort(h.outliers.begin(), h.outliers.end());
  h.masses.resize(static_cast<std::size_t>(num_bins));
  const double total = static_cast<double>(h.sample_count);
  for (int i = 0; i < num_bins; ++i)
    h.masses[static_cast<std::size_t>(i)] =
        static_cast<double>(counts[static_cast<std::size_t>(i)]) / total;
  return h;
}

// 1 - (1/N) sum_j min(s_j, L).  Equals the exact-sweep E_N(0, L); this is the
// test-function identity behind the gap/void-probability equivalence.  (The
// source states the test function as max{0, x, L}, which is constant >= L;
// the derivation above it forces min(x, L) and that is what is implemented.)
inline double ep_zero_gap_transform(const GapStatistics& gaps, double L) {
  if (gaps.convention != GapConvention::Circular)
    throw std::invalid_argument("ep_zero_gap_transform: circular gaps required");
  if (!(L >= 0.0)) throw std::invalid_argument("ep_zero_gap_transform: L must be >= 0");
  double s = 0.0;
  for (double g : gaps.gaps) s += std::min(g, L);
  return 1.0 - s / static_cast<double>(gaps.gaps.size());
}

// 1-D windows for the pair correlation sum.
enum class PairWindow { Triangle, Box };

inline double pair_window_value(PairWindow w, double x) {
  switch (w) {
    case PairWindow::Triangle:
      return std::max(1.0 - std::abs(x), 0.0);
    case PairWindow::Box:
      return (x >= -0.5 && x < 0.5) ? 1.0 : 0.0;
  }
  return 0.0;
}

inline double pair_window_radius(PairWindow w) {
  return w == PairWindow::Triangle ? 1.0 : 0.5;
}

// R^2_N(L, psi) = (1/N) sum_{i != j} sum_m psi((xi_i - xi_j + m)/ell).
// Pairs are enumerated by a two-pointer scan over the doubled sorted array, so
// wraparound needs no modular branches.  Requires ell * radius(psi) <= 1/2;
// beyond that a pair could contribute at two integer shifts m.
inline double pair_correlation_direct(const OrderedPointArray& pts, double L, PairWindow psi) {
  const std::int64_t n = pts.size();
  const double ell = detail::window_length(pts, L);
  const double radius = pair_window_radius(psi);
  if (ell * radius > 0.5)
    throw std::invalid_argument("pair_correlation_direct: ell*radius > 1/2 (wrap ambiguity)");
  const double reach = ell * radius;
  const auto& v = pts.points();
  const auto at = [&](std::int64_t j) {
    return j < n ? v[static_cast<std::size_t>(j)] : v[static_cast<std::size_t>(j - n)] + 1.0;
  };
  double acc = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < i + n; ++j) {
      const double d = at(j) - v[static_cast<std::size_t>(i)];
      if (d > reach) break;
      acc += pair_window_value(psi, d / ell) + pair_window_value(psi, -d / ell);
    }
  }
  return acc / static_cast<double>(n);
}

struct PairCorrelation {
  double value = 0.0;
  double truncation_bound = 0.0;  // rigorous bound on the dropped Fourier tail
};

// Fourier-side pair correlation (Poisson summation of the direct sum):
//   R^2 = (L/N^2) sum_{|k| <= n_max} psihat(Lk/N) (|S_k|^2 - N),
// with S_k = sum_j e(k xi_j).  Implemented for the triangle window, whose
// transform psihat(y) = (sin(pi y)/(pi y))^2 >= 0 has the summable tail
// bound psihat(y) <= (N/(pi L k))^2; the reported truncation bound is
//   (L/N^2)(N^2 - N) * 2 (N/(pi L))^2 / n_max.
inline PairCorrelation pair_correlation_fourier(const OrderedPointArray& pts, double L,
                                                std::int64_t n_max) {
  const std::int64_t n = pts.size();
  detail::window_length(pts, L);
  if (n_max < 1) throw std::invalid_argument("pair_correlation_fourier: n_max must be >= 1");
  const double nd = static_cast<double>(n);

  std::vector<std::complex<double>> step(static_cast<std::size_t>(n));
  std::vector<std::complex<double>> cur(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    const double a = 2.0 * std::numbers::pi * pts[j];
    step[static_cast<std::size_t>(j)] = {std::cos(a), std::sin(a)};
    cur[static_cast<std::size_t>(j)] = step[static_cast<std::size_t>(j)];
  }

  double sum = nd * nd - nd;  // k = 0 term, psihat(0) = 1
  for (std::int64_t k = 1; k <= n_max; ++k) {
    std::complex<double> s{0.0, 0.0};
    for (std::int64_t j = 0; j < n; ++j) {
      s += cur[static_cast<std::size_t>(j)];
      cur[static_cast<std::size_t>(j)] *= step[static_cast<std::size_t>(j)];
    }
    const double y = L * static_cast<double>(k) / nd;
    const double z = std::numbers::pi * y;
    const double sinc = std::sin(z) / z;
    sum += 2.0 * (sinc * sinc) * (std::norm(s) - nd);
  }

  PairCorrelation out;
  out.value = (L / (nd * nd)) * sum;
  out.truncation_bound = 2.0 * nd * (nd - 1.0) /
                         (std::numbers::pi * std::numbers::pi * L * static_cast<double>(n_max));
  return out;
}

// Number variance via the identity Sigma^2(L) = L - L^2 + L R^2(L, Delta).
inline double number_variance_identity(const OrderedPointArray& pts, double L) {
  return L - L * L + L * pair_correlation_direct(pts, L, PairWindow::Triangle);
}

// Number variance by direct Monte-Carlo over the window center.
inline MonteCarloEstimate number_variance_monte_carlo(const OrderedPointArray& pts, double L,
                                                      std::int64_t draws, std::uint64_t seed) {
  detail::window_length(pts, L);
  if (draws < 1) throw std::invalid_argument("number_variance_monte_carlo: draws must be >= 1");
  Rng rng(seed);
  double s1 = 0.0, s2 = 0.0;
  for (std::int64_t i = 0; i < draws; ++i) {
    const double x0 = rng.uniform01();
    const double dev = static_cast<double>(count_in_window(pts, x0, L)) - L;
    const double sq = dev * dev;
    s1 += sq;
    s2 += sq * sq;
  }
  const double m = s1 / static_cast<double>(draws);
  const double var = std::max(s2 / static_cast<double>(draws) - m * m, 0.0);
  return {m, std::sqrt(var / static_cast<double>(draws))};
}

}  // namespace modone

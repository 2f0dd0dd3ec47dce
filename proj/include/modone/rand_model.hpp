#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "modone/local_stats.hpp"
#include "modone/point_array.hpp"
#include "modone/rng.hpp"
#include "modone/stats_util.hpp"

namespace modone {

// Poisson mass L^k e^{-L} / k!, evaluated in log space for large k.
inline double poisson_pmf(std::int64_t k, double L) {
  if (k < 0) throw std::invalid_argument("poisson_pmf: k must be >= 0");
  if (!(L >= 0.0) || !std::isfinite(L)) throw std::invalid_argument("poisson_pmf: bad L");
  if (L == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(k) * std::log(L) - L -
                  std::lgamma(static_cast<double>(k) + 1.0));
}

// Total variation distance of an empirical pmf to Poisson(L), summing the
// Poisson tail out to k_tail where the empirical support ends.
inline double total_variation_to_poisson(const CountDistribution& dist, double L,
                                         std::int64_t k_tail = 200) {
  std::int64_t k_hi = k_tail;
  if (!dist.masses.empty()) k_hi = std::max(k_hi, dist.masses.rbegin()->first);
  double tv = 0.0;
  for (std::int64_t k = 0; k <= k_hi; ++k) {
    const auto it = dist.masses.find(k);
    const double p = it == dist.masses.end() ? 0.0 : it->second;
    tv += std::abs(p - poisson_pmf(k, L));
  }
  return 0.5 * tv;
}

// Central-limit check in the growing-window regime: for each trial an i.i.d.
// array of size n is generated, one window center is drawn, and the count is
// standardized with the identity-method number variance of that array.
// Returns the KS distance of the standardized sample to the standard normal.
inline double clt_ks_statistic(std::int64_t n, double L, std::int64_t trials,
                               std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("clt_ks_statistic: trials must be >= 1");
  if (n < 2) throw std::invalid_argument("clt_ks_statistic: n must be >= 2");
  if (!(L > 0.0) || !(L / static_cast<double>(n) <= 0.5))
    throw std::invalid_argument("clt_ks_statistic: need 0 < L <= n/2");

  std::vector<double> stats;
  stats.reserve(static_cast<std::size_t>(trials));
  Rng centers(derive_seed(seed, 0));
  for (std::int64_t t = 0; t < trials; ++t) {
    const OrderedPointArray arr = gen_iid_uniform(n, derive_seed(seed, 1 + static_cast<std::uint64_t>(t)));
    const double x0 = centers.uniform01();
    const double sigma2 = number_variance_identity(arr, L);
    const double s = static_cast<double>(count_in_window(arr, x0, L));
    stats.push_back((s - L) / std::sqrt(sigma2));
  }
  return ks_distance(std::move(stats), normal_cdf);
}

namespace detail {
// Binomial(n, p) by pmf inversion; O(result) expected time for small n*p.
inline std::int64_t binomial_draw(Rng& rng, std::int64_t n, double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return n;
  const double q = 1.0 - p;
  const double u = rng.uniform01();
  double pk = std::exp(static_cast<double>(n) * std::log1p(-p));
  double cdf = pk;
  std::int64_t k = 0;
  while (u > cdf && k < n) {
    pk *= (static_cast<double>(n - k) / static_cast<double>(k + 1)) * (p / q);
    cdf += pk;
    ++k;
  }
  return k;
}
}  // namespace detail

// The independence heuristic for sqrt(m alpha): X = sum_{m=1}^M X_m with
// X_m = 1{ |eta_m| <= L m / M^2 }, eta_m i.i.d. uniform on [-1/2, 1/2).
// Simulated by thinning: each m fires with probability p_m = 2Lm/M^2; draw
// the number of proposals at the envelope rate p* = 2L/M, place them at
// distinct uniform positions and accept with probability p_m/p* = m/M.
// This is distributed exactly as the direct per-m simulation (which the unit
// tests cross-check) at O(L) instead of O(M) cost per trial.
inline CountDistribution heuristic_x_model(std::int64_t M, double L, std::int64_t trials,
                                           std::uint64_t seed) {
  if (M < 1) throw std::invalid_argument("heuristic_x_model: M must be >= 1");
  if (trials < 1) throw std::invalid_argument("heuristic_x_model: trials must be >= 1");
  if (!(L >= 0.0) || !std::isfinite(L))
    throw std::invalid_argument("heuristic_x_model: L must be >= 0");
  const double p_star = 2.0 * L / static_cast<double>(M);
  if (p_star > 1.0)
    throw std::invalid_argument("heuristic_x_model: need 2L/M <= 1 for valid probabilities");

  Rng rng(seed);
  std::map<std::int64_t, std::int64_t> counts;
  std::vector<std::int64_t> positions;
  for (std::int64_t t = 0; t < trials; ++t) {
    const std::int64_t proposals = detail::binomial_draw(rng, M, p_star);
    positions.clear();
    while (static_cast<std::int64_t>(positions.size()) < proposals) {
      const std::int64_t m = rng.uniform_int(1, M);
      bool dup = false;
      for (std::int64_t seen : positions) dup = dup || (seen == m);
      if (!dup) positions.push_back(m);
    }
    std::int64_t x = 0;
    for (std::int64_t m : positions)
      if (rng.uniform01() < static_cast<double>(m) / static_cast<double>(M)) ++x;
    ++counts[x];
  }

  CountDistribution out;
  for (const auto& [k, c] : counts)
    out.masses[k] = static_cast<double>(c) / static_cast<double>(trials);
  out.mean_L = out.mean();
  return out;
}

}  // namespace modone

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "modone/haar.hpp"
#include "modone/local_stats.hpp"
#include "modone/point_array.hpp"
#include "modone/rng.hpp"

namespace modone {

// Empirical E_N(k, L) for frac(m alpha) over random draws of (alpha, x0),
// alpha uniform on [0, 1), x0 uniform unless fixed.  Counts the points in
// [x0 - ell/2, x0 + ell/2) directly, without materializing the array.
inline EklDistribution ekl_empirical_malpha(std::int64_t n, double L, std::int64_t draws,
                                            std::uint64_t seed,
                                            std::optional<double> fixed_x0 = std::nullopt) {
  if (n < 1) throw std::invalid_argument("ekl_empirical_malpha: n must be >= 1");
  if (draws < 1) throw std::invalid_argument("ekl_empirical_malpha: draws must be >= 1");
  const double ell = L / static_cast<double>(n);
  if (!(L > 0.0) || !(ell <= 1.0))
    throw std::invalid_argument("ekl_empirical_malpha: need 0 < L <= n");

  Rng rng(seed);
  std::map<std::int64_t, std::int64_t> counts;
  for (std::int64_t d = 0; d < draws; ++d) {
    const double alpha = rng.uniform01();
    const double x0 = fixed_x0 ? *fixed_x0 : rng.uniform01();
    std::int64_t k = 0;
    for (std::int64_t m = 1; m <= n; ++m)
      if (frac(static_cast<double>(m) * alpha - x0 + 0.5 * ell) < ell) ++k;
    ++counts[k];
  }

  EklDistribution out;
  out.samples = draws;
  const double nd = static_cast<double>(draws);
  for (const auto& [k, c] : counts) {
    const double p = static_cast<double>(c) / nd;
    out.masses[k] = p;
    out.stderrs[k] = std::sqrt(p * (1.0 - p) / nd);
  }
  return out;
}

// Exact E_N(k, L) for frac(sqrt(m alpha)) via the sweep over window centers.
inline CountDistribution ekl_sweep_sqrt(std::int64_t n, double L, double alpha = 1.0) {
  return count_distribution_exact(gen_sqrt_malpha(alpha, n), L);
}

}  // namespace modone

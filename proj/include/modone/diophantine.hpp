#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "modone/errors.hpp"
#include "modone/local_stats.hpp"
#include "modone/point_array.hpp"

namespace modone {

// Distance of x to the nearest integer.
inline double dist_to_integer(double x) {
  const double f = frac(x);
  return std::min(f, 1.0 - f);
}

// Partial quotients of alpha via the Gauss map in double precision; stops
// early when the remainder falls below 1e-12 (near-rational input).
inline std::vector<std::int64_t> continued_fraction(double alpha, int depth) {
  if (depth < 1) throw std::invalid_argument("continued_fraction: depth must be >= 1");
  if (!std::isfinite(alpha)) throw std::invalid_argument("continued_fraction: bad alpha");
  std::vector<std::int64_t> out;
  double x = alpha;
  for (int i = 0; i < depth; ++i) {
    const double a = std::floor(x);
    out.push_back(static_cast<std::int64_t>(a));
    x -= a;
    if (x < 1e-12) break;
    x = 1.0 / x;
  }
  return out;
}

// Empirical diophantine type: |alpha - p/q| > c / q^kappa for all q <= q_max.
// Finite data can only bound kappa from below; the profile is an estimate,
// never a certificate.
struct DiophantineProfile {
  double alpha = 0.0;
  std::vector<std::int64_t> partial_quotients;
  double kappa = 2.0;    // >= 2; equals 2 for badly approximable alpha
  double c = 0.0;        // min_q q^{kappa-1} ||q alpha||, positive for irrational alpha
  std::int64_t q_max = 0;
  std::int64_t worst_q = 0;  // denominator that forced kappa above 2, or 0
  bool stabilized = false;   // false when the estimate may still move with larger q_max
};

// The exponent of q is read off only from q with q ||q alpha|| below a signal
// threshold: badly approximable numbers keep q ||q alpha|| bounded away from
// zero at every scale and report kappa = 2 exactly, while genuinely strong
// rational approximations push kappa above 2.  The constant is recovered
// afterwards as c = min_q q^{kappa-1} ||q alpha|| for the chosen kappa.
inline DiophantineProfile dioph_type_estimate(double alpha, std::int64_t q_max,
                                              int cf_depth = 40) {
  if (q_max < 2) throw std::invalid_argument("dioph_type_estimate: q_max must be >= 2");
  if (!std::isfinite(alpha)) throw std::invalid_argument("dioph_type_estimate: bad alpha");
  constexpr double kSignal = 0.1;

  DiophantineProfile prof;
  prof.alpha = alpha;
  prof.q_max = q_max;
  prof.partial_quotients = continued_fraction(alpha, cf_depth);

  double kappa = 2.0;
  std::int64_t worst = 0;
  bool rational_like = false;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const double dist = dist_to_integer(static_cast<double>(q) * alpha);
    if (dist <= 0.0) {
      rational_like = true;
      break;
    }
    if (q >= 2 && static_cast<double>(q) * dist < kSignal) {
      const double kq = 1.0 + std::log(1.0 / dist) / std::log(static_cast<double>(q));
      if (kq > kappa) {
        kappa = kq;
        worst = q;
      }
    }
  }
  if (rational_like) {
    prof.kappa = std::numeric_limits<double>::infinity();
    prof.c = 0.0;
    prof.stabilized = true;
    return prof;
  }

  double c = std::numeric_limits<double>::infinity();
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const double dist = dist_to_integer(static_cast<double>(q) * alpha);
    c = std::min(c, std::pow(static_cast<double>(q), kappa - 1.0) * dist);
  }

  prof.kappa = kappa;
  prof.c = c;
  prof.worst_q = worst;
  prof.stabilized = worst == 0 ? q_max >= 1000 : worst <= q_max / 10;
  return prof;
}

// Distinct circular gap values of frac(m alpha), m = 1..n, grouped with an
// absolute tolerance in mean-spacing units.  The three-distance theorem says
// the result has at most three elements.
inline std::vector<double> three_gap_check(double alpha, std::int64_t n, double tol = 1e-9) {
  if (n < 2) throw std::invalid_argument("three_gap_check: n must be >= 2");
  std::vector<double> gaps = gap_statistics(gen_malpha(alpha, n), GapConvention::Circular).gaps;
  std::sort(gaps.begin(), gaps.end());
  std::vector<double> reps;
  for (double g : gaps)
    if (reps.empty() || g - reps.back() > tol) reps.push_back(g);
  return reps;
}

struct CountingBoundReport {
  std::int64_t count = 0;
  double bound = 0.0;
  bool zero_regime = false;  // n^{kappa-1} ell < c
  bool satisfied = false;
};

// Interval-count dichotomy of the block-counting lemma: with ell below the
// diophantine floor c / n^{kappa-1} the count must vanish, otherwise it is
// bounded by B n ell^{1/(kappa-1)}.  B is an empirical calibration constant.
// The zero alternative is guaranteed only for intervals touching 0 (it
// encodes ||m alpha|| > c/m^{kappa-1}); for generic x0 it is a statistical
// statement, so sweeps place zero-regime windows around the origin.
inline CountingBoundReport counting_bound_check(const DiophantineProfile& prof,
                                                std::int64_t n, double x0, double ell,
                                                double B = 4.0) {
  if (n < 1) throw std::invalid_argument("counting_bound_check: n must be >= 1");
  if (!(ell > 0.0 && ell <= 1.0))
    throw std::invalid_argument("counting_bound_check: need 0 < ell <= 1");
  if (prof.q_max < n)
    throw std::invalid_argument("counting_bound_check: profile q_max below n");

  CountingBoundReport rep;
  for (std::int64_t m = 1; m <= n; ++m)
    if (frac(static_cast<double>(m) * prof.alpha - x0) <= ell) ++rep.count;

  rep.zero_regime = std::pow(static_cast<double>(n), prof.kappa - 1.0) * ell < prof.c;
  if (rep.zero_regime) {
    rep.bound = 0.0;
    rep.satisfied = rep.count == 0;
  } else {
    rep.bound = B * static_cast<double>(n) * std::pow(ell, 1.0 / (prof.kappa - 1.0));
    rep.satisfied = static_cast<double>(rep.count) <= rep.bound;
  }
  return rep;
}

// Ergodic average (1/n) sum_m ||m alpha||^{-beta} of the extremal K_beta test
// function; converges to 2^beta / (1 - beta) for diophantine alpha with
// beta < 1/(kappa - 1).
inline double singular_average(double alpha, double beta, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("singular_average: n must be >= 1");
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::invalid_argument("singular_average: need 0 <= beta < 1");
  double sum = 0.0;
  for (std::int64_t m = 1; m <= n; ++m) {
    const double d = dist_to_integer(static_cast<double>(m) * alpha);
    if (d == 0.0)
      throw SingularInputError("singular_average: ||m alpha|| = 0 (rational alpha)");
    sum += std::pow(d, -beta);
  }
  return sum / static_cast<double>(n);
}

// The limiting value: integral of |x|^{-beta} over [-1/2, 1/2).
inline double singular_integral(double beta) {
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::invalid_argument("singular_integral: need 0 <= beta < 1");
  return std::pow(2.0, beta) / (1.0 - beta);
}

}  // namespace modone

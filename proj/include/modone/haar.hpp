#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>

#include "modone/group.hpp"
#include "modone/lattice_count.hpp"
#include "modone/rng.hpp"
#include "modone/test_function.hpp"

namespace modone {

inline constexpr double kFundamentalDomainVFloor = 0.8660254037844386;  // sqrt(3)/2

// One point of the quotient in Iwasawa-plus-torus coordinates: (u, v) in the
// classical fundamental domain |u| <= 1/2, u^2 + v^2 >= 1, phi in [0, 2pi),
// torus fibre (x, y) in [0,1)^2, assembled as g = (1, (x,y)) (M, 0).
struct HaarSample {
  double u = 0.0, v = 1.0, phi = 0.0, x = 0.0, y = 0.0;
  GroupElement g;
};

// Rejection sampler for the normalized Haar measure du dv / v^2 dphi dx dy on
// the quotient.  v is drawn with density v^{-2} on [sqrt(3)/2, inf) by
// inverse cdf, u uniform on [-1/2, 1/2]; proposals with u^2 + v^2 < 1 are
// rejected.  The acceptance rate is vol(F)/vol(strip) = pi sqrt(3)/6.
class HaarSampler {
 public:
  explicit HaarSampler(std::uint64_t seed) : rng_(seed) {}

  HaarSample next() {
    for (;;) {
      ++proposals_;
      const double u = rng_.uniform01() - 0.5;
      const double v = kFundamentalDomainVFloor / (1.0 - rng_.uniform01());
      if (u * u + v * v < 1.0) continue;
      ++accepted_;
      HaarSample s;
      s.u = u;
      s.v = v;
      s.phi = 2.0 * std::numbers::pi * rng_.uniform01();
      s.x = rng_.uniform01();
      s.y = rng_.uniform01();
      const Mat2 m = iwasawa_matrix(s.u, s.v, s.phi);
      s.g = GroupElement{m, Vec2{s.x, s.y} * m};
      return s;
    }
  }

  std::int64_t proposals() const { return proposals_; }
  std::int64_t accepted() const { return accepted_; }

 private:
  Rng rng_;
  std::int64_t proposals_ = 0;
  std::int64_t accepted_ = 0;
};

inline HaarSample haar_sample(std::uint64_t seed) { return HaarSampler(seed).next(); }

// Monte-Carlo estimate of the limit law E(k, L) = mu{F = k}/mu(quotient),
// with per-k binomial standard errors.
struct EklDistribution {
  std::map<std::int64_t, double> masses;
  std::map<std::int64_t, double> stderrs;
  std::int64_t samples = 0;
  std::int64_t proposals = 0;  // rejection-sampling statistics
  std::int64_t accepted = 0;

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
  double mean_stderr() const {
    double m2 = 0.0;
    const double mu = mean();
    for (const auto& [k, m] : masses) m2 += static_cast<double>(k) * static_cast<double>(k) * m;
    return std::sqrt(std::max(m2 - mu * mu, 0.0) / static_cast<double>(samples));
  }
};

// Samples are drawn in fixed-size blocks with seeds derived from the master
// seed, so the result does not depend on how blocks are scheduled.
inline EklDistribution ekl_oracle(const TestFunction2D& psi, std::int64_t k_max,
                                  std::int64_t samples, std::uint64_t seed,
                                  std::int64_t cell_budget = default_cell_budget) {
  if (samples < 1) throw std::invalid_argument("ekl_oracle: samples must be >= 1");
  if (k_max < 0) throw std::invalid_argument("ekl_oracle: k_max must be >= 0");

  constexpr std::int64_t kBlock = 1 << 16;
  std::map<std::int64_t, std::int64_t> counts;
  EklDistribution out;
  std::int64_t done = 0;
  for (std::int64_t block = 0; done < samples; ++block) {
    HaarSampler sampler(derive_seed(seed, static_cast<std::uint64_t>(block)));
    const std::int64_t todo = std::min(kBlock, samples - done);
    for (std::int64_t i = 0; i < todo; ++i)
      ++counts[f_count(sampler.next().g, psi, cell_budget)];
    out.proposals += sampler.proposals();
    out.accepted += sampler.accepted();
    done += todo;
  }

  out.samples = samples;
  const double ns = static_cast<double>(samples);
  for (std::int64_t k = 0; k <= k_max; ++k) counts.try_emplace(k, 0);
  for (const auto& [k, c] : counts) {
    const double p = static_cast<double>(c) / ns;
    out.masses[k] = p;
    out.stderrs[k] = std::sqrt(p * (1.0 - p) / ns);
  }
  return out;
}

}  // namespace modone

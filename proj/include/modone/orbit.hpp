#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "modone/group.hpp"
#include "modone/lattice_count.hpp"
#include "modone/test_function.hpp"

namespace modone {

enum class OrbitKind { MAlpha, Sqrt };

// Window count written as the counting function F along a flow orbit:
//   malpha: S_N(l) = F(n_-(alpha, -x0) Phi^{2 log N}) with the rectangle psi,
//   sqrt (alpha = 1): S~_N(l) = F(n_1(x0) Phi^{log N}) with the triangle psi.
// The returned value is an exact lattice count and must agree with the direct
// window count (resp. the direct double sum) as an integer.
inline std::int64_t orbit_count(OrbitKind kind, double alpha, double x0, std::int64_t n,
                                double L, std::int64_t cell_budget = default_cell_budget) {
  if (n < 1) throw std::invalid_argument("orbit_count: n must be >= 1");
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::invalid_argument("orbit_count: L must be positive");
  const double nd = static_cast<double>(n);
  if (kind == OrbitKind::MAlpha) {
    // n_-(alpha, -x0) Phi^{2 log n} = ([[1/n, alpha n], [0, n]], (0, -x0 n)).
    // The x-coordinate of a lattice image is m1 * (1/n); in exact arithmetic
    // m1 = n sits on the closed boundary of chi_{(0,1]}, so the stored entry
    // must not round above 1/n (else n * entry > 1 and the count drops it).
    double inv = 1.0 / nd;
    while (inv * nd > 1.0) inv = std::nextafter(inv, 0.0);
    const GroupElement g{{inv, alpha * nd, 0.0, nd}, {0.0, -x0 * nd}};
    return f_count(g, TestFunction2D::rectangle(L), cell_budget);
  }
  if (alpha != 1.0)
    throw std::invalid_argument("orbit_count: the sqrt orbit picture requires alpha = 1");
  // n_1(x0) Phi^{log n} = ([[1/sqrt n, 2 x0 sqrt n], [0, sqrt n]],
  //                        (x0/sqrt n, x0^2 sqrt n))
  const double root = std::sqrt(nd);
  const GroupElement g{{1.0 / root, 2.0 * x0 * root, 0.0, root},
                       {x0 / root, x0 * x0 * root}};
  return f_count(g, TestFunction2D::triangle(L), cell_budget);
}

// Direct evaluation of the smoothed counting sum
//   S~_{N,eps,delta}(l) = sum_{(m,k)} chi_{(-eps, 1+eps]}((x0 - m)/sqrt(N a))
//       chi_{[-L, L)}((sqrt(N)[k a - (x0 - m)^2] + delta) / (x0 - m)/sqrt(N)).
// The (m, k) ranges are finite because both indicators have bounded support;
// every candidate is tested with the literal expression.  eps = delta = 0
// reproduces the exact sqrt-orbit count for alpha = 1.
inline std::int64_t s_tilde_direct(double alpha, double x0, std::int64_t n, double L,
                                   double eps, double delta) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("s_tilde_direct: alpha must be positive");
  if (n < 1) throw std::invalid_argument("s_tilde_direct: n must be >= 1");
  if (!(L >= 0.0) || !std::isfinite(L))
    throw std::invalid_argument("s_tilde_direct: L must be >= 0");
  if (!(eps > -0.5)) throw std::invalid_argument("s_tilde_direct: eps must exceed -1/2");

  const double nd = static_cast<double>(n);
  const double root = std::sqrt(nd * alpha);
  const double sqn = std::sqrt(nd);

  const auto m_lo = static_cast<std::int64_t>(std::floor(x0 - (1.0 + eps) * root)) - 1;
  const auto m_hi = static_cast<std::int64_t>(std::ceil(x0 + eps * root)) + 1;

  std::int64_t count = 0;
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    const double u = x0 - static_cast<double>(m);
    const double xarg = u / root;
    if (!(xarg > -eps && xarg <= 1.0 + eps)) continue;
    if (u == 0.0) continue;  // integrand is singular, indicator vacuously false

    // |y| <= L forces |k - u^2/alpha| <= (L|u|/n + |delta|/sqrt(n))/alpha.
    const double center = u * u / alpha;
    const double halfwidth =
        (L * std::abs(u) / nd + std::abs(delta) / sqn) / alpha + 1.0;
    const auto k_lo = static_cast<std::int64_t>(std::floor(center - halfwidth));
    const auto k_hi = static_cast<std::int64_t>(std::ceil(center + halfwidth));
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      const double y = (sqn * (static_cast<double>(k) * alpha - u * u) + delta) * sqn / u;
      if (y >= -L && y < L) ++count;
    }
  }
  return count;
}

}  // namespace modone

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "modone/errors.hpp"
#include "modone/group.hpp"
#include "modone/test_function.hpp"

namespace modone {

inline constexpr std::int64_t default_cell_budget = 1'000'000'000;

// F(M, xi) = #{ m in Z^2 : m M + xi in supp(psi) }, evaluated exactly.
//
// Candidates come from the preimage of the support polygon under the affine
// map w -> (w - xi) M^{-1}: the polygon is scanned column by column (integer
// m1), the y-extent of each column is read off the edges, and every candidate
// is then tested with the exact half-open indicator in the forward frame.
// Column ranges carry a +-1 lattice-unit pad so vertex rounding can never drop
// a point.  Throws ResourceLimitError once the scan would exceed cell_budget.
inline std::int64_t f_count(const GroupElement& g, const TestFunction2D& psi,
                            std::int64_t cell_budget = default_cell_budget) {
  if (std::abs(g.m.det() - 1.0) > 1e-9)
    throw NumericError("f_count: group element is not unimodular");
  const Mat2 minv = g.m.inverse_unimodular();

  const std::vector<Vec2> support = psi.vertices();
  std::vector<Vec2> pre;
  pre.reserve(support.size());
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  for (const Vec2& w : support) {
    const Vec2 p = (w - g.xi) * minv;
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw NumericError("f_count: non-finite preimage vertex");
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    pre.push_back(p);
  }
  if (xmax - xmin > static_cast<double>(cell_budget))
    throw ResourceLimitError("f_count: column range exceeds cell budget");

  const auto m1_lo = static_cast<std::int64_t>(std::ceil(xmin)) - 1;
  const auto m1_hi = static_cast<std::int64_t>(std::floor(xmax)) + 1;
  const std::size_t nv = pre.size();

  std::int64_t count = 0;
  std::int64_t cells = 0;
  for (std::int64_t m1 = m1_lo; m1 <= m1_hi; ++m1) {
    const double x = static_cast<double>(m1);
    double ylo = std::numeric_limits<double>::infinity();
    double yhi = -std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < nv; ++e) {
      const Vec2& p = pre[e];
      const Vec2& q = pre[(e + 1) % nv];
      const double lox = std::min(p.x, q.x), hix = std::max(p.x, q.x);
      if (x < lox - 0.51 || x > hix + 0.51) continue;
      if (hix - lox > 1e-300) {
        const double t = std::clamp((x - p.x) / (q.x - p.x), 0.0, 1.0);
        const double yc = p.y + t * (q.y - p.y);
        ylo = std::min(ylo, yc);
        yhi = std::max(yhi, yc);
      }
      if (std::abs(p.x - x) <= 0.51) {
        ylo = std::min(ylo, p.y);
        yhi = std::max(yhi, p.y);
      }
      if (std::abs(q.x - x) <= 0.51) {
        ylo = std::min(ylo, q.y);
        yhi = std::max(yhi, q.y);
      }
    }
    if (!(ylo <= yhi)) continue;

    const auto m2_lo = static_cast<std::int64_t>(std::ceil(ylo)) - 1;
    const auto m2_hi = static_cast<std::int64_t>(std::floor(yhi)) + 1;
    cells += m2_hi - m2_lo + 1;
    if (cells > cell_budget) throw ResourceLimitError("f_count: cell budget exceeded");
    for (std::int64_t m2 = m2_lo; m2 <= m2_hi; ++m2) {
      const Vec2 w = Vec2{static_cast<double>(m1), static_cast<double>(m2)} * g.m + g.xi;
      if (psi.contains(w.x, w.y)) ++count;
    }
  }
  return count;
}

}  // namespace modone

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "modone/errors.hpp"
#include "modone/rng.hpp"

namespace modone {

// Row-major 2x2 real matrix [[a, b], [c, d]].
struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  double det() const { return a * d - b * c; }
  // Adjugate; equals the inverse for det = 1 (exact up to rounding).
  Mat2 inverse_unimodular() const { return {d, -b, -c, a}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

// Row 2-vector.
struct Vec2 {
  double x = 0.0, y = 0.0;
};

inline Vec2 operator*(const Vec2& v, const Mat2& m) {
  return {v.x * m.a + v.y * m.c, v.x * m.b + v.y * m.d};
}
inline Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
inline Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }

// Element (M, xi) of SL(2,R) x| R^2 with xi a row vector and multiplication
// (M, xi)(M', xi') = (M M', xi M' + xi').
struct GroupElement {
  Mat2 m;
  Vec2 xi;

  static constexpr GroupElement identity() { return {Mat2::identity(), {0.0, 0.0}}; }
};

inline GroupElement mul(const GroupElement& g, const GroupElement& h) {
  return {g.m * h.m, g.xi * h.m + h.xi};
}

inline GroupElement inverse(const GroupElement& g) {
  const Mat2 mi = g.m.inverse_unimodular();
  return {mi, Vec2{0.0, 0.0} - g.xi * mi};
}

// Iwasawa coordinates of M in SL(2,R):
//   M = [[1, u], [0, 1]] [[sqrt(v), 0], [0, 1/sqrt(v)]] [[cos(phi/2), sin(phi/2)],
//                                                        [-sin(phi/2), cos(phi/2)]]
// with tau = u + iv in the upper half plane.  phi is reduced mod 2pi (the
// quotient by Gamma identifies M with -M), so the composition reproduces M up
// to overall sign.
struct IwasawaCoords {
  double u = 0.0;
  double v = 1.0;
  double phi = 0.0;
};

inline IwasawaCoords iwasawa(const Mat2& m) {
  const double norm = m.c * m.c + m.d * m.d;
  if (!std::isfinite(norm) || !(norm > 0.0))
    throw NumericError("iwasawa: singular or non-finite matrix");
  if (std::abs(m.det() - 1.0) > 1e-9)
    throw NumericError("iwasawa: determinant is not 1");
  IwasawaCoords out;
  out.v = 1.0 / norm;
  out.u = (m.a * m.c + m.b * m.d) * out.v;
  const double theta = std::atan2(-m.c, m.d);  // (-pi, pi]
  double phi = 2.0 * theta;
  phi = std::fmod(phi, 2.0 * std::numbers::pi);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  out.phi = phi < 2.0 * std::numbers::pi ? phi : 0.0;
  return out;
}

inline Mat2 iwasawa_matrix(double u, double v, double phi) {
  if (!(v > 0.0)) throw std::invalid_argument("iwasawa_matrix: v must be positive");
  const double sv = std::sqrt(v);
  const double ct = std::cos(0.5 * phi), st = std::sin(0.5 * phi);
  // [[sv, u/sv], [0, 1/sv]] * rotation
  return {sv * ct - (u / sv) * st, sv * st + (u / sv) * ct, -st / sv, ct / sv};
}

// Phi^t = (diag(e^{-t/2}, e^{t/2}), 0), the geodesic-type flow element.
inline GroupElement flow_element(double t) {
  if (!(std::abs(t) < 1416.0))
    throw std::range_error("flow_element: |t| too large, e^{t/2} overflows");
  const double e = std::exp(0.5 * t);
  return {{1.0 / e, 0.0, 0.0, e}, {0.0, 0.0}};
}

inline GroupElement flow_translate(const GroupElement& g, double t) {
  return mul(g, flow_element(t));
}

// Horospherical embeddings used for the orbit identities.
inline GroupElement n_minus(double alpha, double y) {
  return {{1.0, alpha, 0.0, 1.0}, {0.0, y}};
}
inline GroupElement n_plus(double beta, double x) {
  return {{1.0, 0.0, beta, 1.0}, {x, 0.0}};
}
// One-parameter group n_1(x) = ([[1, 2x], [0, 1]], (x, x^2)).
inline GroupElement n_one(double x) {
  return {{1.0, 2.0 * x, 0.0, 1.0}, {x, x * x}};
}

// Random element of Gamma = SL(2,Z) x| Z^2: a word of the given length in the
// generators S = [[0,-1],[1,0]], T = [[1,1],[0,1]], paired with an integer
// vector in [-5,5]^2.  All entries are exactly integral.
inline GroupElement gamma_element(std::uint64_t seed, int word_length) {
  if (word_length < 0) throw std::invalid_argument("gamma_element: word_length must be >= 0");
  Rng rng(seed);
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  for (int i = 0; i < word_length; ++i) {
    if (rng.uniform_int(0, 1) == 0) {
      // right-multiply by S
      const std::int64_t na = b, nb = -a, nc = d, nd = -c;
      a = na;
      b = nb;
      c = nc;
      d = nd;
    } else {
      // right-multiply by T
      b += a;
      d += c;
    }
  }
  const auto n1 = static_cast<double>(rng.uniform_int(-5, 5));
  const auto n2 = static_cast<double>(rng.uniform_int(-5, 5));
  return {{static_cast<double>(a), static_cast<double>(b), static_cast<double>(c),
           static_cast<double>(d)},
          {n1, n2}};
}

}  // namespace modone

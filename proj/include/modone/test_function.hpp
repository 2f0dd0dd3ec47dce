#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "modone/group.hpp"

namespace modone {

// Indicator psi on R^2 whose lattice sum defines the counting function F.
// Both kinds have area L.  Boundary conventions follow the defining displays
// exactly: the rectangle is (0,1] x [-L/2, L/2] (closed in y), the triangle
// is {0 < x <= 1, -L < y/x <= L}.
class TestFunction2D {
 public:
  enum class Kind { Rectangle, Triangle };

  static TestFunction2D rectangle(double L) { return TestFunction2D(Kind::Rectangle, L); }
  static TestFunction2D triangle(double L) { return TestFunction2D(Kind::Triangle, L); }

  Kind kind() const { return kind_; }
  double length() const { return L_; }
  double area() const { return L_; }

  bool contains(double x, double y) const {
    if (!(x > 0.0 && x <= 1.0)) return false;
    if (kind_ == Kind::Rectangle) return y >= -0.5 * L_ && y <= 0.5 * L_;
    const double q = y / x;
    return q > -L_ && q <= L_;
  }

  // Support polygon vertices, counterclockwise.
  std::vector<Vec2> vertices() const {
    if (kind_ == Kind::Rectangle)
      return {{0.0, -0.5 * L_}, {1.0, -0.5 * L_}, {1.0, 0.5 * L_}, {0.0, 0.5 * L_}};
    return {{0.0, 0.0}, {1.0, -L_}, {1.0, L_}};
  }

 private:
  TestFunction2D(Kind kind, double L) : kind_(kind), L_(L) {
    if (!(L > 0.0) || !std::isfinite(L))
      throw std::invalid_argument("TestFunction2D: L must be positive and finite");
  }

  Kind kind_;
  double L_;
};

}  // namespace modone

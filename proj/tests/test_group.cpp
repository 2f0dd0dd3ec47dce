#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "modone/group.hpp"
#include "modone/rng.hpp"

using namespace modone;

namespace {

double mat_dist(const Mat2& x, const Mat2& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c),
                   std::abs(x.d - y.d)});
}

double elem_dist(const GroupElement& g, const GroupElement& h) {
  return std::max({mat_dist(g.m, h.m), std::abs(g.xi.x - h.xi.x), std::abs(g.xi.y - h.xi.y)});
}

GroupElement random_element(Rng& rng) {
  const Mat2 m = iwasawa_matrix(rng.uniform(-2.0, 2.0), rng.uniform(0.2, 5.0),
                                rng.uniform(0.0, 2.0 * std::numbers::pi));
  return {m, {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)}};
}

}  // namespace

TEST_CASE("group identity, inverse and associativity") {
  Rng rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    const GroupElement a = random_element(rng);
    REQUIRE(elem_dist(mul(a, GroupElement::identity()), a) < 1e-12);
    REQUIRE(elem_dist(mul(a, inverse(a)), GroupElement::identity()) < 1e-12);

    const GroupElement b = random_element(rng);
    const GroupElement c = random_element(rng);
    REQUIRE(elem_dist(mul(mul(a, b), c), mul(a, mul(b, c))) < 1e-10);
  }
}

TEST_CASE("iwasawa coordinates of simple matrices") {
  const auto id = iwasawa(Mat2::identity());
  REQUIRE(id.u == Catch::Approx(0.0).margin(1e-15));
  REQUIRE(id.v == Catch::Approx(1.0));
  REQUIRE(id.phi == Catch::Approx(0.0).margin(1e-15));

  const auto diag = iwasawa(Mat2{2.0, 0.0, 0.0, 0.5});
  REQUIRE(diag.u == Catch::Approx(0.0).margin(1e-15));
  REQUIRE(diag.v == Catch::Approx(4.0));
  REQUIRE(diag.phi == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("iwasawa round trip, phi reduced mod 2pi") {
  Rng rng(6);
  for (int rep = 0; rep < 200; ++rep) {
    const double u = rng.uniform(-3.0, 3.0);
    const double v = rng.uniform(0.05, 20.0);
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Mat2 m = iwasawa_matrix(u, v, phi);
    const auto c = iwasawa(m);
    REQUIRE(c.u == Catch::Approx(u).margin(1e-10));
    REQUIRE(c.v == Catch::Approx(v).margin(1e-10 * v));
    const Mat2 back = iwasawa_matrix(c.u, c.v, c.phi);
    REQUIRE(mat_dist(back, m) < 1e-10);
  }
  // matrices with c > 0 live on the sheet phi in [2pi, 4pi); after reduction
  // mod 2pi the composition reproduces -M (the quotient identifies the two)
  const Mat2 neg{-1.0, 0.0, 0.0, -1.0};
  const auto c = iwasawa(neg);
  const Mat2 back = iwasawa_matrix(c.u, c.v, c.phi);
  const Mat2 negback{-back.a, -back.b, -back.c, -back.d};
  REQUIRE(std::min(mat_dist(back, neg), mat_dist(negback, neg)) < 1e-10);
}

TEST_CASE("iwasawa rejects singular input") {
  REQUIRE_THROWS_AS(iwasawa(Mat2{1.0, 0.0, 0.0, 2.0}), NumericError);
}

TEST_CASE("flow translation") {
  Rng rng(8);
  const GroupElement g = random_element(rng);
  REQUIRE(elem_dist(flow_translate(g, 0.0), g) < 1e-15);

  const GroupElement two = flow_translate(flow_translate(g, 0.7), 1.1);
  REQUIRE(elem_dist(two, flow_translate(g, 1.8)) < 1e-10);

  const std::int64_t n = 100;
  const GroupElement f = flow_translate(GroupElement::identity(), 2.0 * std::log(double(n)));
  REQUIRE(f.m.a == Catch::Approx(0.01).margin(1e-15));
  REQUIRE(f.m.d == Catch::Approx(100.0).margin(1e-10));
  REQUIRE(f.xi.x == 0.0);
  REQUIRE(f.xi.y == 0.0);

  REQUIRE_THROWS_AS(flow_element(5000.0), std::range_error);
}

TEST_CASE("horospherical embeddings") {
  REQUIRE(elem_dist(n_one(0.0), GroupElement::identity()) == 0.0);

  Rng rng(9);
  for (int rep = 0; rep < 50; ++rep) {
    const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
    REQUIRE(elem_dist(mul(n_one(a), n_one(b)), n_one(a + b)) < 1e-12);
  }

  // n_-(alpha, y) Phi^t, checked entrywise against the matrix product
  const double alpha = 0.37, y = -1.25, t = 3.2;
  const GroupElement lhs = flow_translate(n_minus(alpha, y), t);
  const double e = std::exp(0.5 * t);
  REQUIRE(lhs.m.a == Catch::Approx(1.0 / e));
  REQUIRE(lhs.m.b == Catch::Approx(alpha * e));
  REQUIRE(lhs.m.c == Catch::Approx(0.0).margin(1e-15));
  REQUIRE(lhs.m.d == Catch::Approx(e));
  REQUIRE(lhs.xi.x == Catch::Approx(0.0).margin(1e-15));
  REQUIRE(lhs.xi.y == Catch::Approx(y * e));

  const GroupElement np = n_plus(0.5, 0.25);
  REQUIRE(np.m.c == 0.5);
  REQUIRE(np.xi.x == 0.25);
  REQUIRE(np.xi.y == 0.0);
}

TEST_CASE("gamma_element yields integral unimodular elements") {
  REQUIRE(elem_dist(gamma_element(1, 0), GroupElement::identity()) <= 5.0);  // xi in [-5,5]^2
  for (std::uint64_t s = 0; s < 200; ++s) {
    const GroupElement g = gamma_element(s, static_cast<int>(s % 11));
    REQUIRE(g.m.det() == 1.0);
    for (double e : {g.m.a, g.m.b, g.m.c, g.m.d, g.xi.x, g.xi.y})
      REQUIRE(e == std::floor(e));
  }
}

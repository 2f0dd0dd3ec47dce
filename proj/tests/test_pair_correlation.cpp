#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "modone/local_stats.hpp"
#include "modone/point_array.hpp"
#include "modone/stats_util.hpp"

using namespace modone;

TEST_CASE("pair_correlation_direct degenerate configurations") {
  const OrderedPointArray apart({0.0, 0.5}, {"manual", 0, 0});
  REQUIRE(pair_correlation_direct(apart, 0.9, PairWindow::Triangle) == 0.0);

  const OrderedPointArray coincident({0.0, 0.0}, {"manual", 0, 0});
  // ell = 1/2 exactly; the coincident pair contributes Delta(0) twice
  REQUIRE(pair_correlation_direct(coincident, 1.0, PairWindow::Triangle) ==
          Catch::Approx(1.0));

  REQUIRE_THROWS_AS(pair_correlation_direct(coincident, 1.5, PairWindow::Triangle),
                    std::invalid_argument);
}

TEST_CASE("pair correlation of iid points is close to L") {
  const std::int64_t n = 10000;
  std::vector<double> vals;
  for (int s = 0; s < 12; ++s)
    vals.push_back(pair_correlation_direct(gen_iid_uniform(n, derive_seed(55, s)), 1.0,
                                           PairWindow::Triangle));
  const double m = sample_mean(vals);
  const double se = sample_stddev(vals) / std::sqrt(12.0);
  REQUIRE(std::abs(m - 1.0) <= 3.0 * se + 2e-3);
}

TEST_CASE("triangle window transform spot values") {
  // psihat(y) = (sin(pi y)/(pi y))^2 enters through the Fourier sum; check it
  // indirectly: a single-frequency array makes the k = 1 term dominate.
  // Direct check of the transform values instead:
  const auto psihat = [](double y) {
    const double z = std::numbers::pi * y;
    const double s = std::sin(z) / z;
    return s * s;
  };
  REQUIRE(psihat(0.5) == Catch::Approx(4.0 / (std::numbers::pi * std::numbers::pi)));
  REQUIRE(psihat(1.0) == Catch::Approx(0.0).margin(1e-30));
}

TEST_CASE("fourier pair correlation matches direct within the reported bound") {
  Rng rng(71);
  for (int rep = 0; rep < 25; ++rep) {
    const std::int64_t n = rng.uniform_int(8, 16);
    const double L = rep % 2 == 0 ? 1.0 : 2.0;
    const auto pts = gen_iid_uniform(n, derive_seed(500, rep));
    const double nd = static_cast<double>(n);
    const auto n_max = static_cast<std::int64_t>(
        std::ceil(2.0 * std::pow(nd / (std::numbers::pi * L), 2.0) / 3e-4));
    const double direct = pair_correlation_direct(pts, L, PairWindow::Triangle);
    const auto four = pair_correlation_fourier(pts, L, n_max);
    REQUIRE(std::abs(four.value - direct) <= four.truncation_bound);
  }
}

TEST_CASE("fourier pair correlation on the coincident pair") {
  const OrderedPointArray coincident({0.0, 0.0}, {"manual", 0, 0});
  const auto four = pair_correlation_fourier(coincident, 1.0, 2000000);
  REQUIRE(std::abs(four.value - 1.0) <= four.truncation_bound);
}

TEST_CASE("number variance identity on the perfect lattice") {
  const OrderedPointArray quarters({0.0, 0.25, 0.5, 0.75}, {"manual", 0, 0});
  REQUIRE(number_variance_identity(quarters, 1.0) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("number variance: monte carlo agrees with the identity") {
  Rng rng(7);
  for (int rep = 0; rep < 6; ++rep) {
    const std::int64_t n = rng.uniform_int(32, 256);
    const auto pts = gen_iid_uniform(n, derive_seed(81, rep));
    const double L = rep % 2 == 0 ? 0.5 : 1.5;
    const double ident = number_variance_identity(pts, L);
    const auto mc = number_variance_monte_carlo(pts, L, 200000, derive_seed(82, rep));
    REQUIRE(std::abs(mc.value - ident) <= 3.0 * mc.stderr_ + 1e-6);
  }
}

TEST_CASE("iid number variance is close to L") {
  const auto pts = gen_iid_uniform(20000, 99);
  for (double L : {0.5, 1.0, 2.0}) {
    const double v = number_variance_identity(pts, L);
    REQUIRE(v == Catch::Approx(L).margin(0.15 * L + 0.02));
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "gaussbubble/normal.hpp"
#include "gaussbubble/quadrature.hpp"

#include <cmath>

using namespace gbb;

namespace {

// Independent CDF oracle: adaptive quadrature of the density from far left.
double cdf_oracle(double x) {
  return integrate_adaptive([](double t) { return normal_pdf(t); }, -9.5, x, 1e-14, 400).value;
}

// Independent quantile oracle: bisection on the CDF oracle.
double quantile_oracle(double p) {
  double lo = -9.0, hi = 9.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cdf_oracle(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("Gauss-Kronrod rule integrates polynomials and smooth functions") {
  auto poly = integrate_adaptive([](double x) { return std::pow(x, 10); }, 0.0, 1.0, 1e-14);
  REQUIRE(std::abs(poly.value - 1.0 / 11.0) < 1e-15);

  auto gauss = integrate_adaptive([](double x) { return normal_pdf(x); }, -9.0, 9.0, 1e-13);
  REQUIRE(std::abs(gauss.value - 1.0) < 1e-13);

  auto sine = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12);
  REQUIRE(std::abs(sine.value - 2.0) < 1e-12);
  REQUIRE(sine.error < 1e-10);
}

TEST_CASE("normal_cdf matches the quadrature oracle") {
  for (double x : {-4.0, -1.3, -0.2, 0.0, 0.4307272992954576, 1.7, 3.9}) {
    REQUIRE(std::abs(normal_cdf(x) - cdf_oracle(x)) < 1e-13);
  }
  REQUIRE(normal_cdf(0.0) == 0.5);
  REQUIRE(std::abs(normal_sf(1.2) - (1.0 - normal_cdf(1.2))) < 1e-15);
}

TEST_CASE("normal_quantile inverts the CDF") {
  for (double p : {1e-12, 1e-6, 0.025, 0.4, 0.5, 0.6, 2.0 / 3.0, 0.975, 1.0 - 1e-9}) {
    const double x = normal_quantile(p);
    REQUIRE(std::abs(normal_cdf(x) - p) < 1e-14);
  }
  // Frozen values derived from the bisection oracle.
  REQUIRE(std::abs(quantile_oracle(0.6) - 0.2533471031357997) < 1e-10);
  REQUIRE(std::abs(normal_quantile(0.6) - 0.2533471031357997) < 1e-12);
  REQUIRE(std::abs(quantile_oracle(2.0 / 3.0) - 0.4307272992954576) < 1e-10);
  REQUIRE(std::abs(normal_quantile(2.0 / 3.0) - 0.4307272992954576) < 1e-12);
  REQUIRE_THROWS_AS(normal_quantile(0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
}

TEST_CASE("bivariate normal upper orthant") {
  SECTION("independence") {
    REQUIRE(std::abs(binormal_upper(0.3, -0.7, 0.0) - normal_sf(0.3) * normal_sf(-0.7)) < 1e-15);
  }
  SECTION("zero thresholds closed form") {
    for (double r : {-0.8, -0.5, -0.1, 0.2, 0.5, 0.9}) {
      const double expected = 0.25 + std::asin(r) / kTwoPi;
      REQUIRE(std::abs(binormal_upper(0.0, 0.0, r) - expected) < 1e-13);
    }
  }
  SECTION("against a 2-D quadrature oracle") {
    const auto oracle = [](double h, double k, double r) {
      return integrate_adaptive(
                 [&](double x) {
                   const double sd = std::sqrt(1.0 - r * r);
                   // P(Y > k | X = x) with Y | X ~ N(r x, 1 - r^2)
                   return normal_pdf(x) * normal_sf((k - r * x) / sd);
                 },
                 h, 9.5, 1e-13, 400)
          .value;
    };
    for (auto [h, k, r] : {std::tuple{0.5, -0.3, 0.5}, std::tuple{-1.2, 0.8, -0.6},
                           std::tuple{1.5, 1.1, 0.3}, std::tuple{0.0, 2.0, 0.85}}) {
      REQUIRE(std::abs(binormal_upper(h, k, r) - oracle(h, k, r)) < 1e-12);
    }
  }
  SECTION("symmetry in the arguments") {
    REQUIRE(std::abs(binormal_upper(0.4, -1.1, 0.35) - binormal_upper(-1.1, 0.4, 0.35)) < 1e-14);
  }
}

TEST_CASE("trivariate normal upper orthant") {
  SECTION("equicorrelated orthant closed form") {
    // Orthant probability: 1/8 + 3 asin(rho) / (4 pi).
    Eigen::Matrix3d S;
    const double rho = 0.5;
    S << 1, rho, rho, rho, 1, rho, rho, rho, 1;
    const double expected = 0.125 + 3.0 * std::asin(rho) / (4.0 * kPi);
    REQUIRE(std::abs(trinormal_upper(S, Eigen::Vector3d::Zero()) - expected) < 1e-11);
  }
  SECTION("against QMC") {
    Eigen::Matrix3d A;
    A << 1.0, 0.2, -0.1, 0.0, 0.8, 0.3, 0.0, 0.0, 0.6;
    Eigen::Matrix3d S = A * A.transpose();
    Eigen::Vector3d b(0.3, -0.2, 0.1);
    const auto ind = [&](const double* x) {
      Eigen::Vector3d g(x[0], x[1], x[2]);
      Eigen::Vector3d y = A * g;
      return (y.array() >= b.array()).all() ? 1.0 : 0.0;
    };
    QmcResult q = qmc_gaussian_mean(ind, 3, 11);
    REQUIRE(std::abs(trinormal_upper(S, b) - q.value) < std::max(q.error, 2e-4));
  }
}

TEST_CASE("QMC Gaussian means with replicate error estimates") {
  QmcResult second_moment = qmc_gaussian_mean([](const double* x) { return x[0] * x[0]; }, 2, 3);
  REQUIRE(std::abs(second_moment.value - 1.0) < std::max(second_moment.error, 1e-3));

  const double c = 0.7;
  QmcResult tail = qmc_gaussian_mean([&](const double* x) { return x[0] <= c ? 1.0 : 0.0; }, 1, 5);
  REQUIRE(std::abs(tail.value - normal_cdf(c)) < std::max(tail.error, 2e-4));

  // Reproducibility for a fixed seed.
  QmcResult again = qmc_gaussian_mean([&](const double* x) { return x[0] <= c ? 1.0 : 0.0; }, 1, 5);
  REQUIRE(tail.value == again.value);
}

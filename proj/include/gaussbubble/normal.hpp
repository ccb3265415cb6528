#pragma once

#include "gaussbubble/common.hpp"
#include "gaussbubble/quadrature.hpp"

#include <cmath>

namespace gbb {

/// Standard normal density.
inline double normal_pdf(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

/// Standard normal CDF via erfc; accurate to a few ulp over the full range.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Upper tail P(X > x).
inline double normal_sf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

/// Inverse standard normal CDF.
///
/// Initial guess from Abramowitz & Stegun 26.2.22 (|error| < 3e-4),
/// then Newton iterations on normal_cdf until the step is below
/// 1e-15 * (1 + |x|).
inline double normal_quantile(double p) {
  require(p > 0.0 && p < 1.0, "normal_quantile: p must be in (0,1)");
  const double q = std::min(p, 1.0 - p);
  const double t = std::sqrt(-2.0 * std::log(q));
  double x = t - (2.30753 + 0.27061 * t) / (1.0 + 0.99229 * t + 0.04481 * t * t);
  if (p < 0.5) x = -x;
  for (int it = 0; it < 10; ++it) {
    const double err = normal_cdf(x) - p;
    const double d = err / std::max(normal_pdf(x), 1e-300);
    x -= d;
    if (std::abs(d) <= 1e-15 * (1.0 + std::abs(x))) break;
  }
  return x;
}

/// Bivariate standard normal density with correlation r.
inline double binormal_pdf(double h, double k, double r) {
  const double omr2 = (1.0 - r) * (1.0 + r);
  return std::exp(-0.5 * (h * h - 2.0 * r * h * k + k * k) / omr2) /
         (kTwoPi * std::sqrt(omr2));
}

/// Upper orthant probability P(X > h, Y > k) for standard bivariate normal
/// with correlation r.
///
/// For |r| <= 0.925 this is the Drezner-Wesolowsky single integral
///   P = Phi(-h) Phi(-k)
///       + (2 pi)^{-1} int_0^{asin r} exp(-(h^2 + k^2 - 2 h k sin t)
///                                        / (2 cos^2 t)) dt
/// evaluated with fixed 24-point Gauss-Legendre (error well below 1e-14;
/// every correlation arising from regular-simplex cone geometry is <= 0.5).
/// Larger |r| falls back to Plackett's identity d/dr P = binormal_pdf
/// integrated adaptively from r = 0.
inline double binormal_upper(double h, double k, double r) {
  require(std::abs(r) < 1.0, "binormal_upper: |r| must be < 1");
  double p = normal_sf(h) * normal_sf(k);
  if (r != 0.0 && std::abs(r) <= 0.925) {
    const double asr = std::asin(r);
    const double hk2 = 0.5 * (h * h + k * k);
    p += integrate_gl(
             [&](double t) {
               const double sn = std::sin(t);
               const double cs2 = std::cos(t) * std::cos(t);
               return std::exp((sn * h * k - hk2) / cs2);
             },
             0.0, asr, 24) /
         kTwoPi;
  } else if (r != 0.0) {
    p += integrate_adaptive([&](double s) { return binormal_pdf(h, k, s); }, 0.0, r,
                            1e-14, 400)
             .value;
  }
  return std::min(1.0, std::max(0.0, p));
}

/// Quasi-Monte Carlo mean of f(x) over x ~ N(0, I_dim).  Uses 2^log2_points
/// Halton points per replicate mapped through the normal quantile; the error
/// estimate is 3 standard errors of the replicate means.
template <typename F>
inline QmcResult qmc_gaussian_mean(const F& f, int dim, std::uint64_t seed,
                                   int log2_points = 16, int replicates = 8) {
  require(replicates >= 2, "qmc_gaussian_mean: need at least 2 replicates");
  const std::uint64_t n = std::uint64_t{1} << log2_points;
  std::vector<double> means;
  means.reserve(replicates);
  std::vector<double> u(dim), x(dim);
  for (int rep = 0; rep < replicates; ++rep) {
    HaltonSequence seq(dim, seed * 1000003u + static_cast<std::uint64_t>(rep));
    double acc = 0.0;
    for (std::uint64_t k = 0; k < n; ++k) {
      seq.point(k, u.data());
      for (int d = 0; d < dim; ++d) x[d] = normal_quantile(u[d]);
      acc += f(x.data());
    }
    means.push_back(acc / static_cast<double>(n));
  }
  double mean = 0.0;
  for (double m : means) mean += m;
  mean /= replicates;
  double var = 0.0;
  for (double m : means) var += (m - mean) * (m - mean);
  var /= (replicates - 1);
  QmcResult r;
  r.value = mean;
  r.error = 3.0 * std::sqrt(var / replicates);
  return r;
}

/// Upper orthant probability P(Y_1 >= b_1, Y_2 >= b_2, Y_3 >= b_3) for a
/// centered trivariate normal with SPD covariance S.  Conditions on Y_1 and
/// integrates the conditional bivariate tail with adaptive quadrature.
inline double trinormal_upper(const Eigen::Matrix3d& S, const Eigen::Vector3d& b,
                              double tol = 1e-12) {
  const double s1 = std::sqrt(S(0, 0));
  require(s1 > 0.0, "trinormal_upper: S must be positive definite");
  // Conditional covariance of (Y_2, Y_3) given Y_1.
  const double c22 = S(1, 1) - S(0, 1) * S(0, 1) / S(0, 0);
  const double c33 = S(2, 2) - S(0, 2) * S(0, 2) / S(0, 0);
  const double c23 = S(1, 2) - S(0, 1) * S(0, 2) / S(0, 0);
  require(c22 > 0.0 && c33 > 0.0, "trinormal_upper: S must be positive definite");
  const double rho = c23 / std::sqrt(c22 * c33);
  const double sd2 = std::sqrt(c22), sd3 = std::sqrt(c33);

  const auto integrand = [&](double u) {
    const double t = s1 * u;  // value of Y_1
    const double m2 = S(0, 1) / S(0, 0) * t;
    const double m3 = S(0, 2) / S(0, 0) * t;
    return normal_pdf(u) * binormal_upper((b(1) - m2) / sd2, (b(2) - m3) / sd3, rho);
  };
  const double lo = b(0) / s1;
  const double hi = std::max(lo, 0.0) + 9.0;
  if (lo >= hi) return 0.0;
  return integrate_adaptive(integrand, lo, hi, tol, 200).value;
}

}  // namespace gbb

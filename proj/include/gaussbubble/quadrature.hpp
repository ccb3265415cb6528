#pragma once

#include "gaussbubble/common.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>

namespace gbb {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // absolute error estimate
};

namespace detail {

// 15-point Gauss-Kronrod pair (QUADPACK dqk15 constants).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
inline QuadResult gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kGK15WeightsK[7] * fc;
  double resg = kGK15WeightsG[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kGK15Nodes[j];
    const double fsum = f(c - x) + f(c + x);
    resk += kGK15WeightsK[j] * fsum;
    if (j % 2 == 1) resg += kGK15WeightsG[j / 2] * fsum;
  }
  QuadResult r;
  r.value = resk * h;
  r.error = std::abs((resk - resg) * h);
  return r;
}

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace detail

/// Globally adaptive 1-D quadrature (Gauss-Kronrod 15, largest-error-first
/// bisection) to absolute tolerance `tol`.
template <typename F>
inline QuadResult integrate_adaptive(const F& f, double a, double b,
                                     double tol = 1e-10, int max_panels = 2000) {
  QuadResult whole = detail::gk15(f, a, b);
  if (whole.error <= tol || a == b) return whole;
  std::priority_queue<detail::Panel> q;
  q.push({a, b, whole.value, whole.error});
  double total_value = whole.value;
  double total_error = whole.error;
  int panels = 1;
  while (total_error > tol && panels < max_panels) {
    detail::Panel p = q.top();
    q.pop();
    const double mid = 0.5 * (p.a + p.b);
    QuadResult left = detail::gk15(f, p.a, mid);
    QuadResult right = detail::gk15(f, mid, p.b);
    total_value += left.value + right.value - p.value;
    total_error += left.error + right.error - p.error;
    q.push({p.a, mid, left.value, left.error});
    q.push({mid, p.b, right.value, right.error});
    ++panels;
  }
  return {total_value, std::max(total_error, 0.0)};
}

/// Gauss-Legendre nodes and weights on [-1, 1], computed once by Newton
/// iteration on the Legendre recurrence (machine precision for n <= 64).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline const GaussLegendre& gauss_legendre(int n) {
  static std::vector<GaussLegendre> cache(65);
  GaussLegendre& gl = cache.at(static_cast<size_t>(n));
  if (gl.nodes.empty()) {
    GaussLegendre fresh;
    fresh.nodes.resize(static_cast<size_t>(n));
    fresh.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      fresh.nodes[static_cast<size_t>(i)] = x;
      fresh.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    gl = std::move(fresh);
  }
  return gl;
}

/// Fixed-order Gauss-Legendre integral over [a, b].
template <typename F>
inline double integrate_gl(const F& f, double a, double b, int order = 24) {
  const GaussLegendre& gl = gauss_legendre(order);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double acc = 0.0;
  for (size_t i = 0; i < gl.nodes.size(); ++i)
    acc += gl.weights[i] * f(c + h * gl.nodes[i]);
  return acc * h;
}

/// Halton low-discrepancy sequence with Cranley-Patterson rotation.
/// Replicate seeds make randomized error estimates reproducible.
class HaltonSequence {
 public:
  HaltonSequence(int dim, std::uint64_t seed) : dim_(dim), shift_(dim) {
    require(dim >= 1 && dim <= 6, "HaltonSequence: dim must be in [1,6]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int d = 0; d < dim_; ++d) shift_[d] = unif(rng);
  }

  // Point k (k >= 0) of the rotated sequence; component d in (0,1).
  void point(std::uint64_t k, double* out) const {
    static constexpr int primes[6] = {2, 3, 5, 7, 11, 13};
    for (int d = 0; d < dim_; ++d) {
      double u = radical_inverse(k + 1, primes[d]) + shift_[d];
      if (u >= 1.0) u -= 1.0;
      out[d] = std::min(std::max(u, 1e-15), 1.0 - 1e-15);
    }
  }

  int dim() const { return dim_; }

 private:
  static double radical_inverse(std::uint64_t k, int base) {
    double inv = 1.0 / base, f = inv, r = 0.0;
    while (k > 0) {
      r += f * static_cast<double>(k % base);
      k /= base;
      f *= inv;
    }
    return r;
  }

  int dim_;
  std::vector<double> shift_;
};

struct QmcResult {
  double value = 0.0;
  double error = 0.0;
};

}  // namespace gbb

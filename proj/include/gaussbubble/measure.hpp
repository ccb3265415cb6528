#pragma once

#include "gaussbubble/geometry.hpp"
#include "gaussbubble/normal.hpp"
#include "gaussbubble/quadrature.hpp"

#include <cmath>
#include <memory>
#include <utility>
#include <vector>

namespace gbb {

enum class MeasureMethod { ClosedForm, AdaptiveQuadrature, Qmc };

enum class MeasureRoute { Auto, ClosedForm, Quadrature, Qmc };

struct MeasureResult {
  double value = 0.0;
  double abs_error_bound = 0.0;
  MeasureMethod method = MeasureMethod::ClosedForm;
};

struct VectorResult {
  Vector value;
  Vector error;
};

enum class RegionKind { HalfSpace, SimplicialSector, IntervalUnion1D, Polygon2D, ProductWithRk };

/// A region of R^d whose Gaussian volume and barycenter can be evaluated.
struct Region {
  RegionKind kind = RegionKind::HalfSpace;
  int dim = 0;

  // HalfSpace: { x : <normal, x> <= offset }, |normal| = 1.
  Vector normal;
  double offset = 0.0;

  // SimplicialSector: sector `index` (1-based) of `partition`.
  SimplicialPartition partition;
  int index = 0;

  // IntervalUnion1D: disjoint ordered intervals (may reach +-inf).
  std::vector<std::pair<double, double>> intervals;

  // Polygon2D: simple polygon, counterclockwise vertex order.
  std::vector<Vec2> polygon;

  // ProductWithRk: base region times R^extra.
  std::shared_ptr<const Region> base;
  int extra = 0;
};

inline Region half_space_region(const Vector& normal, double offset) {
  Region r;
  r.kind = RegionKind::HalfSpace;
  r.dim = static_cast<int>(normal.size());
  require(std::abs(normal.norm() - 1.0) <= 1e-12, "half_space_region: normal must be unit");
  r.normal = normal;
  r.offset = offset;
  return r;
}

inline Region sector_region(const SimplicialPartition& p, int index) {
  require(index >= 1 && index <= p.m(), "sector_region: index out of range");
  Region r;
  r.kind = RegionKind::SimplicialSector;
  r.dim = p.dim();
  r.partition = p;
  r.index = index;
  if (p.ambient_extra > 0) {
    Region outer;
    outer.kind = RegionKind::ProductWithRk;
    outer.dim = p.ambient_dim();
    SimplicialPartition flat = p;
    flat.ambient_extra = 0;
    Region inner = sector_region(flat, index);
    outer.base = std::make_shared<Region>(std::move(inner));
    outer.extra = p.ambient_extra;
    return outer;
  }
  return r;
}

inline Region interval_union_region(std::vector<std::pair<double, double>> intervals) {
  Region r;
  r.kind = RegionKind::IntervalUnion1D;
  r.dim = 1;
  double prev = -std::numeric_limits<double>::infinity();
  for (const auto& [lo, hi] : intervals) {
    require(lo < hi && lo >= prev, "interval_union_region: intervals must be ordered and disjoint");
    prev = hi;
  }
  r.intervals = std::move(intervals);
  return r;
}

inline Region polygon_region(std::vector<Vec2> vertices) {
  require(vertices.size() >= 3, "polygon_region: need at least 3 vertices");
  double twice_area = 0.0;
  const size_t n = vertices.size();
  for (size_t k = 0; k < n; ++k) {
    const Vec2& a = vertices[k];
    const Vec2& b = vertices[(k + 1) % n];
    require((b - a).norm() > 0.0, "polygon_region: repeated consecutive vertices");
    twice_area += a.x() * b.y() - a.y() * b.x();
  }
  require(twice_area > 0.0, "polygon_region: vertices must be counterclockwise");
  Region r;
  r.kind = RegionKind::Polygon2D;
  r.dim = 2;
  r.polygon = std::move(vertices);
  return r;
}

inline Region product_region(Region base, int extra) {
  require(extra >= 1, "product_region: extra must be >= 1");
  Region r;
  r.kind = RegionKind::ProductWithRk;
  r.dim = base.dim + extra;
  r.extra = extra;
  r.base = std::make_shared<Region>(std::move(base));
  return r;
}

namespace detail {

// int_0^inf r e^{-(r+c)^2/2} dr, scaled by e^{c^2/2}:
//   e^{c^2/2} * [e^{-c^2/2} - c sqrt(2 pi) Phi(-c)]
// computed without overflow as 1 - sqrt(2 pi) c e^{c^2/2} Phi(-c) paired with
// the outer weight; helpers below keep the outer e^{-|q|^2/2} attached.

// Angular integrand for the Gaussian volume of a polar wedge with apex q:
//   d(vol)/d(theta) = (2 pi)^{-1} [ e^{-|q|^2/2} - sqrt(2 pi) c e^{(c^2-|q|^2)/2} Phi(-c) ]
// with c = <q, u(theta)>.  Note c^2 <= |q|^2, so no overflow.
inline double sector2d_vol_integrand(const Vec2& q, double q2, double ct, double st) {
  const double c = q.x() * ct + q.y() * st;
  const double scaled_tail = std::exp(0.5 * (c * c - q2)) * normal_sf(c);
  return (std::exp(-0.5 * q2) - kSqrt2Pi * c * scaled_tail) / kTwoPi;
}

// Angular integrand of the radial first moment (used for barycenters):
//   (2 pi)^{-1} [ sqrt(2 pi)(1+c^2) e^{(c^2-|q|^2)/2} Phi(-c) - c e^{-|q|^2/2} ]
inline double sector2d_moment_integrand(const Vec2& q, double q2, double ct, double st) {
  const double c = q.x() * ct + q.y() * st;
  const double scaled_tail = std::exp(0.5 * (c * c - q2)) * normal_sf(c);
  return (kSqrt2Pi * (1.0 + c * c) * scaled_tail - c * std::exp(-0.5 * q2)) / kTwoPi;
}

/// Gaussian measure of the polar wedge {q + r u(theta) : r >= 0,
/// theta in [a, b]} in R^2, by adaptive quadrature over the angle with the
/// radial integral in closed form.
inline QuadResult sector2d_volume(const Vec2& q, double a, double b, double tol = 1e-12) {
  const double q2 = q.squaredNorm();
  return integrate_adaptive(
      [&](double th) { return sector2d_vol_integrand(q, q2, std::cos(th), std::sin(th)); }, a, b,
      tol, 400);
}

/// First moment int_sector x dgamma relative to the apex contribution:
/// returns M with  int_sector x dgamma = q * vol + M.
inline Vec2 sector2d_first_moment(const Vec2& q, double a, double b, double* err,
                                  double tol = 1e-12) {
  const double q2 = q.squaredNorm();
  QuadResult mx = integrate_adaptive(
      [&](double th) {
        const double ct = std::cos(th), st = std::sin(th);
        return ct * sector2d_moment_integrand(q, q2, ct, st);
      },
      a, b, tol, 400);
  QuadResult my = integrate_adaptive(
      [&](double th) {
        const double ct = std::cos(th), st = std::sin(th);
        return st * sector2d_moment_integrand(q, q2, ct, st);
      },
      a, b, tol, 400);
  if (err) *err = mx.error + my.error;
  return Vec2(mx.value, my.value);
}

// Flux field for 2-D Gaussian area via the divergence theorem:
//   W(x) = x (1 - e^{-|x|^2/2}) / (2 pi |x|^2),  div W = gamma_2.
// Continuous at the origin with W(0) = 0.
inline Vec2 gauss_area_field(const Vec2& x) {
  const double r2 = x.squaredNorm();
  double factor;
  if (r2 < 1e-8) {
    factor = (0.5 - r2 / 8.0) / kTwoPi;
  } else {
    factor = -std::expm1(-0.5 * r2) / (kTwoPi * r2);
  }
  return factor * x;
}

/// gamma_1 measure of the segment {p + s u : s in [s_lo, s_hi]} in R^2
/// (u unit; s_hi may be +inf, s_lo may be -inf).
inline double segment_gamma1(const Vec2& p, const Vec2& u, double s_lo, double s_hi) {
  const double a = p.dot(u);
  const double c2 = p.squaredNorm() - a * a;
  const double lo = std::isinf(s_lo) ? -std::numeric_limits<double>::infinity() : s_lo + a;
  const double hi = std::isinf(s_hi) ? std::numeric_limits<double>::infinity() : s_hi + a;
  const double phi_lo = std::isinf(lo) ? 0.0 : normal_cdf(lo);
  const double phi_hi = std::isinf(hi) ? 1.0 : normal_cdf(hi);
  return std::exp(-0.5 * std::max(c2, 0.0)) * (phi_hi - phi_lo);
}

inline Eigen::MatrixXd sector_face_normal_rows(const SimplexDirections& dirs, int index) {
  const int m = dirs.m;
  Eigen::MatrixXd w(m - 1, dirs.dim);
  int r = 0;
  for (int j = 1; j <= m; ++j) {
    if (j == index) continue;
    w.row(r++) = (dirs.z(index) - dirs.z(j)).transpose();
  }
  return w;
}

}  // namespace detail

inline MeasureResult gaussian_volume(const Region& r, MeasureRoute route = MeasureRoute::Auto,
                                     std::uint64_t seed = 0);
inline MeasureResult interface_measure(const InterfacePiece& piece,
                                       MeasureRoute route = MeasureRoute::Auto);

namespace detail {

inline MeasureResult sector_volume(const SimplicialPartition& p, int index, MeasureRoute route,
                                   std::uint64_t seed) {
  const int d = p.dim();
  MeasureResult res;
  if (route == MeasureRoute::Qmc) {
    const auto ind = [&](const double* x) {
      Vector v = Eigen::Map<const Vector>(x, d);
      return sector_of(v, p) == index ? 1.0 : 0.0;
    };
    QmcResult q = qmc_gaussian_mean(ind, d, seed);
    res.value = q.value;
    res.abs_error_bound = q.error;
    res.method = MeasureMethod::Qmc;
    return res;
  }
  if (d == 1) {
    // Two half-lines split at the shift point.
    const double y = p.shift(0);
    const double zi = p.directions.z(index)(0);
    res.value = zi > 0.0 ? normal_sf(y) : normal_cdf(y);
    res.abs_error_bound = 1e-15;
    res.method = MeasureMethod::ClosedForm;
    return res;
  }
  if (d == 2) {
    // Polar wedge around the direction z_index with apex at the shift.
    const Vec2 zi(p.directions.z(index)(0), p.directions.z(index)(1));
    const double mid = std::atan2(zi.y(), zi.x());
    const double half = kPi / static_cast<double>(p.m());
    const Vec2 q(p.shift(0), p.shift(1));
    if (route == MeasureRoute::ClosedForm) {
      // Alternative route: bivariate normal orthant probability.
      Eigen::MatrixXd w = sector_face_normal_rows(p.directions, index);
      const double n1 = w.row(0).norm(), n2 = w.row(1).norm();
      const double rho = w.row(0).dot(w.row(1)) / (n1 * n2);
      const double b1 = w.row(0).dot(p.shift) / n1;
      const double b2 = w.row(1).dot(p.shift) / n2;
      res.value = binormal_upper(b1, b2, rho);
      res.abs_error_bound = 1e-13;
      res.method = MeasureMethod::AdaptiveQuadrature;
      return res;
    }
    QuadResult qr = sector2d_volume(q, mid - half, mid + half);
    res.value = qr.value;
    res.abs_error_bound = qr.error + 1e-15;
    res.method = MeasureMethod::AdaptiveQuadrature;
    return res;
  }
  if (d == 3) {
    Eigen::MatrixXd w = sector_face_normal_rows(p.directions, index);
    Eigen::Matrix3d S = (w * w.transpose());
    Eigen::Vector3d b = w * p.shift;
    res.value = trinormal_upper(S, b);
    res.abs_error_bound = 1e-10;
    res.method = MeasureMethod::AdaptiveQuadrature;
    return res;
  }
  throw unsupported_error("gaussian_volume: simplicial sectors supported for m <= 4");
}

inline MeasureResult polygon_volume(const std::vector<Vec2>& poly, double tol = 1e-11) {
  double total = 0.0, err = 0.0;
  const size_t n = poly.size();
  for (size_t k = 0; k < n; ++k) {
    const Vec2 a = poly[k];
    const Vec2 b = poly[(k + 1) % n];
    const Vec2 t = b - a;
    const double len = t.norm();
    const Vec2 nrm(t.y() / len, -t.x() / len);  // outward for ccw orientation
    QuadResult q = integrate_adaptive(
        [&](double s) {
          const Vec2 x = a + s * t;
          return gauss_area_field(x).dot(nrm) * len;
        },
        0.0, 1.0, tol / static_cast<double>(n), 400);
    total += q.value;
    err += q.error;
  }
  return {total, err + 1e-15, MeasureMethod::AdaptiveQuadrature};
}

}  // namespace detail

/// Gaussian volume of a region.  Closed forms where available, otherwise
/// adaptive quadrature; `route` can force an alternative evaluation path.
inline MeasureResult gaussian_volume(const Region& r, MeasureRoute route, std::uint64_t seed) {
  switch (r.kind) {
    case RegionKind::HalfSpace: {
      if (route == MeasureRoute::Quadrature) {
        const double hi = std::min(r.offset, 9.0);
        QuadResult q{0.0, 0.0};
        if (hi > -9.0) q = integrate_adaptive([](double t) { return normal_pdf(t); }, -9.0, hi, 1e-13, 200);
        return {q.value, q.error + 1.2e-19, MeasureMethod::AdaptiveQuadrature};
      }
      return {normal_cdf(r.offset), 1e-15, MeasureMethod::ClosedForm};
    }
    case RegionKind::SimplicialSector:
      return detail::sector_volume(r.partition, r.index, route, seed);
    case RegionKind::IntervalUnion1D: {
      double v = 0.0;
      for (const auto& [lo, hi] : r.intervals) {
        const double plo = std::isinf(lo) ? 0.0 : normal_cdf(lo);
        const double phi = std::isinf(hi) ? 1.0 : normal_cdf(hi);
        v += phi - plo;
      }
      return {v, 1e-15 * static_cast<double>(r.intervals.size() + 1), MeasureMethod::ClosedForm};
    }
    case RegionKind::Polygon2D: {
      if (route == MeasureRoute::Qmc) {
        const auto ind = [&](const double* x) {
          // winding-free point-in-polygon via crossing count
          const Vec2 pt(x[0], x[1]);
          bool inside = false;
          const size_t n = r.polygon.size();
          for (size_t k = 0; k < n; ++k) {
            const Vec2& a = r.polygon[k];
            const Vec2& b = r.polygon[(k + 1) % n];
            if ((a.y() > pt.y()) != (b.y() > pt.y())) {
              const double xc = a.x() + (pt.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
              if (pt.x() < xc) inside = !inside;
            }
          }
          return inside ? 1.0 : 0.0;
        };
        QmcResult q = qmc_gaussian_mean(ind, 2, seed);
        return {q.value, q.error, MeasureMethod::Qmc};
      }
      return detail::polygon_volume(r.polygon);
    }
    case RegionKind::ProductWithRk:
      // Gaussian measure factorizes; each trailing factor contributes 1.
      return gaussian_volume(*r.base, route, seed);
  }
  throw std::invalid_argument("gaussian_volume: unknown region kind");
}

/// Gaussian barycenter int_r x dgamma_d with per-component error bounds.
inline VectorResult barycenter(const Region& r) {
  VectorResult out;
  switch (r.kind) {
    case RegionKind::HalfSpace: {
      out.value = -normal_pdf(r.offset) * r.normal;
      out.error = Vector::Constant(r.dim, 1e-15);
      return out;
    }
    case RegionKind::SimplicialSector: {
      const SimplicialPartition& p = r.partition;
      const int d = p.dim();
      if (d == 1) {
        const double y = p.shift(0);
        const double zi = p.directions.z(r.index)(0);
        out.value = Vector::Constant(1, zi > 0.0 ? normal_pdf(y) : -normal_pdf(y));
        out.error = Vector::Constant(1, 1e-15);
        return out;
      }
      if (d == 2) {
        const Vec2 zi(p.directions.z(r.index)(0), p.directions.z(r.index)(1));
        const double mid = std::atan2(zi.y(), zi.x());
        const double half = kPi / static_cast<double>(p.m());
        const Vec2 q(p.shift(0), p.shift(1));
        QuadResult vol = detail::sector2d_volume(q, mid - half, mid + half);
        double merr = 0.0;
        Vec2 mom = detail::sector2d_first_moment(q, mid - half, mid + half, &merr);
        out.value = Vector(2);
        out.value << q.x() * vol.value + mom.x(), q.y() * vol.value + mom.y();
        out.error = Vector::Constant(2, merr + vol.error * q.norm() + 1e-15);
        return out;
      }
      if (d == 3) {
        // Divergence theorem: int_Omega x_k dgamma_d equals the flux of
        // -gamma_d e_k through the boundary, i.e. minus the sum over faces of
        // n_out,k (2 pi)^{-1/2} gamma_{d-1}(face).
        SimplicialPartition flat = p;
        flat.ambient_extra = 0;
        out.value = Vector::Zero(3);
        double err = 0.0;
        for (const InterfacePiece& piece : interfaces_of(flat)) {
          if (piece.label_i != r.index && piece.label_j != r.index) continue;
          MeasureResult face = interface_measure(piece);
          Vector n_out = (piece.label_i == r.index) ? piece.normal : Vector(-piece.normal);
          out.value -= n_out * face.value / kSqrt2Pi;
          err += face.abs_error_bound / kSqrt2Pi;
        }
        out.error = Vector::Constant(3, err + 1e-15);
        return out;
      }
      throw unsupported_error("barycenter: simplicial sectors supported for m <= 4");
    }
    case RegionKind::IntervalUnion1D: {
      double v = 0.0;
      for (const auto& [lo, hi] : r.intervals) {
        const double plo = std::isinf(lo) ? 0.0 : normal_pdf(lo);
        const double phi = std::isinf(hi) ? 0.0 : normal_pdf(hi);
        v += plo - phi;
      }
      out.value = Vector::Constant(1, v);
      out.error = Vector::Constant(1, 1e-15 * static_cast<double>(r.intervals.size() + 1));
      return out;
    }
    case RegionKind::Polygon2D: {
      // int_poly x_k dgamma_2 = -sum_segments n_k int_seg gamma_2 ds, and the
      // segment integral of gamma_2 is (2 pi)^{-1/2} times its gamma_1 measure.
      out.value = Vector::Zero(2);
      const size_t n = r.polygon.size();
      for (size_t k = 0; k < n; ++k) {
        const Vec2 a = r.polygon[k];
        const Vec2 b = r.polygon[(k + 1) % n];
        Vec2 t = b - a;
        const double len = t.norm();
        t /= len;
        const Vec2 nrm(t.y(), -t.x());
        const double seg = detail::segment_gamma1(a, t, 0.0, len);
        out.value(0) -= nrm.x() * seg / kSqrt2Pi;
        out.value(1) -= nrm.y() * seg / kSqrt2Pi;
      }
      out.error = Vector::Constant(2, 1e-14 * static_cast<double>(n));
      return out;
    }
    case RegionKind::ProductWithRk: {
      VectorResult base = barycenter(*r.base);
      out.value = Vector::Zero(r.dim);
      out.error = Vector::Zero(r.dim);
      out.value.head(base.value.size()) = base.value;
      out.error.head(base.error.size()) = base.error;
      return out;
    }
  }
  throw std::invalid_argument("barycenter: unknown region kind");
}

/// Weighted (codimension-1) Gaussian measure of an interface piece:
/// the integral of gamma_{d-1}(x) over the piece, x ambient.
inline MeasureResult interface_measure(const InterfacePiece& piece, MeasureRoute route) {
  switch (piece.kind) {
    case PieceKind::Hyperplane:
    case PieceKind::HalfSpaceBoundary: {
      const double t = piece.point.dot(piece.normal);
      if (route == MeasureRoute::Quadrature && piece.point.size() == 2) {
        // Direct line integral in the plane.
        const Vec2 p(piece.point(0), piece.point(1));
        const Vec2 n(piece.normal(0), piece.normal(1));
        const Vec2 u(-n.y(), n.x());
        const Vec2 foot = t * n;
        QuadResult q = integrate_adaptive(
            [&](double s) {
              const Vec2 x = foot + s * u;
              return std::exp(-0.5 * x.squaredNorm()) / kSqrt2Pi;
            },
            -9.0, 9.0, 1e-13, 200);
        return {q.value, q.error + 1.2e-19, MeasureMethod::AdaptiveQuadrature};
      }
      return {std::exp(-0.5 * t * t), 1e-15, MeasureMethod::ClosedForm};
    }
    case PieceKind::Segment:
    case PieceKind::Ray: {
      require(piece.point.size() == 2, "interface_measure: segments/rays live in R^2");
      const Vec2 p(piece.point(0), piece.point(1));
      const Vec2 u(piece.frame.at(0)(0), piece.frame.at(0)(1));
      if (route == MeasureRoute::Quadrature) {
        const double a = p.dot(u);
        const double lo = std::max(piece.extent_lo, -9.0 - a);
        const double hi = std::min(piece.extent_hi, 9.0 - a);
        QuadResult q{0.0, 0.0};
        if (hi > lo)
          q = integrate_adaptive(
              [&](double s) {
                const Vec2 x = p + s * u;
                return std::exp(-0.5 * x.squaredNorm()) / kSqrt2Pi;
              },
              lo, hi, 1e-13, 200);
        return {q.value, q.error + 1.2e-19, MeasureMethod::AdaptiveQuadrature};
      }
      return {detail::segment_gamma1(p, u, piece.extent_lo, piece.extent_hi), 1e-15,
              MeasureMethod::ClosedForm};
    }
    case PieceKind::Wedge2DInPlane: {
      require(piece.point.size() == 3, "interface_measure: wedges live in R^3");
      const Vector& apex = piece.point;
      const Vector& u = piece.frame.at(0);
      const Vector& v = piece.frame.at(1);
      const double cu = apex.dot(u), cv = apex.dot(v);
      Vector perp = apex - cu * u - cv * v;
      const double w_perp = std::exp(-0.5 * perp.squaredNorm());
      const Vec2 q2(cu, cv);  // in-plane apex offset
      if (route == MeasureRoute::Quadrature) {
        // Full 2-D polar quadrature in the wedge plane.
        const double q2n = q2.squaredNorm();
        QuadResult qr = integrate_adaptive(
            [&](double th) {
              const double c = q2.x() * std::cos(th) + q2.y() * std::sin(th);
              QuadResult inner = integrate_adaptive(
                  [&](double rr) { return rr * std::exp(-0.5 * (q2n + 2.0 * rr * c + rr * rr)); },
                  0.0, kTruncationRadius + std::abs(c), 1e-13, 120);
              return inner.value / kTwoPi;
            },
            piece.extent_lo, piece.extent_hi, 1e-11, 200);
        return {w_perp * qr.value, qr.error + 1e-14, MeasureMethod::AdaptiveQuadrature};
      }
      QuadResult qr = detail::sector2d_volume(q2, piece.extent_lo, piece.extent_hi);
      return {w_perp * qr.value, qr.error + 1e-15, MeasureMethod::AdaptiveQuadrature};
    }
  }
  throw std::invalid_argument("interface_measure: unknown piece kind");
}

struct RankReport {
  int rank = 0;
  Matrix barycenters;       // m x d
  Vector singular_values;   // min(m, d) values, descending
  double volume_sum = 0.0;
};

/// Numerical rank of the m x d matrix of Gaussian barycenters of a
/// partition.  Singular values above `tolerance` times the largest count
/// toward the rank.  Throws if the regions do not sum to full measure.
inline RankReport barycenter_rank_report(const std::vector<Region>& regions, double tolerance) {
  require(!regions.empty(), "barycenter_rank: empty region list");
  require(tolerance > 0.0, "barycenter_rank: tolerance must be positive");
  int d = 0;
  for (const Region& r : regions) d = std::max(d, r.dim);
  double vol_sum = 0.0, vol_err = 0.0;
  Matrix B = Matrix::Zero(static_cast<Eigen::Index>(regions.size()), d);
  for (size_t i = 0; i < regions.size(); ++i) {
    MeasureResult mv = gaussian_volume(regions[i]);
    vol_sum += mv.value;
    vol_err += mv.abs_error_bound;
    VectorResult b = barycenter(regions[i]);
    B.row(static_cast<Eigen::Index>(i)).head(b.value.size()) = b.value.transpose();
  }
  if (std::abs(vol_sum - 1.0) > std::max(tolerance, vol_err + 1e-12))
    throw structural_violation("barycenter_rank: regions do not partition (volume sum " +
                               std::to_string(vol_sum) + ")");
  Eigen::JacobiSVD<Matrix> svd(B);
  RankReport rep;
  rep.barycenters = B;
  rep.singular_values = svd.singularValues();
  rep.volume_sum = vol_sum;
  const double smax = rep.singular_values.size() > 0 ? rep.singular_values(0) : 0.0;
  for (Eigen::Index k = 0; k < rep.singular_values.size(); ++k)
    if (rep.singular_values(k) > tolerance * smax) ++rep.rank;
  return rep;
}

inline int barycenter_rank(const std::vector<Region>& regions, double tolerance) {
  return barycenter_rank_report(regions, tolerance).rank;
}

}  // namespace gbb

#pragma once

#include "gaussbubble/common.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace gbb {

/// Directions z_1..z_m in R^{m-1}: unit vectors pointing at the vertices of
/// a regular simplex centered at the origin, so that <z_i, z_j> = -1/(m-1)
/// for i != j and sum_i z_i = 0.
struct SimplexDirections {
  int m = 0;
  int dim = 0;                  // ambient dimension m-1
  std::vector<Vector> vectors;  // m unit vectors in R^{m-1}

  const Vector& z(int i) const { return vectors.at(static_cast<size_t>(i - 1)); }
};

/// Canonical regular-simplex vertex directions.
///
/// Construction is an iterative triangular embedding: z_1 = e_1, and each
/// later vector fixes its first i-1 coordinates from the pairwise inner
/// products against the previous vectors, then completes to unit norm on the
/// next axis.  Deterministic; any other regular simplex is a rotation of it.
inline SimplexDirections regular_simplex_vertices(int m) {
  require(m >= 2, "regular_simplex_vertices: m must be >= 2");
  const int d = m - 1;
  const double dot = -1.0 / static_cast<double>(m - 1);
  std::vector<Vector> z(static_cast<size_t>(m), Vector::Zero(d));
  z[0](0) = 1.0;
  for (int i = 1; i < m; ++i) {
    for (int k = 0; k < std::min(i, d); ++k) {
      double acc = 0.0;
      for (int j = 0; j < k; ++j) acc += z[static_cast<size_t>(i)](j) * z[static_cast<size_t>(k)](j);
      z[static_cast<size_t>(i)](k) = (dot - acc) / z[static_cast<size_t>(k)](k);
    }
    if (i < d) {
      const double s = 1.0 - z[static_cast<size_t>(i)].squaredNorm();
      z[static_cast<size_t>(i)](i) = std::sqrt(std::max(s, 0.0));
    }
  }
  SimplexDirections out;
  out.m = m;
  out.dim = d;
  out.vectors = std::move(z);
  return out;
}

/// A shifted simplicial-cone partition of R^{m-1} (optionally times a
/// trailing product factor R^k that is tracked as a count, never
/// materialized):
///   Omega_i = y + { x : <x, z_i> = max_j <x, z_j> }.
struct SimplicialPartition {
  SimplexDirections directions;
  Vector shift;           // y in R^{m-1}
  int ambient_extra = 0;  // trailing product dimensions

  int m() const { return directions.m; }
  int dim() const { return directions.dim; }
  int ambient_dim() const { return directions.dim + ambient_extra; }
};

inline SimplicialPartition make_simplicial_partition(int m, const Vector& shift,
                                                     int ambient_extra = 0) {
  SimplicialPartition p;
  p.directions = regular_simplex_vertices(m);
  require(shift.size() == p.directions.dim,
          "make_simplicial_partition: shift must have dimension m-1");
  require(ambient_extra >= 0, "make_simplicial_partition: ambient_extra must be >= 0");
  p.shift = shift;
  p.ambient_extra = ambient_extra;
  return p;
}

inline SimplicialPartition make_simplicial_partition(int m) {
  return make_simplicial_partition(m, Vector::Zero(m - 1), 0);
}

/// Index (1-based) of the sector containing x.  Trailing product coordinates
/// are ignored; ties go to the smallest index (a measure-zero event, fixed
/// for determinism).
inline int sector_of(const Vector& x, const SimplicialPartition& p) {
  require(x.size() == p.ambient_dim() || x.size() == p.dim(),
          "sector_of: point dimension mismatch");
  int best = 1;
  double best_val = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= p.m(); ++i) {
    double v = 0.0;
    for (int c = 0; c < p.dim(); ++c) v += (x(c) - p.shift(c)) * p.directions.z(i)(c);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  return best;
}

enum class PieceKind { Hyperplane, HalfSpaceBoundary, Wedge2DInPlane, Segment, Ray };

/// One interface piece Sigma_ij, carried by an affine subspace (point +
/// orthonormal frame) with parameter bounds.
///
///  - Hyperplane / HalfSpaceBoundary: `point` on the plane, `normal` unit.
///  - Segment / Ray: point + frame[0] direction, arclength in
///    [extent_lo, extent_hi] (extent_hi may be +inf for rays).
///  - Wedge2DInPlane: apex `point`, in-plane orthonormal frame
///    (frame[0], frame[1]), polar angle in [extent_lo, extent_hi].
struct InterfacePiece {
  PieceKind kind = PieceKind::Hyperplane;
  Vector point;
  std::vector<Vector> frame;
  Vector normal;  // unit normal pointing from Omega_i into Omega_j
  double extent_lo = 0.0;
  double extent_hi = 0.0;
  int label_i = 0;
  int label_j = 0;
  int ambient_dim = 0;
};

/// Interface catalog of a shifted simplicial partition, closed forms for
/// m in {2, 3, 4}:
///   m=2: one hyperplane through y;
///   m=3: three rays from y, Sigma_ij along (z_i + z_j) = -z_k;
///   m=4: six planar wedges from y; Sigma_ij lies in the plane
///        orthogonal to z_i - z_j, bounded by the rays -z_k and -z_l.
inline std::vector<InterfacePiece> interfaces_of(const SimplicialPartition& p) {
  const int m = p.m();
  if (m > 4) throw unsupported_error("interfaces_of: closed-form catalog covers m <= 4");
  std::vector<InterfacePiece> pieces;
  const auto& dirs = p.directions;
  const auto unit_normal = [&](int i, int j) {
    Vector n = dirs.z(j) - dirs.z(i);
    n.normalize();
    return n;  // points from Omega_i into Omega_j
  };

  if (m == 2) {
    InterfacePiece pc;
    pc.kind = PieceKind::Hyperplane;
    pc.point = p.shift;
    pc.normal = unit_normal(1, 2);
    pc.label_i = 1;
    pc.label_j = 2;
    pc.ambient_dim = p.ambient_dim();
    pieces.push_back(std::move(pc));
  } else if (m == 3) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = i + 1; j <= 3; ++j) {
        const int k = 6 - i - j;
        InterfacePiece pc;
        pc.kind = PieceKind::Ray;
        pc.point = p.shift;
        Vector dir = -dirs.z(k);  // = z_i + z_j, already unit
        pc.frame.push_back(dir);
        pc.normal = unit_normal(i, j);
        pc.extent_lo = 0.0;
        pc.extent_hi = std::numeric_limits<double>::infinity();
        pc.label_i = i;
        pc.label_j = j;
        pc.ambient_dim = p.ambient_dim();
        pieces.push_back(std::move(pc));
      }
    }
  } else {
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        int k = 0, l = 0;
        for (int c = 1; c <= 4; ++c) {
          if (c == i || c == j) continue;
          (k == 0 ? k : l) = c;
        }
        // The wedge between junction rays -z_k and -z_l inside the plane
        // orthogonal to z_i - z_j.
        Vector u = -dirs.z(k);
        Vector w = -dirs.z(l);
        Vector v = w - w.dot(u) * u;
        v.normalize();
        const double angle = std::acos(std::clamp(u.dot(w), -1.0, 1.0));
        InterfacePiece pc;
        pc.kind = PieceKind::Wedge2DInPlane;
        pc.point = p.shift;
        pc.frame.push_back(u);
        pc.frame.push_back(v);
        pc.normal = unit_normal(i, j);
        pc.extent_lo = 0.0;
        pc.extent_hi = angle;
        pc.label_i = i;
        pc.label_j = j;
        pc.ambient_dim = p.ambient_dim();
        pieces.push_back(std::move(pc));
      }
    }
  }
  return pieces;
}

}  // namespace gbb

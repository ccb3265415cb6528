#pragma once

#include "gaussbubble/measure.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace gbb {

/// Prescribed Gaussian volumes, a point of the open simplex Delta_m.
inline void validate_volume_vector(const Vector& a) {
  require(a.size() >= 2, "volume vector: need m >= 2 entries");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    require(a(i) > 0.0, "volume vector: entries must be positive");
    sum += a(i);
  }
  require(std::abs(sum - 1.0) <= 1e-12, "volume vector: entries must sum to 1");
}

/// Total weighted perimeter B(y) of the shifted simplicial partition:
/// the sum of interface measures over the closed-form catalog.
inline MeasureResult total_perimeter(const Vector& y, int m) {
  require(m >= 2 && m <= 4, "total_perimeter: m must be in {2,3,4}");
  require(y.size() == m - 1, "total_perimeter: y must have dimension m-1");
  SimplicialPartition p = make_simplicial_partition(m, y);
  MeasureResult out;
  out.method = MeasureMethod::ClosedForm;
  for (const InterfacePiece& piece : interfaces_of(p)) {
    MeasureResult mr = interface_measure(piece);
    out.value += mr.value;
    out.abs_error_bound += mr.abs_error_bound;
    if (mr.method != MeasureMethod::ClosedForm) out.method = mr.method;
  }
  return out;
}

inline std::vector<double> sector_volumes(const Vector& y, int m) {
  SimplicialPartition p = make_simplicial_partition(m, y);
  std::vector<double> vols(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i)
    vols[static_cast<size_t>(i - 1)] = gaussian_volume(sector_region(p, i)).value;
  return vols;
}

struct ShiftSolution {
  Vector y;
  double residual = 0.0;  // max_i |gamma(Omega_i(y)) - a_i|
  int iterations = 0;
  std::vector<double> volumes;
};

/// Solves for the shift y = y(a) with prescribed sector volumes, by damped
/// Newton iteration on the first m-1 volume components.  The Jacobian rows
/// are the negated sector barycenters (the divergence-theorem flux identity
/// for translated sets).
inline ShiftSolution solve_shift(const Vector& a, double tol = 1e-10, int max_iter = 50) {
  validate_volume_vector(a);
  const int m = static_cast<int>(a.size());
  require(m >= 2 && m <= 4, "solve_shift: m must be in {2,3,4}");
  const int d = m - 1;

  const auto residual_of = [&](const std::vector<double>& vols) {
    double r = 0.0;
    for (int i = 0; i < m; ++i) r = std::max(r, std::abs(vols[static_cast<size_t>(i)] - a(i)));
    return r;
  };

  ShiftSolution sol;
  sol.y = Vector::Zero(d);
  sol.volumes = sector_volumes(sol.y, m);
  double res = residual_of(sol.volumes);

  for (int it = 0; it < max_iter && res > tol; ++it) {
    SimplicialPartition p = make_simplicial_partition(m, sol.y);
    Matrix J(d, d);
    Vector F(d);
    for (int i = 1; i <= d; ++i) {
      J.row(i - 1) = -barycenter(sector_region(p, i)).value.transpose();
      F(i - 1) = sol.volumes[static_cast<size_t>(i - 1)] - a(i - 1);
    }
    Vector step = J.fullPivLu().solve(-F);
    double alpha = 1.0;
    Vector y_next;
    std::vector<double> vols_next;
    double res_next = res;
    for (int halving = 0; halving < 30; ++halving) {
      y_next = sol.y + alpha * step;
      vols_next = sector_volumes(y_next, m);
      res_next = residual_of(vols_next);
      if (res_next < res) break;
      alpha *= 0.5;
    }
    if (res_next >= res) break;  // stagnated; final residual check below
    sol.y = y_next;
    sol.volumes = vols_next;
    res = res_next;
    sol.iterations = it + 1;
  }
  sol.residual = res;
  if (res > tol) {
    std::ostringstream msg;
    msg << "solve_shift: no convergence in " << max_iter << " iterations; residual " << res
        << " at y = [" << sol.y.transpose() << "]";
    throw numeric_failure(msg.str());
  }
  return sol;
}

struct CostResult {
  double value = 0.0;
  double abs_error_bound = 0.0;
  ShiftSolution shift;
};

/// Cost of the conjectured minimizer family: I(a) = B(y(a)).
inline CostResult cost(const Vector& a, double tol = 1e-10) {
  CostResult out;
  out.shift = solve_shift(a, tol);
  MeasureResult b = total_perimeter(out.shift.y, static_cast<int>(a.size()));
  out.value = b.value;
  out.abs_error_bound = b.abs_error_bound + out.shift.residual;
  return out;
}

struct InterfaceMatrix {
  Matrix K;                 // m x m, symmetric PSD, row sums zero
  Matrix pair_measures;     // m x m, gamma(Sigma_ij) in entry (i-1, j-1)
};

/// K = sum_{i<j} gamma(Sigma_ij) (u_i - u_j)(u_i - u_j)^t.
inline InterfaceMatrix interface_matrix(const Vector& y, int m) {
  require(m >= 2 && m <= 4, "interface_matrix: m must be in {2,3,4}");
  require(y.size() == m - 1, "interface_matrix: y must have dimension m-1");
  SimplicialPartition p = make_simplicial_partition(m, y);
  InterfaceMatrix out;
  out.K = Matrix::Zero(m, m);
  out.pair_measures = Matrix::Zero(m, m);
  for (const InterfacePiece& piece : interfaces_of(p)) {
    const double g = interface_measure(piece).value;
    const int i = piece.label_i - 1, j = piece.label_j - 1;
    out.pair_measures(i, j) = out.pair_measures(j, i) = g;
    out.K(i, i) += g;
    out.K(j, j) += g;
    out.K(i, j) -= g;
    out.K(j, i) -= g;
  }
  return out;
}

/// Pseudo-inverse by eigendecomposition, zeroing eigenvalues below
/// 1e-12 times the largest.  For interface matrices the kernel is the
/// all-ones direction.
inline Matrix pseudo_inverse(const Matrix& K) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(K);
  const Vector& ev = es.eigenvalues();
  const double cutoff = 1e-12 * ev.cwiseAbs().maxCoeff();
  Vector inv = Vector::Zero(ev.size());
  for (Eigen::Index k = 0; k < ev.size(); ++k)
    if (std::abs(ev(k)) > cutoff) inv(k) = 1.0 / ev(k);
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

struct MultiplierVector {
  Vector lambda;            // m entries, sum zero
  Matrix lambda_ij;         // antisymmetric pairwise matrix
  double cocycle_residual = 0.0;

  double pair(int i, int j) const { return lambda_ij(i - 1, j - 1); }
};

/// Least-squares solve of lambda_i - lambda_j = lambda_ij with sum zero.
/// Throws if the pairwise data is inconsistent beyond `tol`.
inline MultiplierVector solve_multiplier_system(const Matrix& lambda_ij, double tol = 1e-8) {
  const int m = static_cast<int>(lambda_ij.rows());
  MultiplierVector out;
  out.lambda_ij = lambda_ij;
  out.lambda = Vector::Zero(m);
  for (int i = 0; i < m; ++i) out.lambda(i) = lambda_ij.row(i).sum() / static_cast<double>(m);
  double res = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        res = std::max(res, std::abs(lambda_ij(i, j) + lambda_ij(j, k) + lambda_ij(k, i)));
  out.cocycle_residual = res;
  if (res > tol)
    throw structural_violation("multipliers: pairwise system violates the cocycle identity");
  return out;
}

/// Lagrange multipliers of the shifted simplicial partition.  Interfaces are
/// flat (H = 0), so lambda_ij = -<x, N_ij> read off at the common apex y.
inline MultiplierVector multipliers(const Vector& y, int m) {
  require(m >= 2 && m <= 4, "multipliers: m must be in {2,3,4}");
  require(y.size() == m - 1, "multipliers: y must have dimension m-1");
  SimplicialPartition p = make_simplicial_partition(m, y);
  Matrix lam = Matrix::Zero(m, m);
  for (const InterfacePiece& piece : interfaces_of(p)) {
    const double lij = -piece.point.dot(piece.normal);
    lam(piece.label_i - 1, piece.label_j - 1) = lij;
    lam(piece.label_j - 1, piece.label_i - 1) = -lij;
  }
  return solve_multiplier_system(lam, 1e-10);
}

struct DerivativeCheck {
  double fd = 0.0;        // finite-difference value
  double identity = 0.0;  // closed-form identity value
  double rel_err = 0.0;
  double h = 0.0;
  bool cancellation_warning = false;
};

inline void validate_direction(const Vector& a, const Vector& b) {
  require(b.size() == a.size(), "direction: dimension mismatch");
  require(std::abs(b.sum()) <= 1e-12, "direction: entries must sum to 0");
  require(b.norm() > 0.0, "direction: must be nonzero");
}

/// First-order identity check: the directional derivative of I at a along a
/// zero-sum direction b equals sqrt(2 pi) <lambda(y(a)), b>.
inline DerivativeCheck gradient_check(const Vector& a, const Vector& b, double h = 1e-4) {
  validate_volume_vector(a);
  validate_direction(a, b);
  const int m = static_cast<int>(a.size());
  DerivativeCheck out;
  out.h = h;
  const double ip = cost(a + h * b).value;
  const double im = cost(a - h * b).value;
  out.fd = (ip - im) / (2.0 * h);
  MultiplierVector lam = multipliers(solve_shift(a).y, m);
  out.identity = kSqrt2Pi * lam.lambda.dot(b);
  out.rel_err = std::abs(out.fd - out.identity) /
                std::max({std::abs(out.fd), std::abs(out.identity), 1e-30});
  out.cancellation_warning = std::abs(out.fd) < 1e-10 && std::abs(out.identity) > 1e-6;
  return out;
}

/// Second-order identity check: the second directional derivative of I
/// equals -2 pi b^t K~^+ b with K~ the interface matrix at y(a).
inline DerivativeCheck hessian_check(const Vector& a, const Vector& b, double h = 1e-3) {
  validate_volume_vector(a);
  validate_direction(a, b);
  const int m = static_cast<int>(a.size());
  DerivativeCheck out;
  out.h = h;
  const double ip = cost(a + h * b).value;
  const double i0 = cost(a).value;
  const double im = cost(a - h * b).value;
  out.fd = (ip - 2.0 * i0 + im) / (h * h);
  InterfaceMatrix K = interface_matrix(solve_shift(a).y, m);
  out.identity = -kTwoPi * b.dot(pseudo_inverse(K.K) * b);
  out.rel_err = std::abs(out.fd - out.identity) /
                std::max({std::abs(out.fd), std::abs(out.identity), 1e-30});
  out.cancellation_warning = std::abs(out.fd) < 1e-10 && std::abs(out.identity) > 1e-6;
  return out;
}

struct MatrixCsReport {
  bool pass = true;
  int trials = 0;
  double worst_min_eigenvalue = 0.0;  // most negative eigenvalue seen
  // Counterexample payload (empty unless pass == false).
  Matrix counter_D, counter_E;
  Vector counter_p;
};

/// Property check of the matrix Cauchy-Schwarz inequality
///   (E D E^t)(E E E^t)^{-1}(E E D^t) <= E D D^t
/// over random finite distributions of vector pairs (D, E).
inline MatrixCsReport matrix_cs_check(int trials, std::uint64_t seed, double tol = 1e-10) {
  require(trials >= 1, "matrix_cs_check: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_dist(1, 4);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::uniform_real_distribution<double> unif01(0.0, 1.0);

  MatrixCsReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const int dim = dim_dist(rng);
    // at least dim+1 atoms so the E second-moment matrix can be nonsingular
    const int atoms = dim + 1 + std::uniform_int_distribution<int>(0, 3)(rng);
    Matrix D(dim, atoms), E(dim, atoms);
    Vector p(atoms);
    Matrix mee;
    double det = 0.0;
    do {
      for (int a = 0; a < atoms; ++a) {
        p(a) = unif01(rng) + 1e-3;
        for (int c = 0; c < dim; ++c) {
          D(c, a) = unif(rng);
          E(c, a) = unif(rng);
        }
      }
      p /= p.sum();
      mee = Matrix::Zero(dim, dim);
      for (int a = 0; a < atoms; ++a) mee += p(a) * E.col(a) * E.col(a).transpose();
      det = mee.determinant();
    } while (std::abs(det) < 1e-6);

    Matrix mdd = Matrix::Zero(dim, dim), mde = Matrix::Zero(dim, dim);
    for (int a = 0; a < atoms; ++a) {
      mdd += p(a) * D.col(a) * D.col(a).transpose();
      mde += p(a) * D.col(a) * E.col(a).transpose();
    }
    Matrix diff = mdd - mde * mee.inverse() * mde.transpose();
    diff = 0.5 * (diff + diff.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(diff);
    const double min_ev = es.eigenvalues().minCoeff();
    rep.worst_min_eigenvalue = std::min(rep.worst_min_eigenvalue, min_ev);
    if (min_ev < -tol && rep.pass) {
      rep.pass = false;
      rep.counter_D = D;
      rep.counter_E = E;
      rep.counter_p = p;
    }
  }
  return rep;
}

}  // namespace gbb

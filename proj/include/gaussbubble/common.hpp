#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbb {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;

// All quadrature domains are truncated at this radius; the Gaussian tail
// mass beyond it is below 1e-15 in dimensions <= 3.
inline constexpr double kTruncationRadius = 8.5;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;

// Thrown when an iterative routine fails to reach its tolerance.
class numeric_failure : public std::runtime_error {
 public:
  explicit numeric_failure(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a computed quantity violates a structural identity it is
// required to satisfy (e.g. an inconsistent multiplier cocycle).
class structural_violation : public std::runtime_error {
 public:
  explicit structural_violation(const std::string& what) : std::runtime_error(what) {}
};

// Thrown for operations requested outside their supported catalog.
class unsupported_error : public std::invalid_argument {
 public:
  explicit unsupported_error(const std::string& what) : std::invalid_argument(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace gbb

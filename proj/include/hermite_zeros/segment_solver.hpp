#pragma once

// Inversion of the circular-band area map  theta + sin(theta) = M  on [0, pi].
//
// The band between x = -r sin(theta/2) and x = +r sin(theta/2) of a disk of
// radius r has area r^2 (theta + sin theta).  The map is strictly increasing
// on [0, pi] but its derivative 1 + cos(theta) vanishes at theta = pi, where
// the inverse behaves like pi - (6 (pi - M))^{1/3}.

#include <cmath>
#include <numbers>
#include <sstream>

#include "hermite_zeros/errors.hpp"

namespace hermite_zeros {

struct SolverConfig {
  double abs_tol = 1e-14;
  int max_iter = 64;

  void validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("SolverConfig: abs_tol must be > 0");
    if (max_iter < 1) throw DomainError("SolverConfig: max_iter must be >= 1");
  }
};

struct SegmentSolution {
  double theta = 0.0;
  double residual = 0.0;  // theta + sin(theta) - M
  int iterations = 0;
};

inline constexpr double kSegmentSlack = 1e-12;

/// theta + sin(theta); theta may exceed [0, pi] by at most kSegmentSlack.
inline double segment_area(double theta) {
  if (!(theta >= -kSegmentSlack && theta <= std::numbers::pi + kSegmentSlack)) {
    std::ostringstream msg;
    msg << "segment_area: theta = " << theta << " outside [0, pi]";
    throw DomainError(msg.str());
  }
  return theta + std::sin(theta);
}

namespace detail {

// 1 + cos(theta) without cancellation near theta = pi.
inline double segment_slope(double theta) {
  const double c = std::cos(0.5 * theta);
  return 2.0 * c * c;
}

inline double segment_guess(double m) {
  if (m <= 3.0) return 0.5 * m;
  return std::numbers::pi - std::cbrt(6.0 * (std::numbers::pi - m));
}

}  // namespace detail

/// Solves theta + sin(theta) = m by Newton inside a bisection bracket.
/// Terminates on the residual |theta + sin(theta) - m| <= config.abs_tol.
inline SegmentSolution solve_segment(double m, const SolverConfig& config = {}) {
  config.validate();
  constexpr double pi = std::numbers::pi;
  if (!(m >= 0.0 && m <= pi)) {
    std::ostringstream msg;
    msg << "invert_segment_area: M = " << m << " outside [0, pi]";
    throw DomainError(msg.str());
  }

  double lo = 0.0;
  double hi = pi;
  double theta = detail::segment_guess(m);
  double f = theta + std::sin(theta) - m;

  for (int iter = 0; iter <= config.max_iter; ++iter) {
    if (std::abs(f) <= config.abs_tol) return {theta, f, iter};
    if (iter == config.max_iter) break;

    if (f < 0.0)
      lo = theta;
    else
      hi = theta;

    const double slope = detail::segment_slope(theta);
    double next = slope > 0.0 ? theta - f / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == theta) break;  // bracket exhausted at double resolution
    theta = next;
    f = theta + std::sin(theta) - m;
  }

  // The endpoints themselves may satisfy the tolerance (m == 0 or m == pi).
  for (double edge : {lo, hi}) {
    const double fe = edge + std::sin(edge) - m;
    if (std::abs(fe) <= config.abs_tol) return {edge, fe, config.max_iter};
  }

  std::ostringstream msg;
  msg.precision(17);
  msg << "invert_segment_area: no convergence for M = " << m << " (residual " << f << ")";
  throw ConvergenceError(msg.str());
}

inline double invert_segment_area(double m, const SolverConfig& config = {}) {
  return solve_segment(m, config).theta;
}

}  // namespace hermite_zeros

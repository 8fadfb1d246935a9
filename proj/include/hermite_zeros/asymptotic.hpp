#pragma once

// Circle-partition estimates for the zeros of the Hermite polynomial H_n.
//
// A disk of radius r = sqrt(2n + 1) is cut into n + 1 vertical strips of equal
// area.  The n strip boundaries approximate the zeros of H_n: the j-th
// positive boundary (counted from the center) encloses the central 2j - 1
// strips for even n and the central 2j strips for odd n, so
//
//   even n:  theta + sin(theta) = (2j - 1) pi / (n + 1),   1 <= j <= n/2
//   odd n:   theta + sin(theta) =  2j      pi / (n + 1),   0 <= j <= (n-1)/2
//
// with x_j = r sin(theta / 2).

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "hermite_zeros/errors.hpp"
#include "hermite_zeros/segment_solver.hpp"

namespace hermite_zeros {

enum class ZeroMethod { asymptotic, exact };

inline const char* to_string(ZeroMethod method) {
  return method == ZeroMethod::asymptotic ? "asymptotic" : "exact";
}

struct ZeroEstimate {
  int n = 0;
  int j = 0;
  double area = 0.0;   // M, the right-hand side of the segment equation
  double theta = 0.0;
  double x = 0.0;
};

/// All n zeros of H_n, ascending.
struct ZeroSet {
  int n = 0;
  ZeroMethod method = ZeroMethod::asymptotic;
  std::vector<double> values;
};

inline double domain_radius(int n) { return std::sqrt(2.0 * n + 1.0); }

/// Smallest center-out index: 0 for odd n (the central zero), 1 for even n.
inline int first_index(int n) { return n % 2 == 0 ? 1 : 0; }

/// Largest center-out index: floor(n / 2).
inline int last_index(int n) { return n / 2; }

inline double area_fraction(int n, int j) {
  if (n < 1 || j < first_index(n) || j > last_index(n)) {
    std::ostringstream msg;
    msg << "area_fraction: index j = " << j << " invalid for n = " << n;
    throw IndexError(msg.str());
  }
  const int strips = n % 2 == 0 ? 2 * j - 1 : 2 * j;
  return strips * std::numbers::pi / (n + 1);
}

inline ZeroEstimate approx_positive_zero(int n, int j, const SolverConfig& config = {}) {
  ZeroEstimate est;
  est.n = n;
  est.j = j;
  est.area = area_fraction(n, j);
  try {
    est.theta = invert_segment_area(est.area, config);
  } catch (const ConvergenceError& e) {
    std::ostringstream msg;
    msg << "zero estimate for n = " << n << ", j = " << j << ": " << e.what();
    throw ConvergenceError(msg.str());
  }
  est.x = domain_radius(n) * std::sin(0.5 * est.theta);
  return est;
}

/// Estimates for j = first_index(n) .. last_index(n).
inline std::vector<ZeroEstimate> approx_positive_zeros(int n, const SolverConfig& config = {}) {
  std::vector<ZeroEstimate> out;
  if (n < 1) return out;
  out.reserve(static_cast<std::size_t>(last_index(n) - first_index(n) + 1));
  for (int j = first_index(n); j <= last_index(n); ++j)
    out.push_back(approx_positive_zero(n, j, config));
  return out;
}

/// Mirrors nonnegative zeros (ascending, center-out) into a full ascending set.
/// A leading 0 (odd n) is kept once; negatives are exact negations.
inline std::vector<double> mirror_zeros(const std::vector<double>& nonnegative, int n) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n));
  const std::size_t skip = n % 2 == 1 ? 1 : 0;
  for (std::size_t k = nonnegative.size(); k-- > skip;) values.push_back(-nonnegative[k]);
  if (skip) values.push_back(0.0);
  for (std::size_t k = skip; k < nonnegative.size(); ++k) values.push_back(nonnegative[k]);
  return values;
}

inline ZeroSet approx_zero_set(int n, const SolverConfig& config = {}) {
  if (n < 0) throw DomainError("approx_zero_set: n must be >= 0");
  ZeroSet set{n, ZeroMethod::asymptotic, {}};
  std::vector<double> positive;
  for (const auto& est : approx_positive_zeros(n, config)) positive.push_back(est.x);
  set.values = mirror_zeros(positive, n);
  return set;
}

/// Position-space disk of a spin-S system: n = 2S interior cell boundaries
/// partition the disk of radius sqrt(4S + 1) into 2S + 1 equal-area strips.
struct SpinDomain {
  double spin = 0.0;
  int n = 0;
  double radius = 0.0;
  std::vector<double> boundaries;

  double cell_area() const { return std::numbers::pi * radius * radius / (n + 1); }
};

inline SpinDomain spin_domain_from_twice(int twice_spin, const SolverConfig& config = {}) {
  if (twice_spin < 1) throw DomainError("spin_domain: 2S must be a positive integer");
  SpinDomain dom;
  dom.spin = 0.5 * twice_spin;
  dom.n = twice_spin;
  dom.radius = std::sqrt(2.0 * twice_spin + 1.0);
  dom.boundaries = approx_zero_set(twice_spin, config).values;
  return dom;
}

inline SpinDomain spin_domain(double spin, const SolverConfig& config = {}) {
  const double twice = 2.0 * spin;
  if (!(std::isfinite(twice) && twice >= 1.0 && twice == std::floor(twice) && twice < 2147483647.0)) {
    std::ostringstream msg;
    msg << "spin_domain: S = " << spin << " is not a positive half-integer";
    throw DomainError(msg.str());
  }
  return spin_domain_from_twice(static_cast<int>(twice), config);
}

/// Exact area of the disk of radius r between the vertical lines x = a and x = b.
inline double strip_area(double radius, double a, double b) {
  auto primitive = [radius](double x) {
    const double t = std::clamp(x / radius, -1.0, 1.0);
    return radius * radius * (t * std::sqrt(1.0 - t * t) + std::asin(t));
  };
  return primitive(b) - primitive(a);
}

}  // namespace hermite_zeros

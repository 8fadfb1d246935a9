#pragma once

// Orthonormal Hermite functions
//
//   psi_n(x) = H_n(x) exp(-x^2/2) / (pi^{1/4} sqrt(2^n n!))
//
// evaluated by the three-term recurrence
//
//   psi_{k+1} = x sqrt(2/(k+1)) psi_k - sqrt(k/(k+1)) psi_{k-1},
//
// carried out on the unweighted values p_k = psi_k exp(x^2/2) with a separate
// binary exponent, so that neither the recurrence nor the Gaussian factor can
// overflow or lose the sign to underflow.  Exact zeros of H_n are found by
// bracketed Newton seeded at the circle-partition estimates.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "hermite_zeros/asymptotic.hpp"
#include "hermite_zeros/errors.hpp"
#include "hermite_zeros/segment_solver.hpp"

namespace hermite_zeros {

struct HermitePair {
  int n = 0;
  double x = 0.0;
  double psi_n = 0.0;
  double psi_prev = 0.0;  // psi_{n-1}; zero for n = 0
};

namespace detail {

/// psi_n(x) exp(x^2/2) == ldexp(value, exponent); likewise for prev.
struct ScaledHermite {
  double value = 0.0;
  double prev = 0.0;
  int exponent = 0;
};

inline constexpr int kRescaleBits = 256;
// Beyond this |x| every psi_n of practical degree underflows; the recurrence
// would overflow a single step before rescaling.
inline constexpr double kHugeAbscissa = 1e150;

inline ScaledHermite scaled_hermite(int n, double x) {
  const double big = std::ldexp(1.0, kRescaleBits);
  const double small = std::ldexp(1.0, -kRescaleBits);
  ScaledHermite s;
  s.prev = 0.0;
  s.value = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
  for (int k = 0; k < n; ++k) {
    const double kp1 = k + 1.0;
    const double next = x * std::sqrt(2.0 / kp1) * s.value - std::sqrt(k / kp1) * s.prev;
    s.prev = s.value;
    s.value = next;
    const double mag = std::max(std::abs(s.value), std::abs(s.prev));
    if (mag > big) {
      s.value *= small;
      s.prev *= small;
      s.exponent += kRescaleBits;
    } else if (mag < small && mag > 0.0) {
      s.value *= big;
      s.prev *= big;
      s.exponent -= kRescaleBits;
    }
  }
  return s;
}

// ldexp(v, exponent) * exp(-x^2/2) without intermediate overflow.
inline double apply_gaussian(double v, int exponent, double x) {
  if (v == 0.0) return v;
  constexpr double ln2_hi = 6.93147180369123816490e-01;
  constexpr double ln2_lo = 1.90821492927058770002e-10;
  const double half_sq = 0.5 * x * x;
  const double k = std::floor(half_sq / std::numbers::ln2);
  const double rem = (half_sq - k * ln2_hi) - k * ln2_lo;
  const double scaled = v * std::exp(-rem);
  const double shift = static_cast<double>(exponent) - k;
  if (shift < -4000.0) return std::copysign(0.0, v);
  return std::ldexp(scaled, static_cast<int>(shift));
}

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace detail

inline HermitePair eval_hermite_function(int n, double x) {
  if (n < 0) throw DomainError("eval_hermite_function: n must be >= 0");
  HermitePair out{n, x, 0.0, 0.0};
  if (std::abs(x) > detail::kHugeAbscissa) {
    const bool odd = n % 2 == 1;
    out.psi_n = (odd && x < 0.0) ? -0.0 : 0.0;
    out.psi_prev = (!odd && x < 0.0) ? -0.0 : 0.0;
    return out;
  }
  const auto s = detail::scaled_hermite(n, x);
  out.psi_n = detail::apply_gaussian(s.value, s.exponent, x);
  out.psi_prev = detail::apply_gaussian(s.prev, s.exponent, x);
  return out;
}

inline double hermite_function(int n, double x) { return eval_hermite_function(n, x).psi_n; }

/// Gauss-Hermite weight attached to abscissa x for an n-point rule:
/// exp(-x^2) / (n psi_{n-1}(x)^2), where the exp(-x^2) cancels exactly
/// against the Gaussian inside psi_{n-1}^2.
inline double hermite_weight(int n, double x) {
  if (n < 1) throw DomainError("hermite_weight: n must be >= 1");
  const auto s = detail::scaled_hermite(n, x);
  const double inv = 1.0 / (n * s.prev * s.prev);
  return std::ldexp(inv, -2 * s.exponent);
}

/// One exact positive (or central) zero with its provenance.
struct ExactZero {
  int j = 0;           // center-out index, as for ZeroEstimate
  double seed = 0.0;   // circle-partition estimate used to start Newton
  double lo = 0.0;     // isolating bracket
  double hi = 0.0;
  double x = 0.0;
  int iterations = 0;  // Newton/bisection updates taken from the seed
  double residual = 0.0;  // psi_n(x)
};

namespace detail {

struct SignedPoint {
  double x;
  int sign;
};

// Sign of psi_n just right of x; at x = 0 for odd n that is the sign of psi_n'(0).
inline int sign_right_of(int n, double x) {
  const auto s = scaled_hermite(n, x);
  if (s.value != 0.0) return sign_of(s.value);
  return sign_of(-x * s.value + std::sqrt(2.0 * n) * s.prev);
}

inline std::vector<SignedPoint> signed_points(int n, const std::vector<double>& xs) {
  std::vector<SignedPoint> pts;
  pts.reserve(xs.size());
  for (double x : xs) pts.push_back({x, sign_right_of(n, x)});
  return pts;
}

inline std::size_t count_sign_changes(const std::vector<SignedPoint>& pts) {
  std::size_t c = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i - 1].sign * pts[i].sign < 0) ++c;
  return c;
}

// Bracketed Newton on psi_n inside (lo, hi), where psi_n changes sign.
inline ExactZero refine_in_bracket(int n, int j, double seed, double lo, double hi, int max_iter) {
  ExactZero z;
  z.j = j;
  z.seed = seed;
  z.lo = lo;
  z.hi = hi;
  const int sign_lo = sign_right_of(n, lo);
  const double root2n = std::sqrt(2.0 * n);

  double x = (seed > lo && seed < hi) ? seed : 0.5 * (lo + hi);
  for (int iter = 1; iter <= max_iter; ++iter) {
    const auto s = scaled_hermite(n, x);
    if (s.value == 0.0) {
      z.x = x;
      z.iterations = iter - 1;
      return z;
    }
    if (sign_of(s.value) == sign_lo)
      lo = x;
    else
      hi = x;

    const double slope = -x * s.value + root2n * s.prev;
    const double tol = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x);
    if (slope != 0.0 && std::abs(s.value / slope) <= tol) {
      // Converged to within rounding; the last step is below the bracket resolution.
      z.x = x;
      z.iterations = iter;
      return z;
    }
    double next = slope != 0.0 ? x - s.value / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
    if (hi - lo <= tol) {
      z.x = x;
      z.iterations = iter;
      return z;
    }
  }
  std::ostringstream msg;
  msg << "exact_zero_set: Newton did not converge for n = " << n << ", j = " << j;
  throw ConvergenceError(msg.str());
}

}  // namespace detail

/// Exact nonnegative zeros of H_n, center-out (j = first_index(n) ..).
inline std::vector<ExactZero> exact_zeros_detailed(int n, const SolverConfig& config = {}) {
  config.validate();
  if (n < 0) throw DomainError("exact_zero_set: n must be >= 0");
  std::vector<ExactZero> out;
  if (n == 0) return out;

  const bool odd = n % 2 == 1;
  if (odd) out.push_back({0, 0.0, 0.0, 0.0, 0.0, 0, 0.0});

  const auto estimates = approx_positive_zeros(n, config);
  std::vector<double> seeds;
  for (const auto& e : estimates)
    if (e.j >= 1) seeds.push_back(e.x);
  const std::size_t m = seeds.size();
  if (m == 0) return out;

  const double edge = domain_radius(n) * (1.0 + 1e-3);

  // Bracket endpoints: midpoints between consecutive estimates, closed off by
  // the center (or the midpoint toward it) and the padded disk edge.
  std::vector<double> xs;
  xs.reserve(m + 1);
  xs.push_back(odd ? 0.5 * seeds[0] : 0.0);
  for (std::size_t k = 1; k < m; ++k) xs.push_back(0.5 * (seeds[k - 1] + seeds[k]));
  xs.push_back(edge);
  auto pts = detail::signed_points(n, xs);

  bool isolated = detail::count_sign_changes(pts) == m;
  for (int pass = 0; !isolated && pass < 40; ++pass) {
    // Fallback: restart from the center, subdivide every gap, widen the edge.
    std::vector<double> refined;
    refined.reserve(2 * xs.size() + 2);
    if (xs.front() > 0.0) refined.push_back(0.0);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k > 0) refined.push_back(0.5 * (xs[k - 1] + xs[k]));
      refined.push_back(xs[k]);
    }
    refined.push_back(2.0 * refined.back());
    xs = std::move(refined);
    pts = detail::signed_points(n, xs);
    isolated = detail::count_sign_changes(pts) == m;
  }
  if (!isolated) {
    std::ostringstream msg;
    msg << "exact_zero_set: could not isolate the zeros of H_" << n;
    throw ConvergenceError(msg.str());
  }

  std::size_t k = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i - 1].sign * pts[i].sign >= 0) continue;
    const int j = static_cast<int>(k) + 1;
    auto z = detail::refine_in_bracket(n, j, seeds[k], pts[i - 1].x, pts[i].x, config.max_iter);
    z.residual = hermite_function(n, z.x);
    out.push_back(z);
    ++k;
  }
  return out;
}

inline ZeroSet exact_zero_set(int n, const SolverConfig& config = {}) {
  ZeroSet set{n, ZeroMethod::exact, {}};
  std::vector<double> nonnegative;
  for (const auto& z : exact_zeros_detailed(n, config)) nonnegative.push_back(z.x);
  set.values = mirror_zeros(nonnegative, n);
  return set;
}

/// Gauss-Hermite weights for the exact zeros of H_n, in node order.
inline std::vector<double> gauss_weights(int n, const ZeroSet& nodes) {
  if (nodes.method != ZeroMethod::exact)
    throw DomainError("gauss_weights: nodes must be the exact zeros of H_n");
  if (nodes.n != n || static_cast<int>(nodes.values.size()) != n)
    throw DomainError("gauss_weights: node count does not match n");
  std::vector<double> w(nodes.values.size());
  // Evaluate on the nonnegative half and mirror, so weights are exactly symmetric.
  const std::size_t half = nodes.values.size() / 2;
  for (std::size_t k = half; k < nodes.values.size(); ++k) {
    w[k] = hermite_weight(n, nodes.values[k]);
    w[nodes.values.size() - 1 - k] = w[k];
  }
  return w;
}

}  // namespace hermite_zeros

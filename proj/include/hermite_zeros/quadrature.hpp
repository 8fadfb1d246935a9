#pragma once

// Gauss-Hermite rules for  integral f(x) exp(-x^2) dx  over the real line.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hermite_zeros/asymptotic.hpp"
#include "hermite_zeros/errors.hpp"
#include "hermite_zeros/hermite_oracle.hpp"

namespace hermite_zeros {

enum class NodeSource { exact_nodes, asymptotic_nodes };

inline const char* to_string(NodeSource source) {
  return source == NodeSource::exact_nodes ? "exact" : "asymptotic";
}

struct QuadratureRule {
  int n = 0;
  NodeSource source = NodeSource::exact_nodes;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// For asymptotic nodes the weights are the exact-rule formula evaluated at
/// the approximate nodes. That rule is a heuristic and is not exact for
/// polynomials of degree 2n - 1.
inline QuadratureRule build_rule(int n, NodeSource source, const SolverConfig& config = {}) {
  if (n < 1) throw DomainError("build_rule: n must be >= 1");
  QuadratureRule rule;
  rule.n = n;
  rule.source = source;
  if (source == NodeSource::exact_nodes) {
    auto set = exact_zero_set(n, config);
    rule.weights = gauss_weights(n, set);
    rule.nodes = std::move(set.values);
  } else {
    rule.nodes = approx_zero_set(n, config).values;
    rule.weights.resize(rule.nodes.size());
    const std::size_t last = rule.nodes.size() - 1;
    for (std::size_t k = rule.nodes.size() / 2; k <= last; ++k) {
      rule.weights[k] = hermite_weight(n, rule.nodes[k]);
      rule.weights[last - k] = rule.weights[k];
    }
  }
  return rule;
}

template <typename F>
double integrate(const QuadratureRule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * f(rule.nodes[k]);
  return sum;
}

/// integral x^k exp(-x^2) dx = sqrt(pi) (k-1)!! / 2^{k/2} for even k, 0 for odd k.
inline double gaussian_moment(int k) {
  if (k < 0) throw DomainError("gaussian_moment: k must be >= 0");
  if (k % 2 == 1) return 0.0;
  double m = std::sqrt(std::numbers::pi);
  for (int i = 1; i < k; i += 2) m *= 0.5 * i;
  return m;
}

/// Built-in test integrands with closed-form weighted integrals.
enum class Integrand { monomial, cosine, exponential };

inline const char* to_string(Integrand f) {
  switch (f) {
    case Integrand::monomial: return "monomial";
    case Integrand::cosine: return "cos";
    case Integrand::exponential: return "exp";
  }
  return "?";
}

struct IntegrandSpec {
  Integrand kind = Integrand::monomial;
  double param = 0.0;  // monomial degree, cos frequency a, or exp rate b

  void validate() const {
    if (!std::isfinite(param)) throw DomainError("integrand parameter must be finite");
    if (kind == Integrand::monomial && (param < 0.0 || param != std::floor(param) || param > 4096.0))
      throw DomainError("monomial degree must be an integer in [0, 4096]");
  }

  double operator()(double x) const {
    switch (kind) {
      case Integrand::monomial: return std::pow(x, param);
      case Integrand::cosine: return std::cos(param * x);
      case Integrand::exponential: return std::exp(param * x);
    }
    return 0.0;
  }

  /// integral f(x) exp(-x^2) dx.
  double reference() const {
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    switch (kind) {
      case Integrand::monomial: return gaussian_moment(static_cast<int>(param));
      case Integrand::cosine: return sqrt_pi * std::exp(-0.25 * param * param);
      case Integrand::exponential: return sqrt_pi * std::exp(0.25 * param * param);
    }
    return 0.0;
  }
};

}  // namespace hermite_zeros

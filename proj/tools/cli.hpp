#pragma once

// Command-line front end.  run() is separate from main() so tests can drive
// it with in-memory streams.
//
// Exit codes: 0 success, 2 argument error, 1 numerical failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hermite_zeros/hermite_zeros.hpp"

namespace hermite_zeros::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitUsage = 2;

/// Parses "3/2", "1.5" or "2" into 2S.  Returns nothing unless 2S is a positive integer.
inline std::optional<int> parse_twice_spin(const std::string& text) {
  double value = 0.0;
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      value = std::stod(text, &used);
      if (used != text.size()) return std::nullopt;
    } else {
      const std::string num = text.substr(0, slash);
      const std::string den = text.substr(slash + 1);
      const long p = std::stol(num, &used);
      if (used != num.size()) return std::nullopt;
      const long q = std::stol(den, &used);
      if (used != den.size() || q <= 0) return std::nullopt;
      value = static_cast<double>(p) / static_cast<double>(q);
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  const double twice = 2.0 * value;
  if (!(twice >= 1.0 && twice <= 1e6 && twice == std::floor(twice))) return std::nullopt;
  return static_cast<int>(twice);
}

namespace detail {

// Signed center-out index of the k-th smallest zero of H_n: negative left of
// the center, 0 for the central zero of odd n.
inline int signed_index(int n, int k) {
  const int half = n / 2;
  if (n % 2 == 1) return k - half;
  return k < half ? k - half : k - half + 1;
}

inline void write_zeros_csv(std::ostream& os, int n, ZeroMethod method, const SolverConfig& config) {
  if (method == ZeroMethod::asymptotic) {
    os << "n,j,M,theta,x\n";
    const auto est = approx_positive_zeros(n, config);
    for (std::size_t k = est.size(); k-- > 0;) {
      if (est[k].j == 0) continue;
      os << n << ',' << -est[k].j << ',' << format_double(est[k].area) << ','
         << format_double(est[k].theta) << ',' << format_double(-est[k].x) << '\n';
    }
    for (const auto& e : est)
      os << n << ',' << e.j << ',' << format_double(e.area) << ',' << format_double(e.theta)
         << ',' << format_double(e.x) << '\n';
  } else {
    os << "n,j,x\n";
    const auto set = exact_zero_set(n, config);
    for (int k = 0; k < n; ++k) {
      os << n << ',' << signed_index(n, k) << ',' << format_double(set.values[static_cast<std::size_t>(k)]) << '\n';
    }
  }
}

inline void write_zeros_json(std::ostream& os, int n, ZeroMethod method, const SolverConfig& config) {
  auto arr = nlohmann::json::array();
  if (method == ZeroMethod::asymptotic) {
    const auto est = approx_positive_zeros(n, config);
    for (std::size_t k = est.size(); k-- > 0;) {
      if (est[k].j == 0) continue;
      arr.push_back({{"n", n}, {"j", -est[k].j}, {"M", est[k].area}, {"theta", est[k].theta}, {"x", -est[k].x}});
    }
    for (const auto& e : est)
      arr.push_back({{"n", n}, {"j", e.j}, {"M", e.area}, {"theta", e.theta}, {"x", e.x}});
  } else {
    const auto set = exact_zero_set(n, config);
    for (int k = 0; k < n; ++k) {
      arr.push_back({{"n", n}, {"j", signed_index(n, k)}, {"x", set.values[static_cast<std::size_t>(k)]}});
    }
  }
  os << arr.dump() << '\n';
}

// Writes via a sibling temporary and renames, so a failed run leaves no partial file.
template <typename Writer>
void write_atomically(const std::filesystem::path& path, Writer&& writer) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    writer(file);
    file.flush();
    if (!file) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite polynomial zeros from equal-area circle partitions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  double solve_m = 0.0;
  auto* solve = app.add_subcommand("solve", "Solve theta + sin(theta) = M for theta in [0, pi]");
  solve->add_option("--m", solve_m, "Right-hand side M in [0, pi]")->required()->check(CLI::Range(0.0, std::numbers::pi));

  int zeros_n = 0;
  std::string zeros_method = "asymptotic";
  std::string zeros_format = "csv";
  auto* zeros = app.add_subcommand("zeros", "Print all zeros of H_n");
  zeros->add_option("--n", zeros_n, "Degree n >= 0")->required()->check(CLI::Range(0, 100000));
  zeros->add_option("--method", zeros_method, "asymptotic or exact")->check(CLI::IsMember({"asymptotic", "exact"}));
  zeros->add_option("--format", zeros_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  int cmp_min = 1;
  int cmp_max = 1;
  std::string cmp_parity = "both";
  std::string cmp_out;
  std::string cmp_format = "csv";
  bool cmp_summary = false;
  auto* cmp = app.add_subcommand("compare", "Tabulate approximate vs exact zeros over a degree range");
  cmp->add_option("--n-min", cmp_min, "Smallest degree (>= 1)")->required()->check(CLI::Range(1, 100000));
  cmp->add_option("--n-max", cmp_max, "Largest degree (>= n-min)")->required()->check(CLI::Range(1, 100000));
  cmp->add_option("--parity", cmp_parity, "even, odd or both")->check(CLI::IsMember({"even", "odd", "both"}));
  cmp->add_option("--out", cmp_out, "Write the table to this file instead of stdout");
  cmp->add_option("--format", cmp_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmp->add_flag("--summary", cmp_summary, "Append '#'-prefixed min/max/mean abs_err per n (csv only)");

  int quad_n = 1;
  std::string quad_nodes = "exact";
  std::string quad_integrand = "monomial";
  double quad_param = 0.0;
  auto* quad = app.add_subcommand("quad", "Integrate a test function against exp(-x^2)");
  quad->add_option("--n", quad_n, "Node count n >= 1")->required()->check(CLI::Range(1, 100000));
  quad->add_option("--nodes", quad_nodes, "exact or asymptotic")->check(CLI::IsMember({"exact", "asymptotic"}));
  quad->add_option("--integrand", quad_integrand, "monomial (x^p), cos (cos(p x)) or exp (exp(p x))")
      ->check(CLI::IsMember({"monomial", "cos", "exp"}));
  quad->add_option("--param", quad_param, "Monomial degree, cos frequency or exp rate");

  std::string spin_s;
  auto* spin = app.add_subcommand("spin", "Print the disk radius and cell boundaries of a spin-S system");
  spin->add_option("--s", spin_s, "Spin S, a positive half-integer such as 1, 3/2 or 2.5")->required();

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  // Range checks that CLI11 cannot express, done before any computation.
  std::optional<int> twice_spin;
  IntegrandSpec integrand;
  try {
    if (*cmp && cmp_max < cmp_min) throw DomainError("--n-max must be >= --n-min");
    if (*cmp && cmp_summary && cmp_format == "json") throw DomainError("--summary applies to csv output only");
    if (*spin) {
      twice_spin = parse_twice_spin(spin_s);
      if (!twice_spin) throw DomainError("--s must be a positive half-integer");
    }
    if (*quad) {
      integrand.kind = quad_integrand == "monomial" ? Integrand::monomial
                       : quad_integrand == "cos"    ? Integrand::cosine
                                                    : Integrand::exponential;
      integrand.param = quad_param;
      integrand.validate();
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const SolverConfig config;
  try {
    if (*solve) {
      const auto sol = solve_segment(solve_m, config);
      out << "M,theta,residual,iterations\n"
          << format_double(solve_m) << ',' << format_double(sol.theta) << ','
          << format_double(sol.residual) << ',' << sol.iterations << '\n';
    } else if (*zeros) {
      const auto method = zeros_method == "exact" ? ZeroMethod::exact : ZeroMethod::asymptotic;
      if (zeros_format == "json")
        detail::write_zeros_json(out, zeros_n, method, config);
      else
        detail::write_zeros_csv(out, zeros_n, method, config);
    } else if (*cmp) {
      const Parity parity = cmp_parity == "even" ? Parity::even
                            : cmp_parity == "odd" ? Parity::odd
                                                  : Parity::both;
      const auto rows = sweep(cmp_min, cmp_max, parity, config);
      auto emit = [&](std::ostream& os) {
        if (cmp_format == "json") {
          os << to_json(rows).dump() << '\n';
        } else {
          write_csv(os, rows);
          if (cmp_summary) write_summary(os, rows);
        }
      };
      if (cmp_out.empty())
        emit(out);
      else
        detail::write_atomically(cmp_out, emit);
    } else if (*quad) {
      const auto source = quad_nodes == "exact" ? NodeSource::exact_nodes : NodeSource::asymptotic_nodes;
      const auto rule = build_rule(quad_n, source, config);
      const double result = integrate(rule, integrand);
      const double reference = integrand.reference();
      const double abs_err = std::abs(result - reference);
      out << "k,x,w\n";
      for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        out << k << ',' << format_double(rule.nodes[k]) << ',' << format_double(rule.weights[k]) << '\n';
      out << "# n=" << rule.n << '\n'
          << "# nodes=" << to_string(rule.source) << '\n'
          << "# integrand=" << to_string(integrand.kind) << '\n'
          << "# param=" << format_double(integrand.param) << '\n'
          << "# result=" << format_double(result) << '\n'
          << "# reference=" << format_double(reference) << '\n'
          << "# abs_err=" << format_double(abs_err) << '\n'
          << "# rel_err=";
      if (reference != 0.0) out << format_double(abs_err / std::abs(reference));
      out << '\n';
    } else if (*spin) {
      const auto dom = spin_domain_from_twice(*twice_spin, config);
      out << "# S=" << format_double(dom.spin) << '\n'
          << "# n=" << dom.n << '\n'
          << "# radius=" << format_double(dom.radius) << '\n'
          << "# cell_area=" << format_double(dom.cell_area()) << '\n'
          << "k,boundary\n";
      for (std::size_t k = 0; k < dom.boundaries.size(); ++k)
        out << k << ',' << format_double(dom.boundaries[k]) << '\n';
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace hermite_zeros::cli

#pragma once

// Approximate-vs-exact zero tables for sweeps over the degree.

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "hermite_zeros/asymptotic.hpp"
#include "hermite_zeros/errors.hpp"
#include "hermite_zeros/format.hpp"
#include "hermite_zeros/hermite_oracle.hpp"

namespace hermite_zeros {

struct ComparisonRow {
  int n = 0;
  int j = 0;
  double x_approx = 0.0;
  double x_exact = 0.0;
  double abs_err = 0.0;
  std::optional<double> rel_err;  // empty when x_exact == 0
};

enum class Parity { even, odd, both };

inline bool matches(Parity p, int n) {
  return p == Parity::both || (p == Parity::even) == (n % 2 == 0);
}

/// One row per nonnegative zero, paired by rank in the sorted zero sets.
inline std::vector<ComparisonRow> compare(int n, const SolverConfig& config = {}) {
  if (n < 1) throw DomainError("compare: n must be >= 1");
  const auto approx = approx_zero_set(n, config);
  const auto exact = exact_zero_set(n, config);
  std::vector<ComparisonRow> rows;
  const int offset = n / 2;  // rank of the first nonnegative zero
  for (int j = first_index(n); j <= last_index(n); ++j) {
    const auto rank = static_cast<std::size_t>(offset + j - first_index(n));
    ComparisonRow row;
    row.n = n;
    row.j = j;
    row.x_approx = approx.values[rank];
    row.x_exact = exact.values[rank];
    row.abs_err = std::abs(row.x_approx - row.x_exact);
    if (row.x_exact != 0.0) row.rel_err = row.abs_err / std::abs(row.x_exact);
    rows.push_back(row);
  }
  return rows;
}

inline std::vector<ComparisonRow> sweep(int n_min, int n_max, Parity parity,
                                        const SolverConfig& config = {}) {
  if (n_min < 1 || n_max < n_min) throw DomainError("sweep: need 1 <= n_min <= n_max");
  std::vector<ComparisonRow> table;
  for (int n = n_min; n <= n_max; ++n) {
    if (!matches(parity, n)) continue;
    auto rows = compare(n, config);
    table.insert(table.end(), rows.begin(), rows.end());
  }
  return table;
}

inline void write_csv(std::ostream& os, const std::vector<ComparisonRow>& rows) {
  os << "n,j,x_approx,x_exact,abs_err,rel_err\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.j << ',' << format_double(r.x_approx) << ','
       << format_double(r.x_exact) << ',' << format_double(r.abs_err) << ',';
    if (r.rel_err) os << format_double(*r.rel_err);
    os << '\n';
  }
}

inline nlohmann::json to_json(const std::vector<ComparisonRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json obj = {{"n", r.n},
                          {"j", r.j},
                          {"x_approx", r.x_approx},
                          {"x_exact", r.x_exact},
                          {"abs_err", r.abs_err},
                          {"rel_err", nullptr}};
    if (r.rel_err) obj["rel_err"] = *r.rel_err;
    arr.push_back(std::move(obj));
  }
  return arr;
}

struct ErrorSummary {
  int n = 0;
  double min_abs_err = 0.0;
  double max_abs_err = 0.0;
  double mean_abs_err = 0.0;
};

/// min/max/mean abs_err per degree, in order of first appearance.
inline std::vector<ErrorSummary> summarize(const std::vector<ComparisonRow>& rows) {
  std::vector<ErrorSummary> out;
  std::size_t count = 0;
  for (const auto& r : rows) {
    if (out.empty() || out.back().n != r.n) {
      if (!out.empty()) out.back().mean_abs_err /= static_cast<double>(count);
      out.push_back({r.n, r.abs_err, r.abs_err, 0.0});
      count = 0;
    }
    auto& s = out.back();
    s.min_abs_err = std::min(s.min_abs_err, r.abs_err);
    s.max_abs_err = std::max(s.max_abs_err, r.abs_err);
    s.mean_abs_err += r.abs_err;
    ++count;
  }
  if (!out.empty()) out.back().mean_abs_err /= static_cast<double>(count);
  return out;
}

/// Footer block; every line starts with '#'.
inline void write_summary(std::ostream& os, const std::vector<ComparisonRow>& rows) {
  os << "# n,min_abs_err,max_abs_err,mean_abs_err\n";
  for (const auto& s : summarize(rows))
    os << "# " << s.n << ',' << format_double(s.min_abs_err) << ','
       << format_double(s.max_abs_err) << ',' << format_double(s.mean_abs_err) << '\n';
}

}  // namespace hermite_zeros

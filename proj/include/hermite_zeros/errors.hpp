#pragma once

#include <stdexcept>
#include <string>

namespace hermite_zeros {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Zero index outside the valid range for the degree. Always a caller bug.
class IndexError : public std::out_of_range {
 public:
  explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

/// An iterative method failed to meet its tolerance. Treated as a defect.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hermite_zeros

#pragma once

#include <stdexcept>
#include <string>

namespace quintell {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A series or iteration did not meet its stopping rule within its cap.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A rational closed form hit a (numerically) vanishing denominator.
class SingularDenominator : public std::runtime_error {
 public:
  explicit SingularDenominator(const std::string& what) : std::runtime_error(what) {}
};

/// A radical expression needed the root of a negative radicand under the
/// principal real branch.
class BranchError : public std::runtime_error {
 public:
  explicit BranchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quintell

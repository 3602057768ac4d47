#pragma once

#include <stdexcept>
#include <string>

namespace hypwave {

// Common base so callers can map the whole family to one exit path.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Evaluation requested too close to a pole of the gamma function.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(what) {}
};

// An iterative or quadrature scheme failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// Evaluation point sits on (or too close to) a non-integrable singularity.
class SingularityError : public Error {
 public:
  explicit SingularityError(const std::string& what) : Error(what) {}
};

// A truncated tail cannot be certified below the requested tolerance.
class TailError : public Error {
 public:
  explicit TailError(const std::string& what) : Error(what) {}
};

// Malformed or empty grid specification.
class GridError : public Error {
 public:
  explicit GridError(const std::string& what) : Error(what) {}
};

// A report is being reused whose refinement check is out of tolerance.
class StaleReportError : public Error {
 public:
  explicit StaleReportError(const std::string& what) : Error(what) {}
};

}  // namespace hypwave

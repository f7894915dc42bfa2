#pragma once

#include <stdexcept>
#include <string>

namespace mellin {

// An evaluator produced a non-finite value where a finite one was required.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

// Norms and transforms are implemented for p in {1, 2, inf} only.
class UnsupportedSpaceError : public std::invalid_argument {
 public:
  explicit UnsupportedSpaceError(const std::string& what) : std::invalid_argument(what) {}
};

// An integration window does not contain the numerically significant mass.
class WindowTooSmallError : public std::runtime_error {
 public:
  explicit WindowTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

// A hypothesis required by the operation fails (e.g. non-integrable tail).
class NotInDomainError : public std::runtime_error {
 public:
  explicit NotInDomainError(const std::string& what) : std::runtime_error(what) {}
};

// A sample map does not cover the requested index range.
class IncompleteDataError : public std::runtime_error {
 public:
  explicit IncompleteDataError(const std::string& what) : std::runtime_error(what) {}
};

// A rate fit was requested on data that cannot support one.
class DegenerateFitError : public std::runtime_error {
 public:
  explicit DegenerateFitError(const std::string& what) : std::runtime_error(what) {}
};

// Parameters violate a theorem's constraints.
class InvalidParametersError : public std::invalid_argument {
 public:
  explicit InvalidParametersError(const std::string& what) : std::invalid_argument(what) {}
};

class NotFoundError : public std::out_of_range {
 public:
  explicit NotFoundError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace mellin

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pscore {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input line (bad JSON, unbalanced CSV quotes, ...).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A field is missing or holds an unacceptable value. `line` is 0 when the
/// error is not tied to an input line.
class ValidationError : public Error {
 public:
  ValidationError(std::size_t line, std::string field, const std::string& what)
      : Error((line ? "line " + std::to_string(line) + ": " : std::string()) +
              "field '" + field + "': " + what),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

/// A reference group ends up with no publications, so N(group) = 0.
class EmptyGroupError : public Error {
 public:
  explicit EmptyGroupError(std::string group)
      : Error("reference group '" + group + "' has no publications"),
        group_(std::move(group)) {}

  const std::string& group() const noexcept { return group_; }

 private:
  std::string group_;
};

/// Out-of-range numeric parameter (d outside [0,1], non-stochastic input, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// GTH elimination found a state with no off-diagonal mass.
class ReducibleChainError : public Error {
 public:
  ReducibleChainError(std::size_t state, const std::string& what)
      : Error(what), state_(state) {}

  std::size_t state() const noexcept { return state_; }

 private:
  std::size_t state_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(double residual, const std::string& what)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Every score is zero, so max-one normalization is undefined.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// The group/venue graph splits into several components at d = 1.
class DisconnectedError : public Error {
 public:
  DisconnectedError(std::vector<std::vector<std::string>> components,
                    const std::string& what)
      : Error(what), components_(std::move(components)) {}

  const std::vector<std::vector<std::string>>& components() const noexcept {
    return components_;
  }

 private:
  std::vector<std::vector<std::string>> components_;
};

/// Broken internal invariant (row-sum drift, dimension mismatch).
class InternalError : public Error {
 public:
  using Error::Error;
};

using Warnings = std::vector<std::string>;

}  // namespace pscore

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgeom {

/// Base of every error raised by the library. Anything deriving from this is a
/// mathematical or domain failure; I/O and configuration problems use ConfigError.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs);
  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

private:
  std::size_t lhs_, rhs_;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class NotHermitian : public Error {
public:
  explicit NotHermitian(double violation);
  double violation() const noexcept { return violation_; }

private:
  double violation_;
};

// Eigenvalue below the allowed negative slack (log, entropy, PD checks).
class NotPositive : public Error {
public:
  NotPositive(const std::string& what, double eigenvalue);
  double eigenvalue() const noexcept { return eigenvalue_; }

private:
  double eigenvalue_;
};

class ConvergenceError : public Error {
public:
  using Error::Error;
};

class NotSolvable : public Error {
public:
  explicit NotSolvable(double trace_abs);
  double trace_abs() const noexcept { return trace_abs_; }

private:
  double trace_abs_;
};

// Kernel of the Laplacian is larger than the scalars.
class DegenerateGeometry : public Error {
public:
  explicit DegenerateGeometry(std::size_t kernel_dim);
  std::size_t kernel_dim() const noexcept { return kernel_dim_; }

private:
  std::size_t kernel_dim_;
};

class IntegrationError : public Error {
public:
  IntegrationError(const std::string& what, long step);
  long step() const noexcept { return step_; }

private:
  long step_;
};

/// Bad user input: unreadable files, malformed JSON, invalid parameters.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace mgeom

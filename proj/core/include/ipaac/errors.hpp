#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ipaac {

/// Invalid user-facing configuration (mesh size, horizon, polynomial degree, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bond with zero length reached the tensor kernel during assembly.
class AssemblyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Conjugate gradient did not reach the requested tolerance.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual, std::size_t iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  std::size_t iterations_;
};

/// Negative curvature found by conjugate gradient: the operator is not SPD,
/// which can only come from a broken assembly.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Quadrature oracle failed to converge within its refinement budget.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A convergence study row failed; the message names the configuration.
class StudyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ipaac

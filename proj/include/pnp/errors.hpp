#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pnp {

// Base error for everything raised by the library. Every failure names the
// module and operation it came from so the CLI can report a precise origin.
class Error : public std::runtime_error {
 public:
  Error(std::string module, std::string operation, const std::string& what)
      : std::runtime_error(module + "." + operation + ": " + what),
        module_(std::move(module)),
        operation_(std::move(operation)) {}

  const std::string& module() const noexcept { return module_; }
  const std::string& operation() const noexcept { return operation_; }

 private:
  std::string module_;
  std::string operation_;
};

// Bad inputs: dimension mismatches, invalid parameters, malformed configs.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Numerical breakdowns: non-finite iterates, violated spectral assumptions.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// An iterative routine ran out of iterations or stagnated. Carries the best
// state reached so callers can inspect how close the run got.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(std::string module, std::string operation,
                   const std::string& what, std::vector<double> residual_historyumenti = {},
                   std::vector<double> best_iterate = {})
      : NumericalError(std::move(module), std::move(operation), what),
        residual_history_(std::move(residual_history)),
        best_iterate_(std::move(best_iterate)) {}

  const std::vector<double>& residual_history() const noexcept {
    return residual_history_;
  }
  const std::vector<double>& best_iterate() const noexcept {
    return best_iterate_;
  }

 private:
  std::vector<double> residual_history_;
  std::vector<double> best_iterate_;
};

}  // namespace pnp

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypertrees {

// Enumeration / summation workload would exceed the configured budget.
class budget_error : public std::runtime_error {
 public:
  budget_error(std::string what, double required, double budget)
      : std::runtime_error(std::move(what)), required(required), budget(budget) {}
  double required;
  double budget;
};

// Conditioning a determinantal kernel on a probability-0 (keep) or
// probability-1 (drop) event. Distinct from plain division by zero so
// callers can tell a degenerate chain-rule step from a bug.
class conditioning_error : public std::runtime_error {
 public:
  conditioning_error(std::size_t index, bool keep)
      : std::runtime_error(keep ? "conditioning on a probability-0 inclusion"
                                : "conditioning on a probability-1 inclusion"),
        index(index),
        keep(keep) {}
  std::size_t index;
  bool keep;
};

// Iterative eigensolver did not reach the requested residual.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(std::string what, double residual)
      : std::runtime_error(std::move(what)), residual(residual) {}
  double residual;
};

}  // namespace hypertrees

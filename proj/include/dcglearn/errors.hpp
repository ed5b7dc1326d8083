#pragma once

#include <stdexcept>
#include <string>

namespace dcglearn {

// Raised when the preference solver exhausts its iteration budget before
// the stopping tolerance is met. Carries the objective value at the last
// iterate so callers can decide whether the partial solution is usable.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_objective)
      : std::runtime_error(what), last_objective_(last_objective) {}

  double last_objective() const noexcept { return last_objective_; }

 private:
  double last_objective_;
};

// Structurally valid input that is numerically unusable (zero matrix,
// zero transformed vector, ...).
class DegenerateInputError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace dcglearn

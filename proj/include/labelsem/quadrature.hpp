#pragma once

#include <functional>
#include <stdexcept>

namespace labelsem {

/// Thrown when an iterative numerical procedure fails to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, double last_value, long steps)
      : std::runtime_error(msg), last_value(last_value), steps(steps) {}

  double last_value;
  long steps;
};

namespace detail {

/// Adaptive Simpson integration of f over [a, b] to the given absolute
/// tolerance. Throws ConvergenceError if the recursion depth cap is hit
/// before the local error estimate falls under the local tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 60);

}  // namespace detail
}  // namespace labelsem

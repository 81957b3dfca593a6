#pragma once

#include <functional>
#include <stdexcept>

namespace phasecov {

class QuadratureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive Simpson with Richardson extrapolation. `abs_tol` is the absolute
// error budget for the whole interval; it is halved on each bisection.
// Throws QuadratureFailure when an interval still misses its budget at
// `max_depth` bisections.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 48);

}  // namespace phasecov

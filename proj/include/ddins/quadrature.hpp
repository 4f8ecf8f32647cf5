#pragma once

#include <functional>
#include <stdexcept>

namespace ddins {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod 7-15 on [a, b] with absolute tolerance.
// Throws QuadratureError if the error estimate cannot be driven below tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_depth = 52);

// Split the interval at the given interior points before integrating each piece.
// Points outside (a, b) are ignored.
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::initializer_list<double> split_points,
                       double abs_tol = 1e-10);

}  // namespace ddins

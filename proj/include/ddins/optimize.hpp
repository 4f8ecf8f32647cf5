#pragma once

#include <functional>

namespace ddins {

// Root of f on [lo, hi]; requires a sign change. Bisection to abs tolerance.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol = 1e-12, int max_iter = 200);

struct ScanMax {
    double x;
    double value;
    double lo;  // refinement bracket
    double hi;
};

// Coarse scan over n+1 equally spaced points; smallest argmax on ties.
ScanMax scan_max(const std::function<double(double)>& f, double lo, double hi, int n);

// Golden-section maximization on [lo, hi] to abs x-tolerance.
// Deterministic; returns the leftmost point seen among equal maxima.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-6);

// Scan then refine; the standard 1-D maximizer used for theta searches.
ScanMax maximize(const std::function<double(double)>& f, double lo, double hi,
                 int scan_points = 200, double tol = 1e-6);

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-6);

}  // namespace ddins

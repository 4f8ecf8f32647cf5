#include "ddins/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace ddins {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::invalid_argument("bisect: no sign change on bracket");
    for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ScanMax scan_max(const std::function<double(double)>& f, double lo, double hi, int n) {
    double best_x = lo;
    double best_v = f(lo);
    int best_i = 0;
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
            best_i = i;
        }
    }
    const double step = (hi - lo) / n;
    ScanMax out;
    out.x = best_x;
    out.value = best_v;
    out.lo = (best_i == 0) ? lo : best_x - step;
    out.hi = (best_i == n) ? hi : best_x + step;
    return out;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
    constexpr double invphi = 0.6180339887498948482;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 >= f2) {  // ">=" drifts toward the smaller argmax on plateaus
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

ScanMax maximize(const std::function<double(double)>& f, double lo, double hi,
                 int scan_points, double tol) {
    ScanMax coarse = scan_max(f, lo, hi, scan_points);
    const double x = golden_max(f, coarse.lo, coarse.hi, tol);
    const double v = f(x);
    ScanMax out = coarse;
    if (v >= coarse.value) {
        out.x = x;
        out.value = v;
    }
    return out;
}

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
    return golden_max([&](double x) { return -f(x); }, lo, hi, tol);
}

}  // namespace ddins

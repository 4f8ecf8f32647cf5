#include "ddins/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ddins {
namespace {

// Kronrod-15 abscissae on [-1, 1] (positive half) and weights; the odd-indexed
// abscissae form the embedded Gauss-7 rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Gk {
    double kronrod;
    double err;
};

Gk gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double fsum = f(c - dx) + f(c + dx);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    const double kron = resk * h;
    const double err = std::abs((resk - resg) * h);
    return {kron, err};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    struct Seg {
        double a, b, val, err;
        int depth;
    };
    Gk first = gk15(f, a, b);
    if (!std::isfinite(first.kronrod))
        throw QuadratureError("quadrature: non-finite integrand");
    std::vector<Seg> work{{a, b, first.kronrod, first.err, 0}};
    double total = 0.0;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        // Tolerance is shared proportionally to segment length.
        const double local_tol = abs_tol * std::abs(s.b - s.a) / std::abs(b - a);
        if (s.err <= std::max(local_tol, 1e-300) || s.err <= 1e-16 * std::abs(s.val)) {
            total += s.val;
            continue;
        }
        if (s.depth >= max_depth)
            throw QuadratureError("quadrature: failed to converge");
        const double m = 0.5 * (s.a + s.b);
        Gk l = gk15(f, s.a, m);
        Gk r = gk15(f, m, s.b);
        if (!std::isfinite(l.kronrod) || !std::isfinite(r.kronrod))
            throw QuadratureError("quadrature: non-finite integrand");
        work.push_back({s.a, m, l.kronrod, l.err, s.depth + 1});
        work.push_back({m, s.b, r.kronrod, r.err, s.depth + 1});
    }
    return total;
}

double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::initializer_list<double> split_points, double abs_tol) {
    std::vector<double> pts{a};
    for (double p : split_points)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        total += integrate(f, pts[i], pts[i + 1], abs_tol);
    return total;
}

}  // namespace ddins

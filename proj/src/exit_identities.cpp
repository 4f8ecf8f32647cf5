#include "ddins/exit_identities.hpp"

#include "ddins/quadrature.hpp"

#include <cmath>

namespace ddins {

namespace {
// Scale-function extensions used when exit formulas receive boundary arguments.
double W_ext(const ScaleFn& sf, double u) { return u < 0.0 ? 0.0 : sf.W(u); }
}  // namespace

double up_exit(const ScaleFn& sf, double x, double a) {
    if (!(a > 0.0)) throw std::domain_error("up_exit: need a > 0");
    if (x < 0.0 || x > a) throw std::domain_error("up_exit: need 0 <= x <= a");
    const double wa = sf.W(a);
    if (wa == 0.0) throw std::domain_error("up_exit: W(a) = 0");
    return sf.W(x) / wa;
}

double down_exit(const ScaleFn& sf, double x, double a) {
    if (!(a > 0.0)) throw std::domain_error("down_exit: need a > 0");
    if (x < 0.0 || x > a) throw std::domain_error("down_exit: need 0 <= x <= a");
    const double wa = sf.W(a);
    if (wa == 0.0) throw std::domain_error("down_exit: W(a) = 0");
    return sf.Z(x) - sf.Z(a) * sf.W(x) / wa;
}

double drawdown_lower_exit(const ScaleFn& sf, double y, double theta, double x) {
    if (!(theta >= 0.0) || !(theta < y))
        throw std::domain_error("drawdown_lower_exit: need 0 <= theta < y");
    if (!(x > 0.0)) throw std::domain_error("drawdown_lower_exit: need x > 0");
    return sf.W(x) / sf.W(y - theta + x);
}

double drawdown_exit_min_density(const ScaleFn& sf, double y, double theta, double phi) {
    if (!(theta >= 0.0) || !(theta < y))
        throw std::domain_error("drawdown_exit_min_density: need 0 <= theta < y");
    if (!(phi > 0.0)) throw std::domain_error("drawdown_exit_min_density: need phi > 0");
    const double g = y - theta;
    const double wd = sf.W(g + phi);
    return (sf.W_prime(phi) * wd - sf.W(phi) * sf.W_prime(g + phi)) / (wd * wd);
}

double drawup_triple_transform(const ScaleFn& sf, double b, double u, double v) {
    if (!(b > 0.0)) throw std::domain_error("drawup_triple_transform: need b > 0");
    if (u < 0.0) throw std::domain_error("drawup_triple_transform: need u >= 0");
    const double r = sf.r();
    const double gap = r - sf.model().laplace_exponent(u);
    const double second =
        (b - v) >= 0.0 ? std::exp(-u * (b - v)) * W_ext(sf, b - v) / sf.W(b) : 0.0;
    // Exact-cancellation branch r = psi(u): both integrals are killed.
    if (std::abs(gap) <= 1e-14 * std::max(1.0, r)) return std::exp(u * b) - second;
    auto integrand = [&](double y) { return std::exp(-u * y) * sf.W(y); };
    auto trunc_int = [&](double hi) {
        if (hi <= 0.0) return 0.0;
        // Split at the exponential scale length 1/u; the integrand is smooth
        // but stiff for large u.
        if (u > 0.0) return integrate_split(integrand, 0.0, hi, {1.0 / u}, 1e-10);
        return integrate(integrand, 0.0, hi, 1e-10);
    };
    const double numer = 1.0 + gap * trunc_int(b - v);
    const double denom = 1.0 + gap * trunc_int(b);
    return std::exp(u * b) * numer / denom - second;
}

}  // namespace ddins

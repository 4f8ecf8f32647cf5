#include "ddins/drawdown_contract.hpp"

#include "ddins/optimize.hpp"

#include <cmath>
#include <limits>

namespace ddins {

void validate(const DrawdownContract& c) {
    if (!(c.a > 0.0)) throw std::invalid_argument("contract.a must be > 0");
    if (!(c.r > 0.0)) throw std::invalid_argument("contract.r must be > 0");
    if (!(c.alpha >= 0.0)) throw std::invalid_argument("contract.alpha must be >= 0");
    if (!(c.c >= 0.0)) throw std::invalid_argument("contract.c must be >= 0");
}

void validate(const DrawdownContract& c, const DrawdownState& s) {
    validate(c);
    if (!(s.y > 0.0 && s.y < c.a)) throw std::invalid_argument("state.y must be in (0, a)");
    if (!(s.p >= 0.0)) throw std::invalid_argument("state.p must be >= 0");
}

DrawdownPricer::DrawdownPricer(const DrawdownContract& c) : contract_(c), sf_(c.model, c.r) {
    validate(c);
}

double DrawdownPricer::xi(double y) const {
    const double a = contract_.a;
    if (y < 0.0 || y > a) throw std::domain_error("xi: y must be in [0, a]");
    // Z(a-y) - r W(a-y) W(a)/W'(a); at y = 0 this is the seeded-maximum value.
    return sf_.Z(a - y) - contract_.r * sf_.W(a - y) * sf_.W(a) / sf_.W_prime(a);
}

double DrawdownPricer::price_f(double y, double p) const {
    const double pr = p / contract_.r;
    return (pr + contract_.alpha) * xi(y) - pr;
}

FairPremium DrawdownPricer::fair_premium(double y) const {
    const double x = xi(y);
    const double denom = 1.0 - x;
    if (denom < 1e-12)
        return {std::numeric_limits<double>::infinity(), true};
    return {contract_.r * contract_.alpha * x / denom, false};
}

double DrawdownPricer::f_tilde(double y, double p) const {
    return -price_f(y, p) - contract_.c;
}

double DrawdownPricer::g_value(double y, double p, double theta) const {
    if (!(theta >= 0.0 && theta < contract_.a))
        throw std::domain_error("g_value: theta must be in [0, a)");
    if (theta >= y) return f_tilde(y, p);
    return f_tilde(theta, p) * sf_.W(contract_.a - y) / sf_.W(contract_.a - theta);
}

bool DrawdownPricer::cancellation_worthwhile(double p) const {
    const double pr = p / contract_.r;
    return pr - contract_.c > (pr + contract_.alpha) * xi(0.0);
}

ThetaStar DrawdownPricer::theta_star(double y, double p) const {
    if (!cancellation_worthwhile(p)) return {CancelRegime::never_cancel, 0.0, 0.0};
    auto g = [&](double th) { return g_value(y, p, th); };
    const ScanMax best = maximize(g, 0.0, y, 200, 1e-6);
    // Plateau for theta >= y: a maximizer at y means no interior optimum.
    const bool at_boundary = best.x >= y - 1e-9 && best.value <= f_tilde(y, p) + 1e-12;
    return {at_boundary ? CancelRegime::boundary : CancelRegime::interior, best.x, best.value};
}

double DrawdownPricer::price_F(double y, double p) const {
    const ThetaStar ts = theta_star(y, p);
    if (ts.regime == CancelRegime::never_cancel) return price_f(y, p);
    return price_f(y, p) + std::max(ts.g_at_theta, 0.0);
}

}  // namespace ddins

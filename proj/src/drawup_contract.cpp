#include "ddins/drawup_contract.hpp"

#include "ddins/exit_identities.hpp"
#include "ddins/optimize.hpp"
#include "ddins/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ddins {

void validate(const DrawupContract& c) {
    if (!(c.a > 0.0)) throw std::invalid_argument("contract.a must be > 0");
    if (!(c.b > 0.0 && c.b <= c.a)) throw std::invalid_argument("contract.b must satisfy 0 < b <= a");
    if (!(c.r > 0.0)) throw std::invalid_argument("contract.r must be > 0");
    if (!(c.alpha >= 0.0)) throw std::invalid_argument("contract.alpha must be >= 0");
    if (!(c.c >= 0.0)) throw std::invalid_argument("contract.c must be >= 0");
}

void validate(const DrawupContract& c, const DrawupState& s) {
    validate(c);
    if (!(s.y > 0.0 && s.y < c.a)) throw std::invalid_argument("state.y must be in (0, a)");
    if (!(s.z > 0.0 && s.z < c.b)) throw std::invalid_argument("state.z must be in (0, b)");
    if (!(s.p >= 0.0)) throw std::invalid_argument("state.p must be >= 0");
}

DrawupPricer::DrawupPricer(const DrawupContract& c) : contract_(c), sf_(c.model, c.r) {
    validate(c);
    if (c.model.is_brownian()) sf_hat_.emplace(sf_.hat());
}

DuRegime DrawupPricer::regime(double y, double z) const {
    if (contract_.b == contract_.a) return DuRegime::equal_triggers;
    if (y + z >= contract_.a) return DuRegime::shifted_exit;
    if (contract_.model.is_brownian()) return DuRegime::hat_process_bm;
    return DuRegime::mc_required;
}

// a > b, y+z < a, Brownian: evaluate lambda/nu through the hat process.
// The race is tracked on the band between the running extrema: the band width
// R grows at whichever edge X currently sits; per unit growth the discounted
// crossing hazards are W'/W (from the max edge) resp. What'/What (from the
// min edge), and the edge-to-edge crossing rates are (2/sigma^2)/What resp.
// (2/sigma^2)/W. Writing alpha = p_max * W(R), beta = p_min * What(R) turns
// the two-state system into alpha' = (2/s2) beta/What, beta' = (2/s2) alpha/W
// with closed-form solution alpha = (A + B int_0^R What)/What. Once R >= b the
// max edge is unreachable (the drawup line sits above it), the min freezes,
// and the remaining race is a constant-hazard climb of length a - R.
LambdaNu DrawupPricer::lambda_nu_chain_bm(double y, double z) const {
    const ScaleFn& X = sf_;
    const ScaleFn& Xh = *sf_hat_;
    const double a = contract_.a, b = contract_.b;
    const double s2 = contract_.model.bm().sigma * contract_.model.bm().sigma;
    const double hh = Xh.W_prime(b) / Xh.W(b);
    const double Ch = Xh.Z(b) * hh - contract_.r * Xh.W(b);
    const double R0 = y + z;
    double p_max_b, p_min_b;  // discounted edge attachment when the band reaches width b
    if (R0 >= b) {
        p_max_b = X.W(z) / X.W(b);
        p_min_b = X.Z(z) - X.Z(b) * p_max_b;
    } else {
        const double a0 = X.W(z);  // p_max(R0) * W(R0)
        const double pm0 = X.Z(z) - X.Z(R0) * X.W(z) / X.W(R0);
        const double b0 = pm0 * Xh.W(R0);
        const double Bt = ((2.0 / s2) * b0 + a0 * Xh.W_prime(R0)) / Xh.W(R0);
        const double A = a0 * Xh.W(R0) - Bt * Xh.W_integral(R0);
        const double ab = A + Bt * Xh.W_integral(b);
        p_max_b = ab / (Xh.W(b) * X.W(b));
        p_min_b = (s2 / 2.0) * (Bt * Xh.W(b) - ab * Xh.W_prime(b) / Xh.W(b)) / Xh.W(b);
    }
    const double climb = a - std::max(R0, b);
    const double survive = std::exp(-climb * hh);
    LambdaNu out;
    out.nu = p_min_b * survive;
    out.lambda = p_max_b + p_min_b * (Ch / hh) * (1.0 - survive);
    return out;
}

LambdaNu DrawupPricer::lambda_nu_impl(double y, double z) const {
    const double a = contract_.a, b = contract_.b;
    if (y + z >= a) {
        // Two-sided exit on [y-a, b-z], shifted to [0, a+b-y-z] starting a-y.
        const double width = a + b - y - z;
        const double lam = up_exit(sf_, a - y, width);
        return {lam, down_exit(sf_, a - y, width)};
    }
    if (b == a) {
        // Equal triggers, y+z < a. (Z(x)-Z(v))/r = I(x)-I(v) keeps this valid
        // down to r = 0.
        const double wa = sf_.W(a);
        const double ratio = sf_.W(a - y) / wa;
        const double hz = sf_.W_prime(a) / (wa * wa);
        const double dI = sf_.W_integral(a - y) - sf_.W_integral(z);
        LambdaNu out;
        out.lambda = ratio - hz * dI;
        out.nu = sf_.Z(z) - sf_.Z(a) * ratio + sf_.Z(a) * hz * dI;
        return out;
    }
    return lambda_nu_chain_bm(y, z);
}

std::optional<LambdaNu> DrawupPricer::lambda_nu(double y, double z) const {
    if (!(y >= 0.0 && y < contract_.a)) throw std::domain_error("lambda_nu: y must be in [0, a)");
    if (!(z >= 0.0 && z <= contract_.b)) throw std::domain_error("lambda_nu: z must be in [0, b]");
    if (regime(y, z) == DuRegime::mc_required) return std::nullopt;
    return lambda_nu_impl(y, z);
}

std::optional<double> DrawupPricer::price_k(double y, double z, double p) const {
    const auto ln = lambda_nu(y, z);
    if (!ln) return std::nullopt;
    const double pr = p / contract_.r;
    return (pr + contract_.alpha) * ln->nu + pr * ln->lambda - pr;
}

std::optional<FairPremium> DrawupPricer::fair_premium(double y, double z) const {
    const auto ln = lambda_nu(y, z);
    if (!ln) return std::nullopt;
    const double denom = 1.0 - ln->lambda - ln->nu;
    if (denom < 1e-12)
        return FairPremium{std::numeric_limits<double>::infinity(), true};
    return FairPremium{contract_.r * contract_.alpha * ln->nu / denom, false};
}

std::optional<double> DrawupPricer::k_tilde(double y, double z, double p) const {
    const auto k = price_k(y, z, p);
    if (!k) return std::nullopt;
    return -*k - contract_.c;
}

// k~ extended past the expiry boundary: a stopped state with drawup >= b has
// zero continuation value, so cancelling there just pays the fee.
double DrawupPricer::k_tilde_capped(double theta, double u, double p) const {
    if (u >= contract_.b) return -contract_.c;
    const LambdaNu ln = lambda_nu_impl(theta, u);
    const double pr = p / contract_.r;
    const double k = (pr + contract_.alpha) * ln.nu + pr * ln.lambda - pr;
    return -k - contract_.c;
}

double DrawupPricer::h_equal_triggers(double y, double z, double p, double theta) const {
    const double a = contract_.a;
    if (a <= y + z - theta) return 0.0;
    if (a <= y + z)
        return k_tilde_capped(theta, y + z - theta, p) * sf_.W(a - y) / sf_.W(a - theta);
    // a > y+z: integrated-by-parts form of the min-density integral.
    const double wa = sf_.W(a);
    const double hz = sf_.W_prime(a) / (wa * wa);
    const double pr = p / contract_.r;
    const double dk_du = -(pr + contract_.alpha) * (contract_.r - sf_.Z(a) * hz) - pr * hz;
    const double dI = sf_.W_integral(a - y) - sf_.W_integral(z);
    return k_tilde_capped(theta, a - theta, p) * sf_.W(a - y) / sf_.W(a - theta) - dk_du * dI;
}

double DrawupPricer::h_hat_bm(double y, double z, double p, double theta) const {
    const double a = contract_.a, b = contract_.b;
    double h = 0.0;
    if (y - theta < b - z) {
        const double w = std::min(a - y, z);
        h += k_tilde_capped(theta, y + z - theta, p) * sf_.W(w) / sf_.W(y - theta + w);
    }
    const double x_hi = std::min(a - y, b + theta - y);
    if (x_hi > z) {
        auto integrand = [&](double x) {
            return k_tilde_capped(theta, y - theta + x, p) *
                   drawdown_exit_min_density(sf_, y, theta, x);
        };
        h += integrate(integrand, z, x_hi, 1e-8);
    }
    return h;
}

std::optional<HValue> DrawupPricer::h_value(double y, double z, double p, double theta) const {
    if (!(theta >= 0.0 && theta < contract_.a))
        throw std::domain_error("h_value: theta must be in [0, a)");
    const DuRegime reg = regime(y, z);
    if (reg == DuRegime::mc_required) return std::nullopt;
    const bool wlog_ok = contract_.b - z > y - theta;
    if (theta >= y) {
        const auto kt = k_tilde(y, z, p);
        return HValue{*kt, wlog_ok};
    }
    if (contract_.b == contract_.a)
        return HValue{h_equal_triggers(y, z, p, theta), wlog_ok};
    if (contract_.model.is_brownian())
        return HValue{h_hat_bm(y, z, p, theta), wlog_ok};
    return std::nullopt;  // CL with a > b: the stopped-state k~ is not analytic
}

bool DrawupPricer::war2_at(double y, double z, double p, double theta0) const {
    const double a = contract_.a, b = contract_.b;
    const double u_lo = y + z - theta0;
    if (u_lo >= b) return false;  // stopped state already expired
    const double u_hi = std::min(a - theta0, b);
    auto kt = [&](double u) { return k_tilde_capped(theta0, u, p); };
    if (u_hi <= u_lo) return kt(u_lo) > 0.0;
    // y+z < a: the condition must hold at the worst stopped drawup in the
    // reachable window (x0 of the defining property), located by grid+refine.
    double worst = kt(u_lo);
    double worst_u = u_lo;
    const int kGrid = 64;
    for (int i = 1; i <= kGrid; ++i) {
        const double u = u_lo + (u_hi - u_lo) * i / kGrid;
        const double v = kt(u);
        if (v < worst) {
            worst = v;
            worst_u = u;
        }
    }
    const double step = (u_hi - u_lo) / kGrid;
    const double lo = std::max(u_lo, worst_u - step);
    const double hi = std::min(u_hi, worst_u + step);
    const double refined = golden_min(kt, lo, hi, 1e-6);
    return std::min(worst, kt(refined)) > 0.0;
}

std::optional<ThetaStarDu> DrawupPricer::theta_star_du(double y, double z, double p) const {
    const DuRegime reg = regime(y, z);
    if (reg == DuRegime::mc_required) return std::nullopt;
    if (reg == DuRegime::hat_process_bm && !contract_.model.is_brownian()) return std::nullopt;

    ThetaStarDu out{};
    out.war2_ok = false;
    out.war2_theta0 = std::numeric_limits<double>::quiet_NaN();
    const double th_lo = std::max(0.0, y + z - contract_.b);
    const int kGrid = 100;
    for (int i = 0; i <= kGrid; ++i) {
        const double th0 = th_lo + (y - th_lo) * i / kGrid;
        if (th0 >= contract_.a) break;
        if (war2_at(y, z, p, th0)) {
            out.war2_ok = true;
            out.war2_theta0 = th0;
            break;
        }
    }
    if (!out.war2_ok) {
        out.regime = CancelRegime::never_cancel;
        out.theta = 0.0;
        out.h_at_theta = 0.0;
        return out;
    }
    auto h = [&](double th) { return h_value(y, z, p, th)->value; };
    const ScanMax best = maximize(h, 0.0, y, 200, 1e-6);
    const bool at_boundary = best.x >= y - 1e-9 && best.value <= h(y) + 1e-12;
    out.regime = at_boundary ? CancelRegime::boundary : CancelRegime::interior;
    out.theta = best.x;
    out.h_at_theta = best.value;
    out.used_tagged_region = !(contract_.b - z > y - best.x);
    return out;
}

std::optional<double> DrawupPricer::price_K(double y, double z, double p) const {
    const auto k = price_k(y, z, p);
    if (!k) return std::nullopt;
    const auto ts = theta_star_du(y, z, p);
    if (!ts) return std::nullopt;
    if (ts->regime == CancelRegime::never_cancel) return *k;
    return *k + std::max(ts->h_at_theta, 0.0);
}

}  // namespace ddins

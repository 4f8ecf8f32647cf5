#include "ddins/scale_fn.hpp"

#include <cmath>

namespace ddins {

ScaleFn::ScaleFn(const LevyModel& model, double r) : model_(model), r_(r) {
    if (!(r >= 0.0)) throw std::invalid_argument("ScaleFn: r must be >= 0");
    phi_r_ = model.phi_inverse(r);
    if (model.is_brownian()) {
        const auto& m = model.bm();
        const double s2 = m.sigma * m.sigma;
        const double xi = std::sqrt(m.mu * m.mu + 2.0 * r * s2) / s2;
        if (xi == 0.0) {
            // r = 0 and mu = 0: W(u) = 2u / sigma^2.
            terms_[0] = {2.0 / s2, 0.0, 1};
            n_terms_ = 1;
        } else {
            const double phi = xi - m.mu / s2;   // = Phi(r), psi'(phi) = sigma^2 * xi
            const double zeta = -xi - m.mu / s2; // negative root, psi'(zeta) = -sigma^2 * xi
            terms_[0] = {1.0 / (s2 * xi), phi, 0};
            terms_[1] = {-1.0 / (s2 * xi), zeta, 0};
            n_terms_ = 2;
        }
        return;
    }
    const auto& m = model.cl();
    if (m.beta == 0.0) {
        // Pure drift: 1/(psi(phi)-r) = 1/(mu*phi - r).
        terms_[0] = {1.0 / m.mu, r / m.mu, 0};
        n_terms_ = 1;
        return;
    }
    const double d = m.beta + r - m.mu * m.rho;
    const double disc = d * d + 4.0 * r * m.mu * m.rho;
    if (disc == 0.0) {
        // r = 0 with beta = mu*rho: double root at 0, W(u) = (1 + rho*u)/mu.
        terms_[0] = {1.0 / m.mu, 0.0, 0};
        terms_[1] = {m.rho / m.mu, 0.0, 1};
        n_terms_ = 2;
        return;
    }
    const double sq = std::sqrt(disc);
    const double phi = (d + sq) / (2.0 * m.mu);
    const double zeta = (d - sq) / (2.0 * m.mu);
    terms_[0] = {1.0 / model.psi_prime(phi), phi, 0};
    terms_[1] = {1.0 / model.psi_prime(zeta), zeta, 0};
    n_terms_ = 2;
}

double ScaleFn::eval(double u) const {
    double acc = 0.0;
    for (int i = 0; i < n_terms_; ++i) {
        const Term& t = terms_[i];
        const double e = std::exp(t.s * u);
        acc += (t.pow == 0) ? t.c * e : t.c * u * e;
    }
    return acc;
}

double ScaleFn::eval_prime(double u) const {
    double acc = 0.0;
    for (int i = 0; i < n_terms_; ++i) {
        const Term& t = terms_[i];
        const double e = std::exp(t.s * u);
        acc += (t.pow == 0) ? t.c * t.s * e : t.c * (1.0 + t.s * u) * e;
    }
    return acc;
}

double ScaleFn::eval_integral(double u) const {
    double acc = 0.0;
    for (int i = 0; i < n_terms_; ++i) {
        const Term& t = terms_[i];
        if (t.pow == 0) {
            acc += (t.s == 0.0) ? t.c * u : t.c * std::expm1(t.s * u) / t.s;
        } else {
            if (t.s == 0.0) {
                acc += 0.5 * t.c * u * u;
            } else {
                const double e = std::exp(t.s * u);
                acc += t.c * (u * e / t.s - std::expm1(t.s * u) / (t.s * t.s));
            }
        }
    }
    return acc;
}

double ScaleFn::W(double u) const {
    if (u < 0.0) throw std::domain_error("W: u must be >= 0 (callers clamp W=0 for u<0)");
    const double w = eval(u);
    if (!std::isfinite(w) || w < 0.0) throw NumericError("W: internal consistency (non-finite or negative)");
    return w;
}

double ScaleFn::W_prime(double u) const {
    if (!(u > 0.0)) throw std::domain_error("W_prime: u must be > 0");
    const double w = eval_prime(u);
    if (!std::isfinite(w)) throw NumericError("W_prime: non-finite result");
    return w;
}

double ScaleFn::W_integral(double u) const {
    if (u < 0.0) throw std::domain_error("W_integral: u must be >= 0");
    const double v = eval_integral(u);
    if (!std::isfinite(v)) throw NumericError("W_integral: non-finite result");
    return v;
}

}  // namespace ddins

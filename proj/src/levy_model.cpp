#include "ddins/levy_model.hpp"

#include <cmath>

namespace ddins {

LevyModel LevyModel::brownian(double mu, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("BrownianDrift: sigma must be > 0");
    if (!std::isfinite(mu)) throw std::invalid_argument("BrownianDrift: mu must be finite");
    return LevyModel(BrownianDrift{mu, sigma});
}

LevyModel LevyModel::cramer_lundberg(double mu, double beta, double rho) {
    if (!(mu > 0.0)) throw std::invalid_argument("CramerLundberg: mu must be > 0");
    if (!(beta >= 0.0)) throw std::invalid_argument("CramerLundberg: beta must be >= 0");
    if (!(rho > 0.0)) throw std::invalid_argument("CramerLundberg: rho must be > 0");
    return LevyModel(CramerLundberg{mu, beta, rho});
}

double LevyModel::laplace_exponent(double phi) const {
    if (phi < 0.0) throw std::domain_error("laplace_exponent: phi must be >= 0");
    if (is_brownian()) {
        const auto& m = bm();
        return m.mu * phi + 0.5 * m.sigma * m.sigma * phi * phi;
    }
    const auto& m = cl();
    return m.mu * phi - m.beta * phi / (m.rho + phi);
}

double LevyModel::psi_prime(double phi) const {
    if (phi < 0.0) throw std::domain_error("psi_prime: phi must be >= 0");
    if (is_brownian()) {
        const auto& m = bm();
        return m.mu + m.sigma * m.sigma * phi;
    }
    const auto& m = cl();
    const double d = m.rho + phi;
    return m.mu - m.beta * m.rho / (d * d);
}

double LevyModel::phi_inverse(double r) const {
    if (r < 0.0) throw std::domain_error("phi_inverse: r must be >= 0");
    if (is_brownian()) {
        const auto& m = bm();
        const double s2 = m.sigma * m.sigma;
        return (-m.mu + std::sqrt(m.mu * m.mu + 2.0 * r * s2)) / s2;
    }
    const auto& m = cl();
    const double d = m.beta + r - m.mu * m.rho;
    return (d + std::sqrt(d * d + 4.0 * r * m.mu * m.rho)) / (2.0 * m.mu);
}

LevyModel LevyModel::negated_drift() const {
    if (is_brownian()) return brownian(-bm().mu, bm().sigma);
    throw std::domain_error("negated_drift: only Brownian models stay spectrally negative");
}

std::string LevyModel::describe() const {
    if (is_brownian()) {
        return "bm(mu=" + std::to_string(bm().mu) + ", sigma=" + std::to_string(bm().sigma) + ")";
    }
    return "cl(mu=" + std::to_string(cl().mu) + ", beta=" + std::to_string(cl().beta) +
           ", rho=" + std::to_string(cl().rho) + ")";
}

double phi_inverse_bisect(const LevyModel& model, double r) {
    if (r < 0.0) throw std::domain_error("phi_inverse_bisect: r must be >= 0");
    // Bracket [Phi(0)-side, hi] grown geometrically until psi(hi) > r.
    double lo = 0.0;
    // For r = 0 the answer is the largest root of psi = 0; start just past any
    // negative-drift root by scanning for psi' > 0 region.
    double hi = 1.0;
    int guard = 0;
    while (model.laplace_exponent(hi) <= r) {
        hi *= 2.0;
        if (++guard > 200) throw std::runtime_error("phi_inverse_bisect: no upper bracket");
    }
    // Largest solution: walk lo up to the last grid point with psi <= r.
    const int kGrid = 1024;
    for (int i = kGrid - 1; i >= 1; --i) {
        const double x = hi * i / kGrid;
        if (model.laplace_exponent(x) <= r) {
            lo = x;
            break;
        }
    }
    double flo = model.laplace_exponent(lo) - r;
    double fhi = model.laplace_exponent(hi) - r;
    for (int i = 0; i < 200 && (hi - lo) > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = model.laplace_exponent(mid) - r;
        if ((fm > 0) == (fhi > 0)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    (void)flo;
    return 0.5 * (lo + hi);
}

}  // namespace ddins

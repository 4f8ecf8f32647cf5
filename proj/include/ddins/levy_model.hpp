#pragma once

#include <stdexcept>
#include <string>
#include <variant>

namespace ddins {

// Linear Brownian motion: X_t = mu*t + sigma*B_t.
struct BrownianDrift {
    double mu;
    double sigma;  // > 0
};

// Cramer-Lundberg: X_t = mu*t - compound Poisson(beta) with Exp(rho) jumps.
struct CramerLundberg {
    double mu;    // > 0
    double beta;  // >= 0
    double rho;   // > 0
};

// A spectrally negative Levy model: only downward jumps by construction.
class LevyModel {
  public:
    static LevyModel brownian(double mu, double sigma);
    static LevyModel cramer_lundberg(double mu, double beta, double rho);

    bool is_brownian() const { return std::holds_alternative<BrownianDrift>(v_); }
    const BrownianDrift& bm() const { return std::get<BrownianDrift>(v_); }
    const CramerLundberg& cl() const { return std::get<CramerLundberg>(v_); }

    // psi(phi) = log E[exp(phi * X_1)], phi >= 0.
    double laplace_exponent(double phi) const;
    double psi_prime(double phi) const;

    // Right inverse of psi: Phi(r) = sup{phi > 0 : psi(phi) = r}, closed form.
    double phi_inverse(double r) const;

    // Drift sign flip; the hat process for Brownian models.
    LevyModel negated_drift() const;

    std::string describe() const;

  private:
    explicit LevyModel(BrownianDrift m) : v_(m) {}
    explicit LevyModel(CramerLundberg m) : v_(m) {}
    std::variant<BrownianDrift, CramerLundberg> v_;
};

// Generic bisection fallback for Phi(r); kept for model variants without a
// closed form and as an independent test oracle. Tolerance 1e-12.
double phi_inverse_bisect(const LevyModel& model, double r);

}  // namespace ddins

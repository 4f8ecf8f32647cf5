#pragma once

#include "ddins/levy_model.hpp"

#include <array>

namespace ddins {

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scale-function evaluator for a fixed (model, r). W is represented as a sum
// of up to two terms c * u^p * exp(s*u), p in {0, 1}, which covers both
// shipped models including the removable-singularity branches (r = 0 with
// zero effective drift, and jump-free Cramer-Lundberg).
class ScaleFn {
  public:
    ScaleFn(const LevyModel& model, double r);

    // First scale function W^(r)(u), u >= 0.
    double W(double u) const;
    // Analytic derivative, u > 0.
    double W_prime(double u) const;
    // int_0^u W(v) dv, u >= 0.
    double W_integral(double u) const;
    // Second scale function Z^(r)(u) = 1 + r * int_0^u W.
    double Z(double u) const { return 1.0 + r_ * W_integral(u); }

    double r() const { return r_; }
    const LevyModel& model() const { return model_; }
    // Cached right inverse Phi(r).
    double phi_r() const { return phi_r_; }

    // Scale functions of the drift-negated (hat) process; Brownian only.
    ScaleFn hat() const { return ScaleFn(model_.negated_drift(), r_); }

  private:
    struct Term {
        double c = 0.0;
        double s = 0.0;
        int pow = 0;  // 0 or 1
    };
    LevyModel model_;
    double r_;
    double phi_r_;
    std::array<Term, 2> terms_{};
    int n_terms_ = 0;

    double eval(double u) const;
    double eval_prime(double u) const;
    double eval_integral(double u) const;
};

}  // namespace ddins

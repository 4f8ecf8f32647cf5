#pragma once

#include "ddins/scale_fn.hpp"

namespace ddins {

struct DrawdownContract {
    LevyModel model;
    double a;      // drawdown trigger size, > 0
    double alpha;  // insured amount, >= 0
    double c;      // cancellation fee, >= 0
    double r;      // discount rate, > 0
};

struct DrawdownState {
    double y;  // initial drawdown, in (0, a)
    double p;  // premium rate, >= 0
};

struct FairPremium {
    double value;    // +inf when divergent
    bool divergent;  // denominator below 1e-12
};

enum class CancelRegime {
    interior,      // interior maximizer of the stopping-level value
    boundary,      // supremum only at the theta >= y plateau; flagged
    never_cancel,  // cancellation condition fails; optimal rule is tau = infinity
};

struct ThetaStar {
    CancelRegime regime;
    double theta;       // meaningful for interior/boundary
    double g_at_theta;  // option value at theta (0 for never_cancel)
};

// Prices the drawdown insurance contract, its fair premium, and the
// cancellable variant with the optimal termination level.
class DrawdownPricer {
  public:
    explicit DrawdownPricer(const DrawdownContract& c);

    // E_{|y}[e^{-r tau_D^+(a)}], y in [0, a].
    double xi(double y) const;
    // Contract value f(y, p) = (p/r + alpha) xi(y) - p/r.
    double price_f(double y, double p) const;
    // Premium solving f(y, p*) = 0.
    FairPremium fair_premium(double y) const;
    // Cancellation payoff f~(y, p) = -f(y, p) - c.
    double f_tilde(double y, double p) const;
    // Value of the rule tau_D^-(theta); constant (= f~(y,p)) for theta >= y.
    double g_value(double y, double p, double theta) const;
    // Does p/r - c > (p/r + alpha) xi(0+) hold?
    bool cancellation_worthwhile(double p) const;
    // Optimal termination level: coarse scan over [0, y] plus golden-section
    // refinement; smallest theta on ties.
    ThetaStar theta_star(double y, double p) const;
    // Cancellable contract value F = f + max(g(theta*), 0).
    double price_F(double y, double p) const;

    const DrawdownContract& contract() const { return contract_; }
    const ScaleFn& scale_fn() const { return sf_; }

  private:
    DrawdownContract contract_;
    ScaleFn sf_;
};

void validate(const DrawdownContract& c);
void validate(const DrawdownContract& c, const DrawdownState& s);

}  // namespace ddins

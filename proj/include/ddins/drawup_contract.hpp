#pragma once

#include "ddins/drawdown_contract.hpp"
#include "ddins/scale_fn.hpp"

#include <optional>

namespace ddins {

struct DrawupContract {
    LevyModel model;
    double a;      // drawdown trigger, > 0
    double b;      // drawup trigger, 0 < b <= a
    double alpha;  // insured amount, >= 0
    double c;      // cancellation fee, >= 0
    double r;      // discount rate, > 0
};

struct DrawupState {
    double y;  // initial drawdown in (0, a)
    double z;  // initial drawup in (0, b)
    double p;  // premium rate >= 0
};

// Which analytic route covers a given (y, z) state.
enum class DuRegime {
    equal_triggers,   // a = b: closed forms, both models
    shifted_exit,     // a > b, y+z >= a: two-sided exit in shifted coordinates
    hat_process_bm,   // a > b, y+z < a: Brownian hat-process evaluation
    mc_required,      // no analytic route (Cramer-Lundberg, a > b, y+z < a)
};

struct LambdaNu {
    double lambda;  // E[e^{-r tau_U^+(b)}; drawup first]
    double nu;      // E[e^{-r tau_D^+(a)}; drawdown first or tie]
};

struct HValue {
    double value;
    bool wlog_ok;  // false when y - theta >= b - z (first-passage term vanishes)
};

struct ThetaStarDu {
    CancelRegime regime;
    double theta;
    double h_at_theta;
    bool war2_ok;
    double war2_theta0;      // first grid theta0 certifying the condition
    bool used_tagged_region; // maximizer sits where y - theta >= b - z
};

// Prices the drawdown contract with drawup contingency and its cancellable
// variant. Operations return nullopt in the mc_required regime; the caller
// (CLI validate / MC oracle) answers there instead.
class DrawupPricer {
  public:
    explicit DrawupPricer(const DrawupContract& c);

    DuRegime regime(double y, double z) const;
    std::optional<LambdaNu> lambda_nu(double y, double z) const;
    std::optional<double> price_k(double y, double z, double p) const;
    std::optional<FairPremium> fair_premium(double y, double z) const;
    std::optional<double> k_tilde(double y, double z, double p) const;
    std::optional<HValue> h_value(double y, double z, double p, double theta) const;
    std::optional<ThetaStarDu> theta_star_du(double y, double z, double p) const;
    std::optional<double> price_K(double y, double z, double p) const;

    const DrawupContract& contract() const { return contract_; }
    const ScaleFn& scale_fn() const { return sf_; }

  private:
    DrawupContract contract_;
    ScaleFn sf_;
    std::optional<ScaleFn> sf_hat_;  // Brownian models only

    LambdaNu lambda_nu_impl(double y, double z) const;       // boundary-permissive
    LambdaNu lambda_nu_chain_bm(double y, double z) const;   // a > b, y+z < a
    double k_tilde_capped(double theta, double u, double p) const;
    double h_equal_triggers(double y, double z, double p, double theta) const;
    double h_hat_bm(double y, double z, double p, double theta) const;
    bool war2_at(double y, double z, double p, double theta0) const;
};

void validate(const DrawupContract& c);
void validate(const DrawupContract& c, const DrawupState& s);

}  // namespace ddins

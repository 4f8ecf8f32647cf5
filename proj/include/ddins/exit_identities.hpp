#pragma once

#include "ddins/scale_fn.hpp"

namespace ddins {

// Fluctuation identities on the canonical interval [0, a]; callers shift
// coordinates. Out-of-domain conventions W(u)=0 / Z(u)=1 for u<0 are applied
// here where the formulas require boundary arguments.

struct ExitProblem {
    const ScaleFn& sf;
    double x;  // start level, 0 <= x <= a
    double a;  // upper barrier
};

// E_x[e^{-r tau_a^+}; tau_a^+ < tau_0^-] = W(x)/W(a).
double up_exit(const ScaleFn& sf, double x, double a);

// E_x[e^{-r tau_0^-}; tau_0^- < tau_a^+] = Z(x) - Z(a) W(x)/W(a).
double down_exit(const ScaleFn& sf, double x, double a);

// E_{|y}[e^{-r tau_D^-(theta)}; min X > -x] = W(x)/W(y-theta+x), 0 <= theta < y.
double drawdown_lower_exit(const ScaleFn& sf, double y, double theta, double x);

// d/dphi [ W(phi)/W(y-theta+phi) ]: the (defective, discounted) density of
// -min X at tau_D^-(theta), evaluated analytically from W and W'.
double drawdown_exit_min_density(const ScaleFn& sf, double y, double theta, double phi);

// Direct evaluation of the triple transform
//   E[e^{-r tau_U^+(b) + u * min X}; max X < v]
// for a drawup of size b from fresh extrema. Inner integrals by adaptive
// quadrature (tol 1e-10); an upper limit < 0 contributes 0.
double drawup_triple_transform(const ScaleFn& sf, double b, double u, double v);

}  // namespace ddins

#pragma once

#include "levyopt/stopping.hpp"

namespace levyopt {

// Laplace-transform side of the representing measure sigma_n of the value
// function V(x) = int G_r(x, y) sigma_n(dy).

// q_hat_n(gamma, x*) = int_{x*}^inf e^{-gamma z} Q_n^{(M)}(z) dz, evaluated
// through the finite sum sum_i n!/(n-i)! e^{-gamma x*}/gamma^{i+1} Q_{n-i}^{(M)}(x*).
double q_hat(const KilledSpec& spec, int n, double gamma);

// E e^{gamma I_T}: PhiHat/(PhiHat + gamma) when I_T is exponential, else the
// Wiener-Hopf quotient r(Phi - gamma)/(Phi (r - psi(gamma))) with the
// removable singularity at gamma = Phi evaluated by series.
double inf_factor_mgf(const KilledSpec& spec, double gamma);

// sigma_hat_n(gamma) = r q_hat / E e^{gamma I_T}.
double sigma_hat(const KilledSpec& spec, int n, double gamma);

// Spectrally positive density sigma(dx) = r Q_n^{(X_T)}(x) dx on [x*, inf).
double sigma_density_spectrally_positive(const KilledSpec& spec, int n, double x);

// V(x) = E[Q_n^{(X)}(X_T + x); X_T + x >= x*] for jump-free models, where
// X_T has the two-sided exponential density; jump models are Monte Carlo only.
double value_spectrally_positive(const KilledSpec& spec, int n, double x);

// H(z) = r^{-1} int_{x*}^z f_I(y - z) sigma(dy); equals Q_n^{(M)}(z).
double h_function(const KilledSpec& spec, int n, double z);

// r int_{x*}^inf G_r(x, y) Q_n^{(X_T)}(y) dy for standard Brownian motion,
// with G_r(x, y) = e^{-sqrt(2r)|x-y|}/sqrt(2r).
double brownian_resolvent_value(double r, int n, double x);

// Evaluable map gamma -> sigma_hat with the threshold precomputed.
struct SigmaTransform {
    KilledSpec spec;
    int n;
    double x_star;
    double operator()(double gamma) const { return sigma_hat(spec, n, gamma); }
};
SigmaTransform make_sigma_transform(const KilledSpec& spec, int n);

// Evaluable density x -> r Q_n^{(X)}(x) on [x*, inf), spectrally positive.
struct SigmaDensity {
    KilledSpec spec;
    int n;
    double x_star;
    double operator()(double x) const {
        return sigma_density_spectrally_positive(spec, n, x);
    }
};
SigmaDensity make_sigma_density(const KilledSpec& spec, int n);

} // namespace levyopt

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "levyopt/appell.hpp"
#include "levyopt/levy.hpp"

namespace levyopt {

// Law of M_T: Exp(rate) on (0, inf).
struct ExponentialPlus {
    double rate;
};
// Law of I_T: negative of an Exp(rate), on (-inf, 0).
struct ExponentialMinus {
    double rate;
};
// Factor known through its cumulants only (no tractable density).
struct CumulantOnly {
    CumulantSequence kappa;
};

using FactorDistribution = std::variant<ExponentialPlus, ExponentialMinus, CumulantOnly>;

CumulantSequence factor_cumulants(const FactorDistribution& f, int order);

// Distribution descriptors of the Wiener-Hopf factors of a killed model:
// X_T = M_T + I'_T in law, cumulants additive across the factorization.
struct WienerHopfFactors {
    FactorDistribution sup_factor; // M_T
    FactorDistribution inf_factor; // I_T
    CumulantSequence xT_cumulants;
};

// One-sided (or jump-free) models only; two-sided models raise
// UnsupportedError and are served by the Monte Carlo estimator instead.
WienerHopfFactors wiener_hopf_factors(const KilledSpec& spec, int order = kMaxOrder);

// Appell family of a factor: closed form (x -+ n/rate) x^{n-1} for the
// exponential kinds, cumulant-built otherwise.
std::vector<Polynomial> appell_of_factor(const FactorDistribution& f, int n);

// Q^{(M)} for spectrally positive models by forward substitution in
// Q_m^{(X)} = Q_m^{(M)} + (m/PhiHat) Q_{m-1}^{(M)}.
std::vector<Polynomial> recover_sup_appell_spectrally_positive(const KilledSpec& spec,
                                                               int n);

} // namespace levyopt

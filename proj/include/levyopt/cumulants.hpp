#pragma once

#include <Eigen/Core>

#include "levyopt/errors.hpp"
#include "levyopt/polynomial.hpp"

namespace levyopt {

// Cumulants kappa_0..kappa_N of a scalar random variable, kappa_0 = 0.
struct CumulantSequence {
    Eigen::VectorXd kappa;

    CumulantSequence() : kappa(Eigen::VectorXd::Zero(2)) {}
    explicit CumulantSequence(Eigen::VectorXd k);

    int order() const { return static_cast<int>(kappa.size()) - 1; }

    // From kappa_1..kappa_N (kappa_0 implied).
    static CumulantSequence from_first(std::initializer_list<double> k);
    static CumulantSequence zeros(int order);
};

// Raw moments mu_0..mu_N, mu_0 = 1.
struct MomentSequence {
    Eigen::VectorXd mu;

    MomentSequence() : mu(Eigen::VectorXd::Ones(1)) {}
    explicit MomentSequence(Eigen::VectorXd m);

    int order() const { return static_cast<int>(mu.size()) - 1; }
};

// Classical log-series recursion kappa_{m+1} = mu_{m+1} - sum C(m,k) kappa_{k+1} mu_{m-k}.
CumulantSequence moments_to_cumulants(const MomentSequence& mu);

// Inverse recursion mu_{m+1} = sum C(m,k) kappa_{k+1} mu_{m-k}.
MomentSequence cumulants_to_moments(const CumulantSequence& kappa);

// Validation: the Hankel matrix H_ij = mu_{i+j} of order floor(N/2) is
// positive semidefinite for any genuine moment sequence.
bool hankel_psd(const MomentSequence& mu, double tol = 1e-9);

// Componentwise sum: cumulants of an independent sum.
CumulantSequence operator+(const CumulantSequence& a, const CumulantSequence& b);
CumulantSequence operator-(const CumulantSequence& a, const CumulantSequence& b);

// Reference families.
CumulantSequence normal_cumulants(double mean, double variance, int order);
// Exp(lambda): kappa_k = (k-1)!/lambda^k.
CumulantSequence exponential_cumulants(double lambda, int order);
// -Exp(rho): kappa_k = (-1)^k (k-1)!/rho^k.
CumulantSequence negated_exponential_cumulants(double rho, int order);
CumulantSequence point_mass_cumulants(double c, int order);

} // namespace levyopt

#pragma once

#include <vector>

#include "levyopt/cumulants.hpp"
#include "levyopt/polynomial.hpp"

namespace levyopt {

// Appell family Q_0..Q_n of the variable with the given cumulants.
// Q_0 = 1, each Q_m monic of degree m, Q_m' = m Q_{m-1}.
// Built from Q_m(x) = sum_k C(m,k) x^k a_{m-k} where the constants
// a_j = Q_j(0) are the Taylor coefficients of exp(-K(u)).
std::vector<Polynomial> appell_from_cumulants(const CumulantSequence& kappa, int n);

// The constants Q_0(0)..Q_n(0) alone (Cauchy-product exponential of -K).
Eigen::VectorXd appell_constants(const CumulantSequence& kappa, int n);

// Single-argument convolution: z -> Q_m^{(eta1+eta2)}(z) =
// sum_k C(m,k) qa[k](z) qb[m-k](0).
Polynomial appell_convolve(const std::vector<Polynomial>& qa,
                           const std::vector<Polynomial>& qb, int m);

// E[Q(eta + z)] as a polynomial in z, for eta with raw moments mu.
// Used by the mean-value property and the representation checks.
Polynomial expectation_shift_poly(const Polynomial& q, const MomentSequence& mu);

} // namespace levyopt

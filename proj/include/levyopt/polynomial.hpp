#pragma once

#include <Eigen/Core>

#include "levyopt/errors.hpp"

namespace levyopt {

// Highest order handled by the cumulant/Appell machinery. Keeps binomial
// coefficients exactly representable in double.
inline constexpr int kMaxOrder = 20;

// C(n, k) from a precomputed Pascal table, exact for n <= 40.
double binomial(int n, int k);

// Dense polynomial in the monomial basis: coeffs[k] multiplies x^k.
// The zero polynomial is represented by a single zero coefficient.
struct Polynomial {
    Eigen::VectorXd coeffs;

    Polynomial() : coeffs(Eigen::VectorXd::Zero(1)) {}
    explicit Polynomial(Eigen::VectorXd c);
    Polynomial(std::initializer_list<double> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.size() == 1 && coeffs[0] == 0.0; }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(double c);
    // x^k
    static Polynomial monomial(int k, double c = 1.0);
};

// Horner evaluation.
double eval(const Polynomial& p, double x);

// Formal derivative.
Polynomial derivative(const Polynomial& p);

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(double s, const Polynomial& p);

// Taylor shift: returns q with q(x) = p(x + c).
Polynomial shift(const Polynomial& p, double c);

// Drops leading coefficients with |c| <= tol (tol = 0 drops exact zeros only).
Polynomial trimmed(const Polynomial& p, double tol = 0.0);

} // namespace levyopt

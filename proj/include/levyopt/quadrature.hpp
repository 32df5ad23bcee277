#pragma once

#include <functional>

#include <Eigen/Core>

#include "levyopt/polynomial.hpp"

namespace levyopt {

// Adaptive Gauss-Kronrod (15-point) on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, double rel_tol = 1e-12);

// Integral over [a, inf) of an integrand with exponential decay of the given
// rate: truncated at a + 40/rate.
double integrate_exp_tail(const std::function<double(double)>& f, double a,
                          double rate, double abs_tol = 1e-10);

// Gauss-Laguerre rule for int_0^inf f(x) e^{-x} dx, nodes via Golub-Welsch.
struct GaussLaguerre {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
    explicit GaussLaguerre(int n);

    double apply(const std::function<double(double)>& f) const;
};

// int_c^inf P(z) e^{-s z} dz = e^{-s c} sum_i P^(i)(c) / s^{i+1}, s > 0.
double exp_tail_integral(const Polynomial& p, double s, double c);

// int_a^b P(z) e^{s z} dz in closed form (exact up to rounding).
double poly_exp_integral(const Polynomial& p, double s, double a, double b);

} // namespace levyopt

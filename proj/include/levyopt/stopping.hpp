#pragma once

#include <functional>
#include <vector>

#include "levyopt/wiener_hopf.hpp"

namespace levyopt {

// Solution bundle for sup_tau E_x[e^{-r tau} (X_tau^+)^n]: the threshold
// x* (largest nonnegative root of Q_n^{(M_T)}), the polynomial itself, and
// the value function where a closed form exists.
struct StoppingSolution {
    int n;
    double x_star;
    Polynomial q_sup; // Q_n^{(M_T)}
    KilledSpec spec;
    WienerHopfFactors factors;
    std::function<double(double)> value_fn;

    double value(double x) const { return value_fn(x); }
};

// Guard for E(M_T^n) < inf. All supported jump laws have every moment, so
// this is an explicit hook for future law types.
bool moment_condition(const KilledSpec& spec, int n);

double threshold(const KilledSpec& spec, int n);

double value(const KilledSpec& spec, int n, double x);

StoppingSolution solve(const KilledSpec& spec, int n);

// E_0[Q(M_T + x) 1{M_T + x > a}] for M_T ~ Exp(phi), by Gauss-Laguerre
// (exact for polynomial integrands). This is the right-hand side of the
// fluctuation identity.
double expected_sup_appell(double phi, const Polynomial& q, double x, double a);

struct RepresentationReport {
    bool continuity = false;
    bool decay = false;
    bool stop_region_equality = false;
    bool majorization = false;
    bool smooth_fit = false;
    double max_slope = 0.0;
    double slope_bound = 0.0;
    double left_tail_value = 0.0;
    double max_stop_gap = 0.0;
    double min_excess = 0.0;
    double smooth_fit_gap = 0.0;

    bool conditions_hold() const {
        return continuity && decay && stop_region_equality && majorization;
    }
};

// Grid-based check of the excessive-representation conditions:
// continuity proxy, decay as x -> -inf, V = g on the stopping region,
// V >= g everywhere, plus the smooth-fit gap.
RepresentationReport verify_representation_conditions(const StoppingSolution& sol,
                                                      const std::vector<double>& grid);

// |V'(x*-) - n (x*)^{n-1}| by Richardson-refined one-sided differences.
double smooth_fit_check(const StoppingSolution& sol, double h);

// Q_n^{(M)} < 0 at `samples` equispaced interior points of (0, x*).
bool negativity_property(const KilledSpec& spec, int n, int samples);

// Thresholds x*_1 <= x*_2 <= ... <= x*_{n_max}.
bool root_monotonicity(const KilledSpec& spec, int n_max);

} // namespace levyopt

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "levyopt/cumulants.hpp"
#include "levyopt/levy.hpp"

namespace levyopt {

struct SimConfig {
    double dt = 1e-3;
    long n_paths = 10000;
    std::uint64_t seed = 1;
    double t_cap = 0.0; // 0: use default_t_cap(r)
};

// Horizon cap for discount-weighted payoff estimators.
double default_t_cap(double r);
// Nonempty when the configured cap risks visible truncation bias.
std::string config_warning(const SimConfig& cfg, const KilledSpec& spec);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long n_effective = 0;
};

struct PathSummary {
    double t = 0.0; // min(T, t_cap)
    double x_end = 0.0;
    double x_max = 0.0;
    double x_min = 0.0;
    long jump_count = 0;
};

// Order-independent deterministic reduction.
double pairwise_sum(std::span<const double> v);

McEstimate estimate_from_samples(std::span<const double> v);

// One killed path: T ~ Exp(r) sampled from the stream, Euler grid increments
// plus exact compound-Poisson jumps, extremes monitored on the dt grid and at
// the endpoint. Deterministic given (seed, path_index).
PathSummary simulate_killed_path(const KilledSpec& spec, double x0,
                                 const SimConfig& cfg, long path_index);

struct PayoffReport {
    McEstimate estimate;
    double threshold = 0.0;
    double t_cap = 0.0;
    double bias_bound = 0.0; // e^{-r t_cap} * sup observed payoff
    long n_crossed = 0;
};

// E_x[e^{-r tau_a} (X_{tau_a}^+)^n], tau_a the first grid time with X > a.
// Paths run undiscounted to t_cap; killing enters as the discount weight.
PayoffReport threshold_payoff(const KilledSpec& spec, int n, double x0, double a,
                              const SimConfig& cfg);

struct FluctuationReport {
    McEstimate mc;
    double analytic = 0.0;
    double z_score = 0.0;
    bool pass = false;
    double bias_bound = 0.0;
};

// MC estimate of E_x[e^{-r H_a} X_{H_a}^n] against the analytic
// E_0[Q_n^{(M)}(M_T + x) 1{M_T + x > a}]; pass iff |z| <= 3.
FluctuationReport fluctuation_identity_check(const KilledSpec& spec, int n, double x,
                                             double a, const SimConfig& cfg);

struct ScanReport {
    std::vector<double> thresholds;
    std::vector<McEstimate> payoffs;
    std::vector<double> z_vs_star; // (pay(x*) - pay(a)) / SE_diff
    double x_star = 0.0;
    int star_index = -1;
    bool pass = false;
};

// Common-random-number payoff estimates per threshold; the scan passes when
// no threshold beats x* by more than 3 SE of the paired difference.
ScanReport optimality_scan(const KilledSpec& spec, int n, double x0,
                           const std::vector<double>& thresholds, const SimConfig& cfg);

struct FactorCumulantReport {
    CumulantSequence sup;   // running maximum M_T
    CumulantSequence inf;   // running minimum I_T
    Eigen::VectorXd sup_se; // jackknife SEs, index k
    Eigen::VectorXd inf_se;
    Eigen::VectorXd sum_se; // SE of kappa_k(M) + kappa_k(I)
};

// Sample cumulants of path extremes: exact k-statistics for k <= 4, plug-in
// central-moment estimates for k in {5, 6}; delete-group jackknife SEs.
FactorCumulantReport empirical_factor_cumulants(const KilledSpec& spec, int k_max,
                                                const SimConfig& cfg);

} // namespace levyopt

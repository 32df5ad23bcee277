#include "levyopt/verify.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "levyopt/quadrature.hpp"
#include "levyopt/roots.hpp"
#include "levyopt/sigma.hpp"
#include "levyopt/stopping.hpp"

namespace levyopt {

double coeff_distance(const Polynomial& a, const Polynomial& b) {
    const Eigen::Index n = std::max(a.coeffs.size(), b.coeffs.size());
    double d = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ca = i < a.coeffs.size() ? a.coeffs[i] : 0.0;
        const double cb = i < b.coeffs.size() ? b.coeffs[i] : 0.0;
        d = std::max(d, std::abs(ca - cb));
    }
    return d;
}

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

void add(SuiteResult& suite, const std::string& name, bool pass,
         const std::string& detail = {}) {
    suite.checks.push_back({name, pass, detail});
}

// Probabilists' Hermite polynomial from the explicit alternating sum.
Polynomial hermite_explicit(int m) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(m + 1);
    double mfact = 1.0;
    for (int i = 2; i <= m; ++i) mfact *= i;
    for (int l = 0; 2 * l <= m; ++l) {
        double denom = 1.0;
        for (int i = 2; i <= m - 2 * l; ++i) denom *= i;
        for (int i = 2; i <= l; ++i) denom *= i;
        denom *= std::pow(2.0, l);
        c[m - 2 * l] = ((l % 2 == 0) ? 1.0 : -1.0) * mfact / denom;
    }
    return Polynomial(std::move(c));
}

struct NamedCumulants {
    std::string name;
    CumulantSequence kappa;
};

std::vector<NamedCumulants> reference_families(int order) {
    return {
        {"exp(0.5)", exponential_cumulants(0.5, order)},
        {"exp(1)", exponential_cumulants(1.0, order)},
        {"exp(3)", exponential_cumulants(3.0, order)},
        {"normal(0,1)", normal_cumulants(0.0, 1.0, order)},
        {"normal(1.5,2.25)", normal_cumulants(1.5, 2.25, order)},
        {"pointmass(0.7)", point_mass_cumulants(0.7, order)},
    };
}

struct NamedSpec {
    std::string name;
    KilledSpec spec;
};

KilledSpec bm_spec(double r) { return KilledSpec(LevyModel{0.0, 1.0, {}}, r); }

KilledSpec sn_jump_spec() {
    return KilledSpec(
        LevyModel{0.0, 1.0, {JumpComponent{1.0, ExponentialDown{2.0}}}}, 1.0);
}

KilledSpec sp_jump_spec() {
    return KilledSpec(
        LevyModel{-0.5, 0.5, {JumpComponent{2.0, ExponentialUp{3.0}}}}, 1.0);
}

std::vector<NamedSpec> one_sided_models() {
    return {
        {"bm r=0.5", bm_spec(0.5)},
        {"bm r=2", bm_spec(2.0)},
        {"drifted bm", KilledSpec(LevyModel{0.4, 1.0, {}}, 1.0)},
        {"pure drift", KilledSpec(LevyModel{1.0, 0.0, {}}, 1.0)},
        {"sn jumps", sn_jump_spec()},
        {"sn mixed",
         KilledSpec(LevyModel{0.2,
                              0.8,
                              {JumpComponent{0.7, ExponentialDown{2.5}},
                               JumpComponent{0.4, PointMass{-0.6}}}},
                    0.8)},
        {"sp jumps", sp_jump_spec()},
        {"sp mixed",
         KilledSpec(LevyModel{-0.3,
                              0.6,
                              {JumpComponent{0.5, ExponentialUp{2.0}},
                               JumpComponent{0.3, PointMass{0.4}}}},
                    1.2)},
    };
}

} // namespace

SuiteResult run_appell_suite() {
    SuiteResult suite{"appell", {}};

    // mean-value property: E[Q_k(eta + z)] = z^k as a polynomial identity
    {
        double worst = 0.0;
        for (const auto& fam : reference_families(10)) {
            const MomentSequence mu = cumulants_to_moments(fam.kappa);
            const auto q = appell_from_cumulants(fam.kappa, 8);
            for (int k = 0; k <= 8; ++k) {
                const Polynomial got = expectation_shift_poly(q[k], mu);
                worst = std::max(worst, coeff_distance(got, Polynomial::monomial(k)));
            }
        }
        add(suite, "mean-value property (k <= 8)", worst <= 1e-10, "max " + fmt(worst));
    }

    // derivative recursion and shape
    {
        double worst = 0.0;
        bool shape_ok = true;
        for (const auto& fam : reference_families(10)) {
            const auto q = appell_from_cumulants(fam.kappa, 10);
            shape_ok = shape_ok && q[0].degree() == 0 && q[0].coeffs[0] == 1.0;
            for (int m = 1; m <= 10; ++m) {
                shape_ok = shape_ok && q[m].degree() == m &&
                           std::abs(q[m].coeffs[m] - 1.0) <= 1e-12;
                worst = std::max(
                    worst, coeff_distance(derivative(q[m]), double(m) * q[m - 1]));
            }
        }
        add(suite, "derivative recursion Q_m' = m Q_{m-1}", worst <= 1e-12,
            "max " + fmt(worst));
        add(suite, "Q_0 = 1 and Q_m monic of degree m", shape_ok);
    }

    // moment/cumulant round trip
    {
        CumulantSequence kappa = CumulantSequence::zeros(10);
        for (int k = 1; k <= 10; ++k) kappa.kappa[k] = 0.3 + 0.7 / k - 0.1 * (k % 3);
        const CumulantSequence back = moments_to_cumulants(cumulants_to_moments(kappa));
        const double d = (back.kappa - kappa.kappa).cwiseAbs().maxCoeff();
        add(suite, "cumulant/moment round trip (order 10)", d <= 1e-10, "max " + fmt(d));
    }

    // binomial sanity: point masses at 0 convolve to z^m
    {
        const auto q0 = appell_from_cumulants(CumulantSequence::zeros(8), 8);
        double worst = 0.0;
        for (int m = 0; m <= 8; ++m)
            worst = std::max(
                worst, coeff_distance(appell_convolve(q0, q0, m), Polynomial::monomial(m)));
        add(suite, "binomial identity for point masses", worst <= 1e-12,
            "max " + fmt(worst));
    }

    // Hermite reproduction
    {
        const auto q = appell_from_cumulants(normal_cumulants(0.0, 1.0, 10), 10);
        double worst = 0.0;
        for (int m = 0; m <= 10; ++m)
            worst = std::max(worst, coeff_distance(q[m], hermite_explicit(m)));
        add(suite, "Hermite match for N(0,1) (m <= 10)", worst <= 1e-10,
            "max " + fmt(worst));
    }
    return suite;
}

SuiteResult run_wh_suite() {
    SuiteResult suite{"wh", {}};

    // cumulant additivity kappa(X_T) = kappa(M_T) + kappa(I_T)
    {
        double worst = 0.0;
        for (const auto& m : one_sided_models()) {
            const WienerHopfFactors f = wiener_hopf_factors(m.spec, 8);
            const CumulantSequence sup = factor_cumulants(f.sup_factor, 8);
            const CumulantSequence inf = factor_cumulants(f.inf_factor, 8);
            for (int k = 1; k <= 8; ++k) {
                const double lhs = f.xT_cumulants.kappa[k];
                const double rhs = sup.kappa[k] + inf.kappa[k];
                worst = std::max(worst,
                                 std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
            }
        }
        add(suite, "Wiener-Hopf cumulant additivity (k <= 8)", worst <= 1e-8,
            "max rel " + fmt(worst));
    }

    // Brownian X_T is Laplace(sqrt(2r)): moments match the 2r/(2r-u^2) series
    {
        double worst = 0.0;
        for (double r : {0.5, 2.0}) {
            const MomentSequence mu = xT_moments(bm_spec(r), 10);
            for (int k = 0; k <= 10; ++k) {
                double expect = 0.0;
                if (k % 2 == 0) {
                    // mu_{2j} = (2j)!/(2r)^j
                    expect = 1.0;
                    for (int i = 2; i <= k; ++i) expect *= i;
                    expect /= std::pow(2.0 * r, k / 2);
                }
                worst = std::max(worst, std::abs(mu.mu[k] - expect) /
                                            std::max(1.0, std::abs(expect)));
            }
        }
        add(suite, "Brownian X_T Laplace moment series", worst <= 1e-10,
            "max rel " + fmt(worst));
    }

    // phi root: residual and monotonicity in r
    {
        double worst = 0.0;
        bool monotone = true;
        for (const auto& m : one_sided_models()) {
            if (!spectrally_negative(m.spec.model) || !(m.spec.model.gaussian_var > 0.0 ||
                                                        m.spec.model.drift > 0.0))
                continue;
            double prev = 0.0;
            for (double r : {0.25, 0.5, 1.0, 2.0, 4.0}) {
                const KilledSpec s(m.spec.model, r);
                const double phi = phi_root(s);
                worst = std::max(worst,
                                 std::abs(psi(s.model, phi) - r) / std::max(1.0, r));
                monotone = monotone && phi > prev;
                prev = phi;
            }
        }
        add(suite, "psi(Phi(r)) = r to 1e-12", worst <= 1e-12, "max " + fmt(worst));
        add(suite, "Phi strictly increasing in r", monotone);
    }

    // Brownian convolution identity
    {
        double worst = 0.0;
        for (double r : {0.5, 2.0}) {
            const KilledSpec s = bm_spec(r);
            const WienerHopfFactors f = wiener_hopf_factors(s, 8);
            const auto qm = appell_of_factor(f.sup_factor, 6);
            const auto qi = appell_of_factor(f.inf_factor, 6);
            const auto qx = appell_from_cumulants(f.xT_cumulants, 6);
            for (int m = 0; m <= 6; ++m)
                worst = std::max(worst,
                                 coeff_distance(appell_convolve(qm, qi, m), qx[m]));
        }
        add(suite, "convolution matches X_T Appell family (BM)", worst <= 1e-8,
            "max " + fmt(worst));
    }
    return suite;
}

SuiteResult run_stopping_suite() {
    SuiteResult suite{"stopping", {}};

    // spectrally negative closed form
    {
        double worst_x = 0.0, worst_v = 0.0;
        for (const auto& m : one_sided_models()) {
            if (!spectrally_negative(m.spec.model)) continue;
            if (!(m.spec.model.gaussian_var > 0.0 || m.spec.model.drift > 0.0)) continue;
            const double phi = phi_root(m.spec);
            for (int n = 1; n <= 4; ++n) {
                const StoppingSolution sol = solve(m.spec, n);
                worst_x = std::max(worst_x, std::abs(sol.x_star - n / phi));
                const double amp = std::pow(n / phi, n) * std::exp(-double(n));
                for (double x = -5.0; x <= sol.x_star; x += 0.25) {
                    const double expect = x >= sol.x_star ? std::pow(x, n)
                                                          : amp * std::exp(x * phi);
                    worst_v = std::max(worst_v, std::abs(sol.value(x) - expect) /
                                                    std::max(1e-300, expect));
                }
            }
        }
        add(suite, "x* = n/Phi(r)", worst_x <= 1e-10, "max " + fmt(worst_x));
        add(suite, "closed-form value function", worst_v <= 1e-8,
            "max rel " + fmt(worst_v));
    }

    // smooth fit
    {
        double worst = 0.0;
        for (const auto& m : one_sided_models()) {
            if (!spectrally_negative(m.spec.model)) continue;
            if (!(m.spec.model.gaussian_var > 0.0 || m.spec.model.drift > 0.0)) continue;
            for (int n = 1; n <= 4; ++n)
                worst = std::max(worst, smooth_fit_check(solve(m.spec, n), 1e-5));
        }
        add(suite, "smooth fit gap <= 1e-6 at h = 1e-5", worst <= 1e-6,
            "max " + fmt(worst));
    }

    // negativity of Q_n^{(M)} on (0, x*) and the non-negative counterexample
    {
        bool ok = true;
        for (const auto& m : one_sided_models())
            for (int n = 1; n <= 6; ++n) ok = ok && negativity_property(m.spec, n, 100);
        add(suite, "Q_n^{(M)} < 0 on (0, x*)", ok);

        // For a nonnegative eta with 2 (E eta)^2 > E eta^2 the property fails
        // at 0: Q_2(0) > 0.
        const CumulantSequence kappa = CumulantSequence::from_first({1.0, 0.5});
        const auto q = appell_from_cumulants(kappa, 2);
        add(suite, "Q_2^{(eta)}(0) > 0 when 2(E eta)^2 > E eta^2",
            eval(q[2], 0.0) > 0.0, "Q_2(0) = " + fmt(eval(q[2], 0.0)));
    }

    // threshold monotonicity in n
    {
        bool ok = true;
        for (const auto& m : one_sided_models()) ok = ok && root_monotonicity(m.spec, 8);
        add(suite, "x*_1 <= ... <= x*_8", ok);
    }

    // fluctuation identity, analytic Brownian form
    {
        double worst = 0.0;
        for (double r : {0.5, 2.0}) {
            const KilledSpec s = bm_spec(r);
            const double rho = std::sqrt(2.0 * r);
            const auto family =
                appell_of_factor(wiener_hopf_factors(s).sup_factor, 4);
            for (int n = 1; n <= 4; ++n)
                for (double a : {1.0, 2.0, 3.0})
                    for (double x : {0.0, 0.5}) {
                        if (a <= x) continue;
                        const double lhs = expected_sup_appell(rho, family[n], x, a);
                        const double rhs = std::pow(a, n) * std::exp(-rho * (a - x));
                        worst = std::max(worst, std::abs(lhs - rhs));
                    }
        }
        add(suite, "fluctuation identity (analytic, BM)", worst <= 1e-8,
            "max " + fmt(worst));
    }

    // value monotone and convex on a grid; representation conditions
    {
        bool ok = true;
        const StoppingSolution sol = solve(bm_spec(0.5), 2);
        double prev = sol.value(-10.0), prev_slope = 0.0;
        bool first = true;
        for (double x = -9.9; x <= 10.0; x += 0.1) {
            const double v = sol.value(x);
            const double slope = v - prev;
            ok = ok && slope >= -1e-12;
            if (!first) ok = ok && slope >= prev_slope - 1e-9;
            prev_slope = slope;
            prev = v;
            first = false;
        }
        add(suite, "value nondecreasing and convex (BM)", ok);

        std::vector<double> grid;
        for (double x = -10.0; x <= 10.0; x += 0.01) grid.push_back(x);
        const RepresentationReport rep = verify_representation_conditions(sol, grid);
        add(suite, "representation conditions (a)-(d) + smooth fit",
            rep.conditions_hold() && rep.smooth_fit);
    }
    return suite;
}

SuiteResult run_sigma_suite() {
    SuiteResult suite{"sigma", {}};

    // q_hat closed sum vs adaptive quadrature of the defining integral
    {
        double worst = 0.0;
        for (const auto& m : one_sided_models()) {
            for (int n : {1, 3}) {
                const WienerHopfFactors f = wiener_hopf_factors(m.spec);
                const auto family = appell_of_factor(f.sup_factor, n);
                const double xs = largest_nonneg_root(family[n]);
                for (double gamma : {0.5, 1.0, 2.0}) {
                    const double closed = q_hat(m.spec, n, gamma);
                    const double numeric = integrate_exp_tail(
                        [&](double z) {
                            return std::exp(-gamma * z) * eval(family[n], z);
                        },
                        xs, gamma, 1e-12);
                    worst = std::max(worst, std::abs(closed - numeric));
                }
            }
        }
        add(suite, "q_hat matches quadrature", worst <= 1e-9, "max " + fmt(worst));
    }

    // transform consistency, spectrally positive: sigma_hat = transform of
    // the density r Q_n^{(X)}
    {
        double worst = 0.0;
        for (const NamedSpec& m :
             {NamedSpec{"sp jumps", sp_jump_spec()}, NamedSpec{"bm", bm_spec(0.5)}}) {
            for (int n : {1, 2, 3}) {
                const double xs = threshold(m.spec, n);
                for (double gamma : {0.5, 1.0, 2.0, 5.0}) {
                    const double lhs = sigma_hat(m.spec, n, gamma);
                    const double rhs = integrate_exp_tail(
                        [&](double x) {
                            return std::exp(-gamma * x) *
                                   sigma_density_spectrally_positive(m.spec, n, x);
                        },
                        xs, gamma, 1e-12);
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
            }
        }
        add(suite, "sigma_hat matches density transform (spectrally positive)",
            worst <= 1e-6, "max " + fmt(worst));
    }

    // series form of sigma_hat at small gamma
    {
        double worst = 0.0;
        for (const auto& m : one_sided_models()) {
            const int n = 2;
            const WienerHopfFactors f = wiener_hopf_factors(m.spec);
            const CumulantSequence inf_kappa = factor_cumulants(f.inf_factor, 16);
            const Eigen::VectorXd qi0 = appell_constants(inf_kappa, 16);
            for (double gamma : {0.05, 0.1, 0.2}) {
                double series = 0.0;
                double gk = 1.0, kfact = 1.0;
                for (int k = 0; k <= 16; ++k) {
                    series += gk / kfact * qi0[k];
                    gk *= gamma;
                    kfact *= (k + 1.0);
                }
                series *= m.spec.r * q_hat(m.spec, n, gamma);
                worst = std::max(worst, std::abs(series - sigma_hat(m.spec, n, gamma)) /
                                            std::max(1.0, sigma_hat(m.spec, n, gamma)));
            }
        }
        add(suite, "sigma_hat series form (small gamma)", worst <= 1e-6,
            "max rel " + fmt(worst));
    }

    // H identity: H(z) = Q_n^{(M)}(z)
    {
        double worst = 0.0;
        for (const NamedSpec& m :
             {NamedSpec{"sp jumps", sp_jump_spec()}, NamedSpec{"bm", bm_spec(0.5)}}) {
            const double phi_hat = hat_phi_root(m.spec);
            for (int n = 1; n <= 4; ++n) {
                const auto family =
                    appell_of_factor(wiener_hopf_factors(m.spec).sup_factor, n);
                const double xs = largest_nonneg_root(family[n]);
                for (int i = 0; i < 20; ++i) {
                    const double z = xs + (10.0 / phi_hat) * i / 19.0;
                    worst = std::max(worst, std::abs(h_function(m.spec, n, z) -
                                                     eval(family[n], z)));
                }
            }
        }
        add(suite, "H(z) = Q_n^{(M)}(z)", worst <= 1e-8, "max " + fmt(worst));
    }

    // nonnegativity of Q_{n-i}^{(M)}(x*_n)
    {
        bool ok = true;
        for (const auto& m : one_sided_models()) {
            const int n = 5;
            const auto family =
                appell_of_factor(wiener_hopf_factors(m.spec).sup_factor, n);
            const double xs = largest_nonneg_root(family[n]);
            for (int i = 0; i <= n; ++i)
                ok = ok && eval(family[n - i], xs) >= -1e-10;
        }
        add(suite, "Q_{n-i}^{(M)}(x*_n) >= 0", ok);
    }

    // Brownian resolvent representation
    {
        double worst = 0.0;
        for (double r : {0.5, 2.0}) {
            const KilledSpec s = bm_spec(r);
            for (int n = 1; n <= 4; ++n) {
                const StoppingSolution sol = solve(s, n);
                for (double x = -5.0; x <= 5.0; x += 0.5) {
                    const double lhs = brownian_resolvent_value(r, n, x);
                    worst = std::max(worst, std::abs(lhs - sol.value(x)) /
                                                std::max(1.0, std::abs(sol.value(x))));
                }
            }
        }
        add(suite, "Brownian resolvent representation", worst <= 1e-6,
            "max rel " + fmt(worst));
    }

    // transform positivity and decay
    {
        bool ok = true;
        for (const auto& m : one_sided_models()) {
            double prev = std::numeric_limits<double>::infinity();
            for (double gamma : {0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
                const double v = sigma_hat(m.spec, 2, gamma);
                ok = ok && v >= 0.0 && v <= prev * (1.0 + 1e-12);
                prev = v;
            }
        }
        add(suite, "sigma_hat nonnegative and decaying", ok);
    }
    return suite;
}

std::vector<SuiteResult> run_suites(const std::string& which) {
    std::vector<SuiteResult> out;
    const bool all = which == "all";
    if (all || which == "appell") out.push_back(run_appell_suite());
    if (all || which == "wh") out.push_back(run_wh_suite());
    if (all || which == "stopping") out.push_back(run_stopping_suite());
    if (all || which == "sigma") out.push_back(run_sigma_suite());
    if (out.empty())
        throw InvalidArgument("unknown suite '" + which +
                              "' (expected all|appell|wh|stopping|sigma)");
    return out;
}

} // namespace levyopt

#include "levyopt/stopping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "levyopt/quadrature.hpp"
#include "levyopt/roots.hpp"

namespace levyopt {

bool moment_condition(const KilledSpec& spec, int n) {
    (void)spec;
    return n >= 0; // point-mass and exponential jump laws have all moments
}

StoppingSolution solve(const KilledSpec& spec, int n) {
    if (n < 1) throw InvalidArgument("solve: reward power n must be >= 1");
    if (n > kMaxOrder)
        throw OrderError("solve: order cap is " + std::to_string(kMaxOrder));
    if (!moment_condition(spec, n))
        throw UnsupportedError("solve: E(M_T^n) is not finite for this model");

    WienerHopfFactors factors = wiener_hopf_factors(spec);
    std::vector<Polynomial> family = appell_of_factor(factors.sup_factor, n);
    Polynomial q_sup = family[n];
    const double x_star = largest_nonneg_root(q_sup);
    if (std::abs(eval(q_sup, x_star)) > 1e-10 * std::max(1.0, q_sup.coeffs.cwiseAbs().sum()))
        throw Error("solve: threshold does not zero Q_n^{(M)}");

    std::function<double(double)> value_fn;
    if (const auto* ep = std::get_if<ExponentialPlus>(&factors.sup_factor)) {
        // M_T ~ Exp(phi): V(x) = x^n on [x*, inf),
        // (n/phi)^n e^{-n} e^{x phi} below.
        const double phi = ep->rate;
        const double amp = std::pow(x_star, n) * std::exp(-double(n));
        value_fn = [n, x_star, phi, amp](double x) {
            if (x >= x_star) return std::pow(x, n);
            return amp * std::exp(phi * x);
        };
    } else {
        value_fn = [](double) -> double {
            throw UnsupportedError(
                "value: the sup factor has no closed-form density for this model "
                "(spectrally positive with jumps); evaluate the value by Monte "
                "Carlo (mc threshold payoff) instead");
        };
    }
    return StoppingSolution{n, x_star, std::move(q_sup), spec, std::move(factors),
                            std::move(value_fn)};
}

double threshold(const KilledSpec& spec, int n) { return solve(spec, n).x_star; }

double value(const KilledSpec& spec, int n, double x) { return solve(spec, n).value(x); }

double expected_sup_appell(double phi, const Polynomial& q, double x, double a) {
    if (!(phi > 0.0)) throw InvalidArgument("expected_sup_appell: phi must be > 0");
    const double c = std::max(a - x, 0.0);
    // int_c^inf q(m + x) phi e^{-phi m} dm, substituting m = c + u/phi
    const Polynomial p = shift(q, x + c);
    const GaussLaguerre rule(q.degree() / 2 + 2);
    const double integral =
        rule.apply([&](double u) { return eval(p, u / phi); });
    return std::exp(-phi * c) * integral;
}

RepresentationReport verify_representation_conditions(const StoppingSolution& sol,
                                                      const std::vector<double>& grid) {
    if (grid.empty())
        throw InvalidArgument("verify_representation_conditions: empty grid");
    std::vector<double> xs = grid;
    std::sort(xs.begin(), xs.end());
    const int n = sol.n;

    RepresentationReport rep;
    std::vector<double> vs(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) vs[i] = sol.value(xs[i]);

    // Continuity proxy: grid slopes below a Lipschitz bound of the closed form.
    const double reach = std::max({1.0, sol.x_star, std::abs(xs.front()), std::abs(xs.back())});
    rep.slope_bound = 1.05 * double(n) * std::pow(reach, n - 1) + 1e-9;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        const double dx = xs[i + 1] - xs[i];
        if (dx <= 0.0) continue;
        rep.max_slope = std::max(rep.max_slope, std::abs(vs[i + 1] - vs[i]) / dx);
    }
    rep.continuity = rep.max_slope <= rep.slope_bound;

    // Decay toward -inf, probed at -50 on the 1/Phi scale.
    const double scale =
        std::holds_alternative<ExponentialPlus>(sol.factors.sup_factor)
            ? 1.0 / std::get<ExponentialPlus>(sol.factors.sup_factor).rate
            : std::max(1.0, sol.x_star);
    rep.left_tail_value = sol.value(-50.0 * scale);
    rep.decay = rep.left_tail_value <=
                1e-12 * std::max(1.0, sol.value(std::max(sol.x_star, xs.back())));

    rep.max_stop_gap = 0.0;
    rep.min_excess = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < xs.size(); ++i) {
        const double g = std::pow(std::max(xs[i], 0.0), n);
        if (xs[i] >= sol.x_star)
            rep.max_stop_gap =
                std::max(rep.max_stop_gap, std::abs(vs[i] - g) / std::max(1.0, g));
        rep.min_excess = std::min(rep.min_excess, (vs[i] - g) / std::max(1.0, g));
    }
    rep.stop_region_equality = rep.max_stop_gap <= 1e-9;
    rep.majorization = rep.min_excess >= -1e-9;

    rep.smooth_fit_gap = smooth_fit_check(sol, 1e-5);
    rep.smooth_fit = rep.smooth_fit_gap <= 1e-6;
    return rep;
}

double smooth_fit_check(const StoppingSolution& sol, double h) {
    if (!(h > 0.0)) throw InvalidArgument("smooth_fit_check: h must be > 0");
    const double x = sol.x_star;
    const double v0 = sol.value(x);
    auto one_sided = [&](double step) { return (v0 - sol.value(x - step)) / step; };
    const double refined = 2.0 * one_sided(0.5 * h) - one_sided(h);
    const double reward_slope = double(sol.n) * std::pow(x, sol.n - 1);
    return std::abs(refined - reward_slope);
}

bool negativity_property(const KilledSpec& spec, int n, int samples) {
    if (samples < 2) throw InvalidArgument("negativity_property: samples must be >= 2");
    const StoppingSolution sol = solve(spec, n);
    if (sol.x_star <= 0.0) return true; // empty interior
    for (int i = 1; i <= samples; ++i) {
        const double x = sol.x_star * double(i) / double(samples + 1);
        if (!(eval(sol.q_sup, x) < 0.0)) return false;
    }
    return true;
}

bool root_monotonicity(const KilledSpec& spec, int n_max) {
    if (n_max < 1) throw InvalidArgument("root_monotonicity: n_max must be >= 1");
    double prev = threshold(spec, 1);
    for (int k = 2; k <= n_max; ++k) {
        const double cur = threshold(spec, k);
        if (cur < prev - 1e-10) return false;
        prev = cur;
    }
    return true;
}

} // namespace levyopt

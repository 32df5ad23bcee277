#include "levyopt/sigma.hpp"

#include <cmath>

#include "levyopt/quadrature.hpp"
#include "levyopt/roots.hpp"

namespace levyopt {

namespace {

// Q_n^{(X_T)} from the exact moment route.
Polynomial xT_appell(const KilledSpec& spec, int n) {
    const CumulantSequence xT =
        moments_to_cumulants(xT_moments(spec, std::max(n, 1)));
    return appell_from_cumulants(xT, n)[n];
}

} // namespace

double q_hat(const KilledSpec& spec, int n, double gamma) {
    if (!(gamma > 0.0)) throw InvalidArgument("q_hat: gamma must be > 0");
    if (n < 0) throw InvalidArgument("q_hat: n < 0");
    const WienerHopfFactors factors = wiener_hopf_factors(spec);
    const std::vector<Polynomial> family = appell_of_factor(factors.sup_factor, n);
    const double x_star = largest_nonneg_root(family[n]);

    double falling = 1.0; // n!/(n-i)!
    double gpow = gamma;  // gamma^{i+1}
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        acc += falling / gpow * eval(family[n - i], x_star);
        falling *= double(n - i);
        gpow *= gamma;
    }
    return std::exp(-gamma * x_star) * acc;
}

double inf_factor_mgf(const KilledSpec& spec, double gamma) {
    if (!(gamma > 0.0)) throw InvalidArgument("inf_factor_mgf: gamma must be > 0");
    const WienerHopfFactors factors = wiener_hopf_factors(spec);
    if (const auto* em = std::get_if<ExponentialMinus>(&factors.inf_factor))
        return em->rate / (em->rate + gamma);

    // Spectrally negative side: E e^{gamma I_T} = r(Phi - gamma)/(Phi (r - psi)).
    const auto* ep = std::get_if<ExponentialPlus>(&factors.sup_factor);
    if (!ep)
        throw UnsupportedError("inf_factor_mgf: neither factor is exponential");
    const double phi = ep->rate;
    const double r = spec.r;
    if (std::abs(gamma - phi) < 1e-6 * std::max(1.0, phi)) {
        // removable singularity: r - psi(gamma) = -(gamma-Phi) psi'(Phi) - ...
        const double d1 = psi_derivative(spec.model, phi);
        const double d2 = psi_second_derivative(spec.model, phi);
        return r / (phi * (d1 + 0.5 * d2 * (gamma - phi)));
    }
    return r * (phi - gamma) / (phi * (r - psi(spec.model, gamma)));
}

double sigma_hat(const KilledSpec& spec, int n, double gamma) {
    return spec.r * q_hat(spec, n, gamma) / inf_factor_mgf(spec, gamma);
}

double sigma_density_spectrally_positive(const KilledSpec& spec, int n, double x) {
    if (!spectrally_positive(spec.model))
        throw UnsupportedError("sigma_density: model is not spectrally positive");
    const double x_star = threshold(spec, n);
    if (x < x_star - 1e-12)
        throw DomainError("sigma_density: x below the support [x*, inf)");
    return spec.r * eval(xT_appell(spec, n), x);
}

double value_spectrally_positive(const KilledSpec& spec, int n, double x) {
    if (!spectrally_positive(spec.model))
        throw UnsupportedError("value_spectrally_positive: model has negative jumps");
    if (!spec.model.jumps.empty() || !(spec.model.gaussian_var > 0.0))
        throw UnsupportedError(
            "value_spectrally_positive: X_T has a closed-form density only for "
            "jump-free models here; use the Monte Carlo estimator for jump models");
    // X_T has the two-sided exponential density W e^{-Phi y} (y >= 0),
    // W e^{PhiHat y} (y < 0), W = Phi PhiHat/(Phi + PhiHat).
    const double phi = phi_root(spec);
    const double phi_hat = hat_phi_root(spec);
    const double w = phi * phi_hat / (phi + phi_hat);
    const double x_star = threshold(spec, n);
    const Polynomial p = shift(xT_appell(spec, n), x);
    const double c = x_star - x;
    if (c >= 0.0) return w * exp_tail_integral(p, phi, c);
    return w * (poly_exp_integral(p, phi_hat, c, 0.0) + exp_tail_integral(p, phi, 0.0));
}

double h_function(const KilledSpec& spec, int n, double z) {
    const WienerHopfFactors factors = wiener_hopf_factors(spec);
    const auto* em = std::get_if<ExponentialMinus>(&factors.inf_factor);
    if (!em)
        throw UnsupportedError("h_function: f_I has no closed form (I_T is not "
                               "exponential for this model)");
    const double phi_hat = em->rate;
    const double x_star = threshold(spec, n);
    if (z < x_star - 1e-12)
        throw InvalidArgument("h_function: z must be >= x*");
    const Polynomial qx = xT_appell(spec, n);
    if (z <= x_star) return 0.0;
    return integrate(
        [&](double y) { return phi_hat * std::exp(phi_hat * (y - z)) * eval(qx, y); },
        x_star, z, 1e-10);
}

double brownian_resolvent_value(double r, int n, double x) {
    if (!(r > 0.0)) throw InvalidArgument("brownian_resolvent_value: r must be > 0");
    if (n < 1) throw InvalidArgument("brownian_resolvent_value: n must be >= 1");
    const KilledSpec spec(LevyModel{0.0, 1.0, {}}, r);
    const double rho = std::sqrt(2.0 * r);
    const double x_star = threshold(spec, n);
    const Polynomial qx = xT_appell(spec, n);
    auto integrand = [&](double y) {
        return std::exp(-rho * std::abs(x - y)) / rho * eval(qx, y);
    };
    const double cut = std::max(x_star, x) + 40.0 / rho;
    double integral;
    if (x > x_star)
        integral = integrate(integrand, x_star, x, 1e-10) +
                   integrate(integrand, x, cut, 1e-10);
    else
        integral = integrate(integrand, x_star, cut, 1e-10);
    return r * integral;
}

SigmaTransform make_sigma_transform(const KilledSpec& spec, int n) {
    return SigmaTransform{spec, n, threshold(spec, n)};
}

SigmaDensity make_sigma_density(const KilledSpec& spec, int n) {
    if (!spectrally_positive(spec.model))
        throw UnsupportedError("make_sigma_density: model is not spectrally positive");
    return SigmaDensity{spec, n, threshold(spec, n)};
}

} // namespace levyopt

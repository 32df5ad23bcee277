#include "levyopt/levy.hpp"

#include <cmath>
#include <limits>

#include "levyopt/roots.hpp"

namespace levyopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double law_mgf(const JumpLaw& law, double g) {
    return std::visit(
        [g](const auto& l) -> double {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, PointMass>) {
                return std::exp(g * l.size);
            } else if constexpr (std::is_same_v<L, ExponentialUp>) {
                return l.alpha / (l.alpha - g);
            } else {
                return l.alpha / (l.alpha + g);
            }
        },
        law);
}

double law_mgf_derivative(const JumpLaw& law, double g) {
    return std::visit(
        [g](const auto& l) -> double {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, PointMass>) {
                return l.size * std::exp(g * l.size);
            } else if constexpr (std::is_same_v<L, ExponentialUp>) {
                const double d = l.alpha - g;
                return l.alpha / (d * d);
            } else {
                const double d = l.alpha + g;
                return -l.alpha / (d * d);
            }
        },
        law);
}

bool points_up(const JumpLaw& law) {
    if (const auto* pm = std::get_if<PointMass>(&law)) return pm->size > 0.0;
    return std::holds_alternative<ExponentialUp>(law);
}

void check_in_domain(const LevyModel& model, double g) {
    if (g <= exponent_domain_lower(model) || g >= exponent_domain_upper(model))
        throw DomainError("psi: gamma outside the exponent domain");
}

} // namespace

void validate(const LevyModel& model) {
    if (!(model.gaussian_var >= 0.0))
        throw InvalidArgument("LevyModel: gaussian_var must be >= 0");
    if (!std::isfinite(model.drift))
        throw InvalidArgument("LevyModel: drift must be finite");
    for (const auto& j : model.jumps) {
        if (!(j.rate > 0.0))
            throw InvalidArgument("LevyModel: jump rate must be > 0");
        std::visit(
            [](const auto& l) {
                using L = std::decay_t<decltype(l)>;
                if constexpr (std::is_same_v<L, PointMass>) {
                    if (l.size == 0.0)
                        throw InvalidArgument("LevyModel: point-mass jump size must be != 0");
                } else {
                    if (!(l.alpha > 0.0))
                        throw InvalidArgument("LevyModel: jump alpha must be > 0");
                }
            },
            j.law);
    }
}

KilledSpec::KilledSpec(LevyModel m, double discount) : model(std::move(m)), r(discount) {
    validate(model);
    if (!(r > 0.0)) throw InvalidArgument("KilledSpec: discount rate must be > 0");
}

SpectralType classify(const LevyModel& model) {
    if (model.jumps.empty()) return SpectralType::brownian;
    bool any_up = false, any_down = false;
    for (const auto& j : model.jumps)
        (points_up(j.law) ? any_up : any_down) = true;
    if (any_up && any_down) return SpectralType::two_sided;
    return any_up ? SpectralType::positive : SpectralType::negative;
}

bool spectrally_negative(const LevyModel& model) {
    const SpectralType t = classify(model);
    return t == SpectralType::brownian || t == SpectralType::negative;
}

bool spectrally_positive(const LevyModel& model) {
    const SpectralType t = classify(model);
    return t == SpectralType::brownian || t == SpectralType::positive;
}

double exponent_domain_upper(const LevyModel& model) {
    double b = kInf;
    for (const auto& j : model.jumps)
        if (const auto* up = std::get_if<ExponentialUp>(&j.law))
            b = std::min(b, up->alpha);
    return b;
}

double exponent_domain_lower(const LevyModel& model) {
    double b = -kInf;
    for (const auto& j : model.jumps)
        if (const auto* dn = std::get_if<ExponentialDown>(&j.law))
            b = std::max(b, -dn->alpha);
    return b;
}

double psi(const LevyModel& model, double gamma) {
    if (gamma == 0.0) return 0.0;
    check_in_domain(model, gamma);
    double v = model.drift * gamma + 0.5 * model.gaussian_var * gamma * gamma;
    for (const auto& j : model.jumps)
        v += j.rate * (law_mgf(j.law, gamma) - 1.0);
    return v;
}

double psi_derivative(const LevyModel& model, double gamma) {
    check_in_domain(model, gamma);
    double v = model.drift + model.gaussian_var * gamma;
    for (const auto& j : model.jumps)
        v += j.rate * law_mgf_derivative(j.law, gamma);
    return v;
}

double psi_second_derivative(const LevyModel& model, double gamma) {
    check_in_domain(model, gamma);
    double v = model.gaussian_var;
    for (const auto& j : model.jumps) {
        v += j.rate * std::visit(
                          [gamma](const auto& l) -> double {
                              using L = std::decay_t<decltype(l)>;
                              if constexpr (std::is_same_v<L, PointMass>) {
                                  return l.size * l.size * std::exp(gamma * l.size);
                              } else if constexpr (std::is_same_v<L, ExponentialUp>) {
                                  const double d = l.alpha - gamma;
                                  return 2.0 * l.alpha / (d * d * d);
                              } else {
                                  const double d = l.alpha + gamma;
                                  return 2.0 * l.alpha / (d * d * d);
                              }
                          },
                          j.law);
    }
    return v;
}

bool validate_exponential_moments(const KilledSpec& spec, double lambda) {
    if (!(lambda > 0.0)) throw InvalidArgument("validate_exponential_moments: lambda <= 0");
    if (lambda >= exponent_domain_upper(spec.model) ||
        -lambda <= exponent_domain_lower(spec.model))
        return false;
    return psi(spec.model, lambda) < spec.r && psi(spec.model, -lambda) < spec.r;
}

namespace {

// Positive root of f(lambda) = r where f is convex with f(0) = 0 and the
// domain boundary `bound` possibly finite (pole of psi).
double positive_exponent_root(const KilledSpec& spec,
                              const std::function<double(double)>& f) {
    const double r = spec.r;
    double hi = 1.0;
    // double upward until f exceeds r
    int it = 0;
    for (; it < 200 && f(hi) <= r; ++it) hi *= 2.0;
    if (it == 200)
        throw DomainError("exponent root: psi stays below r; no positive root "
                          "(process has no upward movement at this scale)");
    const double root =
        bisect([&](double x) { return f(x) - r; }, 0.0, hi, 1e-15 * (1.0 + hi));
    if (std::abs(f(root) - r) > 1e-12 * std::max(1.0, r))
        throw DomainError("exponent root: bisection failed to meet tolerance");
    return root;
}

} // namespace

double phi_root(const KilledSpec& spec) {
    if (!spectrally_negative(spec.model))
        throw UnsupportedError("phi_root: model has positive jumps; Phi(r) is defined "
                               "for spectrally negative models only");
    return positive_exponent_root(
        spec, [&](double l) { return psi(spec.model, l); });
}

double hat_phi_root(const KilledSpec& spec) {
    if (!spectrally_positive(spec.model))
        throw UnsupportedError("hat_phi_root: model has negative jumps; Phi^(r) is "
                               "defined for spectrally positive models only");
    return positive_exponent_root(
        spec, [&](double l) { return psi(spec.model, -l); });
}

double jump_moment(const JumpLaw& law, int k) {
    return std::visit(
        [k](const auto& l) -> double {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, PointMass>) {
                return std::pow(l.size, k);
            } else {
                double fact = 1.0;
                for (int i = 2; i <= k; ++i) fact *= i;
                const double m = fact / std::pow(l.alpha, k);
                if constexpr (std::is_same_v<L, ExponentialUp>)
                    return m;
                else
                    return (k % 2 == 0) ? m : -m;
            }
        },
        law);
}

CumulantSequence x1_cumulants(const LevyModel& model, int n) {
    if (n < 1) throw InvalidArgument("x1_cumulants: need n >= 1");
    CumulantSequence c = CumulantSequence::zeros(n);
    c.kappa[1] = model.drift;
    if (n >= 2) c.kappa[2] = model.gaussian_var;
    for (const auto& j : model.jumps)
        for (int k = 1; k <= n; ++k)
            c.kappa[k] += j.rate * jump_moment(j.law, k);
    return c;
}

MomentSequence xT_moments(const KilledSpec& spec, int n) {
    if (n < 1) throw InvalidArgument("xT_moments: need n >= 1");
    // Guard: some exponential moment must exist on each side. psi -> 0 at 0,
    // so a small enough lambda always works for the supported laws; scan to
    // keep the failure mode explicit for future law types.
    bool ok = false;
    double lambda = 0.5 * std::min({1.0, exponent_domain_upper(spec.model),
                                    -exponent_domain_lower(spec.model)});
    for (int i = 0; i < 64 && !ok; ++i, lambda *= 0.5)
        ok = validate_exponential_moments(spec, lambda);
    if (!ok)
        throw DomainError("xT_moments: X_T has no exponential moments (psi >= r on "
                          "every tested scale)");
    const CumulantSequence c = x1_cumulants(spec.model, n);
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(n + 1);
    mu[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (int k = 1; k <= m; ++k)
            acc += binomial(m, k) * c.kappa[k] * mu[m - k];
        mu[m] = acc / spec.r;
    }
    return MomentSequence(std::move(mu));
}

} // namespace levyopt

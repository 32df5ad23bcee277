#include "levyopt/wiener_hopf.hpp"

namespace levyopt {

CumulantSequence factor_cumulants(const FactorDistribution& f, int order) {
    if (const auto* ep = std::get_if<ExponentialPlus>(&f))
        return exponential_cumulants(ep->rate, order);
    if (const auto* em = std::get_if<ExponentialMinus>(&f))
        return negated_exponential_cumulants(em->rate, order);
    const auto& c = std::get<CumulantOnly>(f).kappa;
    if (c.order() < order)
        throw OrderError("factor_cumulants: cumulant-only factor carries order " +
                         std::to_string(c.order()) + " < " + std::to_string(order));
    return CumulantSequence(Eigen::VectorXd(c.kappa.head(order + 1)));
}

namespace {

bool creeps_upward(const LevyModel& m) {
    return m.gaussian_var > 0.0 || m.drift > 0.0;
}
bool creeps_downward(const LevyModel& m) {
    return m.gaussian_var > 0.0 || m.drift < 0.0;
}

} // namespace

WienerHopfFactors wiener_hopf_factors(const KilledSpec& spec, int order) {
    const SpectralType type = classify(spec.model);
    if (type == SpectralType::two_sided)
        throw UnsupportedError(
            "wiener_hopf_factors: two-sided jump models have no closed-form "
            "factorization here; use the Monte Carlo empirical_factor_cumulants "
            "estimator instead");

    const CumulantSequence xT = moments_to_cumulants(xT_moments(spec, order));

    // A one-sided model moves continuously toward its jump-free side, so the
    // corresponding extreme is exponential when the process can reach it at all.
    std::optional<double> phi, phi_hat;
    if (spectrally_negative(spec.model) && creeps_upward(spec.model))
        phi = phi_root(spec);
    if (spectrally_positive(spec.model) && creeps_downward(spec.model))
        phi_hat = hat_phi_root(spec);

    WienerHopfFactors out{CumulantOnly{CumulantSequence::zeros(order)},
                          CumulantOnly{CumulantSequence::zeros(order)}, xT};
    if (phi) out.sup_factor = ExponentialPlus{*phi};
    if (phi_hat) out.inf_factor = ExponentialMinus{*phi_hat};

    // The non-exponential side carries the cumulant remainder of the
    // factorization identity kappa(X_T) = kappa(M_T) + kappa(I_T).
    if (phi && !phi_hat)
        out.inf_factor = CumulantOnly{xT - exponential_cumulants(*phi, order)};
    else if (phi_hat && !phi)
        out.sup_factor = CumulantOnly{xT - negated_exponential_cumulants(*phi_hat, order)};
    // (neither: the degenerate monotone-jump-free corner; both sides zero
    //  cumulants only when X itself is degenerate, which validate() permits
    //  solely for the trivial drift == 0, b == 0, no-jump model)
    return out;
}

std::vector<Polynomial> appell_of_factor(const FactorDistribution& f, int n) {
    if (n < 0) throw InvalidArgument("appell_of_factor: n < 0");
    if (const auto* c = std::get_if<CumulantOnly>(&f))
        return appell_from_cumulants(c->kappa, n);

    const bool plus = std::holds_alternative<ExponentialPlus>(f);
    const double rate = plus ? std::get<ExponentialPlus>(f).rate
                             : std::get<ExponentialMinus>(f).rate;
    if (!(rate > 0.0)) throw InvalidArgument("appell_of_factor: rate must be > 0");
    std::vector<Polynomial> q;
    q.reserve(n + 1);
    q.push_back(Polynomial::constant(1.0));
    for (int m = 1; m <= n; ++m) {
        // (x -+ m/rate) x^{m-1}
        Eigen::VectorXd c = Eigen::VectorXd::Zero(m + 1);
        c[m] = 1.0;
        c[m - 1] = (plus ? -1.0 : 1.0) * double(m) / rate;
        q.emplace_back(std::move(c));
    }
    return q;
}

std::vector<Polynomial> recover_sup_appell_spectrally_positive(const KilledSpec& spec,
                                                               int n) {
    if (!spectrally_positive(spec.model))
        throw UnsupportedError("recover_sup_appell_spectrally_positive: model has "
                               "negative jumps");
    const double phi_hat = hat_phi_root(spec);
    const CumulantSequence xT = moments_to_cumulants(xT_moments(spec, std::max(n, 1)));
    const std::vector<Polynomial> qx = appell_from_cumulants(xT, n);
    std::vector<Polynomial> qm;
    qm.reserve(n + 1);
    qm.push_back(Polynomial::constant(1.0));
    for (int m = 1; m <= n; ++m)
        qm.push_back(qx[m] - (double(m) / phi_hat) * qm[m - 1]);
    return qm;
}

} // namespace levyopt

#include "levyopt/cumulants.hpp"

#include <cmath>

namespace levyopt {

CumulantSequence::CumulantSequence(Eigen::VectorXd k) : kappa(std::move(k)) {
    if (kappa.size() < 2)
        throw InvalidArgument("CumulantSequence: order must be >= 1");
    if (kappa[0] != 0.0)
        throw InvalidArgument("CumulantSequence: kappa_0 must be 0");
}

CumulantSequence CumulantSequence::from_first(std::initializer_list<double> k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k.size()) + 1);
    Eigen::Index i = 1;
    for (double x : k) v[i++] = x;
    return CumulantSequence(std::move(v));
}

CumulantSequence CumulantSequence::zeros(int order) {
    if (order < 1) throw InvalidArgument("CumulantSequence: order must be >= 1");
    return CumulantSequence(Eigen::VectorXd::Zero(order + 1));
}

MomentSequence::MomentSequence(Eigen::VectorXd m) : mu(std::move(m)) {
    if (mu.size() < 1 || mu[0] != 1.0)
        throw InvalidArgument("MomentSequence: mu_0 must be 1");
}

CumulantSequence moments_to_cumulants(const MomentSequence& mom) {
    const int n = mom.order();
    if (n < 1) throw InvalidArgument("moments_to_cumulants: need order >= 1");
    const auto& mu = mom.mu;
    Eigen::VectorXd kappa = Eigen::VectorXd::Zero(n + 1);
    for (int m = 0; m + 1 <= n; ++m) {
        double acc = mu[m + 1];
        for (int k = 0; k < m; ++k)
            acc -= binomial(m, k) * kappa[k + 1] * mu[m - k];
        kappa[m + 1] = acc;
    }
    return CumulantSequence(std::move(kappa));
}

MomentSequence cumulants_to_moments(const CumulantSequence& cum) {
    const int n = cum.order();
    const auto& kappa = cum.kappa;
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(n + 1);
    mu[0] = 1.0;
    for (int m = 0; m + 1 <= n; ++m) {
        double acc = 0.0;
        for (int k = 0; k <= m; ++k)
            acc += binomial(m, k) * kappa[k + 1] * mu[m - k];
        mu[m + 1] = acc;
    }
    return MomentSequence(std::move(mu));
}

CumulantSequence operator+(const CumulantSequence& a, const CumulantSequence& b) {
    const int n = std::min(a.order(), b.order());
    Eigen::VectorXd k = a.kappa.head(n + 1) + b.kappa.head(n + 1);
    return CumulantSequence(std::move(k));
}

CumulantSequence operator-(const CumulantSequence& a, const CumulantSequence& b) {
    const int n = std::min(a.order(), b.order());
    Eigen::VectorXd k = a.kappa.head(n + 1) - b.kappa.head(n + 1);
    return CumulantSequence(std::move(k));
}

CumulantSequence normal_cumulants(double mean, double variance, int order) {
    if (variance < 0.0) throw InvalidArgument("normal_cumulants: variance < 0");
    CumulantSequence c = CumulantSequence::zeros(std::max(order, 1));
    c.kappa[1] = mean;
    if (order >= 2) c.kappa[2] = variance;
    return c;
}

CumulantSequence exponential_cumulants(double lambda, int order) {
    if (lambda <= 0.0) throw InvalidArgument("exponential_cumulants: lambda <= 0");
    CumulantSequence c = CumulantSequence::zeros(order);
    double fact = 1.0; // (k-1)!
    for (int k = 1; k <= order; ++k) {
        c.kappa[k] = fact / std::pow(lambda, k);
        fact *= k;
    }
    return c;
}

CumulantSequence negated_exponential_cumulants(double rho, int order) {
    CumulantSequence c = exponential_cumulants(rho, order);
    for (int k = 1; k <= order; k += 2) c.kappa[k] = -c.kappa[k];
    return c;
}

CumulantSequence point_mass_cumulants(double c, int order) {
    CumulantSequence s = CumulantSequence::zeros(order);
    s.kappa[1] = c;
    return s;
}

} // namespace levyopt

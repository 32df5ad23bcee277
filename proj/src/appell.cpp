#include "levyopt/appell.hpp"

namespace levyopt {

Eigen::VectorXd appell_constants(const CumulantSequence& kappa, int n) {
    if (n < 0) throw InvalidArgument("appell_constants: n < 0");
    if (n > kappa.order())
        throw OrderError("appell_constants: order " + std::to_string(n) +
                         " exceeds available cumulants (" +
                         std::to_string(kappa.order()) + ")");
    if (n > kMaxOrder)
        throw OrderError("appell_constants: order cap is " + std::to_string(kMaxOrder));
    // a = exp(b) coefficientwise (factorial-normalized), b_k = -kappa_k.
    // a_{m+1} = sum_k C(m,k) b_{k+1} a_{m-k}.
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n + 1);
    a[0] = 1.0;
    for (int m = 0; m + 1 <= n; ++m) {
        double acc = 0.0;
        for (int k = 0; k <= m; ++k)
            acc += binomial(m, k) * (-kappa.kappa[k + 1]) * a[m - k];
        a[m + 1] = acc;
    }
    return a;
}

std::vector<Polynomial> appell_from_cumulants(const CumulantSequence& kappa, int n) {
    Eigen::VectorXd a = appell_constants(kappa, n);
    std::vector<Polynomial> q;
    q.reserve(n + 1);
    for (int m = 0; m <= n; ++m) {
        Eigen::VectorXd c(m + 1);
        for (int k = 0; k <= m; ++k)
            c[k] = binomial(m, k) * a[m - k];
        q.emplace_back(std::move(c));
    }
    return q;
}

Polynomial appell_convolve(const std::vector<Polynomial>& qa,
                           const std::vector<Polynomial>& qb, int m) {
    if (m < 0) throw InvalidArgument("appell_convolve: m < 0");
    if (static_cast<int>(qa.size()) < m + 1 || static_cast<int>(qb.size()) < m + 1)
        throw InvalidArgument("appell_convolve: families shorter than m+1");
    for (int k = 0; k <= m; ++k)
        if (qa[k].degree() != k || qb[k].degree() != k)
            throw InvalidArgument("appell_convolve: member " + std::to_string(k) +
                                  " does not have degree " + std::to_string(k));
    Eigen::VectorXd c = Eigen::VectorXd::Zero(m + 1);
    for (int k = 0; k <= m; ++k) {
        const double w = binomial(m, k) * eval(qb[m - k], 0.0);
        if (w == 0.0) continue;
        c.head(k + 1) += w * qa[k].coeffs;
    }
    return Polynomial(std::move(c));
}

Polynomial expectation_shift_poly(const Polynomial& q, const MomentSequence& mu) {
    const int n = q.degree();
    if (mu.order() < n)
        throw OrderError("expectation_shift_poly: need moments to order " + std::to_string(n));
    // E[q(eta+z)] = sum_i q_i sum_j C(i,j) mu_j z^{i-j}
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j)
            out[i - j] += q.coeffs[i] * binomial(i, j) * mu.mu[j];
    return Polynomial(std::move(out));
}

} // namespace levyopt

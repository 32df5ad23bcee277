#include <doctest.h>

#include <cmath>
#include <vector>

#include "levyopt/appell.hpp"
#include "levyopt/cumulants.hpp"
#include "levyopt/verify.hpp"

using namespace levyopt;

namespace {

// Independent oracle: cumulants as the formal power-series log of the moment
// series, log(1 + w) = sum (-1)^{j+1} w^j / j with factorial-normalized
// Cauchy products. A different algorithm than the library recursion.
Eigen::VectorXd series_log_cumulants(const Eigen::VectorXd& mu) {
    const int n = int(mu.size()) - 1;
    // coefficients of w = G - 1 in the normalized basis u^k/k!
    Eigen::VectorXd w = mu;
    w[0] = 0.0;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(n + 1); // log series
    Eigen::VectorXd wpow = Eigen::VectorXd::Zero(n + 1);
    wpow[0] = 1.0; // w^0
    for (int j = 1; j <= n; ++j) {
        // wpow <- wpow * w (factorial-normalized product)
        Eigen::VectorXd next = Eigen::VectorXd::Zero(n + 1);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b)
                next[a + b] += binomial(a + b, a) * wpow[a] * w[b];
        wpow = next;
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        acc += (sign / j) * wpow;
    }
    return acc;
}

MomentSequence normal_moments(double mean, double var, int order) {
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(order + 1);
    mu[0] = 1.0;
    if (order >= 1) mu[1] = mean;
    for (int k = 2; k <= order; ++k)
        mu[k] = mean * mu[k - 1] + (k - 1) * var * mu[k - 2];
    return MomentSequence(std::move(mu));
}

MomentSequence exponential_moments(double lambda, int order) {
    Eigen::VectorXd mu(order + 1);
    mu[0] = 1.0;
    for (int k = 1; k <= order; ++k) mu[k] = mu[k - 1] * k / lambda;
    return MomentSequence(std::move(mu));
}

MomentSequence point_mass_moments(double c, int order) {
    Eigen::VectorXd mu(order + 1);
    for (int k = 0; k <= order; ++k) mu[k] = std::pow(c, k);
    return MomentSequence(std::move(mu));
}

} // namespace

TEST_CASE("moments_to_cumulants on the reference laws") {
    // N(0,1): moments 1,0,1,0,3 -> cumulants 0,0,1,0,0
    {
        const MomentSequence mu = normal_moments(0.0, 1.0, 4);
        CHECK(mu.mu[4] == doctest::Approx(3.0));
        const CumulantSequence k = moments_to_cumulants(mu);
        const Eigen::VectorXd oracle = series_log_cumulants(mu.mu);
        for (int i = 1; i <= 4; ++i) {
            CHECK(k.kappa[i] == doctest::Approx(oracle[i]).epsilon(1e-12));
            CHECK(k.kappa[i] == doctest::Approx(i == 2 ? 1.0 : 0.0).epsilon(1e-12));
        }
    }
    // Exp(lambda): kappa_k = (k-1)!/lambda^k
    for (double lambda : {0.5, 1.0, 2.0}) {
        const MomentSequence mu = exponential_moments(lambda, 8);
        const CumulantSequence k = moments_to_cumulants(mu);
        const Eigen::VectorXd oracle = series_log_cumulants(mu.mu);
        double fact = 1.0;
        for (int i = 1; i <= 8; ++i) {
            CHECK(k.kappa[i] ==
                  doctest::Approx(fact / std::pow(lambda, i)).epsilon(1e-10));
            CHECK(k.kappa[i] == doctest::Approx(oracle[i]).epsilon(1e-10));
            fact *= i;
        }
        // library closed form agrees
        const CumulantSequence lib = exponential_cumulants(lambda, 8);
        CHECK((lib.kappa - k.kappa).cwiseAbs().maxCoeff() <= 1e-8);
    }
    // point mass at c: kappa = (0, c, 0, ...)
    {
        const CumulantSequence k = moments_to_cumulants(point_mass_moments(0.8, 6));
        CHECK(k.kappa[1] == doctest::Approx(0.8));
        for (int i = 2; i <= 6; ++i)
            CHECK(k.kappa[i] == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("cumulants_to_moments inverts the reference laws") {
    {
        const MomentSequence mu = cumulants_to_moments(normal_cumulants(0.0, 1.0, 4));
        for (int i = 0; i <= 4; ++i)
            CHECK(mu.mu[i] ==
                  doctest::Approx(normal_moments(0.0, 1.0, 4).mu[i]).epsilon(1e-12));
    }
    {
        const MomentSequence mu = cumulants_to_moments(exponential_cumulants(1.5, 8));
        for (int i = 0; i <= 8; ++i)
            CHECK(mu.mu[i] ==
                  doctest::Approx(exponential_moments(1.5, 8).mu[i]).epsilon(1e-10));
    }
    {
        const MomentSequence mu = cumulants_to_moments(point_mass_cumulants(-1.3, 6));
        for (int i = 0; i <= 6; ++i)
            CHECK(mu.mu[i] == doctest::Approx(std::pow(-1.3, i)).epsilon(1e-12));
    }
}

TEST_CASE("round trip is the identity to 1e-10 up to order 10") {
    CumulantSequence kappa = CumulantSequence::zeros(10);
    for (int k = 1; k <= 10; ++k) kappa.kappa[k] = std::sin(1.7 * k) + 0.2;
    const CumulantSequence back = moments_to_cumulants(cumulants_to_moments(kappa));
    CHECK((back.kappa - kappa.kappa).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("Hankel positive semidefiniteness separates moment sequences") {
    CHECK(hankel_psd(normal_moments(0.3, 1.2, 8)));
    CHECK(hankel_psd(exponential_moments(2.0, 8)));
    Eigen::VectorXd bad(5);
    bad << 1.0, 1.0, 0.5, 0.2, 0.1; // mu_2 < mu_1^2: impossible
    CHECK_FALSE(hankel_psd(MomentSequence(std::move(bad))));
}

TEST_CASE("appell_from_cumulants: first members and reference families") {
    // generic kappa: Q_1 = x - k1, Q_2 = (x - k1)^2 - k2
    {
        const CumulantSequence kappa = CumulantSequence::from_first({0.7, 1.9});
        const auto q = appell_from_cumulants(kappa, 2);
        CHECK(coeff_distance(q[1], Polynomial{-0.7, 1.0}) <= 1e-14);
        CHECK(coeff_distance(q[2], Polynomial{0.49 - 1.9, -1.4, 1.0}) <= 1e-13);
    }
    // N(0,1): He_3 = x^3 - 3x
    {
        const auto q = appell_from_cumulants(normal_cumulants(0.0, 1.0, 3), 3);
        CHECK(coeff_distance(q[3], Polynomial{0.0, -3.0, 0.0, 1.0}) <= 1e-12);
    }
    // Exp(lambda): Q_n = (x - n/lambda) x^{n-1}
    for (double lambda : {0.5, 1.0, std::sqrt(2.0), 3.0}) {
        const auto q = appell_from_cumulants(exponential_cumulants(lambda, 8), 8);
        for (int n = 1; n <= 8; ++n) {
            Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
            c[n] = 1.0;
            c[n - 1] = -double(n) / lambda;
            CHECK(coeff_distance(q[n], Polynomial(c)) <= 1e-10);
        }
        // constants of exp(-K): 1, -1/lambda, 0, 0, ...
        const Eigen::VectorXd a = appell_constants(exponential_cumulants(lambda, 6), 6);
        CHECK(a[0] == doctest::Approx(1.0));
        CHECK(a[1] == doctest::Approx(-1.0 / lambda));
        for (int j = 2; j <= 6; ++j) CHECK(a[j] == doctest::Approx(0.0).epsilon(1e-10));
    }
    // derivative recursion for Exp(1): Q_3' = 3 Q_2
    {
        const auto q = appell_from_cumulants(exponential_cumulants(1.0, 3), 3);
        CHECK(coeff_distance(derivative(q[3]), 3.0 * q[2]) <= 1e-12);
    }
    CHECK_THROWS_AS(appell_from_cumulants(CumulantSequence::zeros(3), 5), OrderError);
}

TEST_CASE("mean-value property against closed-form moments") {
    struct Family {
        CumulantSequence kappa;
        MomentSequence mu;
    };
    std::vector<Family> families;
    families.push_back({normal_cumulants(0.0, 1.0, 9), normal_moments(0.0, 1.0, 9)});
    families.push_back({normal_cumulants(1.5, 2.25, 9), normal_moments(1.5, 2.25, 9)});
    families.push_back({exponential_cumulants(0.5, 9), exponential_moments(0.5, 9)});
    families.push_back({exponential_cumulants(3.0, 9), exponential_moments(3.0, 9)});
    families.push_back({point_mass_cumulants(0.7, 9), point_mass_moments(0.7, 9)});
    for (const auto& fam : families) {
        const auto q = appell_from_cumulants(fam.kappa, 8);
        for (int k = 0; k <= 8; ++k) {
            const Polynomial e = expectation_shift_poly(q[k], fam.mu);
            CHECK(coeff_distance(e, Polynomial::monomial(k)) <= 1e-10);
        }
    }
}

TEST_CASE("paper recursion for cumulants from Appell constants") {
    // kappa_{m+1} = sum_k C(m,k) mu_{k+1} Q_{m-k}(0), cross-checked against
    // the log-series route on Exp(1.3)
    const MomentSequence mu = exponential_moments(1.3, 8);
    const CumulantSequence kappa = moments_to_cumulants(mu);
    const Eigen::VectorXd q0 = appell_constants(kappa, 8);
    for (int m = 0; m <= 7; ++m) {
        double acc = 0.0;
        for (int k = 0; k <= m; ++k)
            acc += binomial(m, k) * mu.mu[k + 1] * q0[m - k];
        CHECK(acc == doctest::Approx(kappa.kappa[m + 1]).epsilon(1e-10));
    }
}

TEST_CASE("appell_convolve") {
    // Brownian Wiener-Hopf pair: Exp(sqrt(2r)) and -Exp(sqrt(2r))
    for (double r : {0.5, 2.0}) {
        const double rho = std::sqrt(2.0 * r);
        const auto qa = appell_from_cumulants(exponential_cumulants(rho, 8), 8);
        const auto qb = appell_from_cumulants(negated_exponential_cumulants(rho, 8), 8);
        for (int m = 2; m <= 6; ++m) {
            const Polynomial got = appell_convolve(qa, qb, m);
            Eigen::VectorXd c = Eigen::VectorXd::Zero(m + 1);
            c[m] = 1.0;
            c[m - 2] = -double(m) * double(m - 1) / (2.0 * r);
            CHECK(coeff_distance(got, Polynomial(c)) <= 1e-10);
        }
    }
    // adding an a.s.-zero variable returns qa[m]
    {
        const auto qa = appell_from_cumulants(exponential_cumulants(1.0, 5), 5);
        const auto q0 = appell_from_cumulants(CumulantSequence::zeros(5), 5);
        for (int m = 0; m <= 5; ++m)
            CHECK(coeff_distance(appell_convolve(qa, q0, m), qa[m]) <= 1e-12);
    }
    // cumulant additivity: N(0,1) + N(0,1) = N(0,2)
    {
        const auto qa = appell_from_cumulants(normal_cumulants(0.0, 1.0, 6), 6);
        const auto q2 = appell_from_cumulants(normal_cumulants(0.0, 2.0, 6), 6);
        for (int m = 0; m <= 6; ++m)
            CHECK(coeff_distance(appell_convolve(qa, qa, m), q2[m]) <= 1e-10);
    }
    // length mismatch
    {
        const auto qa = appell_from_cumulants(CumulantSequence::zeros(2), 2);
        CHECK_THROWS_AS(appell_convolve(qa, qa, 3), InvalidArgument);
    }
}

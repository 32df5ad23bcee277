#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "levyopt/polynomial.hpp"
#include "levyopt/roots.hpp"

using namespace levyopt;

TEST_CASE("eval uses the monomial-basis convention") {
    CHECK(eval(Polynomial{0.0, 1.0}, 3.5) == doctest::Approx(3.5).epsilon(1e-15));
    CHECK(eval(Polynomial{-1.0, 0.0, 1.0}, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(eval(Polynomial{0.0, -3.0, 0.0, 1.0}, 2.0) == doctest::Approx(2.0));
    CHECK(eval(Polynomial::zero(), 17.0) == 0.0);
    CHECK(eval(Polynomial::constant(4.25), -3.0) == 4.25);
}

TEST_CASE("derivative") {
    const Polynomial d = derivative(Polynomial{0.0, 0.0, 1.0});
    REQUIRE(d.degree() == 1);
    CHECK(d.coeffs[0] == 0.0);
    CHECK(d.coeffs[1] == 2.0);
    CHECK(derivative(Polynomial::constant(5.0)).is_zero());
    // He_2 = x^2 - 1 differentiates to 2 He_1 = 2x
    const Polynomial he2{-1.0, 0.0, 1.0};
    const Polynomial dd = derivative(he2);
    CHECK(dd.coeffs[0] == 0.0);
    CHECK(dd.coeffs[1] == 2.0);
}

TEST_CASE("arithmetic and shift") {
    const Polynomial p{1.0, -2.0, 3.0};
    const Polynomial q{0.5, 4.0};
    const Polynomial s = p + q;
    CHECK(eval(s, 1.7) == doctest::Approx(eval(p, 1.7) + eval(q, 1.7)));
    const Polynomial m = p * q;
    CHECK(eval(m, -0.9) == doctest::Approx(eval(p, -0.9) * eval(q, -0.9)));
    const Polynomial sh = shift(p, 2.5);
    for (double x : {-1.0, 0.0, 0.3, 2.0})
        CHECK(eval(sh, x) == doctest::Approx(eval(p, x + 2.5)).epsilon(1e-13));
    CHECK(trimmed(Polynomial{1.0, 2.0, 0.0, 0.0}).degree() == 1);
}

TEST_CASE("largest_nonneg_root on the spec cases") {
    // Q_n^{(Exp(Phi))} = (x - n/Phi) x^{n-1}
    for (double phi : {0.7, 1.0, 2.3})
        for (int n : {1, 2, 5, 8}) {
            Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
            c[n] = 1.0;
            c[n - 1] = -double(n) / phi;
            CHECK(largest_nonneg_root(Polynomial(c)) ==
                  doctest::Approx(n / phi).epsilon(1e-11));
        }
    CHECK(largest_nonneg_root(Polynomial{-2.5, 1.0}) == doctest::Approx(2.5));
    CHECK(largest_nonneg_root(Polynomial{-1.0, 0.0, 1.0}) == doctest::Approx(1.0));
    // strictly positive on (0, inf): returns 0
    CHECK(largest_nonneg_root(Polynomial{1.0, 0.0, 1.0}) == 0.0);
    CHECK(largest_nonneg_root(Polynomial::constant(3.0)) == 0.0);
    CHECK_THROWS_AS(largest_nonneg_root(Polynomial::zero()), InvalidArgument);
    // sign-normalized input behaves the same
    CHECK(largest_nonneg_root(Polynomial{2.5, -1.0}) == doctest::Approx(2.5));
}

namespace {

// real nonnegative roots via the companion matrix, sorted ascending
std::vector<double> companion_nonneg_roots(const Polynomial& p) {
    const int n = p.degree();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.coeffs[i] / p.coeffs[n];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    std::vector<double> roots;
    for (int i = 0; i < n; ++i) {
        const std::complex<double> z = es.eigenvalues()[i];
        if (std::abs(z.imag()) < 1e-9 && z.real() >= -1e-12)
            roots.push_back(std::max(z.real(), 0.0));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

TEST_CASE("largest_nonneg_root agrees with the companion-matrix oracle") {
    std::mt19937 gen(42);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_int_distribution<int> deg(2, 8);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = deg(gen);
        Eigen::VectorXd c(n + 1);
        for (int i = 0; i < n; ++i) c[i] = coef(gen);
        c[n] = std::abs(coef(gen)) + 0.25;
        const Polynomial p(c);
        const auto roots = companion_nonneg_roots(p);
        // the bracketing scan resolves sign changes wider than its grid; skip
        // configurations with nearly coincident outer roots
        const double step =
            std::max(1.0, 2.0 * c.cwiseAbs().sum() / c[n]) / 4096.0;
        bool resolvable = true;
        for (size_t i = 0; i + 1 < roots.size(); ++i)
            if (roots[i + 1] - roots[i] < 4.0 * step) resolvable = false;
        if (!resolvable) continue;

        const double got = largest_nonneg_root(p);
        if (roots.empty()) {
            CHECK(got == 0.0);
        } else {
            CHECK(got == doctest::Approx(roots.back()).epsilon(1e-7));
            CHECK(std::abs(eval(p, got)) <=
                  1e-6 * std::max(1.0, p.coeffs.cwiseAbs().sum()));
        }
        ++checked;
    }
    CHECK(checked > 200);
}

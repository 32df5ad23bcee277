#include "levyopt/polynomial.hpp"

#include <array>
#include <cmath>

namespace levyopt {

namespace {

constexpr int kBinomialRows = 41;

std::array<std::array<double, kBinomialRows>, kBinomialRows> make_pascal() {
    std::array<std::array<double, kBinomialRows>, kBinomialRows> t{};
    for (int n = 0; n < kBinomialRows; ++n) {
        t[n][0] = 1.0;
        for (int k = 1; k <= n; ++k)
            t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0.0);
    }
    return t;
}

const auto pascal = make_pascal();

} // namespace

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n < kBinomialRows) return pascal[n][k];
    // Fallback for orders beyond the table; inexact but monotone.
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
    return r;
}

Polynomial::Polynomial(Eigen::VectorXd c) : coeffs(std::move(c)) {
    if (coeffs.size() == 0)
        throw InvalidArgument("Polynomial: empty coefficient vector");
    // Normalize representation: strip exact trailing zeros.
    Eigen::Index n = coeffs.size();
    while (n > 1 && coeffs[n - 1] == 0.0) --n;
    coeffs.conservativeResize(n);
}

Polynomial::Polynomial(std::initializer_list<double> c)
    : Polynomial(Eigen::Map<const Eigen::VectorXd>(c.begin(),
                                                   static_cast<Eigen::Index>(c.size()))) {}

Polynomial Polynomial::constant(double c) {
    Eigen::VectorXd v(1);
    v[0] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monomial(int k, double c) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

double eval(const Polynomial& p, double x) {
    double acc = 0.0;
    for (Eigen::Index i = p.coeffs.size() - 1; i >= 0; --i)
        acc = acc * x + p.coeffs[i];
    return acc;
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() == 0) return Polynomial::zero();
    Eigen::VectorXd d(p.coeffs.size() - 1);
    for (Eigen::Index k = 1; k < p.coeffs.size(); ++k)
        d[k - 1] = double(k) * p.coeffs[k];
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Eigen::Index n = std::max(a.coeffs.size(), b.coeffs.size());
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
    c.head(a.coeffs.size()) = a.coeffs;
    c.head(b.coeffs.size()) += b.coeffs;
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-1.0) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(a.coeffs.size() + b.coeffs.size() - 1);
    for (Eigen::Index i = 0; i < a.coeffs.size(); ++i)
        for (Eigen::Index j = 0; j < b.coeffs.size(); ++j)
            c[i + j] += a.coeffs[i] * b.coeffs[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& p) {
    return Polynomial(Eigen::VectorXd(s * p.coeffs));
}

Polynomial shift(const Polynomial& p, double c) {
    const int n = p.degree();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n + 1);
    // q_j = sum_{i >= j} C(i, j) p_i c^{i-j}
    for (int i = 0; i <= n; ++i) {
        double pw = 1.0;
        for (int j = i; j >= 0; --j) {
            out[j] += binomial(i, j) * p.coeffs[i] * pw;
            pw *= c;
        }
    }
    return Polynomial(std::move(out));
}

Polynomial trimmed(const Polynomial& p, double tol) {
    Eigen::Index n = p.coeffs.size();
    while (n > 1 && std::abs(p.coeffs[n - 1]) <= tol) --n;
    return Polynomial(Eigen::VectorXd(p.coeffs.head(n)));
}

} // namespace levyopt

#include "levyopt/quadrature.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "levyopt/errors.hpp"

namespace levyopt {

namespace {

// 15-point Kronrod extension of 7-point Gauss, abscissae on [-1, 1].
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double gk;
    double err;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double gk = kWgk[7] * f(c);
    double g = kWg[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double fv = f(c - dx) + f(c + dx);
        gk += kWgk[i] * fv;
        if (i % 2 == 1) g += kWg[i / 2] * fv;
    }
    gk *= h;
    g *= h;
    return {gk, std::abs(gk - g)};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double tol, double rel_tol, int depth) {
    const PanelEstimate e = gk15(f, a, b);
    if (e.err <= std::max(tol, rel_tol * std::abs(e.gk)) || depth >= 48)
        return e.gk;
    const double c = 0.5 * (a + b);
    return integrate_rec(f, a, c, 0.5 * tol, rel_tol, depth + 1) +
           integrate_rec(f, c, b, 0.5 * tol, rel_tol, depth + 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol) {
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, abs_tol, rel_tol);
    return integrate_rec(f, a, b, abs_tol, rel_tol, 0);
}

double integrate_exp_tail(const std::function<double(double)>& f, double a,
                          double rate, double abs_tol) {
    if (rate <= 0.0)
        throw InvalidArgument("integrate_exp_tail: decay rate must be positive");
    return integrate(f, a, a + 40.0 / rate, abs_tol);
}

GaussLaguerre::GaussLaguerre(int n) {
    if (n < 1) throw InvalidArgument("GaussLaguerre: need n >= 1");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        jacobi(i, i) = 2.0 * i + 1.0;
        if (i > 0) {
            jacobi(i, i - 1) = double(i);
            jacobi(i - 1, i) = double(i);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    nodes = es.eigenvalues();
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double v0 = es.eigenvectors()(0, i);
        weights[i] = v0 * v0; // mu_0 = int e^{-x} dx = 1
    }
}

double GaussLaguerre::apply(const std::function<double(double)>& f) const {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < nodes.size(); ++i)
        acc += weights[i] * f(nodes[i]);
    return acc;
}

double exp_tail_integral(const Polynomial& p, double s, double c) {
    if (s <= 0.0)
        throw InvalidArgument("exp_tail_integral: need s > 0 for convergence");
    double acc = 0.0;
    double spow = s;
    Polynomial d = p;
    for (int i = 0; i <= p.degree(); ++i) {
        acc += eval(d, c) / spow;
        spow *= s;
        d = derivative(d);
    }
    return std::exp(-s * c) * acc;
}

double poly_exp_integral(const Polynomial& p, double s, double a, double b) {
    if (s == 0.0) {
        // plain polynomial integral
        double acc = 0.0;
        for (int k = 0; k <= p.degree(); ++k)
            acc += p.coeffs[k] / (k + 1) *
                   (std::pow(b, k + 1) - std::pow(a, k + 1));
        return acc;
    }
    auto antideriv = [&](double z) {
        double acc = 0.0;
        double sign = 1.0;
        double spow = s;
        Polynomial d = p;
        for (int i = 0; i <= p.degree(); ++i) {
            acc += sign * eval(d, z) / spow;
            sign = -sign;
            spow *= s;
            d = derivative(d);
        }
        return std::exp(s * z) * acc;
    };
    return antideriv(b) - antideriv(a);
}

} // namespace levyopt

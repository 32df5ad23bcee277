#include "levyopt/roots.hpp"

#include <cmath>

namespace levyopt {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double x_tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw InvalidArgument("bisect: endpoints do not bracket a sign change");
    for (int it = 0; it < 240 && (hi - lo) > x_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fhi > 0.0)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

double largest_nonneg_root(const Polynomial& p) {
    Polynomial q = trimmed(p);
    if (q.is_zero())
        throw InvalidArgument("largest_nonneg_root: zero polynomial");
    // Roots are invariant under global sign; normalize the leading
    // coefficient positive so the bracket logic sees p -> +inf.
    if (q.coeffs[q.degree()] < 0.0)
        q = -1.0 * q;
    if (q.degree() == 0)
        return 0.0; // positive constant: no root on (0, inf)

    const double lead = q.coeffs[q.degree()];
    double hi = std::max(1.0, 2.0 * q.coeffs.cwiseAbs().sum() / lead);
    for (int it = 0; it < 200 && eval(q, hi) <= 0.0; ++it) hi *= 2.0;

    // Scan down from the bound for the outermost non-positive value.
    constexpr int kScan = 4096;
    const double step = hi / kScan;
    double above = hi;
    for (int i = 1; i <= kScan; ++i) {
        const double t = hi - i * step;
        const double ft = eval(q, t < 0.0 ? 0.0 : t);
        if (ft < 0.0)
            return bisect([&](double x) { return eval(q, x); },
                          std::max(t, 0.0), above, 1e-12);
        if (ft == 0.0)
            return std::max(t, 0.0);
        above = std::max(t, 0.0);
    }
    // p > 0 on [0, hi] and beyond: no nonnegative sign change.
    return 0.0;
}

} // namespace levyopt

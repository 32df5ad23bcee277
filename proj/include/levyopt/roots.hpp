#pragma once

#include <functional>

#include "levyopt/polynomial.hpp"

namespace levyopt {

// Largest x* >= 0 with p(x*) = 0, to absolute tolerance 1e-12.
// Brackets the outermost sign change by scanning down from a Cauchy-type
// upper bound (doubled until p > 0 there), then bisects. Returns 0 when
// p > 0 on (0, inf). Throws InvalidArgument on the zero polynomial.
double largest_nonneg_root(const Polynomial& p);

// Bisection on [lo, hi] for continuous f with f(lo), f(hi) of opposite sign.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double x_tol);

} // namespace levyopt

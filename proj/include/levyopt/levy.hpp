#pragma once

#include <variant>
#include <vector>

#include "levyopt/cumulants.hpp"
#include "levyopt/errors.hpp"

namespace levyopt {

// Jump-size laws of the finite-activity Levy measure.
struct PointMass {
    double size; // != 0
};
struct ExponentialUp {
    double alpha; // > 0, density alpha e^{-alpha x} on (0, inf)
};
struct ExponentialDown {
    double alpha; // > 0, density alpha e^{alpha x} on (-inf, 0)
};
using JumpLaw = std::variant<PointMass, ExponentialUp, ExponentialDown>;

struct JumpComponent {
    double rate; // Poisson intensity, > 0
    JumpLaw law;
};

// Levy triplet with finite jump activity. The compensator of small jumps is
// absorbed into `drift`: psi(g) = drift*g + gaussian_var*g^2/2
// + sum rate*(E e^{gJ} - 1). Not interchangeable with the compensated drift
// of the truncated parameterization.
struct LevyModel {
    double drift = 0.0;
    double gaussian_var = 0.0; // b^2 >= 0
    std::vector<JumpComponent> jumps;
};

void validate(const LevyModel& model);

// Model plus killing (discount) rate r > 0; the horizon T is Exp(r).
struct KilledSpec {
    LevyModel model;
    double r;

    KilledSpec(LevyModel m, double discount);
};

enum class SpectralType { brownian, negative, positive, two_sided };

SpectralType classify(const LevyModel& model);
// True when no jump points upward (downward); a jump-free model is both.
bool spectrally_negative(const LevyModel& model);
bool spectrally_positive(const LevyModel& model);

// MGF domain of the exponent: psi is finite on (lower, upper).
double exponent_domain_upper(const LevyModel& model);
double exponent_domain_lower(const LevyModel& model);

// Levy-Khinchine exponent psi(gamma) with E e^{gamma X_t} = e^{t psi(gamma)}.
double psi(const LevyModel& model, double gamma);
double psi_derivative(const LevyModel& model, double gamma);
double psi_second_derivative(const LevyModel& model, double gamma);

// Sufficient check for E e^{lambda |X_T|} < inf: psi(+-lambda) < r inside
// the exponent domain. Returns false (never throws) outside the domain.
bool validate_exponential_moments(const KilledSpec& spec, double lambda);

// Unique positive root of psi(lambda) = r (spectrally negative models).
double phi_root(const KilledSpec& spec);
// Unique positive root of psi(-lambda) = r (spectrally positive models).
double hat_phi_root(const KilledSpec& spec);

// Cumulants of X_1: Taylor coefficients of psi at 0.
CumulantSequence x1_cumulants(const LevyModel& model, int n);

// Raw moments of X_T from mu_m = (1/r) sum_{k=1}^m C(m,k) c_k mu_{m-k},
// the coefficient identity of G(u)(r - psi(u)) = r.
MomentSequence xT_moments(const KilledSpec& spec, int n);

// Raw moment E J^k of a jump law.
double jump_moment(const JumpLaw& law, int k);

} // namespace levyopt

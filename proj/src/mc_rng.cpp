#include "levyopt/mc_rng.hpp"

namespace levyopt {

namespace {

// Ziggurat for the standard normal (128 layers, Marsaglia-Tsang layout).
constexpr int kLayers = 128;
constexpr double kR = 3.442619855899;
constexpr double kV = 9.91256303526217e-3;

struct ZigTables {
    double x[kLayers + 1];
    double f[kLayers + 1];

    ZigTables() {
        const double f_r = std::exp(-0.5 * kR * kR);
        x[0] = kV / f_r; // virtual width of the base layer (tail area folded in)
        x[1] = kR;
        x[kLayers] = 0.0;
        for (int i = 2; i < kLayers; ++i)
            x[i] = std::sqrt(-2.0 * std::log(kV / x[i - 1] +
                                             std::exp(-0.5 * x[i - 1] * x[i - 1])));
        for (int i = 0; i <= kLayers; ++i) f[i] = std::exp(-0.5 * x[i] * x[i]);
    }
};

const ZigTables zig;

} // namespace

double CounterRng::normal() {
    for (;;) {
        const std::uint64_t bits = next_u64();
        const int i = static_cast<int>(bits & 127u);
        const bool negative = (bits >> 7) & 1u;
        const double u = double(bits >> 11) * 0x1.0p-53; // [0, 1)
        const double xv = u * zig.x[i];
        if (xv < zig.x[i + 1]) return negative ? -xv : xv;
        if (i == 0) {
            // tail beyond R
            double t, e;
            do {
                t = -std::log1p(-u01()) / kR;
                e = -std::log1p(-u01());
            } while (2.0 * e < t * t);
            return negative ? -(kR + t) : (kR + t);
        }
        // wedge
        if (zig.f[i + 1] + u01() * (zig.f[i] - zig.f[i + 1]) <
            std::exp(-0.5 * xv * xv))
            return negative ? -xv : xv;
    }
}

} // namespace levyopt

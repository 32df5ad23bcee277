#include "levyopt/mc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "levyopt/mc_rng.hpp"
#include "levyopt/stopping.hpp"

namespace levyopt {

double default_t_cap(double r) { return std::max(20.0 / r, 50.0); }

std::string config_warning(const SimConfig& cfg, const KilledSpec& spec) {
    const double cap = cfg.t_cap > 0.0 ? cfg.t_cap : default_t_cap(spec.r);
    if (cap < 10.0 / spec.r)
        return "t_cap below 10/r: truncation bias may be visible at this horizon";
    return {};
}

namespace {

void check_config(const SimConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw InvalidArgument("SimConfig: dt must be > 0");
    if (cfg.n_paths < 1) throw InvalidArgument("SimConfig: n_paths must be >= 1");
    if (cfg.t_cap < 0.0) throw InvalidArgument("SimConfig: t_cap must be >= 0");
}

double resolved_t_cap(const SimConfig& cfg, double r) {
    return cfg.t_cap > 0.0 ? cfg.t_cap : default_t_cap(r);
}

// Model constants hoisted out of the stepping loop.
struct Stepper {
    double drift;
    double sigma;
    double total_rate = 0.0;
    struct Comp {
        double cum_rate;
        int kind; // 0 point, 1 exp up, 2 exp down
        double param;
    };
    std::vector<Comp> comps;

    explicit Stepper(const LevyModel& m) : drift(m.drift), sigma(std::sqrt(m.gaussian_var)) {
        for (const auto& j : m.jumps) {
            total_rate += j.rate;
            Comp c{total_rate, 0, 0.0};
            if (const auto* pm = std::get_if<PointMass>(&j.law)) {
                c.kind = 0;
                c.param = pm->size;
            } else if (const auto* up = std::get_if<ExponentialUp>(&j.law)) {
                c.kind = 1;
                c.param = up->alpha;
            } else {
                c.kind = 2;
                c.param = std::get<ExponentialDown>(j.law).alpha;
            }
            comps.push_back(c);
        }
    }

    double draw_jump(CounterRng& rng) const {
        const Comp* c = &comps.front();
        if (comps.size() > 1) {
            const double u = rng.u01() * total_rate;
            for (const auto& cc : comps)
                if (u <= cc.cum_rate) {
                    c = &cc;
                    break;
                }
        }
        switch (c->kind) {
            case 0: return c->param;
            case 1: return rng.exponential() / c->param;
            default: return -rng.exponential() / c->param;
        }
    }
};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Advance x across (t_prev, t_next]; one normal increment plus the jumps
// whose exact arrival times fall in the window.
inline void advance(const Stepper& sp, CounterRng& rng, double h, double sig_sqh,
                    double t_next, double& x, double& next_jump, long* jump_count) {
    x += sp.drift * h + sig_sqh * rng.normal();
    while (next_jump <= t_next) {
        x += sp.draw_jump(rng);
        next_jump += rng.exponential() / sp.total_rate;
        if (jump_count) ++*jump_count;
    }
}

void parallel_paths(long n_paths, const std::function<void(long, long)>& block) {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned n_threads = std::clamp(hw, 1u, 8u);
    if (n_paths < 4096) n_threads = 1;
    if (n_threads == 1) {
        block(0, n_paths);
        return;
    }
    std::vector<std::thread> pool;
    const long chunk = (n_paths + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
        const long lo = t * chunk;
        const long hi = std::min(n_paths, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(block, lo, hi);
    }
    for (auto& th : pool) th.join();
}

double pairwise_sum_rec(const double* v, long n) {
    if (n <= 16) {
        double s = 0.0;
        for (long i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const long h = n / 2;
    return pairwise_sum_rec(v, h) + pairwise_sum_rec(v + h, n - h);
}

} // namespace

double pairwise_sum(std::span<const double> v) {
    return pairwise_sum_rec(v.data(), static_cast<long>(v.size()));
}

McEstimate estimate_from_samples(std::span<const double> v) {
    const long n = static_cast<long>(v.size());
    if (n == 0) return {};
    const double mean = pairwise_sum(v) / double(n);
    if (n == 1) return {mean, 0.0, 1};
    std::vector<double> dev(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        const double d = v[i] - mean;
        dev[i] = d * d;
    }
    const double var = pairwise_sum(dev) / double(n - 1);
    return {mean, std::sqrt(var / double(n)), n};
}

PathSummary simulate_killed_path(const KilledSpec& spec, double x0,
                                 const SimConfig& cfg, long path_index) {
    check_config(cfg);
    const Stepper sp(spec.model);
    CounterRng rng(cfg.seed, static_cast<std::uint64_t>(path_index));

    const double t_cap = resolved_t_cap(cfg, spec.r);
    const double T = rng.exponential() / spec.r;
    const double horizon = std::min(T, t_cap);

    PathSummary out;
    out.t = horizon;
    double x = x0;
    out.x_max = out.x_min = x;
    double next_jump =
        sp.total_rate > 0.0 ? rng.exponential() / sp.total_rate : kInf;
    const double sig_sqdt = sp.sigma * std::sqrt(cfg.dt);

    const long full_steps = static_cast<long>(std::floor(horizon / cfg.dt));
    for (long k = 1; k <= full_steps; ++k) {
        advance(sp, rng, cfg.dt, sig_sqdt, double(k) * cfg.dt, x, next_jump,
                &out.jump_count);
        out.x_max = std::max(out.x_max, x);
        out.x_min = std::min(out.x_min, x);
    }
    const double rem = horizon - double(full_steps) * cfg.dt;
    if (rem > 0.0) {
        advance(sp, rng, rem, sp.sigma * std::sqrt(rem), horizon, x, next_jump,
                &out.jump_count);
        out.x_max = std::max(out.x_max, x);
        out.x_min = std::min(out.x_min, x);
    }
    out.x_end = x;
    return out;
}

namespace {

// First grid time with x > a, undiscounted walk to t_cap.
// Returns tau < 0 when the path never crosses.
struct Crossing {
    double tau;
    double x_at;
};

Crossing first_crossing(const Stepper& sp, CounterRng& rng, double x0, double a,
                        double dt, double t_cap) {
    if (x0 > a) return {0.0, x0};
    double x = x0;
    double next_jump =
        sp.total_rate > 0.0 ? rng.exponential() / sp.total_rate : kInf;
    const double sig_sqdt = sp.sigma * std::sqrt(dt);
    const long full_steps = static_cast<long>(std::floor(t_cap / dt));
    for (long k = 1; k <= full_steps; ++k) {
        const double t = double(k) * dt;
        advance(sp, rng, dt, sig_sqdt, t, x, next_jump, nullptr);
        if (x > a) return {t, x};
    }
    const double rem = t_cap - double(full_steps) * dt;
    if (rem > 0.0) {
        advance(sp, rng, rem, sp.sigma * std::sqrt(rem), t_cap, x, next_jump, nullptr);
        if (x > a) return {t_cap, x};
    }
    return {-1.0, x};
}

} // namespace

PayoffReport threshold_payoff(const KilledSpec& spec, int n, double x0, double a,
                              const SimConfig& cfg) {
    check_config(cfg);
    if (n < 0) throw InvalidArgument("threshold_payoff: n < 0");
    const double t_cap = resolved_t_cap(cfg, spec.r);
    const double r = spec.r;
    const Stepper sp(spec.model);

    std::vector<double> payoff(cfg.n_paths, 0.0);
    std::vector<double> raw(cfg.n_paths, 0.0); // undiscounted, for the bias bound
    std::vector<char> crossed_flag(cfg.n_paths, 0);
    parallel_paths(cfg.n_paths, [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) {
            CounterRng rng(cfg.seed, static_cast<std::uint64_t>(i));
            const Crossing c = first_crossing(sp, rng, x0, a, cfg.dt, t_cap);
            if (c.tau >= 0.0) {
                crossed_flag[i] = 1;
                const double g = std::pow(std::max(c.x_at, 0.0), n);
                raw[i] = g;
                payoff[i] = std::exp(-r * c.tau) * g;
            }
        }
    });

    PayoffReport rep;
    rep.estimate = estimate_from_samples(payoff);
    rep.threshold = a;
    rep.t_cap = t_cap;
    long crossed = 0;
    double sup_payoff = std::pow(std::max(a, 0.0), n);
    for (long i = 0; i < cfg.n_paths; ++i)
        if (crossed_flag[i]) {
            ++crossed;
            sup_payoff = std::max(sup_payoff, raw[i]);
        }
    rep.n_crossed = crossed;
    rep.bias_bound = std::exp(-r * t_cap) * sup_payoff;
    return rep;
}

FluctuationReport fluctuation_identity_check(const KilledSpec& spec, int n, double x,
                                             double a, const SimConfig& cfg) {
    check_config(cfg);
    if (!(a > x)) throw InvalidArgument("fluctuation_identity_check: need a > x");
    const WienerHopfFactors factors = wiener_hopf_factors(spec);
    const auto* ep = std::get_if<ExponentialPlus>(&factors.sup_factor);
    if (!ep)
        throw UnsupportedError("fluctuation_identity_check: analytic side needs an "
                               "exponential sup factor");
    const Polynomial q_n = appell_of_factor(factors.sup_factor, n)[n];
    const double analytic = expected_sup_appell(ep->rate, q_n, x, a);

    const double t_cap = resolved_t_cap(cfg, spec.r);
    const Stepper sp(spec.model);
    std::vector<double> payoff(cfg.n_paths, 0.0);
    parallel_paths(cfg.n_paths, [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) {
            CounterRng rng(cfg.seed, static_cast<std::uint64_t>(i));
            const Crossing c = first_crossing(sp, rng, x, a, cfg.dt, t_cap);
            if (c.tau >= 0.0)
                payoff[i] = std::exp(-spec.r * c.tau) * std::pow(c.x_at, n);
        }
    });

    FluctuationReport rep;
    rep.mc = estimate_from_samples(payoff);
    rep.analytic = analytic;
    rep.z_score = rep.mc.std_error > 0.0
                      ? (rep.mc.mean - analytic) / rep.mc.std_error
                      : (rep.mc.mean == analytic ? 0.0 : kInf);
    rep.pass = std::abs(rep.z_score) <= 3.0;
    rep.bias_bound = std::exp(-spec.r * t_cap) * std::pow(std::abs(a) + 1.0, n);
    return rep;
}

ScanReport optimality_scan(const KilledSpec& spec, int n, double x0,
                           const std::vector<double>& thresholds, const SimConfig& cfg) {
    check_config(cfg);
    if (thresholds.empty()) throw InvalidArgument("optimality_scan: empty threshold list");
    const double x_star = threshold(spec, n);
    int star_index = -1;
    for (size_t i = 0; i < thresholds.size(); ++i)
        if (std::abs(thresholds[i] - x_star) <= 1e-9 * std::max(1.0, x_star))
            star_index = static_cast<int>(i);
    if (star_index < 0)
        throw InvalidArgument("optimality_scan: threshold list must include x* = " +
                              std::to_string(x_star));

    // Walk each path once; tau_a is nondecreasing in a, so thresholds are
    // retired in ascending order as the path climbs.
    std::vector<size_t> order(thresholds.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return thresholds[i] < thresholds[j]; });

    const double t_cap = resolved_t_cap(cfg, spec.r);
    const Stepper sp(spec.model);
    const size_t K = thresholds.size();
    std::vector<std::vector<double>> payoff(K, std::vector<double>(cfg.n_paths, 0.0));

    parallel_paths(cfg.n_paths, [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) {
            CounterRng rng(cfg.seed, static_cast<std::uint64_t>(i));
            double x = x0;
            size_t next = 0;
            auto settle = [&](double t) {
                while (next < K && x > thresholds[order[next]]) {
                    payoff[order[next]][i] =
                        std::exp(-spec.r * t) * std::pow(std::max(x, 0.0), n);
                    ++next;
                }
            };
            settle(0.0);
            double next_jump =
                sp.total_rate > 0.0 ? rng.exponential() / sp.total_rate : kInf;
            const double sig_sqdt = sp.sigma * std::sqrt(cfg.dt);
            const long full_steps = static_cast<long>(std::floor(t_cap / cfg.dt));
            for (long k = 1; k <= full_steps && next < K; ++k) {
                advance(sp, rng, cfg.dt, sig_sqdt, double(k) * cfg.dt, x, next_jump,
                        nullptr);
                settle(double(k) * cfg.dt);
            }
        }
    });

    ScanReport rep;
    rep.thresholds = thresholds;
    rep.x_star = x_star;
    rep.star_index = star_index;
    rep.payoffs.resize(K);
    for (size_t k = 0; k < K; ++k) rep.payoffs[k] = estimate_from_samples(payoff[k]);
    rep.z_vs_star.assign(K, 0.0);
    rep.pass = true;
    std::vector<double> diff(cfg.n_paths);
    for (size_t k = 0; k < K; ++k) {
        if (static_cast<int>(k) == star_index) continue;
        for (long i = 0; i < cfg.n_paths; ++i)
            diff[i] = payoff[star_index][i] - payoff[k][i];
        const McEstimate d = estimate_from_samples(diff);
        rep.z_vs_star[k] = d.std_error > 0.0 ? d.mean / d.std_error : 0.0;
        if (d.mean < -3.0 * d.std_error) rep.pass = false;
    }
    return rep;
}

namespace {

double k_statistic(int k, const std::array<double, 7>& s, double n) {
    const double s1 = s[1], s2 = s[2], s3 = s[3], s4 = s[4];
    switch (k) {
        case 1: return s1 / n;
        case 2: return (n * s2 - s1 * s1) / (n * (n - 1.0));
        case 3:
            return (2.0 * s1 * s1 * s1 - 3.0 * n * s1 * s2 + n * n * s3) /
                   (n * (n - 1.0) * (n - 2.0));
        case 4:
            return (-6.0 * std::pow(s1, 4) + 12.0 * n * s1 * s1 * s2 -
                    3.0 * n * (n - 1.0) * s2 * s2 - 4.0 * n * (n + 1.0) * s1 * s3 +
                    n * n * (n + 1.0) * s4) /
                   (n * (n - 1.0) * (n - 2.0) * (n - 3.0));
        default: {
            // plug-in central-moment estimates for k = 5, 6
            const double mean = s1 / n;
            std::array<double, 7> m{}; // central moments m[2..6]
            for (int j = 2; j <= 6; ++j) {
                double acc = 0.0;
                for (int l = 0; l <= j; ++l)
                    acc += binomial(j, l) * s[l] * std::pow(-mean, j - l);
                m[j] = acc / n;
            }
            if (k == 5) return m[5] - 10.0 * m[3] * m[2];
            return m[6] - 15.0 * m[4] * m[2] - 10.0 * m[3] * m[3] +
                   30.0 * m[2] * m[2] * m[2];
        }
    }
}

} // namespace

FactorCumulantReport empirical_factor_cumulants(const KilledSpec& spec, int k_max,
                                                const SimConfig& cfg) {
    check_config(cfg);
    if (k_max < 1 || k_max > 6)
        throw InvalidArgument("empirical_factor_cumulants: k_max must be in [1, 6]");
    const long n_paths = cfg.n_paths;
    const int groups = static_cast<int>(std::min<long>(50, n_paths));

    // Per-group power sums S_0..S_6 of the path max and min.
    std::vector<std::array<double, 7>> gs_max(groups, std::array<double, 7>{});
    std::vector<std::array<double, 7>> gs_min(groups, std::array<double, 7>{});
    std::vector<PathSummary> summaries(n_paths);
    parallel_paths(n_paths, [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i)
            summaries[i] = simulate_killed_path(spec, 0.0, cfg, i);
    });
    for (long i = 0; i < n_paths; ++i) {
        const int g = static_cast<int>(i % groups);
        double pmax = 1.0, pmin = 1.0;
        for (int j = 0; j <= 6; ++j) {
            gs_max[g][j] += pmax;
            gs_min[g][j] += pmin;
            pmax *= summaries[i].x_max;
            pmin *= summaries[i].x_min;
        }
    }
    std::array<double, 7> tot_max{}, tot_min{};
    for (int g = 0; g < groups; ++g)
        for (int j = 0; j <= 6; ++j) {
            tot_max[j] += gs_max[g][j];
            tot_min[j] += gs_min[g][j];
        }

    FactorCumulantReport rep{CumulantSequence::zeros(k_max),
                             CumulantSequence::zeros(k_max),
                             Eigen::VectorXd::Zero(k_max + 1),
                             Eigen::VectorXd::Zero(k_max + 1),
                             Eigen::VectorXd::Zero(k_max + 1)};
    for (int k = 1; k <= k_max; ++k) {
        rep.sup.kappa[k] = k_statistic(k, tot_max, double(n_paths));
        rep.inf.kappa[k] = k_statistic(k, tot_min, double(n_paths));
        // delete-one-group jackknife
        Eigen::VectorXd th_sup(groups), th_inf(groups), th_sum(groups);
        for (int g = 0; g < groups; ++g) {
            std::array<double, 7> dmax{}, dmin{};
            for (int j = 0; j <= 6; ++j) {
                dmax[j] = tot_max[j] - gs_max[g][j];
                dmin[j] = tot_min[j] - gs_min[g][j];
            }
            const double nd = double(n_paths) - gs_max[g][0];
            th_sup[g] = k_statistic(k, dmax, nd);
            th_inf[g] = k_statistic(k, dmin, nd);
            th_sum[g] = th_sup[g] + th_inf[g];
        }
        auto jack_se = [&](const Eigen::VectorXd& th) {
            const double mean = th.mean();
            const double ss = (th.array() - mean).square().sum();
            return std::sqrt((double(groups) - 1.0) / double(groups) * ss);
        };
        rep.sup_se[k] = jack_se(th_sup);
        rep.inf_se[k] = jack_se(th_inf);
        rep.sum_se[k] = jack_se(th_sum);
    }
    return rep;
}

} // namespace levyopt

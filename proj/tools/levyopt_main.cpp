#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "levyopt/mc.hpp"
#include "levyopt/model_io.hpp"
#include "levyopt/sigma.hpp"
#include "levyopt/stopping.hpp"
#include "levyopt/verify.hpp"

namespace {

using levyopt::KilledSpec;
using nlohmann::ordered_json;

// exit codes: 0 ok, 2 parse, 3 order cap, 4 unsupported, 5 verify failure
constexpr int kExitParse = 2;
constexpr int kExitOrderCap = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitVerifyFailure = 5;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size())
            throw levyopt::InvalidArgument("cannot parse number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw levyopt::InvalidArgument("empty number list");
    return out;
}

std::vector<double> parse_grid(const std::string& s) {
    // LO:HI:STEP
    std::vector<double> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(std::stod(item));
    if (parts.size() != 3 || parts[2] <= 0.0)
        throw levyopt::InvalidArgument("grid must be LO:HI:STEP with STEP > 0");
    std::vector<double> out;
    for (double x = parts[0]; x <= parts[1] + 1e-12 * parts[2]; x += parts[2])
        out.push_back(x);
    return out;
}

ordered_json model_json(const KilledSpec& spec) {
    return ordered_json::parse(levyopt::spec_to_json(spec));
}

int cmd_appell(const std::string& cumulants, const std::string& dist, int order) {
    levyopt::CumulantSequence kappa;
    if (!cumulants.empty()) {
        const std::vector<double> ks = parse_list(cumulants);
        Eigen::VectorXd v = Eigen::VectorXd::Zero(ks.size() + 1);
        for (size_t i = 0; i < ks.size(); ++i) v[i + 1] = ks[i];
        kappa = levyopt::CumulantSequence(std::move(v));
    } else if (!dist.empty()) {
        const auto colon = dist.find(':');
        const std::string kind = dist.substr(0, colon);
        const std::string args = colon == std::string::npos ? "" : dist.substr(colon + 1);
        const int n_ord = std::max(order, 1);
        if (kind == "exp") {
            kappa = levyopt::exponential_cumulants(std::stod(args), n_ord);
        } else if (kind == "normal") {
            const std::vector<double> ps = parse_list(args);
            if (ps.size() != 2)
                throw levyopt::InvalidArgument("--dist normal:MU,SIGMA2 needs two numbers");
            kappa = levyopt::normal_cumulants(ps[0], ps[1], n_ord);
        } else {
            throw levyopt::InvalidArgument("--dist must be exp:LAMBDA or normal:MU,SIGMA2");
        }
    } else {
        throw levyopt::InvalidArgument("one of --cumulants or --dist is required");
    }
    const auto family = levyopt::appell_from_cumulants(kappa, order);
    for (const auto& q : family) {
        std::string line;
        for (int k = 0; k <= q.degree(); ++k) {
            if (k) line += ',';
            line += num(q.coeffs[k]);
        }
        std::cout << line << '\n';
    }
    return 0;
}

int cmd_solve(const std::string& model_file, int n, const std::string& grid,
              const std::string& out_format) {
    const KilledSpec spec = levyopt::load_spec_file(model_file);
    const levyopt::StoppingSolution sol = levyopt::solve(spec, n);

    std::optional<double> phi, phi_hat;
    if (const auto* ep = std::get_if<levyopt::ExponentialPlus>(&sol.factors.sup_factor))
        phi = ep->rate;
    if (const auto* em = std::get_if<levyopt::ExponentialMinus>(&sol.factors.inf_factor))
        phi_hat = em->rate;

    std::vector<double> xs;
    if (!grid.empty()) xs = parse_grid(grid);

    if (out_format == "json") {
        ordered_json doc;
        doc["command"] = "solve";
        doc["model"] = model_json(spec);
        doc["n"] = n;
        doc["x_star"] = sol.x_star;
        if (phi) doc["phi"] = *phi;
        if (phi_hat) doc["phi_hat"] = *phi_hat;
        doc["q_sup_coeffs"] = std::vector<double>(
            sol.q_sup.coeffs.data(), sol.q_sup.coeffs.data() + sol.q_sup.coeffs.size());
        doc["table"] = ordered_json::array();
        for (double x : xs) {
            const double g = std::pow(std::max(x, 0.0), n);
            doc["table"].push_back(
                ordered_json{{"x", x}, {"V", sol.value(x)}, {"g", g}});
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "x_star," << num(sol.x_star) << '\n';
        if (phi) std::cout << "phi," << num(*phi) << '\n';
        if (phi_hat) std::cout << "phi_hat," << num(*phi_hat) << '\n';
        if (!xs.empty()) {
            std::cout << "x,V,g\n";
            for (double x : xs) {
                const double g = std::pow(std::max(x, 0.0), n);
                std::cout << num(x) << ',' << num(sol.value(x)) << ',' << num(g) << '\n';
            }
        }
    }
    return 0;
}

int cmd_sigma(const std::string& model_file, int n, const std::string& gamma_grid,
              bool density, const std::string& x_grid) {
    const KilledSpec spec = levyopt::load_spec_file(model_file);
    if (density) {
        if (x_grid.empty())
            throw levyopt::InvalidArgument("--density needs --x-grid LO:HI:STEP");
        const levyopt::SigmaDensity d = levyopt::make_sigma_density(spec, n);
        std::cout << "x,density\n";
        for (double x : parse_grid(x_grid)) {
            if (x < d.x_star) continue;
            std::cout << num(x) << ',' << num(d(x)) << '\n';
        }
        return 0;
    }
    if (gamma_grid.empty())
        throw levyopt::InvalidArgument("--gamma-grid is required (or use --density)");
    std::cout << "gamma,sigma_hat\n";
    for (double g : parse_list(gamma_grid))
        std::cout << num(g) << ',' << num(levyopt::sigma_hat(spec, n, g)) << '\n';
    return 0;
}

int cmd_mc(const std::string& model_file, int n, const std::string& mode, double x0,
           double a, const std::string& thresholds, int k_max, long paths, double dt,
           std::uint64_t seed, double t_cap) {
    const KilledSpec spec = levyopt::load_spec_file(model_file);
    levyopt::SimConfig cfg;
    cfg.dt = dt;
    cfg.n_paths = paths;
    cfg.seed = seed;
    cfg.t_cap = t_cap;

    ordered_json doc;
    doc["command"] = "mc";
    doc["mode"] = mode;
    doc["model"] = model_json(spec);
    doc["n"] = n;
    doc["paths"] = paths;
    doc["dt"] = dt;
    doc["seed"] = seed;
    const std::string warning = levyopt::config_warning(cfg, spec);
    if (!warning.empty()) doc["warning"] = warning;

    if (mode == "payoff") {
        const levyopt::PayoffReport rep = levyopt::threshold_payoff(spec, n, x0, a, cfg);
        doc["x0"] = x0;
        doc["threshold"] = a;
        doc["t_cap"] = rep.t_cap;
        doc["mean"] = rep.estimate.mean;
        doc["std_error"] = rep.estimate.std_error;
        doc["n_effective"] = rep.estimate.n_effective;
        doc["n_crossed"] = rep.n_crossed;
        doc["bias_bound"] = rep.bias_bound;
    } else if (mode == "fluctuation") {
        const levyopt::FluctuationReport rep =
            levyopt::fluctuation_identity_check(spec, n, x0, a, cfg);
        doc["x"] = x0;
        doc["barrier"] = a;
        doc["mc_mean"] = rep.mc.mean;
        doc["mc_std_error"] = rep.mc.std_error;
        doc["analytic"] = rep.analytic;
        doc["z_score"] = rep.z_score;
        doc["pass"] = rep.pass;
        doc["bias_bound"] = rep.bias_bound;
    } else if (mode == "scan") {
        if (thresholds.empty())
            throw levyopt::InvalidArgument("scan mode needs --thresholds a1,a2,...");
        const levyopt::ScanReport rep =
            levyopt::optimality_scan(spec, n, x0, parse_list(thresholds), cfg);
        doc["x0"] = x0;
        doc["x_star"] = rep.x_star;
        doc["thresholds"] = rep.thresholds;
        std::vector<double> means, ses;
        for (const auto& e : rep.payoffs) {
            means.push_back(e.mean);
            ses.push_back(e.std_error);
        }
        doc["means"] = means;
        doc["std_errors"] = ses;
        doc["z_vs_star"] = rep.z_vs_star;
        doc["pass"] = rep.pass;
    } else if (mode == "factors") {
        const levyopt::FactorCumulantReport rep =
            levyopt::empirical_factor_cumulants(spec, k_max, cfg);
        doc["k_max"] = k_max;
        auto tail = [](const Eigen::VectorXd& v) {
            return std::vector<double>(v.data() + 1, v.data() + v.size());
        };
        doc["sup_cumulants"] = tail(rep.sup.kappa);
        doc["inf_cumulants"] = tail(rep.inf.kappa);
        doc["sup_se"] = tail(rep.sup_se);
        doc["inf_se"] = tail(rep.inf_se);
        doc["sum_se"] = tail(rep.sum_se);
    } else {
        throw levyopt::InvalidArgument(
            "unknown --mode (expected payoff|fluctuation|scan|factors)");
    }
    std::cout << doc.dump(2) << '\n';
    return 0;
}

int cmd_verify(const std::string& suite) {
    const std::vector<levyopt::SuiteResult> results = levyopt::run_suites(suite);
    bool pass = true;
    for (const auto& s : results) {
        for (const auto& c : s.checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << " [" << s.name << "] " << c.name;
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << '\n';
            pass = pass && c.pass;
        }
    }
    std::cout << (pass ? "all suites passed" : "suite failures detected") << '\n';
    return pass ? 0 : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal stopping of Levy processes with power rewards: "
                 "Appell-polynomial thresholds, Wiener-Hopf factor laws, "
                 "representing-measure transforms and Monte Carlo checks"};
    app.require_subcommand(1);

    // appell
    std::string ap_cumulants, ap_dist;
    int ap_order = 0;
    CLI::App* ap = app.add_subcommand("appell", "print an Appell family as CSV rows");
    ap->add_option("--cumulants", ap_cumulants, "kappa_1,kappa_2,...");
    ap->add_option("--dist", ap_dist, "exp:LAMBDA or normal:MU,SIGMA2");
    ap->add_option("--order", ap_order, "highest order N")->required();

    // solve
    std::string so_model, so_grid, so_out = "csv";
    int so_n = 1;
    CLI::App* so = app.add_subcommand("solve", "threshold and value function");
    so->add_option("--model", so_model, "model JSON file")->required();
    so->add_option("-n", so_n, "reward power")->required();
    so->add_option("--grid", so_grid, "x grid LO:HI:STEP");
    so->add_option("--out", so_out, "csv|json");

    // sigma
    std::string sg_model, sg_gamma, sg_xgrid;
    int sg_n = 1;
    bool sg_density = false;
    CLI::App* sg = app.add_subcommand("sigma", "representing-measure transform/density");
    sg->add_option("--model", sg_model)->required();
    sg->add_option("-n", sg_n)->required();
    sg->add_option("--gamma-grid", sg_gamma, "gamma values g1,g2,...");
    sg->add_flag("--density", sg_density, "emit (x, density) for spectrally positive");
    sg->add_option("--x-grid", sg_xgrid, "x grid LO:HI:STEP for --density");

    // mc
    std::string mc_model, mc_mode = "payoff", mc_thresholds;
    int mc_n = 1, mc_kmax = 4;
    double mc_x0 = 0.0, mc_a = 0.0, mc_dt = 1e-3, mc_tcap = 0.0;
    long mc_paths = 100000;
    std::uint64_t mc_seed = 0;
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimates (JSON report)");
    mc->add_option("--model", mc_model)->required();
    mc->add_option("-n", mc_n, "reward power");
    mc->add_option("--mode", mc_mode, "payoff|fluctuation|scan|factors");
    mc->add_option("--x0", mc_x0, "start point");
    mc->add_option("--threshold", mc_a, "threshold/barrier a");
    mc->add_option("--thresholds", mc_thresholds, "scan list a1,a2,...");
    mc->add_option("--kmax", mc_kmax, "max cumulant order (factors mode)");
    mc->add_option("--paths", mc_paths, "number of paths");
    mc->add_option("--dt", mc_dt, "monitoring step");
    mc->add_option("--seed", mc_seed, "RNG seed")->required();
    mc->add_option("--t-cap", mc_tcap, "horizon cap (0: max(20/r, 50))");

    // verify
    std::string vf_suite = "all";
    CLI::App* vf = app.add_subcommand("verify", "run invariant suites");
    vf->add_option("--suite", vf_suite, "all|appell|wh|stopping|sigma");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitParse;
    }

    try {
        if (ap->parsed()) return cmd_appell(ap_cumulants, ap_dist, ap_order);
        if (so->parsed()) return cmd_solve(so_model, so_n, so_grid, so_out);
        if (sg->parsed()) return cmd_sigma(sg_model, sg_n, sg_gamma, sg_density, sg_xgrid);
        if (mc->parsed())
            return cmd_mc(mc_model, mc_n, mc_mode, mc_x0, mc_a, mc_thresholds, mc_kmax,
                          mc_paths, mc_dt, mc_seed, mc_tcap);
        if (vf->parsed()) return cmd_verify(vf_suite);
    } catch (const levyopt::OrderError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitOrderCap;
    } catch (const levyopt::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const levyopt::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const levyopt::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

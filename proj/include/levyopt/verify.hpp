#pragma once

#include <string>
#include <vector>

#include "levyopt/polynomial.hpp"

namespace levyopt {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Module invariant suites behind the `verify` subcommand. All run at desk
// scale in well under a second each.
SuiteResult run_appell_suite();
SuiteResult run_wh_suite();
SuiteResult run_stopping_suite();
SuiteResult run_sigma_suite();

// which: all|appell|wh|stopping|sigma
std::vector<SuiteResult> run_suites(const std::string& which);

// max abs coefficient difference, padded to common degree
double coeff_distance(const Polynomial& a, const Polynomial& b);

} // namespace levyopt

// Identity suites shared by the `verify` command and the acceptance binary.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace est::cli {

struct SuiteCase {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteOptions {
    std::vector<std::int64_t> q;  // empty: the suite's default moduli
    int r = 4;                    // gfar and beta: largest r
    int trials = 100;
    int lmax = 300;
    int points = 10;              // hga, aq4 and the sml x-grid
    std::uint64_t seed = 20240601;
};

// Suite names accepted by the verify command.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite. "mellin-basic" is accepted in
// addition to the verify names.
std::vector<SuiteCase> run_suite(const std::string& suite, const SuiteOptions& opt);

}  // namespace est::cli

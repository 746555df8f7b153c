#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "bhlab/report.hpp"

namespace bhlab {

// One fully resolved invocation. Every numeric default of 0 means "pick
// the command's own default"; all randomness flows from `seed` through
// counter-based streams, so identical configs produce identical bytes.
struct RunConfig {
    std::string command;
    std::string lemma;              // verify: check id
    std::string input;              // coefficient / dirichlet JSON path
    std::string format = "json";    // json | csv (table output)
    std::string space = "lorentz";  // norm: lorentz | marcinkiewicz
    std::string scheme = "telescoping";
    std::string op = "tables";      // dirichlet: lift | unlift | weight | chain | tables | membership
    int m = 2;
    int n = 2;
    int k = 0;                      // block size; 0 = command default
    int N_first = 2;
    int N_last = 8;
    std::uint64_t N_max = 10'000;
    std::uint64_t pos = 2;          // dirichlet weight position
    std::size_t checkpoints = 40;
    int trials = 100;
    int samples = 100'000;          // torus samples for the mean-ratio check
    int indicators = 16;            // envelope indicator sweep size
    std::uint64_t seed = 1;
    double p = 0.0;
    double q = 0.0;
    double t = 0.0;
    double theta = 0.5;
    double p0 = 1.0;
    double p1 = 2.0;
    double rel_tol = 1e-9;
    double rhs_scale = 1.0;         // debug: scales every rhs before the verdict
    int starts = 32;
    int sweeps = 200;
    int iters = 400;
    int grid_points = 720;
    std::uint32_t sieve_bound = 1'000'000;
    BHConstantTable constants;
};

// Executes the command, streaming JSON-line reports (or CSV tables) to
// `out` and diagnostics to `err`. Returns 0 when no verdict was violated,
// 1 when at least one was, 2 on configuration or input errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv front end over run(); honors --output by redirecting `out` into
// the named file.
int run_cli(int argc, const char* const* argv);

}  // namespace bhlab

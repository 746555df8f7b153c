#pragma once

#include <complex>
#include <vector>

#include "bhlab/report.hpp"

namespace bhlab {

// The two couples the laboratory interpolates between.
enum class Couple { l1_linf, l1_l2 };

struct InterpParams {
    double theta = 0.5;  // in (0, 1)
    double q = 1.0;      // in [1, inf]; inf takes sup_t t^{-theta} K(t)
};

// K(t; l1, linf) = sum_{k <= floor(t)} x*_k + (t - floor(t)) x*_{floor(t)+1},
// the running integral of the step rearrangement; t > 0.
double k_functional(const std::vector<std::complex<double>>& x, double t);

// K(t; l1, l2) = min over x = y + z of ||y||_1 + t ||z||_2, computed
// exactly by enumerating the threshold pieces of the convex objective
// (the optimal z caps the rearrangement at a level lambda).
double k_functional_l1_l2(const std::vector<std::complex<double>>& x, double t);

// Independent oracles: breakpoint scan of min_M [sum (|x_i| - M)_+ + t M]
// and ternary search on the capping level. Used to cross-check the exact
// routines; not part of the fast path.
double k_functional_oracle(const std::vector<std::complex<double>>& x, double t);
double k_functional_l1_l2_oracle(const std::vector<std::complex<double>>& x, double t);

// (integral of (t^{-theta} K(t, x))^q dt/t)^{1/q}. The integral is split
// exactly: closed form on [0, 1] and in the constant tail, adaptive
// Simpson on the unit segments in between. q = inf (sup form) is
// supported for the (l1, linf) couple.
double real_interp_norm(const std::vector<std::complex<double>>& x, const InterpParams& params,
                        Couple couple = Couple::l1_linf);

// Instance constants of the two-sided comparison between the couple norm
// (l_{p0}, l_{p1})_{theta,q} and l_{p,q}, 1/p = (1-theta)/p0 + theta/p1,
// with the printed theta- and q-dependent factors split off. The
// remaining universal constant is unknown, so this is fit-mode only.
struct EnvelopeResult {
    double p = 0.0;
    double interp_norm = 0.0;
    double lorentz_norm = 0.0;
    double factor_min = 0.0;    // lower-side printed factor
    double factor_max = 0.0;    // upper-side printed factor
    double fitted_upper = 0.0;  // interp / (factor_max * lorentz)
    double fitted_lower = 0.0;  // factor_min * lorentz / interp
    double fitted_C = 0.0;      // smallest C making both sides hold
    InequalityReport report;
};

// Supported couples: p0 = 1 with p1 = 2 or p1 = inf.
EnvelopeResult check_lorentz_envelope(const std::vector<std::complex<double>>& x, double p0,
                                      double p1, double theta, double q,
                                      const BHConstantTable& table);

// Averages x over each block of a partition of the positions 1..N.
std::vector<std::complex<double>> block_average(const std::vector<std::complex<double>>& x,
                                                const std::vector<std::vector<int>>& blocks);

}  // namespace bhlab

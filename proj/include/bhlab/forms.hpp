#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "bhlab/mixed.hpp"

namespace bhlab {

// Coefficients c = (c_j) of an m-homogeneous polynomial, j ranging over
// the nondecreasing index set J(m, n) in lexicographic order.
struct PolynomialCoefficients {
    IndexSetSpec spec;  // kind is always nondecreasing
    std::vector<std::complex<double>> values;

    static PolynomialCoefficients zeros(int m, int n,
                                        std::uint64_t cap = kDefaultEnumerationCap);

    std::complex<double>& at(const MultiIndex& idx);
    std::complex<double> at(const MultiIndex& idx) const;

    int m() const { return spec.m; }
    int n() const { return spec.n; }
};

// c_j = card[j] * a_j. Requires a.symmetric and class-constant entries.
PolynomialCoefficients poly_from_symmetric(const CoefficientTensor& a);

// a_i = c_{sort(i)} / card[sort(i)]; the symmetric tensor of P.
CoefficientTensor symmetric_from_poly(const PolynomialCoefficients& c);

// A(x^1, ..., x^m) = sum_i a_i * prod_k x^k_{i_k}.
std::complex<double> eval_form(const CoefficientTensor& a,
                               const std::vector<std::vector<std::complex<double>>>& args);

// P(z) = sum_j c_j * z_{j_1} ... z_{j_m}.
std::complex<double> eval_poly(const PolynomialCoefficients& c,
                               const std::vector<std::complex<double>>& z);

enum class SupNormMethod { alternating, grid, exact_family };

struct SupNormEstimate {
    double lower = 0.0;               // certified: attained at the witness
    double upper = std::nan("");      // NaN when no certified upper bound ran
    SupNormMethod method = SupNormMethod::alternating;
    // Witness: m unit-ball vectors for forms, one torus point for polynomials.
    std::vector<std::vector<std::complex<double>>> form_witness;
    std::vector<std::complex<double>> poly_witness;

    bool has_upper() const { return !std::isnan(upper); }
};

struct SupNormBudget {
    int starts = 32;
    int sweeps = 200;
    double rel_tol = 1e-12;
};

// Heuristic lower estimate of sup |A(x^1..x^m)| over unit polydiscs by
// alternating exact coordinate maximisation (each half-step is an exact
// inner maximisation, so the value sequence is nondecreasing).
SupNormEstimate supnorm_form(const CoefficientTensor& a, const SupNormBudget& budget,
                             std::uint64_t seed);

struct PolySupOptions {
    int starts = 32;
    int iters = 400;
    double rel_tol = 1e-12;
    int grid_points = 720;  // per angle; the certified oracle needs n <= 3
    bool use_grid = true;
};

// Lower estimate of sup |P(z)| on the torus via seeded multistart gradient
// ascent; for n <= 3 a dense grid adds a Lipschitz-certified upper bound.
SupNormEstimate supnorm_poly(const PolynomialCoefficients& c, const PolySupOptions& options,
                             std::uint64_t seed);

// m^m / m!.
double polarization_factor(int m);

}  // namespace bhlab

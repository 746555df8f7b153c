#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bhlab/forms.hpp"
#include "bhlab/lorentz.hpp"
#include "bhlab/mixed.hpp"

namespace bhlab {

// Product tensor a_{i_1...i_m} = b_{i_1 i_2} * ... * b_{i_{m-1} i_m} built
// from the unimodular base matrix b_{rs} = e^{2 pi i rs / N}. Rows of the
// base are orthogonal, which drives the sup-norm bound N^{(m+1)/2}.
struct FourierTensor {
    int N = 0;
    int m = 0;
    std::vector<std::complex<double>> base;  // row-major N x N
    CoefficientTensor values;

    // N^{(m+1)/2}, the analytic sup-norm upper bound.
    double sup_bound() const;
};

FourierTensor fourier_tensor(int N, int m, std::uint64_t cap = kDefaultEnumerationCap);

struct OptimalityRow {
    int N = 0;
    double phi = 0.0;            // fundamental function of X at N^m atoms
    double sup_bound = 0.0;      // N^{(m+1)/2}
    double ascent_estimate = 0.0;
    double ratio = 0.0;          // phi / sup_bound
};

// Sharpness sweep: unimodular tensors have ||a||_X = phi_X(N^m), so the
// ratio column measures phi(N^m) against the sup-norm growth. The ascent
// estimate must stay below sup_bound * (1 + 1e-6).
std::vector<OptimalityRow> optimality_experiment(int N_first, int N_last, int m,
                                                 const LorentzParams& X,
                                                 const SupNormBudget& budget,
                                                 std::uint64_t seed);

struct KszResult {
    std::vector<int> best_signs;  // over J(m, N) in lexicographic order
    double best_sup_estimate = 0.0;
    double bound_value = 0.0;   // C * (N * binom(m+N-1, m) * log m)^{1/2}
    double fitted_constant = 0.0;  // best_sup_estimate / (bound_value / C)
    int trials = 0;
};

// Random-sign polynomial experiment: among `trials` sign patterns, the
// smallest sup-norm estimate is compared against the probabilistic bound.
// Fit-mode only: the constant is reported, never asserted.
KszResult ksz_random_poly(int N, int m, int trials, std::uint64_t seed,
                          const PolySupOptions& options = {},
                          double ksz_constant = 1.0);

}  // namespace bhlab

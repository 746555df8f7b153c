#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bhlab/forms.hpp"
#include "bhlab/mixed.hpp"
#include "bhlab/report.hpp"

namespace bhlab {

// A tensor together with a trusted sup-norm value. `certified` means the
// value is exact or an analytic upper bound; heuristic lower estimates
// set certified = false, and dependent checks can then only conclude
// "holds" or "inconclusive", never "violated".
struct CertifiedTensor {
    CoefficientTensor tensor;
    double sup_norm = 0.0;
    bool certified = true;
    std::string family;
};

// sup |A| = prod_k ||u^k||_1, attained at conjugate-phase arguments.
CertifiedTensor certified_rank_one(const std::vector<std::vector<std::complex<double>>>& factors);

// Single entry of modulus |coeff|; sup |A| = |coeff|.
CertifiedTensor certified_monomial(int m, int n, const MultiIndex& idx,
                                   std::complex<double> coeff);

// Product tensor of the unimodular base matrix; analytic upper bound
// N^{(m+1)/2} for the sup norm.
CertifiedTensor certified_fourier(int N, int m);

// Wraps a heuristic ascent lower estimate (certified = false).
CertifiedTensor certify_heuristically(const CoefficientTensor& a, const SupNormBudget& budget,
                                      std::uint64_t seed);

// --- slice sums ------------------------------------------------------

// sum_{i in S} |a_i| <= m * E(S) * ||a||_{m/(m-1), inf}; needs m >= 2.
InequalityReport check_slice_sum(const CoefficientTensor& a,
                                 const std::vector<MultiIndex>& S_set,
                                 double rel_tol = 1e-9);

// --- greedy slice partition ------------------------------------------

struct GreedyPartition {
    // masks[k][offset] = 1 iff the index at `offset` belongs to block k.
    std::vector<std::vector<std::uint8_t>> masks;
    std::vector<std::vector<int>> chosen_values;  // per coordinate, per round
};

// Round-by-round slice removal: in each round every coordinate k picks a
// not-yet-chosen value whose remaining slice mass is minimal (ties go to
// the smallest value), removes that slice, and the removed indices are
// assigned to the block of the smallest coordinate that claimed them.
// Selection masses are |a_i|^q so that the ell_infty[ell_q] block bound
// with constant m^{1/q} * ||a||_{qm/(m-1), inf} is guaranteed.
GreedyPartition greedy_partition(const CoefficientTensor& a, double q);

// Disjointness and cover of the block masks.
bool partition_is_cover(const GreedyPartition& partition);

// One report per block k: block_norm(a^{S_k}, {k}, inf, q) against
// m^{1/q} * ||a||_{qm/(m-1), inf}; needs m >= 2.
std::vector<InequalityReport> check_partition_blocks(const CoefficientTensor& a,
                                                     const GreedyPartition& partition,
                                                     double q, double rel_tol = 1e-9);

// --- duality and mixed-norm comparisons ------------------------------

// ||a||_{qm/((q-1)m+1), 1} <= m^{1/q} * sum_k block_norm(a, {k}, 1, q');
// needs q > 1.
InequalityReport check_partition_duality(const CoefficientTensor& a, double q,
                                         double rel_tol = 1e-9);

// block_norm(a, {k}, 1, 2) <= sqrt(2)^{m-1} * ||a||_inf.
InequalityReport check_mixed_bh(const CertifiedTensor& a, int k, double rel_tol = 1e-9);

// ||a||_{2m/(m+1), 1} <= sqrt(m) * sqrt(2)^{m-1} * ||a||_inf.
InequalityReport check_bf_constant(const CertifiedTensor& a, double rel_tol = 1e-9);

// ||a||_{2m/(m+1), 2k/(k+1)} <= 2 binom(m,k)^{3/2} *
//   sum_{S in P_k} block_norm(a, S, 2k/(k+1), 2); 1 <= k <= m.
InequalityReport check_block_embedding(const CoefficientTensor& a, int k,
                                       double rel_tol = 1e-9);

// ||a||_{2m/(m+1), 2k/(k+1)} <= 2 binom(m,k)^{3/2} A_{2k/(k+1)}^{m-k}
//   * bh_mult(k) * ||a||_inf.
InequalityReport check_fine_mult(const CertifiedTensor& a, int k,
                                 const BHConstantTable& table, double rel_tol = 1e-9);

// ||a||_{2m/(m+1), 2(m-1)/m} <= C2 * kappa * m * A * (m-1)^{(1-gamma)/2}
//   * ||a||_inf; fit-mode, the implied constant is recorded in the
//   instance descriptor.
InequalityReport check_subpoly_mult(const CertifiedTensor& a, const BHConstantTable& table,
                                    double rel_tol = 1e-9);

// --- diagonal class weights ------------------------------------------

// d_j = card[j]^{(m+1)/(2m)} * a_j over J(m, n); a must be symmetric.
PolynomialCoefficients diagonal_apply(const CoefficientTensor& a);

// ||d||_{l1(J)} <= ||a||_{l1(M)} and ||d||_{l2(J)} <= sqrt(m)||a||_{l2(M)}.
std::pair<InequalityReport, InequalityReport> check_diagonal_endpoints(
    const CoefficientTensor& a, double rel_tol = 1e-9);

// --- polynomial chains ------------------------------------------------

// L * m * C2 * m * m^{(m-1)/(2m)} * S1^{m-1} * (m/(m-1))^{m-1} * bh_mult(1).
double chain_constant(int m, const BHConstantTable& table);

// ||c||_{2m/(m+1),1} <= chain_constant(m) * ||P||_inf.
InequalityReport check_poly_bh(const PolynomialCoefficients& c, double sup_norm,
                               bool certified, const BHConstantTable& table,
                               double rel_tol = 1e-9);

// ||c||_{2m/(m+1),1} <= m^m * sqrt(m) * sqrt(2)^{m-1} * ||P||_inf.
InequalityReport check_poly_transfer(const PolynomialCoefficients& c, double sup_norm,
                                     bool certified, double rel_tol = 1e-9);

// Weighted mixed bound for the symmetric matrix of P, worst subset S of
// size k: ell_{2k/(k+1)} over M(S) of (sum_j card[j] |a_{i+j}|^2)^{1/2}
//   <= S_{2k/(k+1)}^{m-k} * ((m-k)! m^m / ((m-k)^{m-k} m!)) * bh_mult(k)
//      * ||P||_inf.
InequalityReport check_weighted_mixed_poly(const PolynomialCoefficients& c, double sup_norm,
                                           bool certified, int k,
                                           const BHConstantTable& table,
                                           double rel_tol = 1e-9);

// ||a||_{mq/(m+q-1), 1} <= C_q * m * ||a||_{(m,n,1,1,q)}; fit-mode.
InequalityReport check_block_contraction(const CoefficientTensor& a, double q,
                                         const BHConstantTable& table,
                                         double rel_tol = 1e-9);

// ||a||_{mqt/(mq+t-q), t} <= C_q * m * ||a||_{(m,n,m-1,t,q)} for
// 1 <= t < q; fit-mode.
InequalityReport check_outer_contraction(const CoefficientTensor& a, double t, double q,
                                         const BHConstantTable& table,
                                         double rel_tol = 1e-9);

// Ascent lower bound for the symmetric form against the polarization
// transfer (m^m/m!) * certified upper bound for ||P||_inf.
InequalityReport check_polarization(const CoefficientTensor& a, const SupNormBudget& form_budget,
                                    const PolySupOptions& poly_options, std::uint64_t seed,
                                    double rel_tol = 1e-9);

// --- scalar desk checks ------------------------------------------------

// sum_{k<=N} k^{-alpha} < N^{1-alpha}/(1-alpha), strict; alpha in (0,1).
InequalityReport check_power_sum_bound(double alpha, std::uint64_t N);

// (1/p') * marcinkiewicz <= weak ell_{p,inf} <= marcinkiewicz.
std::pair<InequalityReport, InequalityReport> check_marcinkiewicz_sandwich(
    const std::vector<std::complex<double>>& x, double p, double rel_tol = 1e-12);

struct KhinchineMcResult {
    double l2 = 0.0;
    double mc_mean = 0.0;
    double mc_se = 0.0;
    double ratio = 0.0;
    double ratio_se = 0.0;
    InequalityReport report;
};

// Monte Carlo estimate of ||alpha||_2 / E|sum alpha_k z_k| on the torus;
// compared against sqrt(2) + 3 * propagated standard error.
KhinchineMcResult check_khinchine_mc(const std::vector<std::complex<double>>& alpha,
                                     int samples, std::uint64_t seed,
                                     const BHConstantTable& table);

}  // namespace bhlab

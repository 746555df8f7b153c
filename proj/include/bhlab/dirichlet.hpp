#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "bhlab/forms.hpp"
#include "bhlab/report.hpp"

namespace bhlab {

// Smallest-prime-factor sieve; factorizations are exponent vectors over
// the first primes (p_1 = 2, p_2 = 3, ...).
class PrimeFactorizer {
public:
    explicit PrimeFactorizer(std::uint32_t bound = 1'000'000);

    const std::vector<std::uint32_t>& primes() const { return primes_; }
    std::uint32_t bound() const { return static_cast<std::uint32_t>(spf_.size() - 1); }

    // Exponents over the first primes, trimmed after the largest factor;
    // n must lie in [2, bound].
    std::vector<int> factor(std::uint64_t n) const;

private:
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint32_t> prime_pos_;  // prime -> 0-based index in primes_
};

struct PrimePowerIndex {
    std::uint64_t n = 1;
    std::vector<int> alpha;  // exponents over the first primes
};

// Factorization together with the homogeneity check sum(alpha) = m.
PrimePowerIndex factor_admissible(std::uint64_t n, int m, const PrimeFactorizer& fact);

// Coefficients of an m-homogeneous Dirichlet series: support only at
// integers with exactly m prime factors counted with multiplicity.
struct DirichletCoefficients {
    int m = 0;
    std::map<std::uint64_t, std::complex<double>> entries;
};

// a_{p^alpha} = c_alpha: each monomial with exponent pattern alpha maps
// to the integer prod p_v^{alpha_v}. Zero coefficients are dropped.
DirichletCoefficients bohr_lift(const PolynomialCoefficients& c, const PrimeFactorizer& fact);

// Inverse of the lift. n_vars = 0 infers the variable count from the
// largest prime appearing in the support (at least 1).
PolynomialCoefficients bohr_unlift(const DirichletCoefficients& d, const PrimeFactorizer& fact,
                                   int n_vars = 0);

// (log n)^{(m-1)/2} / n^{(m-1)/(2m)}; identically 1 for m = 1, needs
// n >= 2 otherwise.
double dirichlet_weight(std::uint64_t n, int m);

// ell_{2m/(m+1),1} norm of the lifted coefficients against the chain
// constant times the certified polynomial sup norm.
InequalityReport check_lifted_coefficients(const PolynomialCoefficients& c,
                                           const PrimeFactorizer& fact, double sup_norm,
                                           bool certified, const BHConstantTable& table,
                                           double rel_tol = 1e-9);

struct GrowthRow {
    std::uint64_t n = 0;
    double value = 0.0;
};

// The two divergence tables showing ell_1(omega) and ell_{2m/(m+1),1}
// do not contain each other, sampled at geometric checkpoints.
struct NonEmbeddingTables {
    int m = 0;
    // ||e_n / omega_n|| = n^{(m-1)/(2m)} / (log n)^{(m-1)/2} (single atom).
    std::vector<GrowthRow> atom_table;
    // Same atom norms under the alternative log exponent (m-1)/m; both
    // readings diverge, so the non-embedding conclusion is insensitive
    // to which one is meant.
    std::vector<GrowthRow> atom_table_alt;
    // (sum_{k <= n} omega_k) / n^{(m-1)/(2m)} (indicator norms ratio).
    std::vector<GrowthRow> ratio_table;

    std::uint64_t monotone_from = 0;  // atom values increase beyond ceil(e^m)
    bool atom_monotone_beyond = false;
    bool ratio_monotone = false;
    double atom_growth = 0.0;   // last / first atom value
    double ratio_growth = 0.0;  // last / first ratio value
};

NonEmbeddingTables non_embedding_tables(int m, std::uint64_t N_max,
                                        std::size_t checkpoints = 40);

// Both norms the final membership statement asserts to be finite, plus
// the exact rearrangement comparison sum |a_n| n^{-b} <= sum a*_k k^{-b},
// b = (m-1)/(2m).
struct MembershipResult {
    double weighted_l1 = 0.0;
    double lorentz_norm = 0.0;
    InequalityReport report;
};

MembershipResult check_weighted_membership(const PolynomialCoefficients& c,
                                           const PrimeFactorizer& fact);

}  // namespace bhlab

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bhlab/multiindex.hpp"

namespace bhlab {

// Dense coefficient family a = (a_i), i ranging over the full index set
// M(m, n) in lexicographic order.
struct CoefficientTensor {
    IndexSetSpec spec;  // kind is always full
    std::vector<std::complex<double>> values;
    bool symmetric = false;

    static CoefficientTensor zeros(int m, int n,
                                   std::uint64_t cap = kDefaultEnumerationCap);

    std::complex<double>& at(const MultiIndex& idx);
    std::complex<double> at(const MultiIndex& idx) const;

    int m() const { return spec.m; }
    int n() const { return spec.n; }
    std::uint64_t size() const { return values.size(); }
};

// Entries outside the mask (indexed by lexicographic offset) are zeroed.
CoefficientTensor restrict_support(const CoefficientTensor& a,
                                   const std::vector<std::uint8_t>& mask);

// || a ||_{ell_p(S)[ell_q(S^c)]}: inner ell_q over the complement
// coordinates, outer ell_p over the S coordinates. p, q in [1, inf].
double block_norm(const CoefficientTensor& a, const CoordinateSubset& S,
                  double p, double q);

// Sum of block_norm over all S in P_k(m), taken in bitmask order with
// pairwise summation. Requires 1 <= k < m.
double aggregate_norm(const CoefficientTensor& a, int k, double p, double q);

// Magnitudes in lexicographic offset order (not rearranged).
std::vector<double> magnitudes(const CoefficientTensor& a);

}  // namespace bhlab

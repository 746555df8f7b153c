#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bhlab {

// Pairwise (tree) summation with a fixed recursion pattern.  The order is
// deterministic, so repeated runs over the same data are bit-identical,
// and rounding drift stays O(log n) even on n^m-sized term lists.
double pairwise_sum(std::span<const double> xs);

// Sum of f(i) for i in [0, n), accumulated pairwise without materialising
// the terms. Blocks of 512 are summed left-to-right, then combined pairwise.
template <typename F>
double pairwise_sum_indexed(std::size_t n, F&& f) {
    constexpr std::size_t kBlock = 512;
    std::vector<double> partial;
    partial.reserve(n / kBlock + 1);
    std::size_t i = 0;
    while (i < n) {
        double s = 0.0;
        std::size_t end = i + kBlock < n ? i + kBlock : n;
        for (; i < end; ++i) s += f(i);
        partial.push_back(s);
    }
    return pairwise_sum(partial);
}

std::uint64_t binomial_u64(unsigned n, unsigned k);
double binomial(unsigned n, unsigned k);
std::uint64_t factorial_u64(unsigned n);

// lhs <= rhs up to a relative tolerance anchored at |rhs|.
bool leq_rel(double lhs, double rhs, double rel_tol);

// |a - b| <= tol * max(|a|, |b|, 1).
bool close_rel(double a, double b, double tol);

}  // namespace bhlab

#include "bhlab/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "bhlab/errors.hpp"

namespace bhlab {

namespace {

double pairwise_rec(const double* xs, std::size_t n) {
    if (n <= 32) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += xs[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_rec(xs, half) + pairwise_rec(xs + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> xs) {
    return pairwise_rec(xs.data(), xs.size());
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // Exact at every step: r is a binomial times a divided-out factor.
        std::uint64_t num = n - k + i;
        if (r > UINT64_MAX / num) throw instance_too_large("binomial overflows 64 bits");
        r = r * num / i;
    }
    return r;
}

double binomial(unsigned n, unsigned k) {
    return static_cast<double>(binomial_u64(n, k));
}

std::uint64_t factorial_u64(unsigned n) {
    if (n > 20) throw instance_too_large("factorial overflows 64 bits");
    std::uint64_t r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

bool leq_rel(double lhs, double rhs, double rel_tol) {
    return lhs <= rhs + rel_tol * std::abs(rhs);
}

bool close_rel(double a, double b, double tol) {
    double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= tol * scale;
}

}  // namespace bhlab

#include "bhlab/lowerbounds.hpp"

#include <cmath>
#include <numbers>

#include "bhlab/errors.hpp"
#include "bhlab/numeric.hpp"
#include "bhlab/rng.hpp"

namespace bhlab {

double FourierTensor::sup_bound() const {
    return std::pow(static_cast<double>(N), 0.5 * static_cast<double>(m + 1));
}

FourierTensor fourier_tensor(int N, int m, std::uint64_t cap) {
    if (N < 2 || m < 2) throw bad_params("fourier_tensor: need N >= 2 and m >= 2");
    FourierTensor ft;
    ft.N = N;
    ft.m = m;
    ft.base.resize(static_cast<std::size_t>(N) * static_cast<std::size_t>(N));
    for (int r = 1; r <= N; ++r)
        for (int s = 1; s <= N; ++s) {
            double angle = 2.0 * std::numbers::pi * static_cast<double>(r) *
                           static_cast<double>(s) / static_cast<double>(N);
            ft.base[static_cast<std::size_t>((r - 1) * N + (s - 1))] = {std::cos(angle), std::sin(angle)};
        }

    ft.values = CoefficientTensor::zeros(m, N, cap);
    MultiIndex idx = first_index(ft.values.spec);
    std::size_t off = 0;
    do {
        std::complex<double> prod{1.0, 0.0};
        for (int l = 0; l + 1 < m; ++l)
            prod *= ft.base[static_cast<std::size_t>((idx[static_cast<std::size_t>(l)] - 1) * N +
                                                     (idx[static_cast<std::size_t>(l + 1)] - 1))];
        ft.values.values[off++] = prod;
    } while (bhlab::advance(ft.values.spec, idx));

    // Construction sanity: row orthogonality of the base matrix.
    for (int r = 1; r <= N; ++r)
        for (int s = 1; s <= N; ++s) {
            std::complex<double> dot{0.0, 0.0};
            for (int k = 1; k <= N; ++k)
                dot += ft.base[static_cast<std::size_t>((r - 1) * N + (k - 1))] *
                       std::conj(ft.base[static_cast<std::size_t>((s - 1) * N + (k - 1))]);
            double expect = r == s ? static_cast<double>(N) : 0.0;
            if (std::abs(dot - expect) > 1e-9 * static_cast<double>(N))
                throw error("fourier_tensor: base rows fail orthogonality check");
        }
    return ft;
}

std::vector<OptimalityRow> optimality_experiment(int N_first, int N_last, int m,
                                                 const LorentzParams& X,
                                                 const SupNormBudget& budget,
                                                 std::uint64_t seed) {
    if (N_first < 2 || N_last < N_first) throw bad_params("optimality_experiment: bad N range");
    std::vector<OptimalityRow> rows;
    for (int N = N_first; N <= N_last; ++N) {
        FourierTensor ft = fourier_tensor(N, m);
        OptimalityRow row;
        row.N = N;
        std::uint64_t atoms = 1;
        for (int i = 0; i < m; ++i) atoms *= static_cast<std::uint64_t>(N);
        row.phi = fundamental_function(X, atoms);
        row.sup_bound = ft.sup_bound();
        row.ascent_estimate =
            supnorm_form(ft.values, budget, seed + static_cast<std::uint64_t>(N)).lower;
        row.ratio = row.phi / row.sup_bound;
        if (row.ascent_estimate > row.sup_bound * (1.0 + 1e-6))
            throw error("optimality_experiment: ascent exceeded the analytic sup bound");
        rows.push_back(row);
    }
    return rows;
}

KszResult ksz_random_poly(int N, int m, int trials, std::uint64_t seed,
                          const PolySupOptions& options, double ksz_constant) {
    if (m < 2) throw bad_params("ksz_random_poly: need m >= 2 (log m degenerates)");
    if (N < 1 || trials < 1) throw bad_params("ksz_random_poly: need N >= 1, trials >= 1");
    IndexSetSpec jspec{m, N, IndexSetKind::nondecreasing};
    std::uint64_t dim = jspec.size();
    if (dim > kDefaultEnumerationCap) throw instance_too_large("ksz_random_poly: J(m,N) too large");

    KszResult result;
    result.trials = trials;
    result.best_sup_estimate = kInf;
    for (int trial = 0; trial < trials; ++trial) {
        SeedStream rng = SeedStream::derive(seed, 0x4B535A00ULL + static_cast<std::uint64_t>(trial));
        std::vector<int> signs(static_cast<std::size_t>(dim));
        PolynomialCoefficients c = PolynomialCoefficients::zeros(m, N);
        for (std::size_t i = 0; i < signs.size(); ++i) {
            signs[i] = rng.next_sign();
            c.values[i] = {static_cast<double>(signs[i]), 0.0};
        }
        double est = supnorm_poly(c, options, seed + static_cast<std::uint64_t>(trial)).lower;
        if (est < result.best_sup_estimate) {
            result.best_sup_estimate = est;
            result.best_signs = std::move(signs);
        }
    }
    double raw = std::sqrt(static_cast<double>(N) * static_cast<double>(binomial_u64(
                               static_cast<unsigned>(m + N - 1), static_cast<unsigned>(m))) *
                           std::log(static_cast<double>(m)));
    result.bound_value = ksz_constant * raw;
    result.fitted_constant = result.best_sup_estimate / raw;
    return result;
}

}  // namespace bhlab

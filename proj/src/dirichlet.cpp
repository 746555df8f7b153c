#include "bhlab/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "bhlab/errors.hpp"
#include "bhlab/lorentz.hpp"
#include "bhlab/numeric.hpp"
#include "bhlab/verify.hpp"

namespace bhlab {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

PrimeFactorizer::PrimeFactorizer(std::uint32_t bound) {
    if (bound < 2) throw bad_params("sieve bound must be at least 2");
    spf_.assign(static_cast<std::size_t>(bound) + 1, 0);
    prime_pos_.assign(static_cast<std::size_t>(bound) + 1, 0);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (spf_[i] == 0) {
            prime_pos_[i] = static_cast<std::uint32_t>(primes_.size());
            primes_.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i; j <= bound; j += i)
                if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

std::vector<int> PrimeFactorizer::factor(std::uint64_t n) const {
    if (n < 2) throw domain_error("factorization needs n >= 2");
    if (n >= spf_.size()) throw instance_too_large("n exceeds the sieve bound");
    std::vector<int> alpha;
    auto rest = static_cast<std::uint32_t>(n);
    while (rest > 1) {
        const std::uint32_t p = spf_[rest];
        const std::uint32_t pos = prime_pos_[p];
        if (alpha.size() <= pos) alpha.resize(pos + 1, 0);
        while (rest % p == 0) {
            rest /= p;
            ++alpha[pos];
        }
    }
    return alpha;
}

PrimePowerIndex factor_admissible(std::uint64_t n, int m, const PrimeFactorizer& fact) {
    PrimePowerIndex out;
    out.n = n;
    out.alpha = fact.factor(n);
    int total = 0;
    for (int e : out.alpha) total += e;
    if (total != m)
        throw domain_error("n=" + std::to_string(n) + " has " + std::to_string(total) +
                           " prime factors, expected " + std::to_string(m));
    return out;
}

DirichletCoefficients bohr_lift(const PolynomialCoefficients& c, const PrimeFactorizer& fact) {
    const auto& primes = fact.primes();
    if (static_cast<std::size_t>(c.n()) > primes.size())
        throw instance_too_large("not enough primes in the table for the variable count");
    DirichletCoefficients d;
    d.m = c.m();
    IndexSetSpec spec = c.spec;
    MultiIndex j = first_index(spec);
    std::uint64_t off = 0;
    do {
        const std::complex<double> v = c.values[off++];
        if (v == 0.0) continue;
        std::uint64_t n = 1;
        for (int value : j) {
            const auto p = static_cast<std::uint64_t>(primes[value - 1]);
            if (n > UINT64_MAX / p) throw instance_too_large("lifted index overflows 64 bits");
            n *= p;
        }
        d.entries[n] = v;
    } while (bhlab::advance(spec, j));
    return d;
}

PolynomialCoefficients bohr_unlift(const DirichletCoefficients& d, const PrimeFactorizer& fact,
                                   int n_vars) {
    int vars = n_vars;
    std::map<std::uint64_t, std::vector<int>> alphas;
    for (const auto& [n, v] : d.entries) {
        if (v == 0.0) continue;
        PrimePowerIndex idx = factor_admissible(n, d.m, fact);
        vars = std::max(vars, static_cast<int>(idx.alpha.size()));
        alphas.emplace(n, std::move(idx.alpha));
    }
    if (vars < 1) vars = 1;

    PolynomialCoefficients c = PolynomialCoefficients::zeros(d.m, vars);
    for (const auto& [n, alpha] : alphas) {
        MultiIndex j;
        j.reserve(d.m);
        for (std::size_t pos = 0; pos < alpha.size(); ++pos)
            j.insert(j.end(), alpha[pos], static_cast<int>(pos) + 1);
        c.at(j) = d.entries.at(n);
    }
    return c;
}

double dirichlet_weight(std::uint64_t n, int m) {
    if (m < 1) throw bad_params("homogeneity must be >= 1");
    if (m == 1) return 1.0;
    if (n < 2) throw domain_error("weight needs n >= 2");
    const double ln = std::log(static_cast<double>(n));
    return std::pow(ln, (m - 1) / 2.0) /
           std::pow(static_cast<double>(n), (m - 1) / (2.0 * m));
}

InequalityReport check_lifted_coefficients(const PolynomialCoefficients& c,
                                           const PrimeFactorizer& fact, double sup_norm,
                                           bool certified, const BHConstantTable& table,
                                           double rel_tol) {
    const int m = c.m();
    DirichletCoefficients d = bohr_lift(c, fact);
    std::vector<std::complex<double>> values;
    values.reserve(d.entries.size());
    for (const auto& [n, v] : d.entries) values.push_back(v);
    const double lhs =
        lorentz_norm(values, {2.0 * m / (m + 1.0), 1.0, LorentzScheme::telescoping});
    const double constant = chain_constant(m, table);
    // Same unknown factors L and C2 as the polynomial chain.
    (void)certified;
    return make_report("dirichlet-chain",
                       "m=" + std::to_string(m) + ",support=" + std::to_string(values.size()),
                       fingerprint(values), lhs, constant * sup_norm, constant, rel_tol, false);
}

NonEmbeddingTables non_embedding_tables(int m, std::uint64_t N_max, std::size_t checkpoints) {
    if (m < 2) throw bad_params("non-embedding tables need m >= 2");
    if (N_max < 2) throw bad_params("sweep must reach at least n = 2");
    if (checkpoints < 2) throw bad_params("need at least two checkpoints");

    std::vector<std::uint64_t> grid;
    const double ratio = std::pow(static_cast<double>(N_max) / 2.0,
                                  1.0 / static_cast<double>(checkpoints - 1));
    double point = 2.0;
    for (std::size_t i = 0; i < checkpoints; ++i) {
        auto n = static_cast<std::uint64_t>(std::llround(point));
        if (!grid.empty() && n <= grid.back()) n = grid.back() + 1;
        if (n > N_max) break;
        grid.push_back(n);
        point *= ratio;
    }
    if (grid.back() != N_max) grid.push_back(N_max);

    NonEmbeddingTables out;
    out.m = m;
    const double beta = (m - 1) / (2.0 * m);
    auto atom = [&](std::uint64_t n) { return 1.0 / dirichlet_weight(n, m); };
    auto atom_alt = [&](std::uint64_t n) {
        const double ln = std::log(static_cast<double>(n));
        return std::pow(static_cast<double>(n), beta) / std::pow(ln, (m - 1.0) / m);
    };

    long double running = 0.0L;
    std::uint64_t next = 2;
    for (std::uint64_t n : grid) {
        for (; next <= n; ++next) running += dirichlet_weight(next, m);
        out.atom_table.push_back({n, atom(n)});
        out.atom_table_alt.push_back({n, atom_alt(n)});
        out.ratio_table.push_back(
            {n, static_cast<double>(running) / std::pow(static_cast<double>(n), beta)});
    }

    out.monotone_from = static_cast<std::uint64_t>(std::ceil(std::exp(static_cast<double>(m))));
    out.atom_monotone_beyond = true;
    double prev = 0.0;
    bool started = false;
    for (const auto& row : out.atom_table) {
        if (row.n < out.monotone_from) continue;
        if (started && row.value <= prev) out.atom_monotone_beyond = false;
        prev = row.value;
        started = true;
    }
    out.ratio_monotone = true;
    for (std::size_t i = 1; i < out.ratio_table.size(); ++i)
        if (out.ratio_table[i].value <= out.ratio_table[i - 1].value) out.ratio_monotone = false;
    out.atom_growth = out.atom_table.back().value / out.atom_table.front().value;
    out.ratio_growth = out.ratio_table.back().value / out.ratio_table.front().value;
    return out;
}

MembershipResult check_weighted_membership(const PolynomialCoefficients& c,
                                           const PrimeFactorizer& fact) {
    const int m = c.m();
    DirichletCoefficients d = bohr_lift(c, fact);
    const double beta = (m - 1) / (2.0 * m);

    std::vector<std::complex<double>> values;
    std::vector<double> weighted_terms;
    std::vector<double> natural_terms;
    values.reserve(d.entries.size());
    for (const auto& [n, v] : d.entries) {
        values.push_back(v);
        weighted_terms.push_back(std::abs(v) * dirichlet_weight(n, m));
        natural_terms.push_back(std::abs(v) * std::pow(static_cast<double>(n), -beta));
    }

    MembershipResult out;
    out.weighted_l1 = pairwise_sum(weighted_terms);
    out.lorentz_norm =
        lorentz_norm(values, {2.0 * m / (m + 1.0), 1.0, LorentzScheme::telescoping});

    // Rearranging can only increase sum |a_n| n^{-beta}: the k-th largest
    // magnitude moves to position k <= n.
    std::vector<double> star = rearrange(values);
    while (!star.empty() && star.back() == 0.0) star.pop_back();
    const double lhs = pairwise_sum(natural_terms);
    const double rhs = pairwise_sum_indexed(star.size(), [&](std::size_t k) {
        return star[k] * std::pow(static_cast<double>(k + 1), -beta);
    });
    out.report = make_report("weighted-membership",
                             "m=" + std::to_string(m) + ",support=" +
                                 std::to_string(values.size()) + ",l1w=" + fmt(out.weighted_l1) +
                                 ",lorentz=" + fmt(out.lorentz_norm),
                             fingerprint(values), lhs, rhs, 1.0, 1e-12);
    return out;
}

}  // namespace bhlab

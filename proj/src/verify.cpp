#include "bhlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "bhlab/errors.hpp"
#include "bhlab/lorentz.hpp"
#include "bhlab/lowerbounds.hpp"
#include "bhlab/numeric.hpp"
#include "bhlab/rng.hpp"

namespace bhlab {

namespace {

std::string tensor_desc(const CoefficientTensor& a) {
    return "m=" + std::to_string(a.m()) + ",n=" + std::to_string(a.n());
}

std::string poly_desc(const PolynomialCoefficients& c) {
    return "m=" + std::to_string(c.m()) + ",n=" + std::to_string(c.n());
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// 0-based value of coordinate position k (0-based) inside the
// lexicographic offset.
int digit_of(std::uint64_t offset, int k, int m, int n) {
    std::uint64_t stride = 1;
    for (int j = k + 1; j < m; ++j) stride *= static_cast<std::uint64_t>(n);
    return static_cast<int>((offset / stride) % static_cast<std::uint64_t>(n));
}

// All offset contributions of the listed (1-based) coordinate positions,
// together with the digit values that produced them, in odometer order.
struct PartialCombo {
    std::uint64_t offset = 0;
    MultiIndex digits;  // 1-based values, aligned with `positions`
};

std::vector<PartialCombo> partial_combos(int m, int n, const std::vector<int>& positions) {
    std::vector<std::uint64_t> strides(positions.size());
    for (std::size_t t = 0; t < positions.size(); ++t) {
        std::uint64_t s = 1;
        for (int j = positions[t]; j < m; ++j) s *= static_cast<std::uint64_t>(n);
        strides[t] = s;
    }
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < positions.size(); ++t) count *= static_cast<std::uint64_t>(n);
    std::vector<PartialCombo> combos;
    combos.reserve(count);
    MultiIndex digits(positions.size(), 1);
    for (std::uint64_t c = 0; c < count; ++c) {
        std::uint64_t off = 0;
        for (std::size_t t = 0; t < positions.size(); ++t)
            off += strides[t] * static_cast<std::uint64_t>(digits[t] - 1);
        combos.push_back({off, digits});
        for (int t = static_cast<int>(positions.size()) - 1; t >= 0; --t) {
            if (digits[t] < n) {
                ++digits[t];
                break;
            }
            digits[t] = 1;
        }
    }
    return combos;
}

}  // namespace

CertifiedTensor certified_rank_one(
    const std::vector<std::vector<std::complex<double>>>& factors) {
    if (factors.empty()) throw empty_input("rank-one tensor needs at least one factor");
    const int m = static_cast<int>(factors.size());
    const int n = static_cast<int>(factors[0].size());
    if (n < 1) throw empty_input("rank-one factor must be nonempty");
    for (const auto& f : factors)
        if (static_cast<int>(f.size()) != n)
            throw bad_params("rank-one factors must share one length");

    CoefficientTensor a = CoefficientTensor::zeros(m, n);
    MultiIndex idx = first_index(a.spec);
    std::uint64_t off = 0;
    do {
        std::complex<double> v = 1.0;
        for (int k = 0; k < m; ++k) v *= factors[k][idx[k] - 1];
        a.values[off++] = v;
    } while (bhlab::advance(a.spec, idx));

    double sup = 1.0;
    for (const auto& f : factors)
        sup *= pairwise_sum_indexed(f.size(), [&](std::size_t i) { return std::abs(f[i]); });
    return {std::move(a), sup, true, "rank-one"};
}

CertifiedTensor certified_monomial(int m, int n, const MultiIndex& idx,
                                   std::complex<double> coeff) {
    CoefficientTensor a = CoefficientTensor::zeros(m, n);
    a.at(idx) = coeff;
    return {std::move(a), std::abs(coeff), true, "monomial"};
}

CertifiedTensor certified_fourier(int N, int m) {
    FourierTensor ft = fourier_tensor(N, m);
    double sup = ft.sup_bound();
    return {std::move(ft.values), sup, true, "fourier"};
}

CertifiedTensor certify_heuristically(const CoefficientTensor& a, const SupNormBudget& budget,
                                      std::uint64_t seed) {
    SupNormEstimate est = supnorm_form(a, budget, seed);
    return {a, est.lower, false, "heuristic-ascent"};
}

InequalityReport check_slice_sum(const CoefficientTensor& a,
                                 const std::vector<MultiIndex>& S_set, double rel_tol) {
    const int m = a.m();
    if (m < 2) throw bad_params("slice-sum bound needs m >= 2");
    const double lhs =
        pairwise_sum_indexed(S_set.size(), [&](std::size_t t) { return std::abs(a.at(S_set[t])); });
    const int extent = coordinate_extent(S_set);
    const double weak =
        lorentz_norm(a.values, {static_cast<double>(m) / (m - 1), kInf, LorentzScheme::telescoping});
    const double constant = static_cast<double>(m) * extent;
    return make_report("slice-sum",
                       tensor_desc(a) + ",|S|=" + std::to_string(S_set.size()) +
                           ",extent=" + std::to_string(extent),
                       fingerprint(a.values), lhs, constant * weak, constant, rel_tol);
}

GreedyPartition greedy_partition(const CoefficientTensor& a, double q) {
    if (!(q >= 1.0) || q == kInf) throw bad_params("partition mass exponent must be finite, >= 1");
    const int m = a.m();
    const int n = a.n();
    const std::uint64_t size = a.size();

    std::vector<double> mass(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        const double av = std::abs(a.values[i]);
        mass[i] = q == 1.0 ? av : std::pow(av, q);
    }

    std::vector<std::uint8_t> alive(size, 1);
    std::vector<std::vector<std::uint8_t>> avail(m, std::vector<std::uint8_t>(n, 1));
    GreedyPartition out;
    out.masks.assign(m, std::vector<std::uint8_t>(size, 0));
    out.chosen_values.assign(m, {});

    std::vector<int> chosen(m);
    for (int round = 0; round < n; ++round) {
        for (int k = 0; k < m; ++k) {
            std::vector<double> slice_mass(n, 0.0);
            for (std::uint64_t i = 0; i < size; ++i)
                if (alive[i]) slice_mass[digit_of(i, k, m, n)] += mass[i];
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (!avail[k][v]) continue;
                if (best < 0 || slice_mass[v] < slice_mass[best]) best = v;
            }
            chosen[k] = best;
        }
        // Claims are resolved against the population at the start of the
        // round; ties between coordinates go to the smallest one.
        for (std::uint64_t i = 0; i < size; ++i) {
            if (!alive[i]) continue;
            for (int k = 0; k < m; ++k) {
                if (digit_of(i, k, m, n) == chosen[k]) {
                    out.masks[k][i] = 1;
                    alive[i] = 0;
                    break;
                }
            }
        }
        for (int k = 0; k < m; ++k) {
            avail[k][chosen[k]] = 0;
            out.chosen_values[k].push_back(chosen[k] + 1);
        }
    }
    for (std::uint64_t i = 0; i < size; ++i)
        if (alive[i]) throw error("greedy partition failed to cover the index set");
    return out;
}

bool partition_is_cover(const GreedyPartition& partition) {
    if (partition.masks.empty()) return false;
    const std::size_t size = partition.masks[0].size();
    for (const auto& mask : partition.masks)
        if (mask.size() != size) return false;
    for (std::size_t i = 0; i < size; ++i) {
        int hits = 0;
        for (const auto& mask : partition.masks) hits += mask[i];
        if (hits != 1) return false;
    }
    return true;
}

std::vector<InequalityReport> check_partition_blocks(const CoefficientTensor& a,
                                                     const GreedyPartition& partition,
                                                     double q, double rel_tol) {
    const int m = a.m();
    if (m < 2) throw bad_params("partition block bound needs m >= 2");
    if (static_cast<int>(partition.masks.size()) != m)
        throw bad_params("partition does not match the tensor arity");
    const double weak = lorentz_norm(
        a.values, {q * m / (m - 1.0), kInf, LorentzScheme::telescoping});
    const double constant = std::pow(static_cast<double>(m), 1.0 / q);
    std::vector<InequalityReport> reports;
    reports.reserve(m);
    for (int k = 0; k < m; ++k) {
        CoefficientTensor block = restrict_support(a, partition.masks[k]);
        const double lhs = block_norm(block, CoordinateSubset(m, {k + 1}), kInf, q);
        reports.push_back(make_report(
            "partition-bound",
            tensor_desc(a) + ",q=" + fmt(q) + ",block=" + std::to_string(k + 1),
            fingerprint(a.values), lhs, constant * weak, constant, rel_tol));
    }
    return reports;
}

InequalityReport check_partition_duality(const CoefficientTensor& a, double q,
                                         double rel_tol) {
    if (!(q > 1.0) || q == kInf) throw bad_params("duality bound needs finite q > 1");
    const int m = a.m();
    const double p_target = q * m / ((q - 1.0) * m + 1.0);
    const double lhs = lorentz_norm(a.values, {p_target, 1.0, LorentzScheme::telescoping});
    const double qprime = q / (q - 1.0);
    std::vector<double> terms(m);
    for (int k = 0; k < m; ++k)
        terms[k] = block_norm(a, CoordinateSubset(m, {k + 1}), 1.0, qprime);
    const double constant = std::pow(static_cast<double>(m), 1.0 / q);
    const double rhs = constant * pairwise_sum(terms);
    return make_report("partition-duality", tensor_desc(a) + ",q=" + fmt(q),
                       fingerprint(a.values), lhs, rhs, constant, rel_tol);
}

InequalityReport check_mixed_bh(const CertifiedTensor& a, int k, double rel_tol) {
    const int m = a.tensor.m();
    if (k < 1 || k > m) throw bad_params("coordinate out of range");
    const double lhs = block_norm(a.tensor, CoordinateSubset(m, {k}), 1.0, 2.0);
    const double constant = std::pow(std::numbers::sqrt2, m - 1);
    return make_report("mixed-bh",
                       tensor_desc(a.tensor) + ",k=" + std::to_string(k) + "," + a.family,
                       fingerprint(a.tensor.values), lhs, constant * a.sup_norm, constant,
                       rel_tol, a.certified);
}

InequalityReport check_bf_constant(const CertifiedTensor& a, double rel_tol) {
    const int m = a.tensor.m();
    const double lhs =
        lorentz_norm(a.tensor.values, {2.0 * m / (m + 1.0), 1.0, LorentzScheme::telescoping});
    const double constant = std::sqrt(static_cast<double>(m)) * std::pow(std::numbers::sqrt2, m - 1);
    return make_report("bf-mult", tensor_desc(a.tensor) + "," + a.family,
                       fingerprint(a.tensor.values), lhs, constant * a.sup_norm, constant,
                       rel_tol, a.certified);
}

InequalityReport check_block_embedding(const CoefficientTensor& a, int k, double rel_tol) {
    const int m = a.m();
    if (k < 1 || k > m) throw bad_params("block size out of range");
    const double p = 2.0 * m / (m + 1.0);
    const double rho = 2.0 * k / (k + 1.0);
    const double lhs = lorentz_norm(a.values, {p, rho, LorentzScheme::telescoping});
    auto subsets = coordinate_subsets(m, k);
    std::vector<double> terms(subsets.size());
    for (std::size_t t = 0; t < subsets.size(); ++t)
        terms[t] = block_norm(a, subsets[t], rho, 2.0);
    const double constant = 2.0 * std::pow(binomial(m, k), 1.5);
    const double rhs = constant * pairwise_sum(terms);
    return make_report("block-embedding", tensor_desc(a) + ",k=" + std::to_string(k),
                       fingerprint(a.values), lhs, rhs, constant, rel_tol);
}

InequalityReport check_fine_mult(const CertifiedTensor& a, int k,
                                 const BHConstantTable& table, double rel_tol) {
    table.validate();
    const int m = a.tensor.m();
    if (k < 1 || k > m) throw bad_params("block size out of range");
    auto bhk = table.bh(k);
    if (!bhk) throw bad_params("no bh_mult entry for k=" + std::to_string(k));
    const double rho = 2.0 * k / (k + 1.0);
    const double lhs =
        lorentz_norm(a.tensor.values, {2.0 * m / (m + 1.0), rho, LorentzScheme::telescoping});
    const double constant =
        2.0 * std::pow(binomial(m, k), 1.5) * std::pow(table.ap(rho), m - k) * *bhk;
    return make_report("fine-mult",
                       tensor_desc(a.tensor) + ",k=" + std::to_string(k) + "," + a.family,
                       fingerprint(a.tensor.values), lhs, constant * a.sup_norm, constant,
                       rel_tol, a.certified);
}

InequalityReport check_subpoly_mult(const CertifiedTensor& a, const BHConstantTable& table,
                                    double rel_tol) {
    table.validate();
    const int m = a.tensor.m();
    if (m < 2) throw bad_params("subpolynomial bound needs m >= 2");
    const double rho = 2.0 * (m - 1.0) / m;
    const double lhs =
        lorentz_norm(a.tensor.values, {2.0 * m / (m + 1.0), rho, LorentzScheme::telescoping});
    const double growth = m * table.ap(rho) * std::pow(m - 1.0, (1.0 - euler_gamma()) / 2.0);
    const double constant = table.C2 * table.kappa;
    const double rhs = constant * growth * a.sup_norm;
    const double fitted = a.sup_norm > 0.0 ? lhs / (growth * a.sup_norm) : 0.0;
    // kappa and C2 are unknown universal constants: a failed comparison
    // against their default 1 is not a violation, only unresolved.
    return make_report("subpoly-mult",
                       tensor_desc(a.tensor) + "," + a.family + ",fitted=" + fmt(fitted),
                       fingerprint(a.tensor.values), lhs, rhs, constant, rel_tol, false);
}

PolynomialCoefficients diagonal_apply(const CoefficientTensor& a) {
    PolynomialCoefficients c = poly_from_symmetric(a);
    const int m = a.m();
    const double expo = (m + 1.0) / (2.0 * m);
    IndexSetSpec spec = c.spec;
    MultiIndex j = first_index(spec);
    std::uint64_t off = 0;
    do {
        const double card = static_cast<double>(class_of(j).cardinality);
        // c_j = card * a_j, so dividing once by card leaves card^{expo} a_j.
        c.values[off] *= std::pow(card, expo) / card;
        ++off;
    } while (bhlab::advance(spec, j));
    return c;
}

std::pair<InequalityReport, InequalityReport> check_diagonal_endpoints(
    const CoefficientTensor& a, double rel_tol) {
    PolynomialCoefficients d = diagonal_apply(a);
    const int m = a.m();
    const std::string hash = fingerprint(a.values);

    const double lhs1 = pairwise_sum_indexed(
        d.values.size(), [&](std::size_t i) { return std::abs(d.values[i]); });
    const double rhs1 = pairwise_sum_indexed(
        a.values.size(), [&](std::size_t i) { return std::abs(a.values[i]); });
    InequalityReport r1 = make_report("diagonal-endpoints", tensor_desc(a) + ",side=l1",
                                      hash, lhs1, rhs1, 1.0, rel_tol);

    const double lhs2 = std::sqrt(pairwise_sum_indexed(
        d.values.size(), [&](std::size_t i) { return std::norm(d.values[i]); }));
    const double constant = std::sqrt(static_cast<double>(m));
    const double rhs2 = constant * std::sqrt(pairwise_sum_indexed(
                            a.values.size(), [&](std::size_t i) { return std::norm(a.values[i]); }));
    InequalityReport r2 = make_report("diagonal-endpoints", tensor_desc(a) + ",side=l2",
                                      hash, lhs2, rhs2, constant, rel_tol);
    return {r1, r2};
}

double chain_constant(int m, const BHConstantTable& table) {
    table.validate();
    if (m < 1) throw bad_params("arity must be >= 1");
    auto bh1 = table.bh(1);
    if (!bh1) throw bad_params("no bh_mult entry for k=1");
    const double ratio = m == 1 ? 1.0 : std::pow(m / (m - 1.0), m - 1);
    return table.L * table.C2 * static_cast<double>(m) * m *
           std::pow(static_cast<double>(m), (m - 1.0) / (2.0 * m)) *
           std::pow(std::numbers::sqrt2, m - 1) * ratio * *bh1;
}

InequalityReport check_poly_bh(const PolynomialCoefficients& c, double sup_norm,
                               bool certified, const BHConstantTable& table, double rel_tol) {
    const int m = c.m();
    const double lhs =
        lorentz_norm(c.values, {2.0 * m / (m + 1.0), 1.0, LorentzScheme::telescoping});
    const double constant = chain_constant(m, table);
    // The chain carries the unknown factors L and C2.
    (void)certified;
    return make_report("poly-chain", poly_desc(c), fingerprint(c.values), lhs,
                       constant * sup_norm, constant, rel_tol, false);
}

InequalityReport check_poly_transfer(const PolynomialCoefficients& c, double sup_norm,
                                     bool certified, double rel_tol) {
    const int m = c.m();
    const double lhs =
        lorentz_norm(c.values, {2.0 * m / (m + 1.0), 1.0, LorentzScheme::telescoping});
    const double constant = std::pow(static_cast<double>(m), m) *
                            std::sqrt(static_cast<double>(m)) *
                            std::pow(std::numbers::sqrt2, m - 1);
    return make_report("poly-transfer", poly_desc(c), fingerprint(c.values), lhs,
                       constant * sup_norm, constant, rel_tol, certified);
}

InequalityReport check_weighted_mixed_poly(const PolynomialCoefficients& c, double sup_norm,
                                           bool certified, int k,
                                           const BHConstantTable& table, double rel_tol) {
    table.validate();
    const int m = c.m();
    const int n = c.n();
    if (k < 1 || k > m) throw bad_params("block size out of range");
    auto bhk = table.bh(k);
    if (!bhk) throw bad_params("no bh_mult entry for k=" + std::to_string(k));
    CoefficientTensor a = symmetric_from_poly(c);
    const double rho = 2.0 * k / (k + 1.0);

    double lhs = 0.0;
    for (const auto& S : coordinate_subsets(m, k)) {
        auto outer = partial_combos(m, n, S.members);
        auto inner = partial_combos(m, n, S.complement().members);
        std::vector<double> cards(inner.size());
        for (std::size_t t = 0; t < inner.size(); ++t)
            cards[t] = inner[t].digits.empty()
                           ? 1.0
                           : static_cast<double>(class_of(inner[t].digits).cardinality);
        const double total = pairwise_sum_indexed(outer.size(), [&](std::size_t oi) {
            const double inner_sum = pairwise_sum_indexed(inner.size(), [&](std::size_t ti) {
                return cards[ti] * std::norm(a.values[outer[oi].offset + inner[ti].offset]);
            });
            return std::pow(std::sqrt(inner_sum), rho);
        });
        lhs = std::max(lhs, std::pow(total, 1.0 / rho));
    }

    const double factor = static_cast<double>(factorial_u64(m - k)) *
                          std::pow(static_cast<double>(m), m) /
                          (std::pow(static_cast<double>(m - k), m - k) *
                           static_cast<double>(factorial_u64(m)));
    const double constant = std::pow(table.sp(rho), m - k) * factor * *bhk;
    return make_report("weighted-mixed", poly_desc(c) + ",k=" + std::to_string(k),
                       fingerprint(c.values), lhs, constant * sup_norm, constant, rel_tol,
                       certified);
}

InequalityReport check_block_contraction(const CoefficientTensor& a, double q,
                                         const BHConstantTable& table, double rel_tol) {
    table.validate();
    const int m = a.m();
    if (m < 2) throw bad_params("block contraction needs m >= 2");
    if (!(q >= 1.0) || q == kInf) throw bad_params("needs finite q >= 1");
    const double p = m * q / (m + q - 1.0);
    const double lhs = lorentz_norm(a.values, {p, 1.0, LorentzScheme::telescoping});
    const double agg = aggregate_norm(a, 1, 1.0, q);
    const double rhs = table.C_q * m * agg;
    const double fitted = agg > 0.0 ? lhs / (m * agg) : 0.0;
    // C_q is unknown; fit mode never concludes a violation.
    return make_report("block-contraction",
                       tensor_desc(a) + ",q=" + fmt(q) + ",fitted=" + fmt(fitted),
                       fingerprint(a.values), lhs, rhs, table.C_q, rel_tol, false);
}

InequalityReport check_outer_contraction(const CoefficientTensor& a, double t, double q,
                                         const BHConstantTable& table, double rel_tol) {
    table.validate();
    const int m = a.m();
    if (m < 2) throw bad_params("outer contraction needs m >= 2");
    if (!(t >= 1.0) || !(t < q) || q == kInf) throw bad_params("needs 1 <= t < q, q finite");
    const double p = m * q * t / (m * q + t - q);
    const double lhs = lorentz_norm(a.values, {p, t, LorentzScheme::telescoping});
    const double agg = aggregate_norm(a, m - 1, t, q);
    const double rhs = table.C_q * m * agg;
    const double fitted = agg > 0.0 ? lhs / (m * agg) : 0.0;
    return make_report("outer-contraction",
                       tensor_desc(a) + ",t=" + fmt(t) + ",q=" + fmt(q) + ",fitted=" + fmt(fitted),
                       fingerprint(a.values), lhs, rhs, table.C_q, rel_tol, false);
}

InequalityReport check_polarization(const CoefficientTensor& a, const SupNormBudget& form_budget,
                                    const PolySupOptions& poly_options, std::uint64_t seed,
                                    double rel_tol) {
    PolynomialCoefficients c = poly_from_symmetric(a);
    SupNormEstimate form_est = supnorm_form(a, form_budget, seed);
    SupNormEstimate poly_est = supnorm_poly(c, poly_options, seed + 1);
    const bool conclusive = poly_est.has_upper();
    const double poly_sup = conclusive ? poly_est.upper : poly_est.lower;
    const double constant = polarization_factor(a.m());
    return make_report("polarization",
                       tensor_desc(a) + (conclusive ? ",poly=grid" : ",poly=ascent"),
                       fingerprint(a.values), form_est.lower, constant * poly_sup, constant,
                       rel_tol, conclusive);
}

InequalityReport check_power_sum_bound(double alpha, std::uint64_t N) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw bad_params("exponent must lie in (0, 1)");
    if (N < 1) throw bad_params("need at least one term");
    const double lhs = pairwise_sum_indexed(
        N, [&](std::size_t i) { return std::pow(static_cast<double>(i + 1), -alpha); });
    const double rhs = std::pow(static_cast<double>(N), 1.0 - alpha) / (1.0 - alpha);
    InequalityReport report =
        make_report("power-sum", "alpha=" + fmt(alpha) + ",N=" + std::to_string(N),
                    fingerprint(std::vector<double>{alpha, static_cast<double>(N)}), lhs, rhs,
                    1.0 / (1.0 - alpha), 0.0);
    if (lhs >= rhs) report.verdict = Verdict::violated;  // the bound is strict
    return report;
}

std::pair<InequalityReport, InequalityReport> check_marcinkiewicz_sandwich(
    const std::vector<std::complex<double>>& x, double p, double rel_tol) {
    if (!(p > 1.0) || p == kInf) throw bad_params("needs finite p > 1");
    const double weak = lorentz_norm(x, {p, kInf, LorentzScheme::telescoping});
    const double marc = marcinkiewicz_norm(x, p);
    const double pprime = p / (p - 1.0);
    const std::string hash = fingerprint(x);
    const std::string desc = "N=" + std::to_string(x.size()) + ",p=" + fmt(p);
    InequalityReport lower = make_report("marcinkiewicz-sandwich", desc + ",side=lower", hash,
                                         marc / pprime, weak, 1.0 / pprime, rel_tol);
    InequalityReport upper = make_report("marcinkiewicz-sandwich", desc + ",side=upper", hash,
                                         weak, marc, 1.0, rel_tol);
    return {lower, upper};
}

KhinchineMcResult check_khinchine_mc(const std::vector<std::complex<double>>& alpha,
                                     int samples, std::uint64_t seed,
                                     const BHConstantTable& table) {
    table.validate();
    if (alpha.empty()) throw empty_input("coefficient sequence is empty");
    if (samples < 2) throw bad_params("need at least two samples");
    const double l2 = std::sqrt(pairwise_sum_indexed(
        alpha.size(), [&](std::size_t i) { return std::norm(alpha[i]); }));
    if (l2 == 0.0) throw bad_params("coefficient sequence is zero");

    SeedStream stream = SeedStream::derive(seed, 0x4B484D43);
    std::vector<double> vals(samples);
    for (int s = 0; s < samples; ++s) {
        std::complex<double> acc = 0.0;
        for (std::size_t i = 0; i < alpha.size(); ++i) acc += alpha[i] * stream.next_phase();
        vals[s] = std::abs(acc);
    }
    const double mean = pairwise_sum(vals) / samples;
    const double var = pairwise_sum_indexed(vals.size(), [&](std::size_t i) {
                           const double d = vals[i] - mean;
                           return d * d;
                       }) /
                       (samples - 1);
    const double se = std::sqrt(var / samples);

    KhinchineMcResult out;
    out.l2 = l2;
    out.mc_mean = mean;
    out.mc_se = se;
    out.ratio = l2 / mean;
    out.ratio_se = l2 * se / (mean * mean);
    const double bound = table.ap(1.0) + 3.0 * out.ratio_se;
    out.report = make_report(
        "khinchine-mc",
        "N=" + std::to_string(alpha.size()) + ",samples=" + std::to_string(samples),
        fingerprint(alpha), out.ratio, bound, table.ap(1.0), 0.0);
    return out;
}

}  // namespace bhlab

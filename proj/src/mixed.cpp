#include "bhlab/mixed.hpp"

#include <algorithm>
#include <cmath>

#include "bhlab/errors.hpp"
#include "bhlab/lorentz.hpp"
#include "bhlab/numeric.hpp"

namespace bhlab {

CoefficientTensor CoefficientTensor::zeros(int m, int n, std::uint64_t cap) {
    IndexSetSpec spec{m, n, IndexSetKind::full};
    std::uint64_t count = spec.size();
    if (count > cap) throw instance_too_large("tensor larger than enumeration cap");
    CoefficientTensor a;
    a.spec = spec;
    a.values.assign(static_cast<std::size_t>(count), {0.0, 0.0});
    return a;
}

std::complex<double>& CoefficientTensor::at(const MultiIndex& idx) {
    return values[static_cast<std::size_t>(spec.offset_of(idx))];
}

std::complex<double> CoefficientTensor::at(const MultiIndex& idx) const {
    return values[static_cast<std::size_t>(spec.offset_of(idx))];
}

CoefficientTensor restrict_support(const CoefficientTensor& a,
                                   const std::vector<std::uint8_t>& mask) {
    if (mask.size() != a.values.size())
        throw bad_params("restrict_support: mask size mismatch");
    CoefficientTensor out = a;
    out.symmetric = false;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (!mask[i]) out.values[i] = {0.0, 0.0};
    return out;
}

std::vector<double> magnitudes(const CoefficientTensor& a) {
    std::vector<double> mags(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) mags[i] = std::abs(a.values[i]);
    return mags;
}

namespace {

// Offsets of all indices over the given coordinate positions, with the
// other positions held at value 1; lexicographic in the position order.
std::vector<std::uint64_t> partial_offsets(const IndexSetSpec& spec,
                                           const std::vector<int>& positions) {
    std::vector<std::uint64_t> strides(positions.size());
    for (std::size_t t = 0; t < positions.size(); ++t) {
        std::uint64_t s = 1;
        for (int rest = spec.m - positions[t]; rest > 0; --rest)
            s *= static_cast<std::uint64_t>(spec.n);
        strides[t] = s;
    }
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < positions.size(); ++t)
        count *= static_cast<std::uint64_t>(spec.n);
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> digits(positions.size(), 0);
    for (std::uint64_t c = 0; c < count; ++c) {
        std::uint64_t off = 0;
        for (std::size_t t = 0; t < positions.size(); ++t)
            off += static_cast<std::uint64_t>(digits[t]) * strides[t];
        out.push_back(off);
        for (std::size_t t = positions.size(); t-- > 0;) {
            if (++digits[t] < spec.n) break;
            digits[t] = 0;
        }
    }
    return out;
}

double lq_of(const std::vector<double>& vals, double q) {
    if (q == kInf) {
        double best = 0.0;
        for (double v : vals) best = std::max(best, v);
        return best;
    }
    if (q == 1.0) return pairwise_sum(vals);
    double s = pairwise_sum_indexed(vals.size(), [&](std::size_t i) {
        return vals[i] == 0.0 ? 0.0 : std::pow(vals[i], q);
    });
    return std::pow(s, 1.0 / q);
}

}  // namespace

double block_norm(const CoefficientTensor& a, const CoordinateSubset& S, double p, double q) {
    if (S.m != a.m()) throw malformed_subset("block_norm: subset arity mismatch");
    if (!(p >= 1.0) || !(q >= 1.0)) throw bad_params("block_norm: need p, q >= 1");

    const auto outer = partial_offsets(a.spec, S.members);
    const auto inner = partial_offsets(a.spec, S.complement().members);

    std::vector<double> inner_vals(inner.size());
    std::vector<double> outer_vals(outer.size());
    for (std::size_t o = 0; o < outer.size(); ++o) {
        for (std::size_t i = 0; i < inner.size(); ++i)
            inner_vals[i] = std::abs(a.values[static_cast<std::size_t>(outer[o] + inner[i])]);
        outer_vals[o] = lq_of(inner_vals, q);
    }
    return lq_of(outer_vals, p);
}

double aggregate_norm(const CoefficientTensor& a, int k, double p, double q) {
    if (k < 1 || k >= a.m()) throw bad_params("aggregate_norm: need 1 <= k < m");
    const auto subsets = coordinate_subsets(a.m(), k);
    std::vector<double> parts;
    parts.reserve(subsets.size());
    for (const auto& S : subsets) parts.push_back(block_norm(a, S, p, q));
    return pairwise_sum(parts);
}

}  // namespace bhlab

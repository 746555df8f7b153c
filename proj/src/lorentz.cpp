#include "bhlab/lorentz.hpp"

#include <algorithm>
#include <cmath>

#include "bhlab/errors.hpp"
#include "bhlab/numeric.hpp"

namespace bhlab {

namespace {

void check_params(const LorentzParams& params) {
    if (!(params.p >= 1.0) || params.p == kInf)
        throw bad_params("lorentz_norm: need 1 <= p < infinity");
    if (!(params.q >= 1.0)) throw bad_params("lorentz_norm: need q >= 1");
}

}  // namespace

std::vector<double> rearrange(const std::vector<std::complex<double>>& x) {
    std::vector<double> mags(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) mags[i] = std::abs(x[i]);
    std::sort(mags.begin(), mags.end(), std::greater<double>());
    return mags;
}

std::vector<double> rearrange(const std::vector<double>& x) {
    std::vector<double> mags(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) mags[i] = std::abs(x[i]);
    std::sort(mags.begin(), mags.end(), std::greater<double>());
    return mags;
}

double lorentz_norm_sorted(const std::vector<double>& star, const LorentzParams& params) {
    check_params(params);
    if (star.empty()) return 0.0;
    const double p = params.p, q = params.q;
    if (q == kInf) {
        double best = 0.0;
        for (std::size_t k = 0; k < star.size(); ++k) {
            if (star[k] == 0.0) break;  // later terms cannot raise the sup
            best = std::max(best, std::pow(static_cast<double>(k + 1), 1.0 / p) * star[k]);
        }
        return best;
    }
    double sum;
    if (params.scheme == LorentzScheme::telescoping) {
        sum = pairwise_sum_indexed(star.size(), [&](std::size_t k) {
            if (star[k] == 0.0) return 0.0;
            double hi = std::pow(static_cast<double>(k + 1), q / p);
            double lo = k == 0 ? 0.0 : std::pow(static_cast<double>(k), q / p);
            return std::pow(star[k], q) * (hi - lo);
        });
    } else {
        sum = pairwise_sum_indexed(star.size(), [&](std::size_t k) {
            if (star[k] == 0.0) return 0.0;
            return std::pow(static_cast<double>(k + 1), q / p - 1.0) * std::pow(star[k], q);
        });
    }
    return std::pow(sum, 1.0 / q);
}

double lorentz_norm(const std::vector<std::complex<double>>& x, const LorentzParams& params) {
    return lorentz_norm_sorted(rearrange(x), params);
}

double lorentz_norm(const std::vector<double>& x, const LorentzParams& params) {
    return lorentz_norm_sorted(rearrange(x), params);
}

double marcinkiewicz_norm(const std::vector<double>& x, double p) {
    if (!(p > 1.0) || p == kInf) throw bad_params("marcinkiewicz_norm: need 1 < p < infinity");
    std::vector<double> star = rearrange(x);
    // Koethe dual of ell_{p,1}: divide partial sums by k^{1/p'}. With this
    // exponent the weak-norm sandwich with factor 1/p' holds for every p.
    double best = 0.0, partial = 0.0;
    for (std::size_t k = 0; k < star.size(); ++k) {
        partial += star[k];
        best = std::max(best, partial / std::pow(static_cast<double>(k + 1), 1.0 - 1.0 / p));
    }
    return best;
}

double marcinkiewicz_norm(const std::vector<std::complex<double>>& x, double p) {
    std::vector<double> mags(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) mags[i] = std::abs(x[i]);
    return marcinkiewicz_norm(mags, p);
}

double fundamental_function(const LorentzParams& params, std::uint64_t atoms) {
    check_params(params);
    if (atoms == 0) return 0.0;
    if (params.scheme == LorentzScheme::telescoping) {
        // The weights telescope: the q-th power of the norm is exactly N^{q/p}.
        return std::pow(static_cast<double>(atoms), 1.0 / params.p);
    }
    std::vector<double> ones(static_cast<std::size_t>(atoms), 1.0);
    return lorentz_norm_sorted(ones, params);
}

Weight Weight::from_values(std::vector<double> values) {
    Weight w;
    w.values_ = std::move(values);
    return w;
}

Weight Weight::from_generator(std::function<double(std::uint64_t)> gen, std::uint64_t first_valid) {
    Weight w;
    w.gen_ = std::move(gen);
    w.first_valid_ = first_valid;
    return w;
}

double Weight::at(std::uint64_t n) const {
    if (n < 1) throw weight_domain_error("weight positions are 1-based");
    double v;
    if (gen_) {
        if (n < first_valid_) throw weight_domain_error("weight undefined at this position");
        v = gen_(n);
    } else {
        if (n > values_.size()) throw weight_domain_error("weight table has no such position");
        v = values_[static_cast<std::size_t>(n - 1)];
    }
    if (!(v > 0.0) || !std::isfinite(v))
        throw weight_domain_error("weight must be strictly positive and finite");
    return v;
}

double weighted_l1_norm(const std::vector<std::complex<double>>& x, const Weight& w) {
    return pairwise_sum_indexed(x.size(), [&](std::size_t i) {
        double mag = std::abs(x[i]);
        if (mag == 0.0) return 0.0;  // weights are only consulted on the support
        return mag * w.at(static_cast<std::uint64_t>(i + 1));
    });
}

}  // namespace bhlab

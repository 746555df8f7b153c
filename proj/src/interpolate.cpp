#include "bhlab/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "bhlab/errors.hpp"
#include "bhlab/lorentz.hpp"
#include "bhlab/numeric.hpp"

namespace bhlab {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Nonincreasing magnitudes with trailing zeros dropped.
std::vector<double> support_star(const std::vector<std::complex<double>>& x) {
    std::vector<double> star = rearrange(x);
    while (!star.empty() && star.back() == 0.0) star.pop_back();
    return star;
}

double simpson_slice(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_slice(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_slice(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b) {
    if (!(b > a)) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double tol = 1e-10 * std::max(1.0, std::abs(whole));
    return simpson_slice(f, a, b, fa, fm, fb, whole, tol, 30);
}

double k_star_l1_linf(const std::vector<double>& star, double t) {
    const std::size_t n = star.size();
    const auto whole = static_cast<std::size_t>(std::min(std::floor(t), static_cast<double>(n)));
    double k = pairwise_sum_indexed(whole, [&](std::size_t i) { return star[i]; });
    if (whole < n) k += (t - static_cast<double>(whole)) * star[whole];
    return k;
}

double k_star_l1_l2(const std::vector<double>& star, double t) {
    const std::size_t n = star.size();
    if (n == 0) return 0.0;
    std::vector<double> prefix(n + 1, 0.0);   // prefix[k] = x*_1 + ... + x*_k
    std::vector<double> suffix2(n + 1, 0.0);  // suffix2[k] = sum_{i > k} x*_i^2
    for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + star[k];
    for (std::size_t k = n; k-- > 0;) suffix2[k] = suffix2[k + 1] + star[k] * star[k];

    // Piece k: the optimal complement caps the top k entries at a level
    // lambda in [x*_{k+1}, x*_k]; the objective there is
    //   (prefix[k] - k lambda) + t sqrt(k lambda^2 + suffix2[k]),
    // convex with stationary point lambda* = sqrt(suffix2[k] / (t^2 - k)).
    double best = t * std::sqrt(suffix2[0]);  // k = 0: y = 0
    for (std::size_t k = 1; k <= n; ++k) {
        const double lo = k < n ? star[k] : 0.0;
        const double hi = star[k - 1];
        const double kk = static_cast<double>(k);
        auto value = [&](double lam) {
            return prefix[k] - kk * lam + t * std::sqrt(kk * lam * lam + suffix2[k]);
        };
        double lam = hi;
        if (t * t > kk) lam = std::clamp(std::sqrt(suffix2[k] / (t * t - kk)), lo, hi);
        best = std::min({best, value(lam), value(lo), value(hi)});
    }
    return best;
}

}  // namespace

double k_functional(const std::vector<std::complex<double>>& x, double t) {
    if (!(t > 0.0)) throw bad_params("K-functional needs t > 0");
    return k_star_l1_linf(support_star(x), t);
}

double k_functional_l1_l2(const std::vector<std::complex<double>>& x, double t) {
    if (!(t > 0.0)) throw bad_params("K-functional needs t > 0");
    return k_star_l1_l2(support_star(x), t);
}

double k_functional_oracle(const std::vector<std::complex<double>>& x, double t) {
    if (!(t > 0.0)) throw bad_params("K-functional needs t > 0");
    std::vector<double> star = support_star(x);
    // min_M [sum (x*_i - M)_+ + t M] is piecewise linear in M, so the
    // minimum sits at a breakpoint.
    std::vector<double> candidates = star;
    candidates.push_back(0.0);
    double best = kInf;
    for (double M : candidates) {
        double v = t * M;
        for (double s : star) v += std::max(s - M, 0.0);
        best = std::min(best, v);
    }
    return star.empty() ? 0.0 : best;
}

double k_functional_l1_l2_oracle(const std::vector<std::complex<double>>& x, double t) {
    if (!(t > 0.0)) throw bad_params("K-functional needs t > 0");
    std::vector<double> star = support_star(x);
    if (star.empty()) return 0.0;
    auto value = [&](double lam) {
        double l1 = 0.0;
        double sq = 0.0;
        for (double s : star) {
            l1 += std::max(s - lam, 0.0);
            const double c = std::min(s, lam);
            sq += c * c;
        }
        return l1 + t * std::sqrt(sq);
    };
    double lo = 0.0;
    double hi = star[0];
    for (int it = 0; it < 300; ++it) {
        const double a = lo + (hi - lo) / 3.0;
        const double b = hi - (hi - lo) / 3.0;
        if (value(a) <= value(b))
            hi = b;
        else
            lo = a;
    }
    const double mid = 0.5 * (lo + hi);
    return std::min({value(mid), value(0.0), value(star[0])});
}

double real_interp_norm(const std::vector<std::complex<double>>& x, const InterpParams& params,
                        Couple couple) {
    const double theta = params.theta;
    const double q = params.q;
    if (!(theta > 0.0) || !(theta < 1.0)) throw bad_params("theta must lie in (0, 1)");
    if (!(q >= 1.0)) throw bad_params("q must be >= 1");
    if (q == kInf && couple != Couple::l1_linf)
        throw bad_params("sup form is only supported for the (l1, linf) couple");

    std::vector<double> star = support_star(x);
    if (star.empty()) return 0.0;
    const std::size_t N = star.size();
    std::vector<double> prefix(N + 1, 0.0);
    for (std::size_t k = 0; k < N; ++k) prefix[k + 1] = prefix[k] + star[k];
    const double l1 = prefix[N];

    if (couple == Couple::l1_linf && q == kInf) {
        // On [k, k+1], K = a + b t; the maximum of t^{-theta} (a + b t)
        // sits at an endpoint or at t = theta a / ((1 - theta) b).
        double sup = star[0];  // t = 1 dominates the initial segment
        for (std::size_t k = 1; k < N; ++k) {
            const double b = star[k];
            const double a = prefix[k] - static_cast<double>(k) * b;
            auto g = [&](double t) { return std::pow(t, -theta) * (a + b * t); };
            sup = std::max({sup, g(static_cast<double>(k)), g(static_cast<double>(k) + 1)});
            if (b > 0.0) {
                const double tc = theta * a / ((1.0 - theta) * b);
                if (tc > k && tc < k + 1) sup = std::max(sup, g(tc));
            }
        }
        sup = std::max(sup, std::pow(static_cast<double>(N), -theta) * l1);
        return sup;
    }

    // K(t) = t * (slope at 0) on [0, 1] for both couples, and K is
    // constant = ||x||_1 beyond the saturation point T, so those two
    // pieces integrate in closed form.
    double total = 0.0;
    double T = 0.0;
    if (couple == Couple::l1_linf) {
        total += std::pow(star[0], q) / ((1.0 - theta) * q);
        T = static_cast<double>(N);
        for (std::size_t k = 1; k < N; ++k) {
            const double b = star[k];
            const double a = prefix[k] - static_cast<double>(k) * b;
            total += adaptive_simpson(
                [&](double t) { return std::pow(t, -theta * q - 1.0) * std::pow(a + b * t, q); },
                static_cast<double>(k), static_cast<double>(k) + 1);
        }
    } else {
        const double l2 = std::sqrt(pairwise_sum_indexed(
            N, [&](std::size_t i) { return star[i] * star[i]; }));
        total += std::pow(l2, q) / ((1.0 - theta) * q);
        T = std::max(1.0, std::sqrt(static_cast<double>(N)));
        double a = 1.0;
        while (a < T) {
            const double b = std::min(a + 1.0, T);
            total += adaptive_simpson(
                [&](double t) {
                    return std::pow(t, -theta * q - 1.0) * std::pow(k_star_l1_l2(star, t), q);
                },
                a, b);
            a = b;
        }
    }
    total += std::pow(l1, q) * std::pow(T, -theta * q) / (theta * q);
    return std::pow(total, 1.0 / q);
}

EnvelopeResult check_lorentz_envelope(const std::vector<std::complex<double>>& x, double p0,
                                      double p1, double theta, double q,
                                      const BHConstantTable& table) {
    table.validate();
    if (p0 != 1.0 || (p1 != 2.0 && p1 != kInf))
        throw bad_params("supported couples: p0 = 1 with p1 = 2 or p1 = inf");
    if (!(theta > 0.0) || !(theta < 1.0)) throw bad_params("theta must lie in (0, 1)");
    if (!(q >= 1.0)) throw bad_params("q must be >= 1");

    const Couple couple = p1 == kInf ? Couple::l1_linf : Couple::l1_l2;
    const double invp1 = p1 == kInf ? 0.0 : 1.0 / p1;
    const double invq = q == kInf ? 0.0 : 1.0 / q;
    EnvelopeResult out;
    out.p = 1.0 / ((1.0 - theta) / p0 + theta * invp1);
    out.interp_norm = real_interp_norm(x, {theta, q}, couple);
    out.lorentz_norm = lorentz_norm(x, {out.p, q, LorentzScheme::telescoping});

    const double pq_fac = q == kInf ? 1.0 : std::pow(out.p / q, invq);
    out.factor_min = std::pow(theta, -std::min(invq, 1.0 / p0)) *
                     std::pow(1.0 - theta, -std::min(invq, invp1)) * pq_fac;
    out.factor_max = std::pow(theta, -std::max(invq, 1.0 / p0)) *
                     std::pow(1.0 - theta, -std::max(invq, invp1)) * pq_fac;
    if (out.lorentz_norm > 0.0)
        out.fitted_upper = out.interp_norm / (out.factor_max * out.lorentz_norm);
    if (out.interp_norm > 0.0)
        out.fitted_lower = out.factor_min * out.lorentz_norm / out.interp_norm;
    out.fitted_C = std::max(out.fitted_upper, out.fitted_lower);

    out.report = make_report(
        "interp-envelope",
        "p0=" + fmt(p0) + ",p1=" + (p1 == kInf ? std::string("inf") : fmt(p1)) +
            ",theta=" + fmt(theta) + ",q=" + (q == kInf ? std::string("inf") : fmt(q)) +
            ",N=" + std::to_string(x.size()) + ",fitted=" + fmt(out.fitted_C),
        fingerprint(x), out.fitted_C, table.C_general, table.C_general, 1e-9,
        /*conclusive=*/false);
    return out;
}

std::vector<std::complex<double>> block_average(const std::vector<std::complex<double>>& x,
                                                const std::vector<std::vector<int>>& blocks) {
    const std::size_t N = x.size();
    std::vector<int> seen(N, 0);
    for (const auto& block : blocks) {
        if (block.empty()) throw malformed_subset("empty block");
        for (int pos : block) {
            if (pos < 1 || static_cast<std::size_t>(pos) > N)
                throw malformed_subset("block position out of range");
            if (seen[pos - 1]++) throw malformed_subset("block position repeated");
        }
    }
    for (std::size_t i = 0; i < N; ++i)
        if (!seen[i]) throw malformed_subset("partition does not cover the positions");

    std::vector<std::complex<double>> out(N);
    for (const auto& block : blocks) {
        std::complex<double> avg = 0.0;
        for (int pos : block) avg += x[pos - 1];
        avg /= static_cast<double>(block.size());
        for (int pos : block) out[pos - 1] = avg;
    }
    return out;
}

}  // namespace bhlab

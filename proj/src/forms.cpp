#include "bhlab/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bhlab/errors.hpp"
#include "bhlab/numeric.hpp"
#include "bhlab/rng.hpp"

namespace bhlab {

PolynomialCoefficients PolynomialCoefficients::zeros(int m, int n, std::uint64_t cap) {
    IndexSetSpec spec{m, n, IndexSetKind::nondecreasing};
    std::uint64_t count = spec.size();
    if (count > cap) throw instance_too_large("polynomial larger than enumeration cap");
    PolynomialCoefficients c;
    c.spec = spec;
    c.values.assign(static_cast<std::size_t>(count), {0.0, 0.0});
    return c;
}

std::complex<double>& PolynomialCoefficients::at(const MultiIndex& idx) {
    return values[static_cast<std::size_t>(spec.offset_of(idx))];
}

std::complex<double> PolynomialCoefficients::at(const MultiIndex& idx) const {
    return values[static_cast<std::size_t>(spec.offset_of(idx))];
}

PolynomialCoefficients poly_from_symmetric(const CoefficientTensor& a) {
    if (!a.symmetric) throw symmetry_violation("poly_from_symmetric: tensor not flagged symmetric");
    PolynomialCoefficients c = PolynomialCoefficients::zeros(a.m(), a.n());
    // Every entry must agree with its class representative.
    MultiIndex idx = first_index(a.spec);
    do {
        IndexClass cls = class_of(idx);
        std::complex<double> rep = a.at(cls.representative);
        std::complex<double> cur = a.at(idx);
        if (std::abs(cur - rep) > 1e-12 * std::max({std::abs(cur), std::abs(rep), 1.0}))
            throw symmetry_violation("poly_from_symmetric: entries not constant on a class");
    } while (bhlab::advance(a.spec, idx));
    MultiIndex j = first_index(c.spec);
    do {
        c.at(j) = static_cast<double>(class_of(j).cardinality) * a.at(j);
    } while (bhlab::advance(c.spec, j));
    return c;
}

CoefficientTensor symmetric_from_poly(const PolynomialCoefficients& c) {
    CoefficientTensor a = CoefficientTensor::zeros(c.m(), c.n());
    a.symmetric = true;
    MultiIndex idx = first_index(a.spec);
    do {
        IndexClass cls = class_of(idx);
        a.at(idx) = c.at(cls.representative) / static_cast<double>(cls.cardinality);
    } while (bhlab::advance(a.spec, idx));
    return a;
}

std::complex<double> eval_form(const CoefficientTensor& a,
                               const std::vector<std::vector<std::complex<double>>>& args) {
    const int m = a.m(), n = a.n();
    if (static_cast<int>(args.size()) != m) throw bad_params("eval_form: need m argument vectors");
    for (const auto& v : args)
        if (static_cast<int>(v.size()) != n) throw bad_params("eval_form: argument length != n");
    // Contract the fastest-varying coordinate first; m passes, O(n^m) total.
    std::vector<std::complex<double>> cur = a.values;
    for (int k = m - 1; k >= 0; --k) {
        std::size_t rows = cur.size() / static_cast<std::size_t>(n);
        std::vector<std::complex<double>> next(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            std::complex<double> s{0.0, 0.0};
            for (int v = 0; v < n; ++v)
                s += cur[r * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] *
                     args[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
            next[r] = s;
        }
        cur = std::move(next);
    }
    return cur[0];
}

std::complex<double> eval_poly(const PolynomialCoefficients& c,
                               const std::vector<std::complex<double>>& z) {
    if (static_cast<int>(z.size()) != c.n()) throw bad_params("eval_poly: argument length != n");
    std::complex<double> total{0.0, 0.0};
    MultiIndex j = first_index(c.spec);
    std::size_t off = 0;
    do {
        std::complex<double> term = c.values[off++];
        if (term != std::complex<double>{0.0, 0.0})
            for (int t : j) term *= z[static_cast<std::size_t>(t - 1)];
        total += term;
    } while (bhlab::advance(c.spec, j));
    return total;
}

double polarization_factor(int m) {
    if (m < 1) throw bad_params("polarization_factor: need m >= 1");
    double r = 1.0;
    for (int i = 1; i <= m; ++i) r *= static_cast<double>(m) / static_cast<double>(i);
    return r;
}

namespace {

// Gradient vector for coordinate k: g_i = sum over indices with i_k = i of
// a_idx * prod_{l != k} x^l_{idx_l}. The exact inner maximiser sets x^k to
// the conjugate phases of g, with value ||g||_1.
std::vector<std::complex<double>> coordinate_gradient(
    const CoefficientTensor& a, const std::vector<std::vector<std::complex<double>>>& x, int k) {
    const int m = a.m(), n = a.n();
    std::vector<std::complex<double>> g(static_cast<std::size_t>(n), {0.0, 0.0});
    const std::size_t total = a.values.size();
    std::vector<int> digits(static_cast<std::size_t>(m), 0);
    for (std::size_t off = 0; off < total; ++off) {
        std::complex<double> prod = a.values[off];
        if (prod != std::complex<double>{0.0, 0.0}) {
            for (int l = 0; l < m; ++l)
                if (l != k)
                    prod *= x[static_cast<std::size_t>(l)][static_cast<std::size_t>(digits[static_cast<std::size_t>(l)])];
            g[static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])] += prod;
        }
        for (std::size_t t = static_cast<std::size_t>(m); t-- > 0;) {
            if (++digits[t] < n) break;
            digits[t] = 0;
        }
    }
    return g;
}

}  // namespace

SupNormEstimate supnorm_form(const CoefficientTensor& a, const SupNormBudget& budget,
                             std::uint64_t seed) {
    const int m = a.m(), n = a.n();
    SupNormEstimate best;
    best.method = SupNormMethod::alternating;
    best.form_witness.assign(static_cast<std::size_t>(m),
                             std::vector<std::complex<double>>(static_cast<std::size_t>(n), {1.0, 0.0}));

    for (int start = 0; start < budget.starts; ++start) {
        SeedStream rng = SeedStream::derive(seed, static_cast<std::uint64_t>(start));
        std::vector<std::vector<std::complex<double>>> x(
            static_cast<std::size_t>(m),
            std::vector<std::complex<double>>(static_cast<std::size_t>(n)));
        for (auto& xs : x)
            for (auto& v : xs) v = rng.next_phase();

        double value = std::abs(eval_form(a, x));
        for (int sweep = 0; sweep < budget.sweeps; ++sweep) {
            double sweep_start = value;
            for (int k = 0; k < m; ++k) {
                auto g = coordinate_gradient(a, x, k);
                double l1 = pairwise_sum_indexed(g.size(), [&](std::size_t i) { return std::abs(g[i]); });
                // Exact step: value can only go up (modulo last-bit rounding).
                if (l1 + 1e-9 * std::max(1.0, value) < value)
                    throw error("supnorm_form: ascent step decreased the value");
                for (std::size_t i = 0; i < g.size(); ++i) {
                    double mag = std::abs(g[i]);
                    if (mag > 0.0) x[static_cast<std::size_t>(k)][i] = std::conj(g[i]) / mag;
                }
                value = l1;
            }
            if (value - sweep_start <= budget.rel_tol * std::max(1.0, value)) break;
        }
        if (value > best.lower) {
            best.lower = value;
            best.form_witness = x;
        }
    }
    // Re-anchor on the actual witness so eval(witness) == lower exactly.
    best.lower = std::abs(eval_form(a, best.form_witness));
    return best;
}

namespace {

struct Monomial {
    std::complex<double> coeff;
    std::vector<int> alpha;  // multiplicity of each variable, sums to m
};

std::vector<Monomial> monomials_of(const PolynomialCoefficients& c) {
    std::vector<Monomial> out;
    MultiIndex j = first_index(c.spec);
    std::size_t off = 0;
    do {
        std::complex<double> v = c.values[off++];
        if (v != std::complex<double>{0.0, 0.0}) {
            Monomial mono;
            mono.coeff = v;
            mono.alpha.assign(static_cast<std::size_t>(c.n()), 0);
            for (int t : j) ++mono.alpha[static_cast<std::size_t>(t - 1)];
            out.push_back(std::move(mono));
        }
    } while (bhlab::advance(c.spec, j));
    return out;
}

std::complex<double> eval_monomials(const std::vector<Monomial>& monos,
                                    const std::vector<std::complex<double>>& z) {
    std::complex<double> total{0.0, 0.0};
    for (const auto& mono : monos) {
        std::complex<double> term = mono.coeff;
        for (std::size_t l = 0; l < mono.alpha.size(); ++l)
            for (int rep = 0; rep < mono.alpha[l]; ++rep) term *= z[l];
        total += term;
    }
    return total;
}

// One gradient-ascent run on the torus angles; returns |P| at the final point.
double ascent_run(const std::vector<Monomial>& monos, int n, std::vector<double>& theta,
                  int iters, double rel_tol) {
    auto z_of = [&](const std::vector<double>& th) {
        std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
        for (int l = 0; l < n; ++l)
            z[static_cast<std::size_t>(l)] = {std::cos(th[static_cast<std::size_t>(l)]),
                                              std::sin(th[static_cast<std::size_t>(l)])};
        return z;
    };
    auto value_grad = [&](const std::vector<double>& th, std::vector<double>& grad) {
        auto z = z_of(th);
        std::complex<double> P{0.0, 0.0};
        std::vector<std::complex<double>> dP(static_cast<std::size_t>(n), {0.0, 0.0});
        for (const auto& mono : monos) {
            std::complex<double> term = mono.coeff;
            for (std::size_t l = 0; l < mono.alpha.size(); ++l)
                for (int rep = 0; rep < mono.alpha[l]; ++rep) term *= z[l];
            P += term;
            for (std::size_t l = 0; l < dP.size(); ++l)
                if (mono.alpha[l] != 0)
                    dP[l] += std::complex<double>{0.0, static_cast<double>(mono.alpha[l])} * term;
        }
        double v = std::abs(P);
        grad.assign(static_cast<std::size_t>(n), 0.0);
        if (v > 0.0)
            for (std::size_t l = 0; l < dP.size(); ++l)
                grad[l] = (std::conj(P) * dP[l]).real() / v;
        return v;
    };

    std::vector<double> grad, trial(theta.size());
    double value = 0.0;
    double step = 0.5;
    value = value_grad(theta, grad);
    for (int it = 0; it < iters; ++it) {
        double gnorm2 = 0.0;
        for (double g : grad) gnorm2 += g * g;
        if (gnorm2 == 0.0) break;
        bool improved = false;
        while (step > 1e-18) {
            for (std::size_t l = 0; l < theta.size(); ++l) trial[l] = theta[l] + step * grad[l];
            std::vector<double> g2;
            double v2 = value_grad(trial, g2);
            if (v2 > value) {
                improved = v2 - value > rel_tol * std::max(1.0, value);
                theta = trial;
                grad = std::move(g2);
                value = v2;
                step *= 1.25;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    return value;
}

}  // namespace

SupNormEstimate supnorm_poly(const PolynomialCoefficients& c, const PolySupOptions& options,
                             std::uint64_t seed) {
    const int n = c.n();
    const auto monos = monomials_of(c);
    SupNormEstimate est;
    est.method = SupNormMethod::alternating;
    est.poly_witness.assign(static_cast<std::size_t>(n), {1.0, 0.0});
    if (monos.empty()) {
        est.lower = 0.0;
        if (options.use_grid && n <= 3) est.upper = 0.0;
        return est;
    }

    std::vector<double> best_theta(static_cast<std::size_t>(n), 0.0);

    // Certified grid oracle. |P(e^{i th})| is invariant under a common
    // rotation of all angles (P is homogeneous), so theta_1 is pinned to 0
    // and only n-1 angles are scanned. Any grid value is a lower bound;
    // grid max + (h/2) * sum_l G_l is an upper bound, where G_l bounds
    // |dP/dtheta_l| by sum_j alpha_l(j) |c_j|.
    double grid_max = -1.0;
    if (options.use_grid && n <= 3 && options.grid_points >= 1) {
        const int G = options.grid_points;
        const double h = 2.0 * std::numbers::pi / static_cast<double>(G);
        std::vector<std::complex<double>> z(static_cast<std::size_t>(n), {1.0, 0.0});
        std::vector<double> theta(static_cast<std::size_t>(n), 0.0);
        long long cells = 1;
        for (int l = 1; l < n; ++l) cells *= G;
        for (long long cell = 0; cell < cells; ++cell) {
            long long rest = cell;
            for (int l = 1; l < n; ++l) {
                theta[static_cast<std::size_t>(l)] = h * static_cast<double>(rest % G);
                rest /= G;
            }
            for (int l = 1; l < n; ++l)
                z[static_cast<std::size_t>(l)] = {std::cos(theta[static_cast<std::size_t>(l)]),
                                                  std::sin(theta[static_cast<std::size_t>(l)])};
            double v = std::abs(eval_monomials(monos, z));
            if (v > grid_max) {
                grid_max = v;
                best_theta = theta;
            }
        }
        double lipschitz = 0.0;
        for (int l = 1; l < n; ++l) {
            double Gl = 0.0;
            for (const auto& mono : monos)
                Gl += static_cast<double>(mono.alpha[static_cast<std::size_t>(l)]) * std::abs(mono.coeff);
            lipschitz += Gl;
        }
        est.upper = grid_max + 0.5 * h * lipschitz;
        est.method = SupNormMethod::grid;
    }

    double best = grid_max;
    // Multistart gradient ascent; the grid argmax joins as an extra start.
    for (int start = 0; start < options.starts + (grid_max >= 0.0 ? 1 : 0); ++start) {
        std::vector<double> theta(static_cast<std::size_t>(n));
        if (grid_max >= 0.0 && start == options.starts) {
            theta = best_theta;
        } else {
            SeedStream rng = SeedStream::derive(seed, static_cast<std::uint64_t>(start));
            for (auto& t : theta) t = rng.next_angle();
        }
        double v = ascent_run(monos, n, theta, options.iters, options.rel_tol);
        if (v > best) {
            best = v;
            best_theta = theta;
        }
    }
    est.lower = std::max(best, 0.0);
    for (int l = 0; l < n; ++l)
        est.poly_witness[static_cast<std::size_t>(l)] = {std::cos(best_theta[static_cast<std::size_t>(l)]),
                                                         std::sin(best_theta[static_cast<std::size_t>(l)])};
    // Re-anchor so the witness reproduces the reported lower bound.
    est.lower = std::abs(eval_monomials(monos, est.poly_witness));
    if (est.has_upper() && est.lower > est.upper) est.upper = est.lower;
    return est;
}

}  // namespace bhlab

// Python bindings for the core operations. Vectors come in as flat
// lists of complex numbers; polynomial coefficients use the
// nondecreasing-multi-index lexicographic order returned by
// monomial_indices(m, n).

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "bhlab/dirichlet.hpp"
#include "bhlab/errors.hpp"
#include "bhlab/forms.hpp"
#include "bhlab/interpolate.hpp"
#include "bhlab/lorentz.hpp"
#include "bhlab/lowerbounds.hpp"
#include "bhlab/multiindex.hpp"
#include "bhlab/verify.hpp"

namespace py = pybind11;

namespace {

using cplx = std::complex<double>;

bhlab::LorentzParams make_params(double p, double q) {
    return bhlab::LorentzParams{p, q};
}

bhlab::PolynomialCoefficients make_poly(int m, int n, const std::vector<cplx>& values) {
    bhlab::PolynomialCoefficients c = bhlab::PolynomialCoefficients::zeros(m, n);
    if (values.size() != c.values.size())
        throw bhlab::bad_params("expected " + std::to_string(c.values.size()) +
                                " coefficients for m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
    c.values = values;
    return c;
}

py::dict estimate_to_dict(const bhlab::SupNormEstimate& est) {
    py::dict out;
    out["lower"] = est.lower;
    out["upper"] = est.has_upper() ? py::cast(est.upper) : py::none();
    switch (est.method) {
        case bhlab::SupNormMethod::alternating: out["method"] = "alternating"; break;
        case bhlab::SupNormMethod::grid: out["method"] = "grid"; break;
        case bhlab::SupNormMethod::exact_family: out["method"] = "exact_family"; break;
    }
    out["witness"] = est.poly_witness;
    return out;
}

py::list rows_to_list(const std::vector<bhlab::GrowthRow>& rows) {
    py::list out;
    for (const auto& row : rows) out.append(py::make_tuple(row.n, row.value));
    return out;
}

}  // namespace

PYBIND11_MODULE(_bhlab, m) {
    m.doc() = "Numerical laboratory for coefficient-norm inequalities on the polytorus";

    py::register_exception<bhlab::error>(m, "BhlabError");

    m.def(
        "lorentz_norm",
        [](const std::vector<cplx>& x, double p, double q, const std::string& scheme) {
            bhlab::LorentzParams params = make_params(p, q);
            params.scheme = scheme == "power" ? bhlab::LorentzScheme::power
                                              : bhlab::LorentzScheme::telescoping;
            if (scheme != "power" && scheme != "telescoping")
                throw bhlab::bad_params("scheme must be 'telescoping' or 'power'");
            return bhlab::lorentz_norm(x, params);
        },
        py::arg("x"), py::arg("p"), py::arg("q"), py::arg("scheme") = "telescoping",
        "Two-parameter rearrangement norm of a finite vector.");

    m.def(
        "marcinkiewicz_norm",
        [](const std::vector<cplx>& x, double p) { return bhlab::marcinkiewicz_norm(x, p); },
        py::arg("x"), py::arg("p"),
        "Maximal-average norm: sup over k of the first k rearranged values divided by "
        "k^(1/p').");

    m.def(
        "fundamental_function",
        [](double p, double q, std::uint64_t atoms) {
            return bhlab::fundamental_function(make_params(p, q), atoms);
        },
        py::arg("p"), py::arg("q"), py::arg("atoms"),
        "Norm of an indicator vector with the given number of atoms.");

    m.def(
        "k_functional",
        [](const std::vector<cplx>& x, double t) { return bhlab::k_functional(x, t); },
        py::arg("x"), py::arg("t"), "Splitting functional for the (l1, linf) couple.");

    m.def(
        "k_functional_l1_l2",
        [](const std::vector<cplx>& x, double t) { return bhlab::k_functional_l1_l2(x, t); },
        py::arg("x"), py::arg("t"), "Splitting functional for the (l1, l2) couple.");

    m.def(
        "real_interp_norm",
        [](const std::vector<cplx>& x, double theta, double q, const std::string& couple) {
            bhlab::InterpParams params{theta, q};
            if (couple == "l1_linf")
                return bhlab::real_interp_norm(x, params, bhlab::Couple::l1_linf);
            if (couple == "l1_l2")
                return bhlab::real_interp_norm(x, params, bhlab::Couple::l1_l2);
            throw bhlab::bad_params("couple must be 'l1_linf' or 'l1_l2'");
        },
        py::arg("x"), py::arg("theta"), py::arg("q"), py::arg("couple") = "l1_linf",
        "Splitting-method norm built from the couple's K-functional.");

    m.def(
        "monomial_indices",
        [](int m, int n) {
            bhlab::IndexSetSpec spec{m, n, bhlab::IndexSetKind::nondecreasing};
            py::list out;
            bhlab::MultiIndex idx = bhlab::first_index(spec);
            do {
                py::tuple t(idx.size());
                for (std::size_t k = 0; k < idx.size(); ++k) t[k] = idx[k];
                out.append(t);
            } while (bhlab::advance(spec, idx));
            return out;
        },
        py::arg("m"), py::arg("n"),
        "Nondecreasing multi-indices of length m over 1..n, in the coefficient order used "
        "by every polynomial argument.");

    m.def(
        "eval_poly",
        [](int m, int n, const std::vector<cplx>& values, const std::vector<cplx>& z) {
            return bhlab::eval_poly(make_poly(m, n, values), z);
        },
        py::arg("m"), py::arg("n"), py::arg("values"), py::arg("z"),
        "Evaluate the m-homogeneous polynomial at a point.");

    m.def(
        "supnorm_poly",
        [](int m, int n, const std::vector<cplx>& values, int starts, int iters,
           int grid_points, std::uint64_t seed) {
            bhlab::PolySupOptions options;
            options.starts = starts;
            options.iters = iters;
            options.grid_points = grid_points;
            return estimate_to_dict(
                bhlab::supnorm_poly(make_poly(m, n, values), options, seed));
        },
        py::arg("m"), py::arg("n"), py::arg("values"), py::arg("starts") = 32,
        py::arg("iters") = 400, py::arg("grid_points") = 720, py::arg("seed") = 1,
        "Sup norm of the polynomial on the torus: certified lower estimate, plus a "
        "certified upper bound when n <= 3.");

    m.def("polarization_factor", &bhlab::polarization_factor, py::arg("m"),
          "m^m / m!, the polynomial-to-form transfer factor.");

    m.def(
        "chain_constant",
        [](int m) { return bhlab::chain_constant(m, bhlab::BHConstantTable{}); },
        py::arg("m"),
        "Constant of the polynomial coefficient-norm chain at the unit constant table.");

    m.def(
        "fourier_sup_bound",
        [](int N, int m) { return bhlab::fourier_tensor(N, m).sup_bound(); },
        py::arg("N"), py::arg("m"),
        "Analytic sup-norm bound N^((m+1)/2) of the unimodular product tensor.");

    m.def(
        "optimality_table",
        [](int N_first, int N_last, int m, double p, double q, std::uint64_t seed) {
            auto rows = bhlab::optimality_experiment(N_first, N_last, m, make_params(p, q),
                                                     bhlab::SupNormBudget{}, seed);
            py::list out;
            for (const auto& row : rows) {
                py::dict d;
                d["N"] = row.N;
                d["coefficient_norm"] = row.phi;
                d["sup_bound"] = row.sup_bound;
                d["ascent_estimate"] = row.ascent_estimate;
                d["ratio"] = row.ratio;
                out.append(d);
            }
            return out;
        },
        py::arg("N_first"), py::arg("N_last"), py::arg("m"), py::arg("p"), py::arg("q") = 1.0,
        py::arg("seed") = 1,
        "Sharpness sweep of the unimodular family against the sup-norm growth.");

    m.def("dirichlet_weight", &bhlab::dirichlet_weight, py::arg("n"), py::arg("m"),
          "(log n)^((m-1)/2) / n^((m-1)/(2m)).");

    m.def(
        "bohr_lift",
        [](int m, int n, const std::vector<cplx>& values, std::uint32_t bound) {
            bhlab::PrimeFactorizer fact(bound);
            bhlab::DirichletCoefficients d = bhlab::bohr_lift(make_poly(m, n, values), fact);
            std::map<std::uint64_t, cplx> out(d.entries.begin(), d.entries.end());
            return out;
        },
        py::arg("m"), py::arg("n"), py::arg("values"), py::arg("bound") = 1'000'000,
        "Map monomial coefficients to coefficients indexed by products of m primes.");

    m.def(
        "bohr_unlift",
        [](int m, const std::map<std::uint64_t, cplx>& entries, int n_vars,
           std::uint32_t bound) {
            bhlab::PrimeFactorizer fact(bound);
            bhlab::DirichletCoefficients d;
            d.m = m;
            d.entries.insert(entries.begin(), entries.end());
            return bhlab::bohr_unlift(d, fact, n_vars).values;
        },
        py::arg("m"), py::arg("entries"), py::arg("n_vars") = 0,
        py::arg("bound") = 1'000'000,
        "Inverse of bohr_lift; returns coefficients in monomial_indices order.");

    m.def(
        "divergence_tables",
        [](int m, std::uint64_t N_max, std::size_t checkpoints) {
            bhlab::NonEmbeddingTables t = bhlab::non_embedding_tables(m, N_max, checkpoints);
            py::dict out;
            out["m"] = t.m;
            out["atom_table"] = rows_to_list(t.atom_table);
            out["atom_table_alt"] = rows_to_list(t.atom_table_alt);
            out["ratio_table"] = rows_to_list(t.ratio_table);
            out["monotone_from"] = t.monotone_from;
            out["atom_monotone_beyond"] = t.atom_monotone_beyond;
            out["ratio_monotone"] = t.ratio_monotone;
            out["atom_growth"] = t.atom_growth;
            out["ratio_growth"] = t.ratio_growth;
            return out;
        },
        py::arg("m"), py::arg("N_max") = 10'000, py::arg("checkpoints") = 40,
        "Weighted-count and partial-sum ratio tables whose divergence rules out the "
        "endpoint embedding.");
}

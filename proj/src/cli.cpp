#include "bhlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bhlab/dirichlet.hpp"
#include "bhlab/errors.hpp"
#include "bhlab/forms.hpp"
#include "bhlab/interpolate.hpp"
#include "bhlab/io.hpp"
#include "bhlab/lorentz.hpp"
#include "bhlab/lowerbounds.hpp"
#include "bhlab/numeric.hpp"
#include "bhlab/parallel.hpp"
#include "bhlab/random_instances.hpp"
#include "bhlab/rng.hpp"
#include "bhlab/verify.hpp"

namespace bhlab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t fnv64(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

double value_or(double configured, double fallback) {
    return configured > 0.0 ? configured : fallback;
}

SupNormBudget form_budget(const RunConfig& cfg) {
    return {cfg.starts, cfg.sweeps, 1e-12};
}

PolySupOptions poly_options(const RunConfig& cfg) {
    return {cfg.starts, cfg.iters, 1e-12, cfg.grid_points, true};
}

LorentzScheme parse_scheme(const std::string& name) {
    if (name == "telescoping") return LorentzScheme::telescoping;
    if (name == "power") return LorentzScheme::power;
    throw bad_params("scheme must be telescoping or power");
}

// --rhs-scale is a debug knob for the exit-code self-test: it rescales
// the right-hand side and re-derives the verdict.
InequalityReport finalize(InequalityReport r, const RunConfig& cfg) {
    if (cfg.rhs_scale != 1.0) {
        r.rhs *= cfg.rhs_scale;
        r.margin = r.rhs - r.lhs;
        if (leq_rel(r.lhs, r.rhs, r.rel_tol))
            r.verdict = Verdict::holds;
        else
            r.verdict = r.conclusive ? Verdict::violated : Verdict::inconclusive;
    }
    return r;
}

struct Emitter {
    std::ostream& out;
    const RunConfig& cfg;
    int holds = 0;
    int violated = 0;
    int inconclusive = 0;

    void emit(const InequalityReport& raw) {
        const InequalityReport r = finalize(raw, cfg);
        switch (r.verdict) {
            case Verdict::holds: ++holds; break;
            case Verdict::violated: ++violated; break;
            case Verdict::inconclusive: ++inconclusive; break;
        }
        out << report_to_json_line(r) << '\n';
    }

    int exit_code() const { return violated > 0 ? 1 : 0; }
};

ordered_json q_field(double q) {
    if (q == kInf) return "inf";
    return q;
}

CertifiedTensor certified_family(int which, int m, int n, SeedStream& s) {
    const int families = (m >= 2 && n >= 2) ? 3 : 2;
    switch (which % families) {
        case 0: {
            std::vector<std::vector<std::complex<double>>> factors(m);
            for (auto& f : factors) {
                f.resize(n);
                for (auto& v : f) v = s.next_cgauss();
            }
            return certified_rank_one(factors);
        }
        case 1: {
            MultiIndex idx(m);
            for (auto& v : idx) v = 1 + static_cast<int>(s.next_below(n));
            return certified_monomial(m, n, idx, s.next_cgauss());
        }
        default:
            return certified_fourier(n, m);
    }
}

struct CertifiedPoly {
    PolynomialCoefficients c;
    double sup = 0.0;
    bool certified = false;
};

CertifiedPoly certified_random_poly(int m, int n, const RunConfig& cfg, SeedStream& s) {
    CertifiedPoly out{random_poly(m, n, s)};
    const SupNormEstimate est = supnorm_poly(out.c, poly_options(cfg), s.next_u64());
    out.certified = est.has_upper();
    out.sup = out.certified ? est.upper : est.lower;
    return out;
}

std::vector<InequalityReport> verify_trial(const RunConfig& cfg, const std::string& lemma,
                                           int trial, const PrimeFactorizer* fact) {
    SeedStream s = SeedStream::derive(cfg.seed, fnv64(lemma) + static_cast<std::uint64_t>(trial));
    const int m = cfg.m;
    const int n = cfg.n;

    if (lemma == "slice-sum") {
        CoefficientTensor a = random_tensor(m, n, s);
        std::vector<MultiIndex> subset;
        MultiIndex idx = first_index(a.spec);
        do {
            if (s.next_unit() < 0.5) subset.push_back(idx);
        } while (bhlab::advance(a.spec, idx));
        if (subset.empty()) subset.push_back(first_index(a.spec));
        return {check_slice_sum(a, subset, cfg.rel_tol)};
    }
    if (lemma == "partition-bound") {
        const double q = value_or(cfg.q, trial % 2 == 0 ? 1.0 : 2.0);
        CoefficientTensor a = random_tensor(m, n, s);
        GreedyPartition part = greedy_partition(a, q);
        if (!partition_is_cover(part)) throw error("partition is not a cover");
        return check_partition_blocks(a, part, q, cfg.rel_tol);
    }
    if (lemma == "partition-duality") {
        const double q = cfg.q > 1.0 ? cfg.q : 2.0;
        CoefficientTensor a = random_tensor(m, n, s);
        return {check_partition_duality(a, q, cfg.rel_tol)};
    }
    if (lemma == "mixed-bh") {
        CertifiedTensor cert = certified_family(trial, m, n, s);
        std::vector<InequalityReport> out;
        for (int k = 1; k <= m; ++k) out.push_back(check_mixed_bh(cert, k, cfg.rel_tol));
        return out;
    }
    if (lemma == "bf-mult") {
        return {check_bf_constant(certified_family(trial, m, n, s), cfg.rel_tol)};
    }
    if (lemma == "fine-mult") {
        const int k = cfg.k >= 1 ? std::min(cfg.k, m) : 1;
        return {check_fine_mult(certified_family(trial, m, n, s), k, cfg.constants,
                                cfg.rel_tol)};
    }
    if (lemma == "subpoly-mult") {
        return {check_subpoly_mult(certified_family(trial, m, n, s), cfg.constants,
                                   cfg.rel_tol)};
    }
    if (lemma == "block-embedding") {
        CoefficientTensor a = random_tensor(m, n, s);
        std::vector<InequalityReport> out;
        for (int k = 1; k <= m; ++k) out.push_back(check_block_embedding(a, k, cfg.rel_tol));
        return out;
    }
    if (lemma == "diagonal-endpoints") {
        CoefficientTensor a = random_symmetric_tensor(m, n, s);
        auto [r1, r2] = check_diagonal_endpoints(a, cfg.rel_tol);
        return {r1, r2};
    }
    if (lemma == "weighted-mixed") {
        const int k = cfg.k >= 1 ? std::min(cfg.k, m) : 1;
        CertifiedPoly poly = certified_random_poly(m, n, cfg, s);
        return {check_weighted_mixed_poly(poly.c, poly.sup, poly.certified, k, cfg.constants,
                                          cfg.rel_tol)};
    }
    if (lemma == "block-contraction") {
        const double q = value_or(cfg.q, 2.0);
        return {check_block_contraction(random_tensor(m, n, s), q, cfg.constants, cfg.rel_tol)};
    }
    if (lemma == "outer-contraction") {
        const double t = value_or(cfg.t, 1.5);
        const double q = value_or(cfg.q, t + 0.5);
        return {check_outer_contraction(random_tensor(m, n, s), t, q, cfg.constants,
                                        cfg.rel_tol)};
    }
    if (lemma == "poly-chain") {
        CertifiedPoly poly = certified_random_poly(m, n, cfg, s);
        return {check_poly_bh(poly.c, poly.sup, poly.certified, cfg.constants, cfg.rel_tol)};
    }
    if (lemma == "poly-transfer") {
        CertifiedPoly poly = certified_random_poly(m, n, cfg, s);
        return {check_poly_transfer(poly.c, poly.sup, poly.certified, cfg.rel_tol)};
    }
    if (lemma == "polarization") {
        CoefficientTensor a = random_symmetric_tensor(m, n, s);
        return {check_polarization(a, form_budget(cfg), poly_options(cfg), s.next_u64(),
                                   cfg.rel_tol)};
    }
    if (lemma == "power-sum") {
        const double alpha = 0.05 + 0.9 * s.next_unit();
        const std::uint64_t N = 10 + s.next_below(100'000);
        return {check_power_sum_bound(alpha, N)};
    }
    if (lemma == "marcinkiewicz-sandwich") {
        const auto N = static_cast<std::size_t>(1 + s.next_below(64));
        std::vector<std::complex<double>> x = random_vector(N, s);
        const double p = 1.1 + 3.0 * s.next_unit();
        auto [lower, upper] = check_marcinkiewicz_sandwich(x, p, 1e-12);
        return {lower, upper};
    }
    if (lemma == "khinchine-mc") {
        const auto N = static_cast<std::size_t>(1 + s.next_below(4));
        std::vector<std::complex<double>> alpha = random_vector(N, s);
        return {check_khinchine_mc(alpha, cfg.samples, s.next_u64(), cfg.constants).report};
    }
    if (lemma == "dirichlet-chain") {
        CertifiedPoly poly = certified_random_poly(m, n, cfg, s);
        return {check_lifted_coefficients(poly.c, *fact, poly.sup, poly.certified,
                                          cfg.constants, cfg.rel_tol)};
    }
    if (lemma == "weighted-membership") {
        PolynomialCoefficients c = random_poly(m, n, s);
        return {check_weighted_membership(c, *fact).report};
    }
    if (lemma == "interp-envelope") {
        std::vector<std::complex<double>> x;
        if (trial % 2 == 0)
            x.assign(1 + s.next_below(64), 1.0);
        else
            x = random_vector(static_cast<std::size_t>(1 + s.next_below(64)), s);
        return {check_lorentz_envelope(x, cfg.p0, cfg.p1, cfg.theta, value_or(cfg.q, 1.0),
                                       cfg.constants)
                    .report};
    }
    throw bad_params("unknown check id: " + lemma);
}

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = {
        "slice-sum",        "partition-bound",  "partition-duality",
        "mixed-bh",         "bf-mult",          "fine-mult",
        "subpoly-mult",     "block-embedding",  "diagonal-endpoints",
        "weighted-mixed",   "block-contraction", "outer-contraction",
        "poly-chain",       "poly-transfer",    "polarization",
        "power-sum",        "marcinkiewicz-sandwich", "khinchine-mc",
        "dirichlet-chain",  "weighted-membership", "interp-envelope"};
    return ids;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.lemma.empty()) {
        err << "verify needs a check id; known ids:";
        for (const auto& id : lemma_ids()) err << ' ' << id;
        err << '\n';
        return 2;
    }
    if (std::find(lemma_ids().begin(), lemma_ids().end(), cfg.lemma) == lemma_ids().end()) {
        err << "unknown check id: " << cfg.lemma << '\n';
        return 2;
    }
    std::optional<PrimeFactorizer> fact;
    if (cfg.lemma == "dirichlet-chain" || cfg.lemma == "weighted-membership")
        fact.emplace(cfg.sieve_bound);

    const int trials = std::max(cfg.trials, 1);
    std::vector<std::vector<InequalityReport>> gathered(trials);
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
        gathered[t] =
            verify_trial(cfg, cfg.lemma, static_cast<int>(t), fact ? &*fact : nullptr);
    });

    Emitter em{out, cfg};
    for (const auto& batch : gathered)
        for (const auto& r : batch) em.emit(r);

    ordered_json summary;
    summary["command"] = "verify";
    summary["check"] = cfg.lemma;
    summary["trials"] = trials;
    summary["holds"] = em.holds;
    summary["violated"] = em.violated;
    summary["inconclusive"] = em.inconclusive;
    out << summary.dump() << '\n';
    return em.exit_code();
}

int run_norm(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.input.empty()) {
        err << "norm needs --input\n";
        return 2;
    }
    CoefficientFile file = read_coefficients(cfg.input);
    const auto& values =
        file.kind == IndexSetKind::full ? file.tensor.values : file.poly.values;

    double value = 0.0;
    if (cfg.space == "lorentz") {
        if (!(cfg.p >= 1.0) || !(cfg.q >= 1.0)) {
            err << "norm needs --p >= 1 and --q >= 1 (q may be inf)\n";
            return 2;
        }
        value = lorentz_norm(values, {cfg.p, cfg.q, parse_scheme(cfg.scheme)});
    } else if (cfg.space == "marcinkiewicz") {
        value = marcinkiewicz_norm(values, cfg.p);
    } else {
        err << "space must be lorentz or marcinkiewicz\n";
        return 2;
    }

    ordered_json line;
    line["command"] = "norm";
    line["space"] = cfg.space;
    line["p"] = cfg.p;
    line["q"] = q_field(cfg.q);
    line["scheme"] = cfg.scheme;
    line["value"] = value;
    line["input_hash"] = fingerprint(values);
    out << line.dump() << '\n';
    return 0;
}

int run_supnorm(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.input.empty()) {
        err << "supnorm needs --input\n";
        return 2;
    }
    CoefficientFile file = read_coefficients(cfg.input);
    SupNormEstimate est;
    if (file.kind == IndexSetKind::full)
        est = supnorm_form(file.tensor, form_budget(cfg), cfg.seed);
    else
        est = supnorm_poly(file.poly, poly_options(cfg), cfg.seed);

    ordered_json line;
    line["command"] = "supnorm";
    line["kind"] = file.kind == IndexSetKind::full ? "full" : "nondecreasing";
    line["lower"] = est.lower;
    if (est.has_upper())
        line["upper"] = est.upper;
    else
        line["upper"] = nullptr;
    line["method"] = est.method == SupNormMethod::grid ? "grid"
                     : est.method == SupNormMethod::exact_family ? "exact"
                                                                 : "alternating";
    out << line.dump() << '\n';
    return 0;
}

int run_partition(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const double q = value_or(cfg.q, 1.0);
    std::optional<CoefficientTensor> fixed;
    if (!cfg.input.empty()) {
        CoefficientFile file = read_coefficients(cfg.input);
        if (file.kind != IndexSetKind::full) {
            err << "partition needs a full coefficient tensor\n";
            return 2;
        }
        fixed = std::move(file.tensor);
    }
    const int trials = fixed ? 1 : std::max(cfg.trials, 1);

    Emitter em{out, cfg};
    for (int trial = 0; trial < trials; ++trial) {
        SeedStream s =
            SeedStream::derive(cfg.seed, fnv64("partition") + static_cast<std::uint64_t>(trial));
        CoefficientTensor a = fixed ? *fixed : random_tensor(cfg.m, cfg.n, s);
        GreedyPartition part = greedy_partition(a, q);
        if (!partition_is_cover(part)) throw error("partition is not a cover");

        ordered_json line;
        line["command"] = "partition";
        line["m"] = a.m();
        line["n"] = a.n();
        line["q"] = q;
        line["cover"] = true;
        line["chosen_values"] = part.chosen_values;
        out << line.dump() << '\n';
        for (const auto& r : check_partition_blocks(a, part, q, cfg.rel_tol)) em.emit(r);
    }
    return em.exit_code();
}

int run_optimality(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const double p = value_or(cfg.p, 2.0 * cfg.m / (cfg.m + 1.0));
    const double q = value_or(cfg.q, 1.0);
    const LorentzParams X{p, q, parse_scheme(cfg.scheme)};
    const std::vector<OptimalityRow> rows =
        optimality_experiment(cfg.N_first, cfg.N_last, cfg.m, X, form_budget(cfg), cfg.seed);
    if (cfg.format == "csv") {
        write_optimality_csv(out, rows);
    } else {
        for (const auto& row : rows) {
            ordered_json line;
            line["command"] = "optimality";
            line["N"] = row.N;
            line["phi"] = row.phi;
            line["sup_bound"] = row.sup_bound;
            line["ascent_estimate"] = row.ascent_estimate;
            line["ratio"] = row.ratio;
            out << line.dump() << '\n';
        }
    }
    return 0;
}

int run_ksz(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const KszResult res = ksz_random_poly(cfg.N_first, cfg.m, std::max(cfg.trials, 1), cfg.seed,
                                          poly_options(cfg), cfg.constants.ksz_constant);
    ordered_json line;
    line["command"] = "ksz";
    line["N"] = cfg.N_first;
    line["m"] = cfg.m;
    line["trials"] = res.trials;
    line["best_sup_estimate"] = res.best_sup_estimate;
    line["bound_value"] = res.bound_value;
    line["fitted_constant"] = res.fitted_constant;
    line["best_signs"] = res.best_signs;
    out << line.dump() << '\n';
    return 0;
}

int run_dirichlet(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.op == "weight") {
        ordered_json line;
        line["command"] = "dirichlet";
        line["op"] = "weight";
        line["n"] = cfg.pos;
        line["m"] = cfg.m;
        line["value"] = dirichlet_weight(cfg.pos, cfg.m);
        out << line.dump() << '\n';
        return 0;
    }
    if (cfg.op == "tables") {
        const NonEmbeddingTables tables =
            non_embedding_tables(cfg.m, cfg.N_max, cfg.checkpoints);
        if (cfg.format == "csv") {
            write_growth_csv(out, tables);
        } else {
            ordered_json stats;
            stats["command"] = "dirichlet";
            stats["op"] = "tables";
            stats["m"] = tables.m;
            stats["monotone_from"] = tables.monotone_from;
            stats["atom_monotone_beyond"] = tables.atom_monotone_beyond;
            stats["ratio_monotone"] = tables.ratio_monotone;
            stats["atom_growth"] = tables.atom_growth;
            stats["ratio_growth"] = tables.ratio_growth;
            out << stats.dump() << '\n';
            auto dump_rows = [&](const char* name, const std::vector<GrowthRow>& rows) {
                for (const auto& row : rows) {
                    ordered_json line;
                    line["table"] = name;
                    line["n"] = row.n;
                    line["value"] = row.value;
                    out << line.dump() << '\n';
                }
            };
            dump_rows("atom", tables.atom_table);
            dump_rows("atom_alt", tables.atom_table_alt);
            dump_rows("ratio", tables.ratio_table);
        }
        return 0;
    }

    if (cfg.input.empty()) {
        err << "dirichlet --op " << cfg.op << " needs --input\n";
        return 2;
    }
    const PrimeFactorizer fact(cfg.sieve_bound);
    if (cfg.op == "unlift") {
        const DirichletCoefficients d = read_dirichlet(cfg.input);
        out << poly_to_json(bohr_unlift(d, fact)) << '\n';
        return 0;
    }

    CoefficientFile file = read_coefficients(cfg.input);
    if (file.kind != IndexSetKind::nondecreasing) {
        err << "dirichlet ops need nondecreasing polynomial coefficients\n";
        return 2;
    }
    if (cfg.op == "lift") {
        out << dirichlet_to_json(bohr_lift(file.poly, fact)) << '\n';
        return 0;
    }
    if (cfg.op == "chain") {
        const SupNormEstimate est = supnorm_poly(file.poly, poly_options(cfg), cfg.seed);
        const bool certified = est.has_upper();
        Emitter em{out, cfg};
        em.emit(check_lifted_coefficients(file.poly, fact, certified ? est.upper : est.lower,
                                          certified, cfg.constants, cfg.rel_tol));
        return em.exit_code();
    }
    if (cfg.op == "membership") {
        const MembershipResult res = check_weighted_membership(file.poly, fact);
        ordered_json line;
        line["command"] = "dirichlet";
        line["op"] = "membership";
        line["weighted_l1"] = res.weighted_l1;
        line["lorentz"] = res.lorentz_norm;
        out << line.dump() << '\n';
        Emitter em{out, cfg};
        em.emit(res.report);
        return em.exit_code();
    }
    err << "dirichlet op must be one of lift, unlift, weight, chain, tables, membership\n";
    return 2;
}

int run_envelope(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const double q = value_or(cfg.q, 1.0);
    Emitter em{out, cfg};
    double fitted_min = kInf;
    double fitted_max = 0.0;
    int instances = 0;
    auto record = [&](const std::vector<std::complex<double>>& x) {
        const EnvelopeResult res =
            check_lorentz_envelope(x, cfg.p0, cfg.p1, cfg.theta, q, cfg.constants);
        em.emit(res.report);
        if (res.fitted_C > 0.0) {
            fitted_min = std::min(fitted_min, res.fitted_C);
            fitted_max = std::max(fitted_max, res.fitted_C);
        }
        ++instances;
    };

    for (int N = 1; N <= cfg.indicators; ++N)
        record(std::vector<std::complex<double>>(static_cast<std::size_t>(N), 1.0));
    for (int trial = 0; trial < cfg.trials; ++trial) {
        SeedStream s =
            SeedStream::derive(cfg.seed, fnv64("envelope") + static_cast<std::uint64_t>(trial));
        record(random_vector(static_cast<std::size_t>(1 + s.next_below(64)), s));
    }

    ordered_json summary;
    summary["command"] = "envelope";
    summary["instances"] = instances;
    summary["fitted_min"] = fitted_min;
    summary["fitted_max"] = fitted_max;
    summary["spread"] = fitted_min > 0.0 ? fitted_max / fitted_min : 0.0;
    out << summary.dump() << '\n';
    return em.exit_code();
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        cfg.constants.validate();
        if (cfg.command == "norm") return run_norm(cfg, out, err);
        if (cfg.command == "supnorm") return run_supnorm(cfg, out, err);
        if (cfg.command == "partition") return run_partition(cfg, out, err);
        if (cfg.command == "verify") return run_verify(cfg, out, err);
        if (cfg.command == "optimality") return run_optimality(cfg, out, err);
        if (cfg.command == "ksz") return run_ksz(cfg, out, err);
        if (cfg.command == "dirichlet") return run_dirichlet(cfg, out, err);
        if (cfg.command == "envelope") return run_envelope(cfg, out, err);
        err << "unknown command: " << cfg.command << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

namespace {

void apply_scaled_entries(const std::vector<std::string>& entries,
                          std::map<double, double>& target, const char* what) {
    for (const auto& text : entries) {
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw bad_params(std::string(what) + " override must look like p=value");
        target[std::stod(text.substr(0, eq))] = std::stod(text.substr(eq + 1));
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    RunConfig cfg;
    std::string output;
    std::string N_range;
    std::vector<std::string> bh_entries;
    std::vector<std::string> khinchine_entries;
    std::vector<std::string> steinhaus_entries;

    CLI::App app{"desk-scale laboratory for coefficient-norm inequalities on the polytorus"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "base seed; all randomness derives from it");
        sub->add_option("--output", output, "write the report to this file");
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--rel-tol", cfg.rel_tol, "relative comparison tolerance");
        sub->add_option("--rhs-scale", cfg.rhs_scale,
                        "debug: scale every right-hand side before the verdict");
        sub->add_option("--kappa", cfg.constants.kappa);
        sub->add_option("--c-eps", cfg.constants.C_eps);
        sub->add_option("--c-q", cfg.constants.C_q);
        sub->add_option("--chain-l", cfg.constants.L);
        sub->add_option("--chain-c2", cfg.constants.C2);
        sub->add_option("--c-general", cfg.constants.C_general);
        sub->add_option("--ksz-constant", cfg.constants.ksz_constant);
        sub->add_option("--bh-mult", bh_entries, "k=value entries for the base constants");
        sub->add_option("--khinchine", khinchine_entries, "p=value overrides");
        sub->add_option("--steinhaus", steinhaus_entries, "p=value overrides");
    };
    auto add_sizes = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "arity / homogeneity");
        sub->add_option("--n", cfg.n, "variables per coordinate");
        sub->add_option("--trials", cfg.trials, "number of random instances");
    };
    auto add_ascent = [&](CLI::App* sub) {
        sub->add_option("--starts", cfg.starts);
        sub->add_option("--sweeps", cfg.sweeps);
        sub->add_option("--iters", cfg.iters);
        sub->add_option("--grid-points", cfg.grid_points, "grid resolution per angle");
    };

    CLI::App* norm = app.add_subcommand("norm", "norm of a coefficient file");
    norm->add_option("--input", cfg.input)->required();
    norm->add_option("--space", cfg.space, "lorentz or marcinkiewicz");
    norm->add_option("--p", cfg.p);
    norm->add_option("--q", cfg.q, "fine index; inf for the weak norm");
    norm->add_option("--scheme", cfg.scheme, "telescoping or power");
    add_common(norm);

    CLI::App* supnorm = app.add_subcommand("supnorm", "sup-norm estimate of a coefficient file");
    supnorm->add_option("--input", cfg.input)->required();
    add_ascent(supnorm);
    add_common(supnorm);

    CLI::App* partition = app.add_subcommand("partition", "greedy slice partition with block bounds");
    partition->add_option("--input", cfg.input, "tensor file; omitted = random instances");
    partition->add_option("--q", cfg.q, "mass exponent");
    add_sizes(partition);
    add_common(partition);

    CLI::App* verify = app.add_subcommand("verify", "run one inequality check on seeded instances");
    verify->add_option("check", cfg.lemma, "check id");
    verify->add_option("--lemma", cfg.lemma, "check id (alias of the positional)");
    verify->add_option("--k", cfg.k, "block size where applicable");
    verify->add_option("--q", cfg.q);
    verify->add_option("--t", cfg.t);
    verify->add_option("--theta", cfg.theta);
    verify->add_option("--p0", cfg.p0);
    verify->add_option("--p1", cfg.p1);
    verify->add_option("--samples", cfg.samples, "torus samples for the mean-ratio check");
    verify->add_option("--sieve-bound", cfg.sieve_bound);
    add_sizes(verify);
    add_ascent(verify);
    add_common(verify);

    CLI::App* optimality = app.add_subcommand("optimality", "sharpness sweep over product tensors");
    optimality->add_option("--N", N_range, "range a..b of base sizes");
    optimality->add_option("--p", cfg.p, "Lorentz exponent; default 2m/(m+1)");
    optimality->add_option("--q", cfg.q, "fine index; default 1");
    optimality->add_option("--scheme", cfg.scheme);
    add_sizes(optimality);
    add_ascent(optimality);
    add_common(optimality);

    CLI::App* ksz = app.add_subcommand("ksz", "random-sign polynomial sup-norm experiment");
    ksz->add_option("--N", cfg.N_first, "number of variables");
    add_sizes(ksz);
    add_ascent(ksz);
    add_common(ksz);

    CLI::App* dirichlet = app.add_subcommand("dirichlet", "coefficient lift, weights, growth tables");
    dirichlet->add_option("--op", cfg.op, "lift | unlift | weight | chain | tables | membership");
    dirichlet->add_option("--input", cfg.input);
    dirichlet->add_option("--pos", cfg.pos, "weight position n");
    dirichlet->add_option("--N-max", cfg.N_max, "growth sweep endpoint");
    dirichlet->add_option("--checkpoints", cfg.checkpoints);
    dirichlet->add_option("--sieve-bound", cfg.sieve_bound);
    add_sizes(dirichlet);
    add_ascent(dirichlet);
    add_common(dirichlet);

    CLI::App* envelope = app.add_subcommand("envelope", "interpolation envelope constants");
    envelope->add_option("--p0", cfg.p0);
    envelope->add_option("--p1", cfg.p1, "second exponent; inf for the max couple");
    envelope->add_option("--theta", cfg.theta);
    envelope->add_option("--q", cfg.q);
    envelope->add_option("--indicators", cfg.indicators, "indicator sweep size");
    add_sizes(envelope);
    add_common(envelope);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        for (const auto& text : bh_entries) {
            const auto eq = text.find('=');
            if (eq == std::string::npos) throw bad_params("--bh-mult entries must look like k=value");
            cfg.constants.bh_mult[std::stoi(text.substr(0, eq))] = std::stod(text.substr(eq + 1));
        }
        apply_scaled_entries(khinchine_entries, cfg.constants.khinchine_Ap, "--khinchine");
        apply_scaled_entries(steinhaus_entries, cfg.constants.steinhaus_Sp, "--steinhaus");
        if (!N_range.empty()) {
            const auto dots = N_range.find("..");
            if (dots == std::string::npos) {
                cfg.N_first = cfg.N_last = std::stoi(N_range);
            } else {
                cfg.N_first = std::stoi(N_range.substr(0, dots));
                cfg.N_last = std::stoi(N_range.substr(dots + 2));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (!output.empty()) {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << output << '\n';
            return 2;
        }
        return run(cfg, file, std::cerr);
    }
    return run(cfg, std::cout, std::cerr);
}

}  // namespace bhlab

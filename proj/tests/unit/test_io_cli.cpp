#include <doctest.h>

#include <complex>
#include <sstream>
#include <string>

#include "bhlab/cli.hpp"
#include "bhlab/errors.hpp"
#include "bhlab/io.hpp"
#include "bhlab/random_instances.hpp"
#include "bhlab/report.hpp"
#include "bhlab/rng.hpp"

using namespace bhlab;
using cd = std::complex<double>;

TEST_CASE("coefficient files round-trip through json") {
    SeedStream s = SeedStream::derive(71, 0);
    CoefficientTensor a = random_tensor(2, 3, s);
    CoefficientFile parsed = parse_coefficients(tensor_to_json(a));
    REQUIRE(parsed.kind == IndexSetKind::full);
    REQUIRE(parsed.tensor.values.size() == a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(std::abs(parsed.tensor.values[i] - a.values[i]) < 1e-15);

    PolynomialCoefficients c = random_poly(3, 2, s);
    CoefficientFile parsed_poly = parse_coefficients(poly_to_json(c));
    REQUIRE(parsed_poly.kind == IndexSetKind::nondecreasing);
    for (std::size_t i = 0; i < c.values.size(); ++i)
        CHECK(std::abs(parsed_poly.poly.values[i] - c.values[i]) < 1e-15);
}

TEST_CASE("dirichlet files round-trip through json") {
    DirichletCoefficients d;
    d.m = 2;
    d.entries[4] = cd(1.0, -2.0);
    d.entries[9] = cd(0.5, 0.0);
    DirichletCoefficients back = parse_dirichlet(dirichlet_to_json(d));
    CHECK(back.m == 2);
    REQUIRE(back.entries.size() == 2);
    CHECK(std::abs(back.entries.at(4) - cd(1.0, -2.0)) < 1e-15);
}

TEST_CASE("malformed coefficient files are rejected") {
    CHECK_THROWS_AS(parse_coefficients("not json"), parse_error);
    CHECK_THROWS_AS(parse_coefficients(R"({"m":2,"n":2,"kind":"weird","entries":[]})"),
                    parse_error);
    CHECK_THROWS_AS(
        parse_coefficients(R"({"m":2,"n":2,"kind":"full","entries":[{"index":[5,1],"re":1}]})"),
        parse_error);
    CHECK_THROWS_AS(parse_coefficients(R"({"m":2,"n":2,"kind":"nondecreasing",
        "entries":[{"index":[2,1],"re":1}]})"),
                    parse_error);
}

TEST_CASE("report lines are stable json with ordered fields") {
    InequalityReport r = make_report("demo", "m=2", "abc", 1.0, 2.0, 3.0);
    std::string line = report_to_json_line(r);
    CHECK(line.find("\"lemma_id\":\"demo\"") != std::string::npos);
    CHECK(line.find("\"lemma_id\"") < line.find("\"lhs\""));
    CHECK(line.find("\"lhs\"") < line.find("\"rhs\""));
    CHECK(line.find("\"verdict\":\"holds\"") != std::string::npos);
}

namespace {

int run_capture(const RunConfig& cfg, std::string* text = nullptr) {
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    if (text) *text = out.str() + "|" + err.str();
    return code;
}

}  // namespace

TEST_CASE("run() is byte-deterministic for a fixed seed") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.lemma = "partition-bound";
    cfg.m = 3;
    cfg.n = 3;
    cfg.trials = 6;
    cfg.seed = 123;
    std::string first, second;
    CHECK(run_capture(cfg, &first) == 0);
    CHECK(run_capture(cfg, &second) == 0);
    CHECK(first == second);
    CHECK(first.find("\"verdict\":\"holds\"") != std::string::npos);

    cfg.seed = 124;
    std::string third;
    CHECK(run_capture(cfg, &third) == 0);
    CHECK(first != third);
}

TEST_CASE("exit codes: 0 clean, 1 violated, 2 config error") {
    RunConfig ok;
    ok.command = "verify";
    ok.lemma = "power-sum";
    ok.trials = 3;
    CHECK(run_capture(ok) == 0);

    // Shrinking every right-hand side forces conclusive checks to fail.
    RunConfig forced = ok;
    forced.lemma = "slice-sum";
    forced.m = 2;
    forced.n = 2;
    forced.rhs_scale = 1e-6;
    std::string text;
    CHECK(run_capture(forced, &text) == 1);
    CHECK(text.find("\"verdict\":\"violated\"") != std::string::npos);

    RunConfig unknown;
    unknown.command = "nonsense";
    CHECK(run_capture(unknown) == 2);

    RunConfig missing;
    missing.command = "norm";
    CHECK(run_capture(missing) == 2);

    RunConfig bad_lemma;
    bad_lemma.command = "verify";
    bad_lemma.lemma = "no-such-check";
    CHECK(run_capture(bad_lemma) == 2);
}

TEST_CASE("fit-mode checks stay inconclusive even under rhs scaling") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.lemma = "block-contraction";
    cfg.m = 2;
    cfg.n = 2;
    cfg.trials = 2;
    cfg.rhs_scale = 1e-9;
    std::string text;
    CHECK(run_capture(cfg, &text) == 0);
    CHECK(text.find("\"verdict\":\"violated\"") == std::string::npos);
}

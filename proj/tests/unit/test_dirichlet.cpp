#include <doctest.h>

#include <cmath>
#include <complex>

#include "bhlab/dirichlet.hpp"
#include "bhlab/errors.hpp"
#include "bhlab/lorentz.hpp"
#include "bhlab/random_instances.hpp"
#include "bhlab/rng.hpp"

using namespace bhlab;
using cd = std::complex<double>;

TEST_CASE("factorizer returns exponents over the first primes") {
    PrimeFactorizer fact(1000);
    REQUIRE(fact.primes().size() >= 4);
    CHECK(fact.primes()[0] == 2);
    CHECK(fact.primes()[1] == 3);
    CHECK(fact.primes()[2] == 5);
    auto e12 = fact.factor(12);  // 2^2 * 3
    CHECK(e12[0] == 2);
    CHECK(e12[1] == 1);
    for (std::size_t i = 2; i < e12.size(); ++i) CHECK(e12[i] == 0);
    CHECK_THROWS_AS(fact.factor(1), domain_error);
    CHECK_THROWS_AS(fact.factor(10'000), instance_too_large);
    CHECK_THROWS_AS(factor_admissible(12, 2, fact), domain_error);  // degree 3 != 2
    auto pp = factor_admissible(12, 3, fact);
    CHECK(pp.n == 12);
}

TEST_CASE("monomials lift to products of primes") {
    PrimeFactorizer fact(1000);
    PolynomialCoefficients c = PolynomialCoefficients::zeros(2, 2);
    c.at({1, 2}) = cd(1.0, 0.0);
    DirichletCoefficients d = bohr_lift(c, fact);
    REQUIRE(d.entries.size() == 1);
    CHECK(d.entries.count(6) == 1);  // z_1 z_2 -> 2 * 3

    PolynomialCoefficients c3 = PolynomialCoefficients::zeros(3, 2);
    c3.at({1, 1, 2}) = cd(0.0, 2.0);
    DirichletCoefficients d3 = bohr_lift(c3, fact);
    REQUIRE(d3.entries.size() == 1);
    CHECK(d3.entries.count(12) == 1);  // z_1^2 z_2 -> 2^2 * 3
    CHECK(std::abs(d3.entries.at(12) - cd(0.0, 2.0)) < 1e-15);
}

TEST_CASE("lift and unlift are inverse on desk-scale instances") {
    PrimeFactorizer fact(1'000'000);
    SeedStream s = SeedStream::derive(61, 0);
    for (int m : {2, 3}) {
        PolynomialCoefficients c = random_poly(m, 3, s);
        DirichletCoefficients d = bohr_lift(c, fact);
        CHECK(d.entries.size() == c.values.size());  // support bijection
        PolynomialCoefficients back = bohr_unlift(d, fact);
        REQUIRE(back.values.size() == c.values.size());
        for (std::size_t i = 0; i < c.values.size(); ++i)
            CHECK(std::abs(back.values[i] - c.values[i]) < 1e-15);
    }
}

TEST_CASE("norms are invariant under the index relabeling of the lift") {
    PrimeFactorizer fact(1'000'000);
    SeedStream s = SeedStream::derive(62, 0);
    PolynomialCoefficients c = random_poly(3, 3, s);
    DirichletCoefficients d = bohr_lift(c, fact);
    std::vector<cd> lifted;
    for (const auto& [n, v] : d.entries) lifted.push_back(v);
    LorentzParams params{1.5, 1.0, LorentzScheme::telescoping};
    CHECK(lorentz_norm(lifted, params) ==
          doctest::Approx(lorentz_norm(c.values, params)).epsilon(1e-12));
}

TEST_CASE("weights: value, domain, degenerate degree") {
    CHECK(dirichlet_weight(7, 1) == doctest::Approx(1.0));
    CHECK(dirichlet_weight(2, 2) ==
          doctest::Approx(std::sqrt(std::log(2.0)) / std::pow(2.0, 0.25)).epsilon(1e-12));
    CHECK(dirichlet_weight(2, 2) == doctest::Approx(0.7000921880254583).epsilon(1e-12));
    CHECK_THROWS_AS(dirichlet_weight(1, 2), domain_error);
    CHECK_THROWS_AS(dirichlet_weight(0, 3), domain_error);
}

TEST_CASE("growth tables: atom values, divergence, monotonicity flags") {
    NonEmbeddingTables tables = non_embedding_tables(2, 5000, 12);
    REQUIRE(!tables.atom_table.empty());
    CHECK(tables.atom_table.front().n == 2);
    // 1 / omega_2 = 2^{1/4} / sqrt(log 2).
    CHECK(tables.atom_table.front().value ==
          doctest::Approx(std::pow(2.0, 0.25) / std::sqrt(std::log(2.0))).epsilon(1e-12));
    CHECK(tables.atom_table.back().n == 5000);
    CHECK(tables.monotone_from == 8);  // ceil(e^2)
    CHECK(tables.atom_monotone_beyond);
    CHECK(tables.ratio_monotone);
    CHECK(tables.atom_growth > 1.0);
    CHECK(tables.ratio_growth > 1.0);
    // Both log-exponent readings of the atom row diverge.
    REQUIRE(tables.atom_table_alt.size() == tables.atom_table.size());
    CHECK(tables.atom_table_alt.back().value > tables.atom_table_alt.front().value);
}

TEST_CASE("weighted membership report is an exact rearrangement comparison") {
    PrimeFactorizer fact(1000);
    PolynomialCoefficients c = PolynomialCoefficients::zeros(2, 2);
    c.at({1, 1}) = 1.0;
    c.at({1, 2}) = 0.5;
    c.at({2, 2}) = 0.25;
    MembershipResult res = check_weighted_membership(c, fact);
    CHECK(res.weighted_l1 > 0.0);
    CHECK(res.lorentz_norm > 0.0);
    CHECK(res.report.verdict == Verdict::holds);
    CHECK(res.report.lhs <= res.report.rhs * (1 + 1e-12));
}

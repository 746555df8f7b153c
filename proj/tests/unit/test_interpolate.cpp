#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "bhlab/errors.hpp"
#include "bhlab/interpolate.hpp"
#include "bhlab/lorentz.hpp"
#include "bhlab/random_instances.hpp"
#include "bhlab/rng.hpp"

using namespace bhlab;
using cd = std::complex<double>;

TEST_CASE("K-functional for (l1, linf): prefix sums with fractional tail") {
    std::vector<cd> x{3.0, 1.0};
    CHECK(k_functional(x, 1.5) == doctest::Approx(3.5).epsilon(1e-12));
    CHECK(k_functional(x, 0.5) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(k_functional(x, 2.0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(k_functional(x, 50.0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK_THROWS_AS(k_functional(x, 0.0), bad_params);
}

TEST_CASE("K-functional matches the capping-level oracle") {
    SeedStream s = SeedStream::derive(51, 0);
    for (int rep = 0; rep < 20; ++rep) {
        auto x = random_vector(1 + s.next_below(8), s);
        double t = 0.05 + 5.0 * s.next_unit();
        CHECK(k_functional(x, t) == doctest::Approx(k_functional_oracle(x, t)).epsilon(1e-6));
    }
}

TEST_CASE("K-functional for (l1, l2) has exact endpoints and matches its oracle") {
    SeedStream s = SeedStream::derive(52, 0);
    for (int rep = 0; rep < 20; ++rep) {
        auto x = random_vector(1 + s.next_below(8), s);
        double l1 = lorentz_norm(x, {1.0, 1.0, LorentzScheme::telescoping});
        double l2 = lorentz_norm(x, {2.0, 2.0, LorentzScheme::telescoping});
        CHECK(k_functional_l1_l2(x, 0.5) == doctest::Approx(0.5 * l2).epsilon(1e-12));
        double big = std::sqrt(static_cast<double>(x.size())) + 1.0;
        CHECK(k_functional_l1_l2(x, big) == doctest::Approx(l1).epsilon(1e-12));
        double t = 0.05 + 4.0 * s.next_unit();
        CHECK(k_functional_l1_l2(x, t) ==
              doctest::Approx(k_functional_l1_l2_oracle(x, t)).epsilon(1e-6));
    }
}

TEST_CASE("K-functionals are nondecreasing and concave in t") {
    SeedStream s = SeedStream::derive(53, 0);
    auto x = random_vector(6, s);
    for (int i = 1; i < 60; ++i) {
        double t = 0.1 * i;
        double a = k_functional(x, t);
        double b = k_functional(x, t + 0.1);
        double c = k_functional(x, t + 0.2);
        CHECK(a <= b * (1 + 1e-12));
        CHECK(a + c <= 2.0 * b * (1 + 1e-10));  // midpoint concavity
        double a2 = k_functional_l1_l2(x, t);
        double b2 = k_functional_l1_l2(x, t + 0.1);
        double c2 = k_functional_l1_l2(x, t + 0.2);
        CHECK(a2 <= b2 * (1 + 1e-12));
        CHECK(a2 + c2 <= 2.0 * b2 * (1 + 1e-10));
    }
}

TEST_CASE("K for (l1, linf) is piecewise linear with breaks at integers") {
    SeedStream s = SeedStream::derive(54, 0);
    auto x = random_vector(5, s);
    for (int k = 1; k < 5; ++k) {
        double t = k + 0.3;
        double left = k_functional(x, static_cast<double>(k));
        double right = k_functional(x, static_cast<double>(k) + 1.0);
        CHECK(k_functional(x, t) == doctest::Approx(left + 0.3 * (right - left)).epsilon(1e-10));
    }
}

TEST_CASE("single atom interpolation norm has a closed form") {
    std::vector<cd> atom{cd(0.0, 2.0)};
    for (double theta : {0.25, 0.5, 0.75}) {
        for (double q : {1.0, 2.0, 3.0}) {
            double expect =
                2.0 * std::pow(1.0 / ((1.0 - theta) * q) + 1.0 / (theta * q), 1.0 / q);
            CHECK(real_interp_norm(atom, {theta, q}, Couple::l1_linf) ==
                  doctest::Approx(expect).epsilon(1e-8));
        }
    }
    CHECK_THROWS_AS(real_interp_norm(atom, {0.0, 1.0}, Couple::l1_linf), bad_params);
    CHECK_THROWS_AS(real_interp_norm(atom, {0.5, 0.5}, Couple::l1_linf), bad_params);
}

TEST_CASE("interpolation norm sandwiches the Lorentz norm with factor 1/p'") {
    SeedStream s = SeedStream::derive(55, 0);
    for (double p : {1.5, 2.0, 3.0}) {
        InterpParams params{1.0 - 1.0 / p, p};
        for (int rep = 0; rep < 8; ++rep) {
            auto x = random_vector(1 + s.next_below(8), s);
            double interp = real_interp_norm(x, params, Couple::l1_linf);
            double lor = lorentz_norm(x, {p, p, LorentzScheme::telescoping});
            CHECK((1.0 - 1.0 / p) * interp <= lor * (1 + 1e-8));
            CHECK(lor <= interp * (1 + 1e-8));
        }
    }
}

TEST_CASE("envelope check reports fitted constants in fit mode") {
    BHConstantTable table;
    std::vector<cd> ones(16, 1.0);
    EnvelopeResult res = check_lorentz_envelope(ones, 1.0, 2.0, 0.5, 1.0, table);
    CHECK(res.p == doctest::Approx(4.0 / 3.0));
    CHECK(res.lorentz_norm == doctest::Approx(std::pow(16.0, 0.75)).epsilon(1e-12));
    CHECK(res.interp_norm > 0.0);
    CHECK(res.fitted_C > 0.0);
    CHECK(res.fitted_upper > 0.0);
    CHECK(res.fitted_lower > 0.0);
    CHECK(res.report.verdict != Verdict::violated);  // fit mode
    CHECK_THROWS_AS(check_lorentz_envelope(ones, 2.0, 3.0, 0.5, 1.0, table), bad_params);
}

TEST_CASE("weak-couple envelope accepts p1 = inf") {
    BHConstantTable table;
    std::vector<cd> x{2.0, 1.0, 0.5};
    EnvelopeResult res = check_lorentz_envelope(x, 1.0, kInf, 0.25, 1.0, table);
    CHECK(res.p == doctest::Approx(4.0 / 3.0));
    CHECK(res.report.verdict != Verdict::violated);
}

TEST_CASE("block averaging is norm-contractive on the K-functional") {
    std::vector<cd> x{2.0, 0.0};
    auto avg = block_average(x, {{1, 2}});
    REQUIRE(avg.size() == 2);
    CHECK(std::abs(avg[0] - cd(1.0)) < 1e-12);
    CHECK(std::abs(avg[1] - cd(1.0)) < 1e-12);

    SeedStream s = SeedStream::derive(56, 0);
    auto y = random_vector(6, s);
    auto blocks = std::vector<std::vector<int>>{{1, 4}, {2, 3}, {5, 6}};
    auto z = block_average(y, blocks);
    for (double t : {0.5, 1.0, 2.5, 4.0})
        CHECK(k_functional(z, t) <= k_functional(y, t) * (1 + 1e-12));
    CHECK_THROWS_AS(block_average(y, {{1, 2}}), malformed_subset);
    CHECK_THROWS_AS(block_average(y, {{1, 2}, {2, 3}, {4, 5, 6}}), malformed_subset);
}

#include <doctest.h>

#include <cmath>

#include "bhlab/lorentz.hpp"
#include "bhlab/lowerbounds.hpp"

using namespace bhlab;

TEST_CASE("optimality sweep: unimodular ratio pins the fundamental function") {
    LorentzParams X{4.0 / 3.0, 1.0, LorentzScheme::telescoping};
    auto rows = optimality_experiment(2, 4, 2, X, {8, 60, 1e-12}, 3);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        double atoms = std::pow(static_cast<double>(row.N), 2.0);
        CHECK(row.phi == doctest::Approx(std::pow(atoms, 0.75)).epsilon(1e-12));
        CHECK(row.sup_bound ==
              doctest::Approx(std::pow(static_cast<double>(row.N), 1.5)).epsilon(1e-12));
        CHECK(row.ratio == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(row.ascent_estimate <= row.sup_bound * (1 + 1e-6));
        CHECK(row.ascent_estimate > 0.5 * row.sup_bound);
    }
}

TEST_CASE("random-sign experiment reports the probabilistic bound") {
    KszResult res = ksz_random_poly(2, 2, 8, 5);
    CHECK(res.trials == 8);
    // N * binom(m+N-1, m) * log m = 2 * 3 * log 2 at N = m = 2.
    CHECK(res.bound_value == doctest::Approx(std::sqrt(6.0 * std::log(2.0))).epsilon(1e-12));
    CHECK(res.best_sup_estimate > 0.0);
    CHECK(res.fitted_constant ==
          doctest::Approx(res.best_sup_estimate / res.bound_value).epsilon(1e-12));
    REQUIRE(res.best_signs.size() == 3);
    for (int sgn : res.best_signs) CHECK((sgn == 1 || sgn == -1));
}

TEST_CASE("sign experiment scales its constant linearly") {
    KszResult base = ksz_random_poly(2, 2, 4, 9, {}, 1.0);
    KszResult doubled = ksz_random_poly(2, 2, 4, 9, {}, 2.0);
    CHECK(doubled.bound_value == doctest::Approx(2.0 * base.bound_value).epsilon(1e-12));
    CHECK(doubled.best_sup_estimate == doctest::Approx(base.best_sup_estimate).epsilon(1e-12));
}

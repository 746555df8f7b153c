#include <doctest.h>

#include <cmath>
#include <complex>

#include "bhlab/errors.hpp"
#include "bhlab/forms.hpp"
#include "bhlab/lowerbounds.hpp"
#include "bhlab/random_instances.hpp"
#include "bhlab/rng.hpp"
#include "bhlab/verify.hpp"

using namespace bhlab;
using cd = std::complex<double>;

TEST_CASE("poly coefficients aggregate symmetric tensor classes") {
    CoefficientTensor a = CoefficientTensor::zeros(2, 2);
    a.at({1, 2}) = 1.0;
    a.at({2, 1}) = 1.0;
    a.symmetric = true;
    PolynomialCoefficients c = poly_from_symmetric(a);
    CHECK(c.at({1, 2}) == cd(2.0));
    CHECK(c.at({1, 1}) == cd(0.0));

    CoefficientTensor back = symmetric_from_poly(c);
    CHECK(back.symmetric);
    CHECK(back.at({1, 2}) == cd(1.0));
    CHECK(back.at({2, 1}) == cd(1.0));

    CoefficientTensor bad = CoefficientTensor::zeros(2, 2);
    bad.at({1, 2}) = 1.0;  // not symmetric
    bad.symmetric = true;
    CHECK_THROWS_AS(poly_from_symmetric(bad), symmetry_violation);
    CoefficientTensor unmarked = CoefficientTensor::zeros(2, 2);
    CHECK_THROWS_AS(poly_from_symmetric(unmarked), symmetry_violation);
}

TEST_CASE("eval_poly equals eval_form on the diagonal") {
    SeedStream s = SeedStream::derive(31, 0);
    PolynomialCoefficients c = random_poly(3, 3, s);
    CoefficientTensor a = symmetric_from_poly(c);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<cd> z(3);
        for (auto& v : z) v = s.next_phase();
        cd via_form = eval_form(a, {z, z, z});
        cd via_poly = eval_poly(c, z);
        CHECK(std::abs(via_form - via_poly) <= 1e-12 * (1.0 + std::abs(via_poly)));
    }
}

TEST_CASE("rank-one sup norm is the product of factor l1 norms") {
    std::vector<std::vector<cd>> factors{{cd(1.0, 1.0), cd(0.0, -2.0)},
                                         {cd(3.0, 0.0), cd(0.0, 0.5)}};
    auto cert = certified_rank_one(factors);
    CHECK(cert.certified);
    double expect = (std::sqrt(2.0) + 2.0) * 3.5;
    CHECK(cert.sup_norm == doctest::Approx(expect).epsilon(1e-12));
    // Alternating ascent reaches the analytic value on rank-one tensors.
    SupNormEstimate est = supnorm_form(cert.tensor, {8, 50, 1e-12}, 5);
    CHECK(est.lower == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("monomial and unimodular product families certify their sup") {
    auto mono = certified_monomial(3, 2, {1, 2, 2}, cd(0.0, -2.5));
    CHECK(mono.certified);
    CHECK(mono.sup_norm == doctest::Approx(2.5));
    CHECK(mono.tensor.at({1, 2, 2}) == cd(0.0, -2.5));

    auto four = certified_fourier(2, 2);
    CHECK(four.certified);
    CHECK(four.sup_norm == doctest::Approx(std::pow(2.0, 1.5)));
}

TEST_CASE("fourier tensor base matrix and bound at N = m = 2") {
    FourierTensor ft = fourier_tensor(2, 2);
    REQUIRE(ft.base.size() == 4);
    CHECK(std::abs(ft.base[0] - cd(-1.0, 0.0)) < 1e-12);  // e^{2 pi i / 2}
    CHECK(std::abs(ft.base[1] - cd(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(ft.base[2] - cd(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(ft.base[3] - cd(1.0, 0.0)) < 1e-12);
    CHECK(ft.sup_bound() == doctest::Approx(std::pow(2.0, 1.5)));
    // Entries are unimodular products of base entries.
    for (const auto& v : ft.values.values) CHECK(std::abs(v) == doctest::Approx(1.0));
}

TEST_CASE("identity bilinear form has sup norm n") {
    CoefficientTensor a = CoefficientTensor::zeros(2, 3);
    for (int i = 1; i <= 3; ++i) a.at({i, i}) = 1.0;
    SupNormEstimate est = supnorm_form(a, {16, 100, 1e-12}, 9);
    CHECK(est.lower == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("poly sup norm: grid certifies an upper bound for small n") {
    SeedStream s = SeedStream::derive(32, 0);
    PolynomialCoefficients c = random_poly(2, 2, s);
    SupNormEstimate est = supnorm_poly(c, {8, 100, 1e-12, 360, true}, 3);
    REQUIRE(est.has_upper());
    CHECK(est.lower <= est.upper * (1 + 1e-12));
    CHECK((est.upper - est.lower) / est.upper < 0.05);
    // The witness reproduces the lower estimate.
    cd at_witness = eval_poly(c, est.poly_witness);
    CHECK(std::abs(at_witness) == doctest::Approx(est.lower).epsilon(1e-9));
}

TEST_CASE("ascent lower bounds never exceed a certified monomial sup") {
    auto mono = certified_monomial(2, 2, {1, 2}, cd(2.0, 0.0));
    SupNormEstimate est = supnorm_form(mono.tensor, {8, 60, 1e-12}, 11);
    CHECK(est.lower <= mono.sup_norm * (1 + 1e-9));
    CHECK(est.lower == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("polarization factor m^m / m!") {
    CHECK(polarization_factor(1) == doctest::Approx(1.0));
    CHECK(polarization_factor(2) == doctest::Approx(2.0));
    CHECK(polarization_factor(3) == doctest::Approx(4.5));
}

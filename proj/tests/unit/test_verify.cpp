#include <doctest.h>

#include <cmath>
#include <complex>

#include "bhlab/errors.hpp"
#include "bhlab/lorentz.hpp"
#include "bhlab/random_instances.hpp"
#include "bhlab/report.hpp"
#include "bhlab/rng.hpp"
#include "bhlab/verify.hpp"

using namespace bhlab;
using cd = std::complex<double>;

namespace {

CoefficientTensor two_by_two(double a11, double a12, double a21, double a22) {
    CoefficientTensor a = CoefficientTensor::zeros(2, 2);
    a.at({1, 1}) = a11;
    a.at({1, 2}) = a12;
    a.at({2, 1}) = a21;
    a.at({2, 2}) = a22;
    return a;
}

}  // namespace

TEST_CASE("slice sum bound on a frozen instance") {
    CoefficientTensor a = two_by_two(1, 2, 3, 4);
    std::vector<MultiIndex> S{{1, 1}, {2, 2}};
    InequalityReport r = check_slice_sum(a, S);
    CHECK(r.lhs == doctest::Approx(5.0));
    // E(S) = 2, constant m * E(S) = 4; weak ell_2 norm of (4,3,2,1) is 3 sqrt 2.
    CHECK(r.constant_used == doctest::Approx(4.0));
    CHECK(r.rhs == doctest::Approx(4.0 * 3.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(r.verdict == Verdict::holds);
}

TEST_CASE("greedy partition covers every offset exactly once") {
    SeedStream s = SeedStream::derive(41, 0);
    for (int rep = 0; rep < 10; ++rep) {
        CoefficientTensor a = random_tensor(2 + rep % 2, 3, s);
        for (double q : {1.0, 2.0}) {
            GreedyPartition part = greedy_partition(a, q);
            CHECK(partition_is_cover(part));
            REQUIRE(part.masks.size() == static_cast<std::size_t>(a.m()));
            for (const auto& round : part.chosen_values)
                CHECK(round.size() == static_cast<std::size_t>(a.n()));
            for (const auto& r : check_partition_blocks(a, part, q))
                CHECK(r.verdict == Verdict::holds);
        }
    }
}

TEST_CASE("partition duality on the all-ones matrix") {
    CoefficientTensor a = two_by_two(1, 1, 1, 1);
    InequalityReport r = check_partition_duality(a, 2.0);
    // lhs: ell_{4/3,1} of four unit atoms = 4^{3/4}; rhs: sqrt2 * 2 blocks
    // each summing two rows of ell_2 norm sqrt2.
    CHECK(r.lhs == doctest::Approx(std::pow(4.0, 0.75)).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(r.verdict == Verdict::holds);
    CHECK_THROWS_AS(check_partition_duality(a, 1.0), bad_params);
}

TEST_CASE("mixed-norm and multiplicative bounds hold on certified families") {
    SeedStream s = SeedStream::derive(42, 0);
    std::vector<std::vector<cd>> factors(3);
    for (auto& f : factors) {
        f.resize(3);
        for (auto& v : f) v = s.next_cgauss();
    }
    BHConstantTable table;
    table.bh_mult[2] = 2.0;
    table.bh_mult[3] = 4.0;
    for (const auto& cert :
         {certified_rank_one(factors), certified_fourier(3, 3),
          certified_monomial(3, 3, {1, 2, 3}, cd(1.5, -0.5))}) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(check_mixed_bh(cert, k).verdict == Verdict::holds);
            CHECK(check_fine_mult(cert, k, table).verdict == Verdict::holds);
        }
        CHECK(check_bf_constant(cert).verdict == Verdict::holds);
        CHECK(check_subpoly_mult(cert, table).verdict != Verdict::violated);
    }
}

TEST_CASE("block embedding holds for random tensors") {
    SeedStream s = SeedStream::derive(43, 0);
    CoefficientTensor a = random_tensor(3, 2, s);
    for (int k = 1; k <= 3; ++k)
        CHECK(check_block_embedding(a, k).verdict == Verdict::holds);
}

TEST_CASE("diagonal endpoint comparisons on the off-diagonal pair") {
    CoefficientTensor a = two_by_two(0, 1, 1, 0);
    a.symmetric = true;
    auto [l1, l2] = check_diagonal_endpoints(a);
    // d has the single entry 2^{3/4} at class (1,2).
    CHECK(l1.lhs == doctest::Approx(std::pow(2.0, 0.75)).epsilon(1e-12));
    CHECK(l1.rhs == doctest::Approx(2.0));
    CHECK(l2.lhs == doctest::Approx(std::pow(2.0, 0.75)).epsilon(1e-12));
    CHECK(l2.rhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(l1.verdict == Verdict::holds);
    CHECK(l2.verdict == Verdict::holds);
}

TEST_CASE("diagonal map weights class representatives") {
    CoefficientTensor a = two_by_two(1, 1, 1, 1);
    a.symmetric = true;
    PolynomialCoefficients d = diagonal_apply(a);
    CHECK(d.at({1, 1}) == cd(1.0));
    CHECK(std::abs(d.at({1, 2}) - cd(std::pow(2.0, 0.75))) < 1e-12);
}

TEST_CASE("chain constant endpoints") {
    BHConstantTable table;
    CHECK(chain_constant(1, table) == doctest::Approx(1.0));
    // m = 2 with unit placeholder constants:
    // 2^2 * 2^{1/4} * sqrt2 * 2 * bh(1), bh(1) = 1.
    double expect = 4.0 * std::pow(2.0, 0.25) * std::sqrt(2.0) * 2.0;
    CHECK(chain_constant(2, table) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("fit-mode checks never report violations with unit constants") {
    SeedStream s = SeedStream::derive(44, 0);
    BHConstantTable table;
    CoefficientTensor a = random_tensor(2, 3, s);
    InequalityReport r1 = check_block_contraction(a, 2.0, table);
    CHECK(r1.verdict != Verdict::violated);
    InequalityReport r2 = check_outer_contraction(a, 1.5, 2.5, table);
    CHECK(r2.verdict != Verdict::violated);
    CHECK_THROWS_AS(check_outer_contraction(a, 2.5, 1.5, table), bad_params);
}

TEST_CASE("power sum bound is strict") {
    InequalityReport r = check_power_sum_bound(0.5, 1000);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.lhs < r.rhs);
    CHECK_THROWS_AS(check_power_sum_bound(1.5, 10), bad_params);
}

TEST_CASE("khinchine ratio matches sqrt2 within Monte Carlo error") {
    std::vector<cd> alpha{cd(1.0, 0.5), cd(-0.3, 1.1), cd(0.7, 0.0)};
    BHConstantTable table;
    KhinchineMcResult res = check_khinchine_mc(alpha, 20000, 77, table);
    CHECK(res.report.verdict == Verdict::holds);
    CHECK(res.ratio > 1.0);
    CHECK(res.ratio < std::sqrt(2.0) + 5.0 * res.ratio_se);
    CHECK(res.mc_se > 0.0);
}

TEST_CASE("polarization ascent stays below the transfer bound") {
    SeedStream s = SeedStream::derive(45, 0);
    CoefficientTensor a = random_symmetric_tensor(2, 2, s);
    InequalityReport r = check_polarization(a, {8, 60, 1e-12}, {8, 100, 1e-12, 360, true}, 5);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.constant_used == doctest::Approx(2.0));  // m^m / m! at m = 2
}

TEST_CASE("reports carry margins and fingerprints") {
    CoefficientTensor a = two_by_two(1, 2, 3, 4);
    InequalityReport r = check_slice_sum(a, {{1, 1}});
    CHECK(r.margin == doctest::Approx(r.rhs - r.lhs));
    CHECK(r.instance_hash.size() == 16);
    CHECK(r.lemma_id == "slice-sum");
}

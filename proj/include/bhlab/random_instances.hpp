#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bhlab/forms.hpp"
#include "bhlab/mixed.hpp"
#include "bhlab/rng.hpp"

namespace bhlab {

// Seeded instance generators shared by the CLI, the property tests, and
// the acceptance suite. Entries are standard complex Gaussians.
CoefficientTensor random_tensor(int m, int n, SeedStream& stream);
CoefficientTensor random_symmetric_tensor(int m, int n, SeedStream& stream);
PolynomialCoefficients random_poly(int m, int n, SeedStream& stream);
std::vector<std::complex<double>> random_vector(std::size_t N, SeedStream& stream);

}  // namespace bhlab

#include "bhlab/random_instances.hpp"

namespace bhlab {

CoefficientTensor random_tensor(int m, int n, SeedStream& stream) {
    CoefficientTensor a = CoefficientTensor::zeros(m, n);
    for (auto& v : a.values) v = stream.next_cgauss();
    return a;
}

CoefficientTensor random_symmetric_tensor(int m, int n, SeedStream& stream) {
    PolynomialCoefficients c = random_poly(m, n, stream);
    return symmetric_from_poly(c);
}

PolynomialCoefficients random_poly(int m, int n, SeedStream& stream) {
    PolynomialCoefficients c = PolynomialCoefficients::zeros(m, n);
    for (auto& v : c.values) v = stream.next_cgauss();
    return c;
}

std::vector<std::complex<double>> random_vector(std::size_t N, SeedStream& stream) {
    std::vector<std::complex<double>> x(N);
    for (auto& v : x) v = stream.next_cgauss();
    return x;
}

}  // namespace bhlab

#pragma once

#include <complex>
#include <cstdint>

namespace bhlab {

// Counter-based generator: output i of stream (key) is a hash of (key, i).
// There is no hidden global state; every trial derives its own stream from
// (seed, stream id), so runs are reproducible regardless of thread count
// or evaluation order.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t key) : key_(key) {}

    static SeedStream derive(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    // Uniform in [0, 1).
    double next_unit();

    // Uniform in [lo, hi).
    double next_range(double lo, double hi);

    // Uniform angle in [0, 2*pi).
    double next_angle();

    // Uniform on the unit circle.
    std::complex<double> next_phase();

    // Standard complex Gaussian (independent N(0, 1/2) parts).
    std::complex<double> next_cgauss();

    // Real standard Gaussian.
    double next_gauss();

    // +1 or -1 with equal probability.
    int next_sign();

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace bhlab

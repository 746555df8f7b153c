#include "bhlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace bhlab {

namespace {

// SplitMix64 finaliser; full-period mixing of a 64-bit word.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

SeedStream SeedStream::derive(std::uint64_t seed, std::uint64_t stream_id) {
    return SeedStream(mix64(seed ^ mix64(stream_id + 0x632BE59BD9B4E019ULL)));
}

std::uint64_t SeedStream::next_u64() {
    return mix64(key_ + counter_++ * 0x9E3779B97F4A7C15ULL);
}

double SeedStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeedStream::next_range(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
}

double SeedStream::next_angle() {
    return 2.0 * std::numbers::pi * next_unit();
}

std::complex<double> SeedStream::next_phase() {
    double t = next_angle();
    return {std::cos(t), std::sin(t)};
}

std::complex<double> SeedStream::next_cgauss() {
    // Box-Muller; radius scaled so E|z|^2 = 1.
    double u = next_unit();
    while (u == 0.0) u = next_unit();
    double r = std::sqrt(-std::log(u));
    double t = next_angle();
    return {r * std::cos(t), r * std::sin(t)};
}

double SeedStream::next_gauss() {
    double u = next_unit();
    while (u == 0.0) u = next_unit();
    double r = std::sqrt(-2.0 * std::log(u));
    return r * std::cos(next_angle());
}

int SeedStream::next_sign() {
    return (next_u64() & 1) ? 1 : -1;
}

std::uint64_t SeedStream::next_below(std::uint64_t n) {
    // Rejection-free modulo is fine here: n is tiny relative to 2^64.
    return next_u64() % n;
}

}  // namespace bhlab

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <utility>

namespace emdet {

// SplitMix64 finalizer, used to key engines from (seed, stream_id).
std::uint64_t mix64(std::uint64_t x);

// Seeded random stream: (seed, stream_id) fully determines the output
// sequence, so Monte Carlo trials reproduce regardless of thread layout.
// Gaussians come from an explicit Box-Muller transform rather than
// std::normal_distribution, whose algorithm is implementation-defined.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0, 1), 53-bit resolution
    double uniform01();
    // uniform on (0, 1], safe as a log() argument
    double uniform_pos();
    // two independent N(0,1) draws (one Box-Muller pair)
    std::pair<double, double> normal_pair();
    // circularly symmetric complex Gaussian, E|z|^2 = 1
    std::complex<double> complex_normal();
    // unit-modulus QPSK symbol, (+-1 +- 1j)/sqrt(2)
    std::complex<double> qpsk_symbol();

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

}  // namespace emdet

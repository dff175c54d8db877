#include "emdet/rng.hpp"

#include <cmath>
#include <numbers>

namespace emdet {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed),
      stream_id_(stream_id),
      engine_(mix64(mix64(seed) ^ mix64(stream_id ^ 0x5851f42d4c957f2dULL))) {}

double RngStream::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

std::pair<double, double> RngStream::normal_pair() {
    const double u1 = uniform_pos();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

std::complex<double> RngStream::complex_normal() {
    const auto [re, im] = normal_pair();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::complex<double> RngStream::qpsk_symbol() {
    const std::uint64_t bits = engine_() >> 62;
    const double h = std::numbers::sqrt2 / 2.0;
    return {(bits & 1) ? h : -h, (bits & 2) ? h : -h};
}

}  // namespace emdet

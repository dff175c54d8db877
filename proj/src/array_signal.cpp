#include "emdet/array_signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace emdet {

void ArrayConfig::validate() const {
    if (n_antennas < 2)
        throw std::invalid_argument("ArrayConfig: n_antennas must be >= 2, got " +
                                    std::to_string(n_antennas));
    if (!(spacing_wavelengths > 0.0) || !std::isfinite(spacing_wavelengths))
        throw std::invalid_argument("ArrayConfig: spacing_wavelengths must be positive");
}

void ScenarioConfig::validate() const {
    if (!std::isfinite(snr_db))
        throw std::invalid_argument("ScenarioConfig: snr_db must be finite");
    if (!std::isfinite(theta_rad) || std::abs(theta_rad) >= std::numbers::pi / 2)
        throw std::invalid_argument("ScenarioConfig: theta_rad must lie in (-pi/2, pi/2)");
    if (n_snapshots < 1)
        throw std::invalid_argument("ScenarioConfig: n_snapshots must be >= 1");
}

Eigen::VectorXcd steering_vector(double theta_rad, const ArrayConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(theta_rad) || std::abs(theta_rad) >= std::numbers::pi / 2)
        throw std::invalid_argument("steering_vector: theta_rad must lie in (-pi/2, pi/2)");

    const double phase_step =
        2.0 * std::numbers::pi * cfg.spacing_wavelengths * std::sin(theta_rad);
    Eigen::VectorXcd a(cfg.n_antennas);
    for (int m = 0; m < cfg.n_antennas; ++m)
        a(m) = std::polar(1.0, phase_step * m);
    return a;
}

SnapshotMatrix synth_snapshots(const ScenarioConfig& scenario,
                               const ArrayConfig& cfg, RngStream& rng) {
    cfg.validate();
    scenario.validate();

    const int n = cfg.n_antennas;
    const int l = scenario.n_snapshots;
    SnapshotMatrix y(n, l);

    if (scenario.hypothesis == Hypothesis::H0) {
        for (int k = 0; k < l; ++k)
            for (int m = 0; m < n; ++m)
                y(m, k) = rng.complex_normal();
        return y;
    }

    const Eigen::VectorXcd a = steering_vector(scenario.theta_rad, cfg);
    const double amp = std::sqrt(std::pow(10.0, scenario.snr_db / 10.0));
    for (int k = 0; k < l; ++k) {
        const std::complex<double> s =
            scenario.signal == SignalModel::Gaussian ? rng.complex_normal()
                                                     : rng.qpsk_symbol();
        const std::complex<double> scaled = amp * s;
        for (int m = 0; m < n; ++m)
            y(m, k) = scaled * a(m) + rng.complex_normal();
    }
    return y;
}

SnapshotMatrix synth_snapshots(const ScenarioConfig& scenario,
                               const ArrayConfig& cfg, std::uint64_t seed,
                               std::uint64_t stream_id) {
    RngStream rng(seed, stream_id);
    return synth_snapshots(scenario, cfg, rng);
}

}  // namespace emdet

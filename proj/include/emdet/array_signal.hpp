#pragma once

#include <Eigen/Dense>

#include "emdet/rng.hpp"

namespace emdet {

// N x L complex baseband receive matrix, one column per snapshot.
using SnapshotMatrix = Eigen::MatrixXcd;

enum class Hypothesis { H0, H1 };

// Emitter baseband symbol model. Gaussian matches the Wishart analysis of the
// detector thresholds; ConstantModulus gives QPSK-like unit-power symbols.
enum class SignalModel { Gaussian, ConstantModulus };

struct ArrayConfig {
    int n_antennas = 64;
    double spacing_wavelengths = 0.5;  // element spacing d / lambda

    void validate() const;  // throws std::invalid_argument
};

struct ScenarioConfig {
    double snr_db = -18.0;
    double theta_rad = 0.0;  // emitter direction, in (-pi/2, pi/2)
    int n_snapshots = 200;
    Hypothesis hypothesis = Hypothesis::H0;
    SignalModel signal = SignalModel::Gaussian;

    void validate() const;
};

// ULA response for direction theta: element m carries phase
// 2*pi*(d/lambda)*m*sin(theta), with the first element as phase reference.
Eigen::VectorXcd steering_vector(double theta_rad, const ArrayConfig& cfg);

// Draw an N x L snapshot matrix. Under H0 every entry is i.i.d. CN(0,1);
// under H1 column k is sqrt(SNR)*a(theta)*s[k] + v[k] with unit-power s[k].
// The noise variance is fixed to 1, so snr_db alone sets the emitter power.
SnapshotMatrix synth_snapshots(const ScenarioConfig& scenario,
                               const ArrayConfig& cfg, RngStream& rng);

SnapshotMatrix synth_snapshots(const ScenarioConfig& scenario,
                               const ArrayConfig& cfg, std::uint64_t seed,
                               std::uint64_t stream_id);

}  // namespace emdet

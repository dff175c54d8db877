#pragma once

#include <cstdint>
#include <vector>

#include "emdet/array_signal.hpp"
#include "emdet/detectors.hpp"

namespace emdet {

// One Monte Carlo campaign: repeated synth -> covariance -> eigen-spectrum
// trials over a fixed scenario. Trial t draws from RngStream(seed, t) under
// H0 and RngStream(seed, 2^32 + t) under H1, so the two hypotheses never
// share random numbers and results are independent of the thread layout.
struct CampaignConfig {
    ArrayConfig array;
    ScenarioConfig scenario;  // hypothesis field is overridden per run
    int trials = 10000;
    std::uint64_t seed = 1;
    std::vector<DetectorKind> detectors{kAllDetectors.begin(), kAllDetectors.end()};
    ThresholdPolicy policy;
    int threads = 1;  // 0 picks std::thread::hardware_concurrency()

    void validate() const;
};

// Per-detector statistic vectors for one hypothesis. Degenerate trials
// (detector undefined on that spectrum) hold NaN and are counted aside.
struct StatisticsRun {
    std::vector<DetectorKind> detectors;
    int trials = 0;
    std::array<std::vector<double>, kNumDetectors> stats;
    std::array<int, kNumDetectors> degenerate{};
};

StatisticsRun run_statistics(const CampaignConfig& cfg, Hypothesis hypothesis);

// Type-7 quantile (linear interpolation between order statistics) of an
// ascending-sorted sample.
double empirical_quantile(const std::vector<double>& sorted, double p);

// Empirical CFAR threshold: the (1 - pfa) quantile of an H0 statistic
// vector, NaN entries excluded.
double threshold_from_h0(const std::vector<double>& h0_stats, double pfa);

double calibrate_threshold(const CampaignConfig& cfg, DetectorKind kind, double pfa);

struct RocPoint {
    double pfa = 0.0;
    double pd = 0.0;
    DetectorKind detector{};
};

struct RocCurve {
    DetectorKind detector{};
    std::vector<RocPoint> points;
    int valid_h0 = 0;
    int valid_h1 = 0;
    int degenerate_h0 = 0;
    int degenerate_h1 = 0;
};

// {0.001, 0.002, 0.005} then 0.01 .. 0.50 in steps of 0.01.
std::vector<double> default_pfa_grid();

// Shared H0/H1 statistic runs, swept over the Pfa grid with empirically
// calibrated thresholds; Pd is nondecreasing in Pfa by construction.
std::vector<RocCurve> roc_table(const CampaignConfig& cfg,
                                const std::vector<double>& pfa_grid = {});

std::vector<RocPoint> roc_curve(const CampaignConfig& cfg, DetectorKind kind,
                                const std::vector<double>& pfa_grid = {});

struct SweepCell {
    DetectorKind detector{};
    double pmiss = 0.0;
    double threshold = 0.0;
    int trials_used = 0;
};

// One array size in the false-dismissal sweep; detectors that are degenerate
// at this size (max/min ratio and GLRT once N exceeds the snapshot count)
// carry no cell rather than a zero.
struct SweepRow {
    int n_antennas = 0;
    std::vector<SweepCell> cells;
};

// For each N: calibrate per-detector thresholds at the target Pfa on H0,
// then estimate Pmiss = 1 - Pd on H1. Each N derives its own seed from
// (cfg.seed, N) so sweep points are statistically independent.
std::vector<SweepRow> pmiss_vs_n(const CampaignConfig& cfg,
                                 const std::vector<int>& n_values, double pfa);

}  // namespace emdet

#include "emdet/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "emdet/covariance_eig.hpp"

namespace emdet {

namespace {

constexpr std::uint64_t kH1StreamOffset = std::uint64_t{1} << 32;

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    if (threads == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    if (threads <= 1 || count < 2) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const int chunk = std::max(1, count / (threads * 8));

    auto worker = [&] {
        for (;;) {
            const int begin = next.fetch_add(chunk);
            if (begin >= count) return;
            const int end = std::min(count, begin + chunk);
            try {
                for (int i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::vector<double> sorted_valid(const std::vector<double>& stats) {
    std::vector<double> v;
    v.reserve(stats.size());
    for (double x : stats)
        if (!std::isnan(x)) v.push_back(x);
    std::sort(v.begin(), v.end());
    return v;
}

// fraction of valid entries strictly above the threshold
double exceedance(const std::vector<double>& sorted, double threshold) {
    if (sorted.empty()) return 0.0;
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), threshold);
    return static_cast<double>(sorted.end() - it) / static_cast<double>(sorted.size());
}

}  // namespace

void CampaignConfig::validate() const {
    array.validate();
    scenario.validate();
    if (trials < 100)
        throw std::invalid_argument("CampaignConfig: need at least 100 trials");
    if (detectors.empty())
        throw std::invalid_argument("CampaignConfig: detector set is empty");
    for (std::size_t i = 0; i < detectors.size(); ++i)
        for (std::size_t j = i + 1; j < detectors.size(); ++j)
            if (detectors[i] == detectors[j])
                throw std::invalid_argument("CampaignConfig: duplicate detector");
    if (threads < 0)
        throw std::invalid_argument("CampaignConfig: threads must be >= 0");
}

StatisticsRun run_statistics(const CampaignConfig& cfg, Hypothesis hypothesis) {
    cfg.validate();
    ScenarioConfig scenario = cfg.scenario;
    scenario.hypothesis = hypothesis;

    StatisticsRun run;
    run.detectors = cfg.detectors;
    run.trials = cfg.trials;
    for (DetectorKind kind : cfg.detectors)
        run.stats[detector_index(kind)].assign(cfg.trials,
                                               std::numeric_limits<double>::quiet_NaN());

    const std::uint64_t offset = hypothesis == Hypothesis::H0 ? 0 : kH1StreamOffset;
    parallel_for(cfg.trials, cfg.threads, [&](int trial) {
        RngStream rng(cfg.seed, offset + static_cast<std::uint64_t>(trial));
        const SnapshotMatrix y = synth_snapshots(scenario, cfg.array, rng);
        const EigenSpectrum spec = snapshot_spectrum(y);
        for (DetectorKind kind : cfg.detectors) {
            try {
                run.stats[detector_index(kind)][trial] = detector_statistic(kind, spec);
            } catch (const DegenerateSpectrumError&) {
                // leave the NaN marker
            }
        }
    });

    for (DetectorKind kind : cfg.detectors) {
        const auto& v = run.stats[detector_index(kind)];
        const int bad = static_cast<int>(std::count_if(
            v.begin(), v.end(), [](double x) { return std::isnan(x); }));
        run.degenerate[detector_index(kind)] = bad;
        if (bad == cfg.trials)
            throw std::runtime_error("run_statistics: detector '" +
                                     std::string(detector_name(kind)) +
                                     "' was degenerate in every trial");
    }
    return run;
}

double empirical_quantile(const std::vector<double>& sorted, double p) {
    if (sorted.empty())
        throw std::invalid_argument("empirical_quantile: empty sample");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("empirical_quantile: p must lie in [0, 1]");
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double threshold_from_h0(const std::vector<double>& h0_stats, double pfa) {
    if (!(pfa > 0.0 && pfa < 1.0))
        throw std::invalid_argument("threshold_from_h0: pfa must lie in (0, 1)");
    const std::vector<double> sorted = sorted_valid(h0_stats);
    if (sorted.empty())
        throw std::invalid_argument("threshold_from_h0: no valid H0 statistics");
    return empirical_quantile(sorted, 1.0 - pfa);
}

double calibrate_threshold(const CampaignConfig& cfg, DetectorKind kind, double pfa) {
    if (!(pfa > 0.0 && pfa < 1.0))
        throw std::invalid_argument("calibrate_threshold: pfa must lie in (0, 1)");
    if (static_cast<double>(cfg.trials) * pfa < 20.0)
        throw std::invalid_argument(
            "calibrate_threshold: trials * pfa must be >= 20 for a stable tail quantile");
    CampaignConfig sub = cfg;
    sub.detectors = {kind};
    const StatisticsRun h0 = run_statistics(sub, Hypothesis::H0);
    return threshold_from_h0(h0.stats[detector_index(kind)], pfa);
}

std::vector<double> default_pfa_grid() {
    std::vector<double> grid = {0.001, 0.002, 0.005};
    for (int k = 1; k <= 50; ++k) grid.push_back(k / 100.0);
    return grid;
}

std::vector<RocCurve> roc_table(const CampaignConfig& cfg,
                                const std::vector<double>& pfa_grid) {
    const std::vector<double>& grid = pfa_grid.empty() ? default_pfa_grid() : pfa_grid;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0 && grid[i] < 1.0))
            throw std::invalid_argument("roc_table: pfa grid values must lie in (0, 1)");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("roc_table: pfa grid must be strictly ascending");
    }

    const StatisticsRun h0 = run_statistics(cfg, Hypothesis::H0);
    const StatisticsRun h1 = run_statistics(cfg, Hypothesis::H1);

    std::vector<RocCurve> table;
    table.reserve(cfg.detectors.size());
    for (DetectorKind kind : cfg.detectors) {
        const int idx = detector_index(kind);
        const std::vector<double> h0_sorted = sorted_valid(h0.stats[idx]);
        const std::vector<double> h1_sorted = sorted_valid(h1.stats[idx]);
        RocCurve curve;
        curve.detector = kind;
        curve.valid_h0 = static_cast<int>(h0_sorted.size());
        curve.valid_h1 = static_cast<int>(h1_sorted.size());
        curve.degenerate_h0 = h0.degenerate[idx];
        curve.degenerate_h1 = h1.degenerate[idx];
        curve.points.reserve(grid.size());
        for (double pfa : grid) {
            const double threshold = empirical_quantile(h0_sorted, 1.0 - pfa);
            curve.points.push_back({pfa, exceedance(h1_sorted, threshold), kind});
        }
        table.push_back(std::move(curve));
    }
    return table;
}

std::vector<RocPoint> roc_curve(const CampaignConfig& cfg, DetectorKind kind,
                                const std::vector<double>& pfa_grid) {
    CampaignConfig sub = cfg;
    sub.detectors = {kind};
    return roc_table(sub, pfa_grid).front().points;
}

std::vector<SweepRow> pmiss_vs_n(const CampaignConfig& cfg,
                                 const std::vector<int>& n_values, double pfa) {
    if (n_values.empty())
        throw std::invalid_argument("pmiss_vs_n: empty list of array sizes");
    for (std::size_t i = 1; i < n_values.size(); ++i)
        if (!(n_values[i] > n_values[i - 1]))
            throw std::invalid_argument("pmiss_vs_n: array sizes must be ascending");
    if (!(pfa > 0.0 && pfa < 1.0))
        throw std::invalid_argument("pmiss_vs_n: pfa must lie in (0, 1)");
    if (static_cast<double>(cfg.trials) * pfa < 20.0)
        throw std::invalid_argument("pmiss_vs_n: trials * pfa must be >= 20");

    std::vector<SweepRow> rows;
    rows.reserve(n_values.size());
    for (int n : n_values) {
        CampaignConfig sub = cfg;
        sub.array.n_antennas = n;
        sub.seed = mix64(cfg.seed ^ mix64(static_cast<std::uint64_t>(n)));

        // N > L makes lambda_min an exact zero, so the statistics that divide
        // by it are skipped outright instead of producing all-NaN runs.
        sub.detectors.clear();
        for (DetectorKind kind : cfg.detectors) {
            const bool needs_full_rank =
                kind == DetectorKind::Glrt || kind == DetectorKind::RMaxMin;
            if (!(needs_full_rank && n > cfg.scenario.n_snapshots))
                sub.detectors.push_back(kind);
        }

        SweepRow row;
        row.n_antennas = n;
        if (!sub.detectors.empty()) {
            const StatisticsRun h0 = run_statistics(sub, Hypothesis::H0);
            const StatisticsRun h1 = run_statistics(sub, Hypothesis::H1);
            for (DetectorKind kind : sub.detectors) {
                const int idx = detector_index(kind);
                const double threshold = threshold_from_h0(h0.stats[idx], pfa);
                const std::vector<double> h1_sorted = sorted_valid(h1.stats[idx]);
                SweepCell cell;
                cell.detector = kind;
                cell.threshold = threshold;
                cell.pmiss = 1.0 - exceedance(h1_sorted, threshold);
                cell.trials_used = static_cast<int>(h1_sorted.size());
                row.cells.push_back(cell);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace emdet

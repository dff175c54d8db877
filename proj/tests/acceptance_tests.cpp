// End-to-end acceptance gate. Nine numbered checks, one [PASS]/[FAIL] line
// each; the process exits nonzero if any check fails. Campaign sizes follow
// the documented defaults and can be scaled through EMDET_ACCEPT_* variables
// for quick smoke runs.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "emdet/array_signal.hpp"
#include "emdet/covariance_eig.hpp"
#include "emdet/detectors.hpp"
#include "emdet/montecarlo.hpp"
#include "emdet/rmt.hpp"
#include "emdet/rng.hpp"
#include "test_support.hpp"

using namespace emdet;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("[%s] %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    return v ? std::atoi(v) : fallback;
}

std::string fmt(double v, int digits = 4) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.1e", v);
    return buf;
}

std::vector<double> sorted_valid(const std::vector<double>& stats) {
    std::vector<double> v;
    v.reserve(stats.size());
    for (double x : stats)
        if (!std::isnan(x)) v.push_back(x);
    std::sort(v.begin(), v.end());
    return v;
}

// fraction of the (ascending) sample strictly above the threshold
double exceed(const std::vector<double>& sorted, double threshold) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), threshold);
    return static_cast<double>(sorted.end() - it) / static_cast<double>(sorted.size());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_shell(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return status == -1 ? -1 : WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::string bytes;
    if (FILE* f = std::fopen(path.c_str(), "rb")) {
        char buf[65536];
        std::size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) bytes.append(buf, got);
        std::fclose(f);
    }
    return bytes;
}

constexpr int kGlrt = 0, kRmm = 1, kRnv = 2, kMmm = 3;
const char* kNames[4] = {"glrt", "r-max-min", "r-max-nv", "m-max-min"};

}  // namespace

int main() {
    const int trials = env_int("EMDET_ACCEPT_TRIALS", 10000);
    const int sweep_trials = env_int("EMDET_ACCEPT_SWEEP_TRIALS", 3000);
    const int big_sweep_trials = env_int("EMDET_ACCEPT_BIG_SWEEP_TRIALS", 600);
    const int analytic_trials = env_int("EMDET_ACCEPT_ANALYTIC_TRIALS", 6000);
    const int threads = env_int("EMDET_ACCEPT_THREADS", 0);
    const std::uint64_t seed = 20260823;

    CampaignConfig headline;
    headline.array.n_antennas = 64;
    headline.scenario.n_snapshots = 200;
    headline.scenario.snr_db = -18.0;
    headline.scenario.theta_rad = std::numbers::pi / 6;
    headline.trials = trials;
    headline.seed = seed;
    headline.threads = threads;

    // ---- 1 & 2: ROC reproduction at the headline operating point ----------
    const auto t_roc = std::chrono::steady_clock::now();
    const StatisticsRun h0 = run_statistics(headline, Hypothesis::H0);
    const StatisticsRun h1 = run_statistics(headline, Hypothesis::H1);
    std::array<std::vector<double>, 4> h0s, h1s;
    for (int d = 0; d < 4; ++d) {
        h0s[d] = sorted_valid(h0.stats[d]);
        h1s[d] = sorted_valid(h1.stats[d]);
    }
    const std::vector<double> roc_pfas{0.05, 0.1, 0.2, 0.3};
    double pd[4][4];
    for (int d = 0; d < 4; ++d)
        for (std::size_t i = 0; i < roc_pfas.size(); ++i)
            pd[d][i] = exceed(h1s[d], empirical_quantile(h0s[d], 1.0 - roc_pfas[i]));
    const double roc_elapsed = seconds_since(t_roc);

    {
        bool ok = roc_elapsed <= 300.0;
        double worst_gap = 0.0, min_lead = 1.0;
        for (std::size_t i = 0; i < roc_pfas.size(); ++i) {
            const double gap = std::abs(pd[kMmm][i] - pd[kRnv][i]);
            worst_gap = std::max(worst_gap, gap);
            min_lead = std::min({min_lead, pd[kMmm][i] - pd[kGlrt][i],
                                 pd[kRnv][i] - pd[kGlrt][i]});
            ok = ok && gap <= 0.03 && pd[kMmm][i] >= pd[kGlrt][i] + 0.02 &&
                 pd[kRnv][i] >= pd[kGlrt][i] + 0.02;
        }
        report(1, ok,
               "ROC agreement and lead over the GLRT at Pfa {0.05,0.1,0.2,0.3}: "
               "Pd@0.1 glrt=" + fmt(pd[kGlrt][1]) + " r-max-nv=" + fmt(pd[kRnv][1]) +
               " m-max-min=" + fmt(pd[kMmm][1]) + "; max |m-max-min - r-max-nv| = " +
               fmt(worst_gap) + " (cap 0.03); min lead over glrt = +" + fmt(min_lead) +
               " (floor 0.02); " + std::to_string(trials) + " trials/hypothesis in " +
               fmt(roc_elapsed, 1) + " s (cap 300 s)");
    }

    {
        bool ok = true;
        double min_margin = 1.0;
        for (std::size_t i = 0; i < roc_pfas.size(); ++i) {
            const double margin = pd[kRmm][i] - pd[kGlrt][i];
            min_margin = std::min(min_margin, margin);
            ok = ok && margin >= -0.02;
        }
        report(2, ok,
               "max/min-ratio detector Pd stays within 0.02 of the GLRT: min margin " +
               fmt(min_margin) + " at Pfa grid {0.05,0.1,0.2,0.3}, Pd@0.1 r-max-min=" +
               fmt(pd[kRmm][1]));
    }

    // ---- 3: false-dismissal sweep over array sizes -------------------------
    {
        CampaignConfig sweep = headline;
        sweep.scenario.snr_db = -20.0;
        sweep.trials = sweep_trials;
        const std::vector<SweepRow> small =
            pmiss_vs_n(sweep, {2, 4, 8, 16, 32, 64, 128}, 0.1);
        sweep.trials = big_sweep_trials;
        const std::vector<SweepRow> big = pmiss_vs_n(sweep, {256, 512}, 0.1);

        std::array<std::vector<std::pair<int, std::pair<double, int>>>, 4> series;
        auto collect = [&series](const std::vector<SweepRow>& rows) {
            for (const SweepRow& row : rows)
                for (const SweepCell& cell : row.cells)
                    series[detector_index(cell.detector)].push_back(
                        {row.n_antennas, {cell.pmiss, cell.trials_used}});
        };
        collect(small);
        collect(big);

        bool ok = true;
        std::string worst = "none";
        double worst_excess = -1.0;
        for (int d = 0; d < 4; ++d) {
            for (std::size_t i = 1; i < series[d].size(); ++i) {
                const auto& [n_prev, prev] = series[d][i - 1];
                const auto& [n_next, next] = series[d][i];
                const double tol =
                    3.0 * test::pooled_se(prev.first, prev.second, next.first, next.second);
                const double excess = next.first - prev.first - tol;
                if (excess > worst_excess) {
                    worst_excess = excess;
                    worst = std::string(kNames[d]) + " " + std::to_string(n_prev) + "->" +
                            std::to_string(n_next) + " step " +
                            fmt(next.first - prev.first) + " tol " + fmt(tol);
                }
                if (excess > 0.0) ok = false;
            }
        }

        // detector ordering at N = 64 (sixth row of the small sweep)
        const SweepRow& at64 = small[5];
        double p64[4] = {0, 0, 0, 0};
        int t64[4] = {1, 1, 1, 1};
        for (const SweepCell& cell : at64.cells) {
            p64[detector_index(cell.detector)] = cell.pmiss;
            t64[detector_index(cell.detector)] = cell.trials_used;
        }
        auto ordered = [&](int hi, int lo) {
            return p64[hi] >= p64[lo] - 3.0 * test::pooled_se(p64[hi], t64[hi], p64[lo], t64[lo]);
        };
        ok = ok && ordered(kGlrt, kRmm) && ordered(kRmm, kRnv) && ordered(kGlrt, kMmm);

        report(3, ok,
               "false-dismissal sweep N=2..512 nonincreasing within 3 SE (worst step: " +
               worst + "); ordering at N=64: glrt=" + fmt(p64[kGlrt]) +
               " >= r-max-min=" + fmt(p64[kRmm]) + " >= r-max-nv=" + fmt(p64[kRnv]) +
               ", glrt >= m-max-min=" + fmt(p64[kMmm]));
    }

    // ---- 4: calibrated thresholds hold their false-alarm targets -----------
    CampaignConfig fresh = headline;
    fresh.seed = seed + 5000;
    const StatisticsRun h0_fresh = run_statistics(fresh, Hypothesis::H0);
    {
        std::array<std::vector<double>, 4> fresh_sorted;
        for (int d = 0; d < 4; ++d) fresh_sorted[d] = sorted_valid(h0_fresh.stats[d]);

        const std::vector<double> targets{0.01, 0.05, 0.1, 0.3};
        bool ok = true;
        std::string worst = "none";
        double worst_ratio = -1.0;
        for (int d = 0; d < 4; ++d)
            for (double target : targets) {
                const double thr = empirical_quantile(h0s[d], 1.0 - target);
                const double measured = exceed(fresh_sorted[d], thr);
                const double tol = 3.0 * std::sqrt(target * (1.0 - target) / trials);
                const double ratio = std::abs(measured - target) / tol;
                if (ratio > worst_ratio) {
                    worst_ratio = ratio;
                    worst = std::string(kNames[d]) + "@" + fmt(target, 2) +
                            " measured " + fmt(measured) + " (tol " + fmt(tol) + ")";
                }
                if (ratio > 1.0) ok = false;
            }
        report(4, ok,
               "fresh-noise false-alarm rates match calibration targets "
               "{0.01,0.05,0.1,0.3} for all four detectors within 3 binomial SE; "
               "worst cell: " + worst);
    }

    // ---- 5: analytic threshold sanity for the noise-variance ratio ---------
    {
        ArrayConfig array = headline.array;
        ScenarioConfig scenario = headline.scenario;
        scenario.hypothesis = Hypothesis::H0;
        ThresholdPolicy def;     // order-2 quantile and constants
        ThresholdPolicy order1;  // full order-1 (real-data) convention
        order1.tw_order = 1;
        order1.constants_order = 1;
        int fires_def = 0, fires_o1 = 0;
        for (int t = 0; t < analytic_trials; ++t) {
            const SnapshotMatrix y = synth_snapshots(scenario, array, seed + 2000, t);
            const EigenSpectrum spec = snapshot_spectrum(y);
            fires_def += decide(DetectorKind::RMaxNv, spec, 0.1, def).emitter_present;
            fires_o1 += decide(DetectorKind::RMaxNv, spec, 0.1, order1).emitter_present;
        }
        const double measured = static_cast<double>(fires_def) / analytic_trials;
        const double measured_o1 = static_cast<double>(fires_o1) / analytic_trials;
        const bool ok = measured >= 0.05 && measured <= 0.2;
        report(5, ok,
               "analytic r-max-nv threshold at target Pfa 0.1 measures Pfa = " +
               fmt(measured) + " on " + std::to_string(analytic_trials) +
               " fresh noise trials (window [0.05, 0.2]); order-1 policy variant "
               "measures " + fmt(measured_o1) + " (recorded, not gated)");
    }

    // ---- 6: numerical identities of the spectrum pipeline ------------------
    {
        bool amgm_ok = true;
        RngStream rng(7001, 0);
        for (int t = 0; t < 100000 && amgm_ok; ++t) {
            const int n = 2 + static_cast<int>(rng.uniform01() * 14.0);
            std::vector<double> vals(n);
            double lo = 1e300, hi = 0.0;
            for (double& v : vals) {
                v = 0.05 + 4.0 * rng.uniform01();
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            const double t1 = glrt_statistic(EigenSpectrum::from_values(vals, 100));
            amgm_ok = amgm_ok && t1 >= 1.0 - 1e-12;
            if (hi / lo > 1.01) amgm_ok = amgm_ok && t1 > 1.0 + 1e-13;
        }
        const double flat =
            glrt_statistic(EigenSpectrum::from_values(std::vector<double>(12, 0.37), 100));
        amgm_ok = amgm_ok && std::abs(flat - 1.0) <= 1e-12;

        bool trace_ok = true;
        std::string trace_worst;
        double trace_worst_rel = -1.0;
        for (int n : {2, 16, 64, 256, 512}) {
            ArrayConfig array;
            array.n_antennas = n;
            ScenarioConfig scenario;
            scenario.n_snapshots = 200;
            scenario.hypothesis = Hypothesis::H0;
            const SnapshotMatrix y = synth_snapshots(scenario, array, 7002, n);
            const EigenSpectrum spec = snapshot_spectrum(y);
            const double frob = y.cwiseAbs2().sum() / 200.0;  // trace computed sideways
            const double rel = std::abs(spec.values.sum() - frob) / frob;
            if (rel > trace_worst_rel) {
                trace_worst_rel = rel;
                trace_worst = "N=" + std::to_string(n) + " rel " + sci(rel);
            }
            trace_ok = trace_ok && rel <= 1e-10;
        }

        bool oracle_ok = true;
        for (int n = 2; n <= 8; ++n) {
            ArrayConfig array;
            array.n_antennas = n;
            ScenarioConfig scenario;
            scenario.n_snapshots = 3 * n;
            scenario.hypothesis = Hypothesis::H0;
            const SnapshotMatrix y = synth_snapshots(scenario, array, 7003, n);
            const HermitianMatrix r = sample_covariance(y);
            const double via_spec = glrt_statistic(snapshot_spectrum(y));
            const double via_matrix =
                (r.trace().real() / n) / std::pow(std::abs(r.determinant()), 1.0 / n);
            oracle_ok =
                oracle_ok && std::abs(via_spec - via_matrix) <= 1e-8 * std::abs(via_matrix);
        }

        report(6, amgm_ok && trace_ok && oracle_ok,
               std::string("numerical identities: AM>=GM over 1e5 random spectra ") +
                   (amgm_ok ? "held" : "VIOLATED") +
                   "; eigenvalue sum matches the independent trace up to N=512 (worst " +
                   trace_worst + ", cap 1e-10); sphericity statistic " +
                   (oracle_ok ? "matches" : "MISSES") +
                   " the trace/determinant oracle for N<=8 within 1e-8");
    }

    // ---- 7: random-matrix support: edges, quantile round-trip, bulk --------
    {
        bool edges_ok = true;
        for (auto [n, l] : std::vector<std::pair<int, int>>{
                 {2, 2}, {2, 200}, {8, 64}, {64, 200}, {64, 6400}, {128, 200}, {512, 512}}) {
            const MpEdges e = mp_edges(n, l);
            const double lhs = static_cast<double>(l - n) / l;
            edges_ok = edges_ok && std::abs(e.a * e.b - lhs * lhs) <= 1e-12 &&
                       std::abs((e.b - e.a) -
                                4.0 * std::sqrt(static_cast<double>(n) * l) / l) <= 1e-12;
        }

        bool round_ok = true;
        double round_worst = 0.0;
        for (int order : {1, 2})
            for (double p = 0.01; p <= 0.9901; p += 0.005) {
                const double err = std::abs(tw_cdf(tw_quantile(p, order), order) - p);
                round_worst = std::max(round_worst, err);
                round_ok = round_ok && err <= 1e-3;
            }

        const int bulk_trials = 200;
        const MpEdges bulk_edges = mp_edges(64, 6400);
        ArrayConfig array;
        array.n_antennas = 64;
        ScenarioConfig scenario;
        scenario.n_snapshots = 6400;
        scenario.hypothesis = Hypothesis::H0;
        long escapees = 0, total = 0;
        for (int t = 0; t < bulk_trials; ++t) {
            const EigenSpectrum spec =
                snapshot_spectrum(synth_snapshots(scenario, array, 7007, t));
            for (int i = 0; i < spec.n; ++i) {
                total += 1;
                if (spec.values(i) < bulk_edges.a || spec.values(i) > bulk_edges.b)
                    escapees += 1;
            }
        }
        const double escape_rate = static_cast<double>(escapees) / total;
        const bool bulk_ok = escape_rate <= 0.01;

        report(7, edges_ok && round_ok && bulk_ok,
               "bulk-edge identities within 1e-12; Tracy-Widom quantile round-trip "
               "worst |F(F^-1(p)) - p| = " + sci(round_worst) + " (cap 1e-3) "
               "over p in [0.01,0.99]; eigenvalues outside the N=64, L=6400 bulk: " +
               fmt(100.0 * escape_rate, 3) + "% of " + std::to_string(total) +
               " (cap 1%)");
    }

    // ---- 8: byte-identical campaign output across thread counts ------------
    {
        const std::string cli = EMDET_CLI_PATH;
        const std::string roc_cmd =
            cli + " roc --n 64 --snapshots 200 --snr-db -18 --theta-deg 30"
                  " --trials 1000 --seed " + std::to_string(seed) +
                  " --pfa-grid 0.05,0.1,0.2,0.3 ";
        const std::string pmiss_cmd =
            cli + " pmiss --n-list 8,16 --snapshots 200 --snr-db -20 --theta-deg 30"
                  " --trials 400 --pfa 0.1 --seed " + std::to_string(seed) + " ";
        const int rc1 = run_shell(roc_cmd + "--threads 1 --out accept_roc_t1.csv");
        const int rc2 = run_shell(roc_cmd + "--threads 4 --out accept_roc_t4.csv");
        const int rc3 = run_shell(pmiss_cmd + "--threads 2 --out accept_pmiss_t2.csv");
        const int rc4 = run_shell(pmiss_cmd + "--threads 5 --out accept_pmiss_t5.csv");
        const std::string roc_a = slurp("accept_roc_t1.csv");
        const std::string roc_b = slurp("accept_roc_t4.csv");
        const std::string pm_a = slurp("accept_pmiss_t2.csv");
        const std::string pm_b = slurp("accept_pmiss_t5.csv");
        const bool ok = rc1 == 0 && rc2 == 0 && rc3 == 0 && rc4 == 0 &&
                        !roc_a.empty() && roc_a == roc_b && !pm_a.empty() && pm_a == pm_b;
        for (const char* f : {"accept_roc_t1.csv", "accept_roc_t4.csv",
                              "accept_pmiss_t2.csv", "accept_pmiss_t5.csv"})
            std::remove(f);
        report(8, ok,
               "CLI campaigns re-run with the same seed are byte-identical across "
               "thread counts (roc with 1 vs 4 workers: " +
               std::to_string(roc_a.size()) + " bytes; pmiss with 2 vs 5 workers: " +
               std::to_string(pm_a.size()) + " bytes)");
    }

    // ---- 9: per-trial cost scales with the covariance + EVD flop count -----
    {
        auto timed_run = [](int n, int reps) {
            ArrayConfig array;
            array.n_antennas = n;
            ScenarioConfig scenario;
            scenario.n_snapshots = 200;
            scenario.hypothesis = Hypothesis::H0;
            std::vector<SnapshotMatrix> batch;
            batch.reserve(reps);
            for (int t = 0; t < reps; ++t)
                batch.push_back(synth_snapshots(scenario, array, 7009, t));
            // warm-up pass, then the timed detection pipeline
            for (int t = 0; t < std::min(reps, 10); ++t)
                (void)snapshot_spectrum(batch[t]);
            volatile double sink = 0.0;  // keeps the statistic calls observable
            const auto t0 = std::chrono::steady_clock::now();
            for (const SnapshotMatrix& y : batch) {
                const EigenSpectrum spec = snapshot_spectrum(y);
                sink = sink + glrt_statistic(spec) + ratio_max_min(spec) +
                       ratio_max_nv(spec) + mean_max_min(spec);
            }
            const double dt = seconds_since(t0);
            return dt / reps;
        };
        const int reps = env_int("EMDET_ACCEPT_TIMING_REPS", 150);
        const double per64 = timed_run(64, reps);
        const double per128 = timed_run(128, reps);
        const double ratio = per128 / per64;
        const bool ok = ratio >= 3.0 && ratio <= 10.0;
        report(9, ok,
               "detection pipeline cost per trial at L=200: N=64 " +
               fmt(per64 * 1e3, 3) + " ms, N=128 " + fmt(per128 * 1e3, 3) +
               " ms, ratio " + fmt(ratio, 2) + " (window [3, 10])");
    }

    if (g_failures == 0) {
        std::printf("all 9 acceptance checks passed\n");
        return 0;
    }
    std::printf("%d acceptance check(s) failed\n", g_failures);
    return 1;
}

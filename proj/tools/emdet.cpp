// emdet: eigenvalue detectors for passive emitter sensing on large uniform
// linear arrays. Subcommands cover snapshot synthesis, single-file detection,
// Monte Carlo ROC / false-dismissal campaigns, empirical threshold
// calibration and Tracy-Widom table export.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emdet/covariance_eig.hpp"
#include "emdet/csv.hpp"
#include "emdet/detectors.hpp"
#include "emdet/montecarlo.hpp"
#include "emdet/rmt.hpp"
#include "emdet/snapshot_io.hpp"
#include "emdet/svg.hpp"

namespace {

using namespace emdet;

constexpr std::uint64_t kH1Stream = std::uint64_t{1} << 32;

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

std::vector<DetectorKind> expand_detectors(const std::vector<std::string>& names) {
    std::vector<DetectorKind> kinds;
    for (const auto& name : names) {
        if (name == "all") {
            kinds.assign(kAllDetectors.begin(), kAllDetectors.end());
            return kinds;
        }
        auto kind = parse_detector(name);
        if (!kind) throw CLI::ValidationError("--detector", "unknown detector '" + name + "'");
        if (std::find(kinds.begin(), kinds.end(), *kind) == kinds.end())
            kinds.push_back(*kind);
    }
    return kinds;
}

// Data goes to --out when given, to stdout otherwise. Diagnostics always go
// to stderr, so piped output stays machine-readable.
void emit_csv(const CsvTable& table, const std::string& out_path) {
    if (out_path.empty())
        std::cout << csv_to_string(table);
    else
        csv_write_file(out_path, table);
}

void maybe_plot(const std::string& svg_path, const std::vector<SvgSeries>& series,
                const SvgPlotOptions& options) {
    if (!svg_path.empty()) write_line_plot(svg_path, series, options);
}

// Shared flag bundle for campaign-style subcommands.
struct CampaignFlags {
    int n = 64;
    int snapshots = 200;
    double snr_db = -18.0;
    double theta_deg = 30.0;
    double spacing = 0.5;
    std::string signal = "gaussian";
    std::uint64_t seed = 1;
    int trials = 10000;
    int threads = 0;
    std::vector<std::string> detectors{"all"};

    void attach(CLI::App* cmd, bool with_scenario = true) {
        cmd->add_option("--n", n, "antennas in the array");
        cmd->add_option("--snapshots", snapshots, "snapshots per trial");
        if (with_scenario) {
            cmd->add_option("--snr-db", snr_db, "emitter SNR in dB");
            cmd->add_option("--theta-deg", theta_deg, "emitter direction in degrees");
            cmd->add_option("--signal", signal, "emitter symbols: gaussian | qpsk")
                ->check(CLI::IsMember({"gaussian", "qpsk"}));
        }
        cmd->add_option("--spacing", spacing, "element spacing in wavelengths");
        cmd->add_option("--seed", seed, "campaign seed");
        cmd->add_option("--trials", trials, "Monte Carlo trials per hypothesis");
        cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
        cmd->add_option("--detector", detectors, "detector name or 'all'")
            ->delimiter(',');
    }

    CampaignConfig config() const {
        CampaignConfig cfg;
        cfg.array.n_antennas = n;
        cfg.array.spacing_wavelengths = spacing;
        cfg.scenario.snr_db = snr_db;
        cfg.scenario.theta_rad = deg_to_rad(theta_deg);
        cfg.scenario.n_snapshots = snapshots;
        cfg.scenario.signal =
            signal == "qpsk" ? SignalModel::ConstantModulus : SignalModel::Gaussian;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.threads = threads;
        cfg.detectors = expand_detectors(detectors);
        cfg.validate();
        return cfg;
    }
};

int cmd_synth(int n, int snapshots, double snr_db, double theta_deg, double spacing,
              const std::string& signal, const std::string& hypothesis,
              std::uint64_t seed, std::uint64_t stream, const std::string& out) {
    ArrayConfig array;
    array.n_antennas = n;
    array.spacing_wavelengths = spacing;
    ScenarioConfig scenario;
    scenario.snr_db = snr_db;
    scenario.theta_rad = deg_to_rad(theta_deg);
    scenario.n_snapshots = snapshots;
    scenario.hypothesis = hypothesis == "h1" ? Hypothesis::H1 : Hypothesis::H0;
    scenario.signal = signal == "qpsk" ? SignalModel::ConstantModulus : SignalModel::Gaussian;
    array.validate();
    scenario.validate();

    // Mirrors the campaign stream layout: H0 trial t is stream t, H1 trial t
    // is stream 2^32 + t, so a synth file reproduces a campaign trial.
    const std::uint64_t stream_id =
        (scenario.hypothesis == Hypothesis::H1 ? kH1Stream : 0) + stream;
    const SnapshotMatrix y = synth_snapshots(scenario, array, seed, stream_id);
    write_snapshots(out, y);
    const std::uint64_t bytes = 16 + 16ull * n * snapshots;
    std::cout << "n=" << n << " snapshots=" << snapshots << " hypothesis=" << hypothesis
              << " seed=" << seed << " stream=" << stream << " bytes=" << bytes
              << " out=" << out << "\n";
    return 0;
}

// Calibration CSV rows are (detector, pfa, threshold) as written by the
// calibrate subcommand.
std::optional<double> lookup_threshold(const CsvTable& table, DetectorKind kind,
                                       double pfa) {
    for (std::size_t i = 1; i < table.size(); ++i) {
        const auto& row = table[i];
        if (row.size() < 3) continue;
        if (row[0] != detector_name(kind)) continue;
        if (std::abs(std::stod(row[1]) - pfa) > 1e-12) continue;
        return std::stod(row[2]);
    }
    return std::nullopt;
}

int cmd_detect(const std::string& input, const std::vector<std::string>& detector_names,
               double pfa, const std::string& policy_name, const std::string& calibration,
               int tw_order, int constants_order, bool as_written,
               const std::string& format, const std::string& out) {
    const SnapshotMatrix y = read_snapshots(input);
    const EigenSpectrum spec = snapshot_spectrum(y);

    ThresholdPolicy policy;
    policy.mode = policy_name == "empirical" ? ThresholdMode::EmpiricalCalibration
                                             : ThresholdMode::Analytic;
    policy.tw_order = tw_order;
    policy.constants_order = constants_order;
    policy.as_written = as_written;

    CsvTable calib;
    if (policy.mode == ThresholdMode::EmpiricalCalibration) {
        if (calibration.empty())
            throw std::runtime_error("empirical policy needs --calibration <csv>");
        calib = csv_read_file(calibration);
    }

    CsvTable table;
    table.push_back({"detector", "statistic", "threshold", "decision"});
    int failures = 0;
    for (DetectorKind kind : expand_detectors(detector_names)) {
        try {
            std::optional<double> calibrated;
            if (policy.mode == ThresholdMode::EmpiricalCalibration) {
                calibrated = lookup_threshold(calib, kind, pfa);
                if (!calibrated)
                    throw std::runtime_error("no calibration row for detector '" +
                                             std::string(detector_name(kind)) + "' at pfa " +
                                             format_double(pfa));
            }
            const Decision d = decide(kind, spec, pfa, policy, calibrated);
            table.push_back({std::string(detector_name(kind)), format_double(d.statistic),
                             format_double(d.threshold),
                             d.emitter_present ? "present" : "absent"});
        } catch (const std::exception& e) {
            std::cerr << "error: " << detector_name(kind) << ": " << e.what() << "\n";
            ++failures;
        }
    }

    if (format == "csv") {
        emit_csv(table, out);
    } else {
        std::string text;
        for (std::size_t i = 1; i < table.size(); ++i)
            text += table[i][0] + " statistic=" + table[i][1] +
                    " threshold=" + table[i][2] + " decision=" + table[i][3] + "\n";
        if (out.empty()) {
            std::cout << text;
        } else {
            CsvTable lines;  // reuse the LF writer for the text rendering
            for (std::size_t i = 1; i < table.size(); ++i)
                lines.push_back({table[i][0] + " statistic=" + table[i][1] +
                                 " threshold=" + table[i][2] + " decision=" + table[i][3]});
            emit_csv(lines, out);
        }
    }
    return failures == 0 ? 0 : 1;
}

int cmd_roc(const CampaignFlags& flags, const std::vector<double>& pfa_grid,
            const std::string& out, const std::string& svg) {
    const CampaignConfig cfg = flags.config();
    const std::vector<RocCurve> curves = roc_table(cfg, pfa_grid);

    CsvTable table;
    table.push_back({"detector", "pfa", "pd"});
    std::vector<SvgSeries> series;
    for (const auto& curve : curves) {
        SvgSeries s;
        s.label = detector_name(curve.detector);
        for (const auto& p : curve.points) {
            table.push_back({std::string(detector_name(p.detector)), format_double(p.pfa),
                             format_double(p.pd)});
            s.x.push_back(p.pfa);
            s.y.push_back(p.pd);
        }
        series.push_back(std::move(s));
    }
    emit_csv(table, out);

    SvgPlotOptions options;
    options.title = "ROC, N=" + std::to_string(cfg.array.n_antennas) + " L=" +
                    std::to_string(cfg.scenario.n_snapshots) + " SNR=" +
                    std::to_string(cfg.scenario.snr_db).substr(0, 6) + " dB";
    options.x_label = "false alarm probability";
    options.y_label = "detection probability";
    maybe_plot(svg, series, options);
    return 0;
}

int cmd_pmiss(const CampaignFlags& flags, const std::vector<int>& n_list, double pfa,
              const std::string& out, const std::string& svg) {
    CampaignConfig cfg = flags.config();
    const std::vector<SweepRow> rows = pmiss_vs_n(cfg, n_list, pfa);

    CsvTable table;
    table.push_back({"n", "detector", "pmiss", "trials_used"});
    std::vector<SvgSeries> series(cfg.detectors.size());
    for (std::size_t i = 0; i < cfg.detectors.size(); ++i)
        series[i].label = detector_name(cfg.detectors[i]);
    for (const auto& row : rows) {
        for (const auto& cell : row.cells) {
            table.push_back({std::to_string(row.n_antennas),
                             std::string(detector_name(cell.detector)),
                             format_double(cell.pmiss), std::to_string(cell.trials_used)});
            for (std::size_t i = 0; i < cfg.detectors.size(); ++i) {
                if (cfg.detectors[i] != cell.detector) continue;
                series[i].x.push_back(row.n_antennas);
                series[i].y.push_back(cell.pmiss);
            }
        }
    }
    emit_csv(table, out);

    SvgPlotOptions options;
    options.title = "False dismissal vs array size, Pfa=" + format_double(pfa);
    options.x_label = "antennas";
    options.y_label = "false dismissal probability";
    options.log_x = true;
    maybe_plot(svg, series, options);
    return 0;
}

int cmd_calibrate(const CampaignFlags& flags, const std::vector<double>& pfas,
                  const std::string& out) {
    CampaignConfig cfg = flags.config();
    cfg.scenario.hypothesis = Hypothesis::H0;
    const StatisticsRun h0 = run_statistics(cfg, Hypothesis::H0);

    CsvTable table;
    table.push_back({"detector", "pfa", "threshold"});
    for (DetectorKind kind : cfg.detectors) {
        const auto& stats = h0.stats[detector_index(kind)];
        std::vector<double> clean;
        clean.reserve(stats.size());
        for (double v : stats)
            if (!std::isnan(v)) clean.push_back(v);
        if (clean.empty()) {
            std::cerr << "error: " << detector_name(kind)
                      << ": every trial degenerate; cannot calibrate\n";
            return 1;
        }
        for (double pfa : pfas)
            table.push_back({std::string(detector_name(kind)), format_double(pfa),
                             format_double(threshold_from_h0(stats, pfa))});
    }
    emit_csv(table, out);
    return 0;
}

int cmd_tw_table(int order, const std::string& out, const std::string& svg) {
    const TwTable& table = resolve_tw_table(order);
    CsvTable rows;
    rows.push_back({"t", "cdf"});
    for (std::size_t i = 0; i < table.grid().size(); ++i)
        rows.push_back({format_double(table.grid()[i]), format_double(table.cdf_values()[i])});
    emit_csv(rows, out);

    SvgSeries s;
    s.label = "TW" + std::to_string(order);
    s.x = table.grid();
    s.y = table.cdf_values();
    SvgPlotOptions options;
    options.title = "Tracy-Widom order " + std::to_string(order) + " CDF";
    options.x_label = "t";
    options.y_label = "F(t)";
    maybe_plot(svg, {s}, options);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigenvalue detectors for passive emitters on large antenna arrays"};
    app.require_subcommand(1);

    int rc = 0;
    auto run = [&rc](auto&& fn) {
        return [&rc, fn]() {
            try {
                rc = fn();
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                rc = 1;
            }
        };
    };

    // synth
    {
        auto* cmd = app.add_subcommand("synth", "draw snapshots and write an EMSNAP01 file");
        auto n = std::make_shared<int>(64);
        auto snapshots = std::make_shared<int>(200);
        auto snr_db = std::make_shared<double>(-18.0);
        auto theta_deg = std::make_shared<double>(30.0);
        auto spacing = std::make_shared<double>(0.5);
        auto signal = std::make_shared<std::string>("gaussian");
        auto hypothesis = std::make_shared<std::string>("h0");
        auto seed = std::make_shared<std::uint64_t>(1);
        auto stream = std::make_shared<std::uint64_t>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--n", *n, "antennas in the array");
        cmd->add_option("--snapshots", *snapshots, "snapshots (columns)");
        cmd->add_option("--snr-db", *snr_db, "emitter SNR in dB");
        cmd->add_option("--theta-deg", *theta_deg, "emitter direction in degrees");
        cmd->add_option("--spacing", *spacing, "element spacing in wavelengths");
        cmd->add_option("--signal", *signal, "emitter symbols: gaussian | qpsk")
            ->check(CLI::IsMember({"gaussian", "qpsk"}));
        cmd->add_option("--hypothesis", *hypothesis, "h0 (noise only) or h1 (emitter)")
            ->check(CLI::IsMember({"h0", "h1"}));
        cmd->add_option("--seed", *seed, "RNG seed");
        cmd->add_option("--stream", *stream, "RNG stream within the seed");
        cmd->add_option("--out", *out, "output snapshot file")->required();
        cmd->callback(run([=]() {
            return cmd_synth(*n, *snapshots, *snr_db, *theta_deg, *spacing, *signal,
                             *hypothesis, *seed, *stream, *out);
        }));
    }

    // detect
    {
        auto* cmd = app.add_subcommand("detect", "run detectors on a snapshot file");
        auto input = std::make_shared<std::string>();
        auto detectors = std::make_shared<std::vector<std::string>>(
            std::vector<std::string>{"all"});
        auto pfa = std::make_shared<double>(0.1);
        auto policy = std::make_shared<std::string>("analytic");
        auto calibration = std::make_shared<std::string>();
        auto tw_order = std::make_shared<int>(2);
        auto constants_order = std::make_shared<int>(2);
        auto as_written = std::make_shared<bool>(false);
        auto format = std::make_shared<std::string>("text");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--input", *input, "EMSNAP01 snapshot file")->required();
        cmd->add_option("--detector", *detectors, "detector name or 'all'")->delimiter(',');
        cmd->add_option("--pfa", *pfa, "false alarm target");
        cmd->add_option("--policy", *policy, "threshold policy: analytic | empirical")
            ->check(CLI::IsMember({"analytic", "empirical"}));
        cmd->add_option("--calibration", *calibration,
                        "calibration CSV (detector,pfa,threshold) for the empirical policy");
        cmd->add_option("--tw-order", *tw_order, "Tracy-Widom order for the quantile")
            ->check(CLI::IsMember({1, 2}));
        cmd->add_option("--constants-order", *constants_order,
                        "centering/scaling convention order")
            ->check(CLI::IsMember({1, 2}));
        cmd->add_flag("--as-written", *as_written,
                      "use the data-dependent published max/min-ratio threshold");
        cmd->add_option("--format", *format, "text | csv")
            ->check(CLI::IsMember({"text", "csv"}));
        cmd->add_option("--out", *out, "write the report here instead of stdout");
        cmd->callback(run([=]() {
            return cmd_detect(*input, *detectors, *pfa, *policy, *calibration, *tw_order,
                              *constants_order, *as_written, *format, *out);
        }));
    }

    // roc
    {
        auto* cmd = app.add_subcommand("roc", "Monte Carlo ROC table over a Pfa grid");
        auto flags = std::make_shared<CampaignFlags>();
        auto pfa_grid = std::make_shared<std::vector<double>>();
        auto out = std::make_shared<std::string>();
        auto svg = std::make_shared<std::string>();
        flags->attach(cmd);
        cmd->add_option("--pfa-grid", *pfa_grid, "comma-separated Pfa values")
            ->delimiter(',');
        cmd->add_option("--out", *out, "CSV output path (stdout when omitted)");
        cmd->add_option("--svg", *svg, "also write an SVG plot here");
        cmd->callback(run([=]() { return cmd_roc(*flags, *pfa_grid, *out, *svg); }));
    }

    // pmiss
    {
        auto* cmd = app.add_subcommand(
            "pmiss", "false-dismissal probability swept over array sizes");
        auto flags = std::make_shared<CampaignFlags>();
        flags->snr_db = -20.0;
        auto n_list = std::make_shared<std::vector<int>>(
            std::vector<int>{2, 4, 8, 16, 32, 64, 128});
        auto pfa = std::make_shared<double>(0.1);
        auto out = std::make_shared<std::string>();
        auto svg = std::make_shared<std::string>();
        flags->attach(cmd);
        cmd->get_option("--n")->description("ignored; use --n-list");
        cmd->add_option("--n-list", *n_list, "comma-separated antenna counts")
            ->delimiter(',');
        cmd->add_option("--pfa", *pfa, "false alarm target for calibration");
        cmd->add_option("--out", *out, "CSV output path (stdout when omitted)");
        cmd->add_option("--svg", *svg, "also write an SVG plot here");
        cmd->callback(run([=]() { return cmd_pmiss(*flags, *n_list, *pfa, *out, *svg); }));
    }

    // calibrate
    {
        auto* cmd = app.add_subcommand(
            "calibrate", "empirical H0 thresholds for a set of Pfa targets");
        auto flags = std::make_shared<CampaignFlags>();
        auto pfas = std::make_shared<std::vector<double>>(
            std::vector<double>{0.01, 0.05, 0.1, 0.3});
        auto out = std::make_shared<std::string>();
        flags->attach(cmd, /*with_scenario=*/false);
        cmd->add_option("--pfa", *pfas, "comma-separated Pfa targets")->delimiter(',');
        cmd->add_option("--out", *out, "CSV output path (stdout when omitted)");
        cmd->callback(run([=]() { return cmd_calibrate(*flags, *pfas, *out); }));
    }

    // tw-table
    {
        auto* cmd = app.add_subcommand("tw-table", "dump the loaded Tracy-Widom grid");
        auto order = std::make_shared<int>(1);
        auto out = std::make_shared<std::string>();
        auto svg = std::make_shared<std::string>();
        cmd->add_option("--order", *order, "Tracy-Widom order")->check(CLI::IsMember({1, 2}));
        cmd->add_option("--out", *out, "CSV output path (stdout when omitted)");
        cmd->add_option("--svg", *svg, "also write an SVG plot here");
        cmd->callback(run([=]() { return cmd_tw_table(*order, *out, *svg); }));
    }

    CLI11_PARSE(app, argc, argv);
    return rc;
}

#include "emdet/detectors.hpp"

#include <cmath>
#include <stdexcept>

namespace emdet {

std::string_view detector_name(DetectorKind kind) {
    switch (kind) {
        case DetectorKind::Glrt: return "glrt";
        case DetectorKind::RMaxMin: return "r-max-min";
        case DetectorKind::RMaxNv: return "r-max-nv";
        case DetectorKind::MMaxMin: return "m-max-min";
    }
    throw std::invalid_argument("detector_name: unknown kind");
}

std::optional<DetectorKind> parse_detector(std::string_view name) {
    for (DetectorKind k : kAllDetectors)
        if (name == detector_name(k)) return k;
    return std::nullopt;
}

double glrt_statistic(const EigenSpectrum& spec) {
    const Eigen::Index n = spec.values.size();
    double sum = 0.0, log_sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double v = spec.values(i);
        if (v <= 0.0)
            throw DegenerateSpectrumError(
                "glrt_statistic: zero eigenvalue makes the geometric mean vanish");
        sum += v;
        log_sum += std::log(v);
    }
    return (sum / n) / std::exp(log_sum / n);
}

double ratio_max_min(const EigenSpectrum& spec) {
    if (spec.lambda_min() <= 0.0)
        throw DegenerateSpectrumError("ratio_max_min: lambda_min is zero");
    return spec.lambda_max() / spec.lambda_min();
}

double ratio_max_nv(const EigenSpectrum& spec) {
    const double nv = noise_variance_estimate(spec);
    if (nv <= 0.0)
        throw DegenerateSpectrumError("ratio_max_nv: noise variance estimate is zero");
    return spec.lambda_max() / nv;
}

double mean_max_min(const EigenSpectrum& spec) {
    return 0.5 * (spec.lambda_max() + spec.lambda_min());
}

double detector_statistic(DetectorKind kind, const EigenSpectrum& spec) {
    switch (kind) {
        case DetectorKind::Glrt: return glrt_statistic(spec);
        case DetectorKind::RMaxMin: return ratio_max_min(spec);
        case DetectorKind::RMaxNv: return ratio_max_nv(spec);
        case DetectorKind::MMaxMin: return mean_max_min(spec);
    }
    throw std::invalid_argument("detector_statistic: unknown kind");
}

double analytic_threshold(DetectorKind kind, double pfa, const EigenSpectrum& spec,
                          const ThresholdPolicy& policy) {
    if (kind == DetectorKind::Glrt)
        throw std::invalid_argument(
            "analytic_threshold: no closed form for the GLRT; calibrate empirically");
    if (!(pfa > 0.001 && pfa < 0.999))
        throw std::domain_error("analytic_threshold: pfa outside table coverage");

    const double q = tw_quantile(1.0 - pfa, policy.tw_order);
    const TwConstants c = tw_constants(spec.n, spec.l, policy.constants_order);

    switch (kind) {
        case DetectorKind::RMaxNv: {
            const double nv = noise_variance_estimate(spec);
            if (nv <= 0.0)
                throw DegenerateSpectrumError(
                    "analytic_threshold: noise variance estimate is zero");
            return (q * c.nu + c.mu) / nv;
        }
        case DetectorKind::MMaxMin:
            return 0.5 * (q * c.nu + c.mu + spec.lambda_max());
        case DetectorKind::RMaxMin: {
            if (policy.as_written)
                return spec.lambda_max() / (q * c.mu + c.nu);
            // standard form: scaled quantile over a lambda_min proxy, the
            // lower bulk edge times the estimated noise variance
            const double proxy = mp_edges(spec.n, spec.l).a * noise_variance_estimate(spec);
            if (proxy <= 0.0)
                throw DegenerateSpectrumError(
                    "analytic_threshold: lambda_min proxy is zero");
            return (q * c.nu + c.mu) / proxy;
        }
        default:
            throw std::invalid_argument("analytic_threshold: unknown kind");
    }
}

Decision decide(DetectorKind kind, const EigenSpectrum& spec, double pfa,
                const ThresholdPolicy& policy,
                std::optional<double> calibrated_threshold) {
    Decision d;
    d.kind = kind;
    d.target_pfa = pfa;
    d.statistic = detector_statistic(kind, spec);
    if (policy.mode == ThresholdMode::Analytic) {
        d.threshold = analytic_threshold(kind, pfa, spec, policy);
    } else {
        if (!calibrated_threshold)
            throw std::invalid_argument(
                "decide: EmpiricalCalibration mode needs a calibrated threshold");
        d.threshold = *calibrated_threshold;
    }
    d.emitter_present = d.statistic > d.threshold;
    return d;
}

}  // namespace emdet

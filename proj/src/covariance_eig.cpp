#include "emdet/covariance_eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emdet {

namespace {

// scale * m m^H with the lower triangle computed once and mirrored, so the
// result is Hermitian to the last bit.
HermitianMatrix herm_outer(const Eigen::MatrixXcd& m, double scale) {
    const Eigen::Index n = m.rows();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
    acc.selfadjointView<Eigen::Lower>().rankUpdate(m, scale);
    HermitianMatrix r = acc.selfadjointView<Eigen::Lower>();
    for (Eigen::Index i = 0; i < n; ++i)
        r(i, i) = std::complex<double>(r(i, i).real(), 0.0);
    return r;
}

Eigen::VectorXd sorted_clamped_eigenvalues(const HermitianMatrix& r, double trace) {
    const double scale = std::max(1.0, r.cwiseAbs().maxCoeff());
    if ((r - r.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("eigen_spectrum: matrix is not Hermitian");

    Eigen::SelfAdjointEigenSolver<HermitianMatrix> solver(r, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigen_spectrum: eigensolver did not converge");

    Eigen::VectorXd values = solver.eigenvalues().reverse();
    const double floor = -1e-10 * std::max(trace, 0.0);
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (values(i) < floor)
            throw std::runtime_error(
                "eigen_spectrum: eigenvalue " + std::to_string(values(i)) +
                " below the PSD round-off window");
        if (values(i) < 0.0) values(i) = 0.0;
    }
    return values;
}

}  // namespace

EigenSpectrum EigenSpectrum::from_values(std::vector<double> vals, int l) {
    if (vals.empty())
        throw std::invalid_argument("EigenSpectrum: empty value list");
    for (double v : vals)
        if (!(v >= 0.0))
            throw std::invalid_argument("EigenSpectrum: eigenvalues must be >= 0");
    std::sort(vals.begin(), vals.end(), std::greater<>());
    EigenSpectrum spec;
    spec.values = Eigen::Map<const Eigen::VectorXd>(vals.data(),
                                                    static_cast<Eigen::Index>(vals.size()));
    spec.trace = spec.values.sum();
    spec.n = static_cast<int>(vals.size());
    spec.l = l;
    return spec;
}

HermitianMatrix sample_covariance(const SnapshotMatrix& y) {
    if (y.cols() < 1)
        throw std::invalid_argument("sample_covariance: need at least one snapshot");
    return herm_outer(y, 1.0 / static_cast<double>(y.cols()));
}

EigenSpectrum eigen_spectrum(const HermitianMatrix& r, int snapshots) {
    if (r.rows() != r.cols() || r.rows() < 1)
        throw std::invalid_argument("eigen_spectrum: matrix must be square and nonempty");

    EigenSpectrum spec;
    spec.trace = r.trace().real();
    spec.values = sorted_clamped_eigenvalues(r, spec.trace);
    spec.n = static_cast<int>(r.rows());
    spec.l = snapshots;
    return spec;
}

EigenSpectrum snapshot_spectrum(const SnapshotMatrix& y) {
    const int n = static_cast<int>(y.rows());
    const int l = static_cast<int>(y.cols());
    if (l < 1)
        throw std::invalid_argument("snapshot_spectrum: need at least one snapshot");
    if (l >= n)
        return eigen_spectrum(sample_covariance(y), l);

    // L < N: same nonzero spectrum, at L x L cost instead of N x N.
    const HermitianMatrix gram = herm_outer(y.adjoint(), 1.0 / static_cast<double>(l));
    EigenSpectrum spec;
    spec.trace = gram.trace().real();
    Eigen::VectorXd nonzero = sorted_clamped_eigenvalues(gram, spec.trace);
    spec.values = Eigen::VectorXd::Zero(n);
    spec.values.head(l) = nonzero;
    spec.n = n;
    spec.l = l;
    return spec;
}

double noise_variance_estimate(const EigenSpectrum& spec) {
    if (spec.n < 2)
        throw std::invalid_argument("noise_variance_estimate: need n >= 2 eigenvalues");
    return (spec.trace - spec.lambda_max()) / (spec.n - 1);
}

}  // namespace emdet

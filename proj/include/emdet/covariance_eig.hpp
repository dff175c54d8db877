#pragma once

#include <vector>

#include <Eigen/Dense>

#include "emdet/array_signal.hpp"

namespace emdet {

using HermitianMatrix = Eigen::MatrixXcd;

// Raised when a test statistic is undefined for the given spectrum
// (zero eigenvalues, zero noise estimate).
class DegenerateSpectrumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigenvalues of a sample covariance matrix, sorted descending, with the
// matrix trace and the dimensions that produced them.
struct EigenSpectrum {
    Eigen::VectorXd values;  // lambda_1 >= ... >= lambda_n >= 0
    double trace = 0.0;
    int n = 0;
    int l = 0;  // snapshot count behind the estimate (0 if synthetic)

    double lambda_max() const { return values(0); }
    double lambda_min() const { return values(values.size() - 1); }

    // Test/CLI helper: sorts descending, sets trace to the sum.
    static EigenSpectrum from_values(std::vector<double> vals, int l = 0);
};

// (1/L) * sum_k y[k] y[k]^H, exactly Hermitian by construction.
HermitianMatrix sample_covariance(const SnapshotMatrix& y);

// Descending eigenvalues of a Hermitian PSD matrix. Round-off eigenvalues in
// [-1e-10*trace, 0) are clamped to zero; anything below that window is
// rejected as an invariant violation.
EigenSpectrum eigen_spectrum(const HermitianMatrix& r, int snapshots = 0);

// Spectrum of sample_covariance(y) without always forming the N x N matrix:
// when L < N the nonzero eigenvalues come from the L x L Gram matrix
// y^H y / L and the remaining N - L eigenvalues are exact zeros.
EigenSpectrum snapshot_spectrum(const SnapshotMatrix& y);

// (trace - lambda_max) / (N - 1), the mean of the non-principal eigenvalues.
double noise_variance_estimate(const EigenSpectrum& spec);

}  // namespace emdet

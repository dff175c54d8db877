#pragma once

#include <string>
#include <vector>

namespace emdet {

// Marchenko-Pastur support edges of the H0 sample-covariance bulk,
// a = (sqrt(L) - sqrt(N))^2 / L and b = (sqrt(L) + sqrt(N))^2 / L.
struct MpEdges {
    double a = 0.0;
    double b = 0.0;
};

// Requires n <= l (aspect ratio c = N/L in (0, 1]); throws std::domain_error
// otherwise.
MpEdges mp_edges(int n, int l);

// Centering and scaling of the largest sample-covariance eigenvalue under H0,
// normalized by L to match the 1/L covariance estimate. Order 1 uses the real
// (Johnstone) convention, order 2 the complex (Johansson) one; for order 2 the
// centering equals the upper Marchenko-Pastur edge.
struct TwConstants {
    double mu = 0.0;
    double nu = 0.0;
    int order = 1;
};

TwConstants tw_constants(int n, int l, int order);

// Tabulated Tracy-Widom CDF with shape-preserving (PCHIP) interpolation.
// Tables ship embedded in the library and as data/tw{1,2}_cdf.txt; the text
// format is two columns "t cdf" with '#' comments and ascending t.
class TwTable {
public:
    static const TwTable& builtin(int order);
    static TwTable from_file(const std::string& path, int order);
    static TwTable from_points(std::vector<double> t, std::vector<double> cdf, int order);

    // Monotone interpolation of F(t); 0 below the grid, 1 above it.
    double cdf(double t) const;
    // Inverse CDF for p in (0.001, 0.999); throws std::domain_error outside.
    double quantile(double p) const;

    int order() const { return order_; }
    const std::vector<double>& grid() const { return t_; }
    const std::vector<double>& cdf_values() const { return f_; }

private:
    TwTable() = default;
    void finalize();  // validates invariants, computes PCHIP slopes

    std::vector<double> t_;
    std::vector<double> f_;
    std::vector<double> slope_;
    int order_ = 1;
};

// Table used by the free functions below: the files in $EMDET_TW_DIR when the
// environment variable is set, the embedded tables otherwise.
const TwTable& resolve_tw_table(int order);

double tw_cdf(double t, int order);
double tw_quantile(double p, int order);

namespace detail {
void builtin_tw_rows(int order, std::vector<double>& t, std::vector<double>& cdf);
}

}  // namespace emdet

#include "emdet/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace emdet {

MpEdges mp_edges(int n, int l) {
    if (n < 1 || l < 1)
        throw std::invalid_argument("mp_edges: n and l must be >= 1");
    if (n > l)
        throw std::domain_error("mp_edges: undefined for n > l (aspect ratio above 1)");
    const double sn = std::sqrt(static_cast<double>(n));
    const double sl = std::sqrt(static_cast<double>(l));
    MpEdges e;
    e.a = (sl - sn) * (sl - sn) / l;
    e.b = (sl + sn) * (sl + sn) / l;
    return e;
}

TwConstants tw_constants(int n, int l, int order) {
    if (n < 2 || l < 2)
        throw std::invalid_argument("tw_constants: n and l must be >= 2");
    if (order != 1 && order != 2)
        throw std::invalid_argument("tw_constants: order must be 1 or 2");
    const double sn = std::sqrt(static_cast<double>(n));
    // order 1 replaces L by L-1 in the row-count factor
    const double sl = std::sqrt(static_cast<double>(order == 1 ? l - 1 : l));
    TwConstants c;
    c.order = order;
    c.mu = (sl + sn) * (sl + sn) / l;
    c.nu = (sl + sn) * std::cbrt(1.0 / sl + 1.0 / sn) / l;
    return c;
}

namespace {

constexpr double kQuantileLo = 0.001;
constexpr double kQuantileHi = 0.999;

double hermite(double t, double y0, double y1, double h, double m0, double m1) {
    const double t2 = t * t;
    const double t3 = t2 * t;
    return y0 * (2 * t3 - 3 * t2 + 1) + y1 * (-2 * t3 + 3 * t2) +
           h * m0 * (t3 - 2 * t2 + t) + h * m1 * (t3 - t2);
}

// One-sided three-point slope estimate with the Fritsch-Carlson clamp.
double edge_slope(double h0, double h1, double d0, double d1) {
    double m = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m * d0 <= 0.0) return 0.0;
    if (d0 * d1 < 0.0 && std::abs(m) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return m;
}

}  // namespace

void TwTable::finalize() {
    const std::size_t n = t_.size();
    if (n != f_.size() || n < 4)
        throw std::runtime_error("TwTable: need at least 4 (t, cdf) rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(t_[i]) || !std::isfinite(f_[i]) || f_[i] < 0.0 || f_[i] > 1.0)
            throw std::runtime_error("TwTable: non-finite or out-of-range entry");
        if (i > 0 && !(t_[i] > t_[i - 1]))
            throw std::runtime_error("TwTable: grid must be strictly ascending");
        if (i > 0 && !(f_[i] > f_[i - 1]))
            throw std::runtime_error("TwTable: cdf must be strictly increasing");
    }
    if (!(f_.front() < kQuantileLo) || !(f_.back() > kQuantileHi))
        throw std::runtime_error("TwTable: grid does not cover cdf range (0.001, 0.999)");

    // Fritsch-Carlson slopes; strictly increasing data keeps them positive,
    // which is what makes quantile() well-defined.
    slope_.assign(n, 0.0);
    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = t_[i + 1] - t_[i];
        d[i] = (f_[i + 1] - f_[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double w1 = 2 * h[i] + h[i - 1];
        const double w2 = h[i] + 2 * h[i - 1];
        slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
    slope_.front() = edge_slope(h[0], h[1], d[0], d[1]);
    slope_.back() = edge_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
}

TwTable TwTable::from_points(std::vector<double> t, std::vector<double> cdf, int order) {
    if (order != 1 && order != 2)
        throw std::runtime_error("TwTable: order must be 1 or 2");
    TwTable table;
    table.t_ = std::move(t);
    table.f_ = std::move(cdf);
    table.order_ = order;
    table.finalize();
    return table;
}

TwTable TwTable::from_file(const std::string& path, int order) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("TwTable: cannot open '" + path + "'");
    std::vector<double> t, f;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream row(line);
        double ti, fi;
        if (!(row >> ti)) continue;  // blank or comment-only line
        if (!(row >> fi))
            throw std::runtime_error("TwTable: malformed row in '" + path + "': " + line);
        t.push_back(ti);
        f.push_back(fi);
    }
    return from_points(std::move(t), std::move(f), order);
}

const TwTable& TwTable::builtin(int order) {
    static const TwTable tw1 = [] {
        std::vector<double> t, f;
        detail::builtin_tw_rows(1, t, f);
        return from_points(std::move(t), std::move(f), 1);
    }();
    static const TwTable tw2 = [] {
        std::vector<double> t, f;
        detail::builtin_tw_rows(2, t, f);
        return from_points(std::move(t), std::move(f), 2);
    }();
    if (order != 1 && order != 2)
        throw std::invalid_argument("TwTable::builtin: order must be 1 or 2");
    return order == 1 ? tw1 : tw2;
}

double TwTable::cdf(double t) const {
    if (t <= t_.front()) return t == t_.front() ? f_.front() : 0.0;
    if (t >= t_.back()) return t == t_.back() ? f_.back() : 1.0;
    const auto it = std::upper_bound(t_.begin(), t_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - t_.begin()) - 1;
    const double h = t_[i + 1] - t_[i];
    const double u = (t - t_[i]) / h;
    const double v = hermite(u, f_[i], f_[i + 1], h, slope_[i], slope_[i + 1]);
    return std::clamp(v, 0.0, 1.0);
}

double TwTable::quantile(double p) const {
    if (!(p > kQuantileLo && p < kQuantileHi))
        throw std::domain_error("TwTable::quantile: p outside table coverage (0.001, 0.999)");
    const auto it = std::upper_bound(f_.begin(), f_.end(), p);
    if (it == f_.begin()) return t_.front();
    if (it == f_.end()) return t_.back();
    std::size_t i = static_cast<std::size_t>(it - f_.begin()) - 1;
    if (p == f_[i]) return t_[i];

    // cdf is strictly increasing on the cell; bisect to machine precision
    double lo = t_[i], hi = t_[i + 1];
    const double h = hi - lo;
    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double u = (mid - t_[i]) / h;
        if (hermite(u, f_[i], f_[i + 1], h, slope_[i], slope_[i + 1]) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

const TwTable& resolve_tw_table(int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("resolve_tw_table: order must be 1 or 2");
    static const auto load = [](int ord) -> TwTable {
        if (const char* dir = std::getenv("EMDET_TW_DIR"))
            return TwTable::from_file(std::string(dir) + "/tw" + std::to_string(ord) +
                                          "_cdf.txt",
                                      ord);
        return TwTable::builtin(ord);
    };
    // per-order lazy statics: an override directory only needs the files for
    // the orders actually requested
    if (order == 1) {
        static const TwTable tw1 = load(1);
        return tw1;
    }
    static const TwTable tw2 = load(2);
    return tw2;
}

double tw_cdf(double t, int order) { return resolve_tw_table(order).cdf(t); }

double tw_quantile(double p, int order) { return resolve_tw_table(order).quantile(p); }

}  // namespace emdet

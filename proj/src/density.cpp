#include "locpoly/density.hpp"

#include <algorithm>
#include <cmath>

#include "locpoly/errors.hpp"
#include "locpoly/stats.hpp"

namespace locpoly {

double quantile_type7(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) throw InvalidInput("quantile: empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw InvalidInput("quantile: q must lie in [0,1]");
    const std::size_t n = sorted.size();
    const double pos = q * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double silverman_bandwidth(const std::vector<double>& sample, SilvermanVariant variant) {
    const std::size_t n = sample.size();
    if (n < 2) throw DegenerateSample("silverman_bandwidth: need at least 2 observations");

    double mean = 0.0;
    for (double v : sample) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : sample) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));

    double spread;
    double factor;
    if (variant == SilvermanVariant::robust) {
        std::vector<double> sorted = sample;
        std::sort(sorted.begin(), sorted.end());
        const double iqr = quantile_type7(sorted, 0.75) - quantile_type7(sorted, 0.25);
        spread = std::min(sd, iqr / 1.349);
        factor = 0.9;
    } else {
        spread = sd;
        factor = 1.06;
    }
    if (!(spread > 0.0)) throw DegenerateSample("silverman_bandwidth: zero sample spread");
    return factor * spread * std::pow(static_cast<double>(n), -0.2);
}

double kde_at(const std::vector<double>& sample, double x, double h) {
    if (!(h > 0.0)) throw InvalidInput("kde: h must be > 0");
    if (sample.empty()) throw InvalidInput("kde: empty sample");
    double acc = 0.0;
    for (double s : sample) acc += stats::normal_pdf((x - s) / h);
    return acc / (static_cast<double>(sample.size()) * h);
}

DensityEstimate kde(const std::vector<double>& sample, std::vector<double> grid, double h) {
    DensityEstimate est;
    est.h_silverman = h;
    est.values.reserve(grid.size());
    for (double g : grid) est.values.push_back(kde_at(sample, g, h));
    est.grid = std::move(grid);
    return est;
}

} // namespace locpoly

#pragma once

#include <vector>

namespace locpoly {

enum class SilvermanVariant {
    robust,   // 0.9 * min(sd, IQR/1.349) * n^{-1/5}
    sd_only,  // 1.06 * sd * n^{-1/5}
};

// Linear-interpolation (type-7) sample quantile; input must be sorted.
double quantile_type7(const std::vector<double>& sorted, double q);

// Rule-of-thumb bandwidth; throws DegenerateSample when the spread term is 0.
double silverman_bandwidth(const std::vector<double>& sample,
                           SilvermanVariant variant = SilvermanVariant::robust);

struct DensityEstimate {
    std::vector<double> grid;
    std::vector<double> values;
    double h_silverman = 0.0;
};

// Gaussian-kernel density estimate at one point.
double kde_at(const std::vector<double>& sample, double x, double h);

// Gaussian KDE over a grid; h_silverman in the result echoes the h used.
DensityEstimate kde(const std::vector<double>& sample, std::vector<double> grid, double h);

} // namespace locpoly

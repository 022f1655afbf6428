#pragma once

#include <cstddef>
#include <vector>

#include "locpoly/dataset.hpp"
#include "locpoly/kernels.hpp"
#include "locpoly/linalg.hpp"

namespace locpoly {

// Condition estimates above this trip SingularDesign instead of returning a
// meaningless solution (bandwidth too small at this point).
inline constexpr double kSingularConditionLimit = 1e12;

// Local polynomial fit at a point: coefficient j estimates m^(j)(x0)/j!.
struct LocalFit {
    double x0 = 0.0;
    double h = 0.0;
    int p = 0;
    std::vector<double> coeffs;        // b_0..b_p in the unscaled basis (x - x0)^j
    int n_effective = 0;               // observations with |X_t - x0| <= h
    linalg::SquareMatrix s_matrix;     // entry (i,j) = s_{i+j-2}, the scaled moment matrix
    double condition = 0.0;            // 1-norm condition estimate of s_matrix

    // Fitted polynomial sum_j coeffs[j] (x - x0)^j.
    double predict(double x) const;
};

// (nh)^{-1} sum_t K((X_t-x0)/h) ((X_t-x0)/h)^l; an empty window gives 0.
double moment_sums(const Dataset& d, double x0, double h, int l, const Kernel& k);

// Y-weighted analogue of moment_sums.
double response_sums(const Dataset& d, double x0, double h, int l, const Kernel& k);

// Solves the kernel-weighted normal equations in the scaled basis
// ((X_t-x0)/h)^j and rescales, so the moment matrix stays well conditioned.
// Throws SingularDesign when fewer than p+1 points carry positive weight or
// the condition estimate exceeds kSingularConditionLimit.
LocalFit fit_local(const Dataset& d, double x0, double h, int p, const Kernel& k);

// fit_local on the dataset with observation t removed, evaluated at X_t.
LocalFit fit_local_loo(const Dataset& d, std::size_t t, double h, int p, const Kernel& k);

} // namespace locpoly

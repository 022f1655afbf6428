#pragma once

#include <vector>

#include "locpoly/dataset.hpp"
#include "locpoly/estimator.hpp"
#include "locpoly/kernels.hpp"
#include "locpoly/linalg.hpp"

namespace locpoly {

// Large-sample summary for a local fit: sandwich covariance scaled by
// sigma^2(x0)/f_X(x0), per-coefficient rates, bias plug-in and normal CIs.
struct AsymptoticSummary {
    double x0 = 0.0;
    double h = 0.0;
    long n = 0;
    int p = 0;
    linalg::SquareMatrix variance_matrix;  // sigma2_hat/fx_hat * S^{-1} S~ S^{-1}
    std::vector<double> scale_factors;     // (n h^{2j+1})^{-1/2} per coefficient
    std::vector<double> se;
    std::vector<double> ci_lower;          // b_j +- z se_j (not bias-centered)
    std::vector<double> ci_upper;
    std::vector<double> bias;              // h^{p+1-j} m_hat^{(p+1)}(x0)/(p+1)!
    double sigma2_hat = 0.0;
    double fx_hat = 0.0;
    double ci_level = 0.0;
};

// S[i][j] = mu_{i+j-2}, S~[i][j] = nu_{i+j-2} (1-based index convention).
void moment_matrices(const Kernel& k, int p, linalg::SquareMatrix& s, linalg::SquareMatrix& st);

// S^{-1} S~ S^{-1}; symmetric positive semidefinite for the built-in kernels.
linalg::SquareMatrix sandwich(const Kernel& k, int p);

// se_j = sqrt(sandwich[j][j] sigma2 / fx) / sqrt(n h^{2j+1}).
std::vector<double> standard_errors(const linalg::SquareMatrix& sandwich_matrix, double sigma2,
                                    double fx, long n, double h);

// sigma^2(x0) from the kernel-weighted residual variance of the fit itself,
// f_X(x0) from a Gaussian KDE with Silverman bandwidth, bias from an
// auxiliary order-(p+1) fit at bandwidth 1.5h.
AsymptoticSummary summarize(const LocalFit& fit, const Dataset& d, const Kernel& k,
                            double ci_level);

} // namespace locpoly

#pragma once

#include <map>
#include <string>
#include <vector>

#include "locpoly/dataset.hpp"
#include "locpoly/kernels.hpp"

namespace locpoly {

enum class Selector { cv, rot, amise, fixed };

const char* selector_name(Selector s);

struct BandwidthResult {
    double h = 0.0;
    Selector selector = Selector::fixed;
    double objective_value = 0.0;               // CV only
    std::map<std::string, double> diagnostics;  // selector-specific intermediates
};

// Ingredients of the optimal bandwidth h = (lambda1 / (n lambda2))^{1/5}:
// lambda1 = error_variance * kernel_l2 * support_length,
// lambda2 = kernel_mu2 * curvature            (mu2_squared = false)
//         = kernel_mu2^2 * curvature          (mu2_squared = true).
struct OracleSpec {
    double error_variance = 0.0;  // Var(e_t)
    double kernel_l2 = 0.0;       // integral of K^2
    double support_length = 0.0;  // length of the regressor support
    double kernel_mu2 = 0.0;      // integral of u^2 K(u)
    double curvature = 0.0;       // integral of (m'')^2 f_X
    bool mu2_squared = false;
};

BandwidthResult h_amise(const OracleSpec& spec, long n);

// Cross-validation search parameters.  Grid bounds, size and refinement are
// not pinned by theory; defaults follow the project conventions.
struct CvSearch {
    int grid_size = 40;
    double refine_rel_tol = 1e-3;
    double min_success = 0.9;  // fraction of nonsingular leave-one-out fits defining h_min
};

// Leave-one-out CV objective: sum_t (prediction_without_t(X_t) - Y_t)^2 with
// singular terms replaced by the mean-predictor penalty (Ybar - Y_t)^2.
// Objectives below the floating-point noise floor collapse to exactly 0 so
// plateau ties resolve deterministically.
double cv_objective(const Dataset& d, double h, int p, const Kernel& k);

// The logarithmic candidate grid [h_min, range(X)] used by h_cv.
std::vector<double> cv_grid(const Dataset& d, int p, const Kernel& k, const CvSearch& search = {});

// Grid search plus golden-section refinement inside the bracketing cells;
// ties break toward larger h.  Throws NoValidBandwidth when every term of
// every candidate is penalized.
BandwidthResult h_cv(const Dataset& d, int p, const Kernel& k, const CvSearch& search = {});

// Coefficients of the global quartic fit Y ~ 1, x, x^2/2, x^3/3!, x^4/4!.
std::vector<double> rot_quartic_fit(const Dataset& d);

// Plug-in bandwidth: quartic OLS curvature and residual variance, support
// max(X)-min(X), plugged into the h_amise formula.
BandwidthResult h_rot(const Dataset& d, const Kernel& k, bool mu2_squared = false);

} // namespace locpoly

#include "locpoly/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "locpoly/errors.hpp"
#include "locpoly/estimator.hpp"
#include "locpoly/linalg.hpp"

namespace locpoly {

const char* selector_name(Selector s) {
    switch (s) {
        case Selector::cv: return "cv";
        case Selector::rot: return "rot";
        case Selector::amise: return "amise";
        case Selector::fixed: return "fixed";
    }
    return "unknown";
}

BandwidthResult h_amise(const OracleSpec& spec, long n) {
    if (n < 1) throw InvalidInput("h_amise: need n >= 1");
    if (!(spec.error_variance > 0.0) || !(spec.kernel_l2 > 0.0) ||
        !(spec.support_length > 0.0) || !(spec.kernel_mu2 > 0.0)) {
        throw InvalidInput("h_amise: spec fields must be positive");
    }
    if (!(spec.curvature > 0.0)) {
        throw DegenerateSpec("h_amise: zero curvature, optimal bandwidth is unbounded");
    }
    const double lambda1 = spec.error_variance * spec.kernel_l2 * spec.support_length;
    const double mu2 = spec.mu2_squared ? spec.kernel_mu2 * spec.kernel_mu2 : spec.kernel_mu2;
    const double lambda2 = mu2 * spec.curvature;

    BandwidthResult res;
    res.h = std::pow(lambda1 / (static_cast<double>(n) * lambda2), 0.2);
    res.selector = Selector::amise;
    res.diagnostics["lambda1"] = lambda1;
    res.diagnostics["lambda2"] = lambda2;
    return res;
}

namespace {

constexpr int kMaxMoment = 2 * (linalg::kMaxDim - 1);

// Sample sorted by regressor value for windowed leave-one-out sweeps.
struct SortedSample {
    std::vector<double> x;
    std::vector<double> y;
    double range = 0.0;
    double min_gap = 0.0;  // smallest positive adjacent gap
    double ybar = 0.0;
    double yscale = 1.0;

    explicit SortedSample(const Dataset& d) {
        const std::size_t n = d.size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return d.x[a] < d.x[b]; });
        x.resize(n);
        y.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = d.x[order[i]];
            y[i] = d.y[order[i]];
        }
        range = x.back() - x.front();
        min_gap = range;
        for (std::size_t i = 1; i < n; ++i) {
            const double gap = x[i] - x[i - 1];
            if (gap > 0.0 && gap < min_gap) min_gap = gap;
        }
        double acc = 0.0;
        double amax = 0.0;
        for (double v : y) {
            acc += v;
            amax = std::max(amax, std::abs(v));
        }
        ybar = acc / static_cast<double>(n);
        yscale = std::max(1.0, amax);
    }
};

// Leave-one-out local fit over the window [lo, hi) excluding position i;
// returns false when the design is singular there.
bool loo_predict(const SortedSample& s, std::size_t i, std::size_t lo, std::size_t hi, double h,
                 int p, const Kernel& k, double* pred) {
    const int dim = p + 1;
    const double x0 = s.x[i];
    double s_mom[kMaxMoment + 1] = {0.0};
    double g_mom[linalg::kMaxDim] = {0.0};
    int pos = 0;
    for (std::size_t j = lo; j < hi; ++j) {
        if (j == i) continue;
        const double u = (s.x[j] - x0) / h;
        const double w = k(u);
        if (w == 0.0) continue;
        ++pos;
        const double wy = w * s.y[j];
        double up = 1.0;
        s_mom[0] += w;
        g_mom[0] += wy;
        for (int l = 1; l <= 2 * p; ++l) {
            up *= u;
            s_mom[l] += w * up;
            if (l <= p) g_mom[l] += wy * up;
        }
    }
    if (pos < dim) return false;

    double a[linalg::kMaxDim * linalg::kMaxDim];
    double c[linalg::kMaxDim];
    for (int r = 0; r < dim; ++r) {
        for (int q = 0; q < dim; ++q) a[r * dim + q] = s_mom[r + q];
    }
    const double cond = linalg::solve_sym(a, dim, g_mom, c);
    if (!(cond <= kSingularConditionLimit)) return false;
    *pred = c[0];
    return true;
}

struct ObjectiveValue {
    double value = 0.0;
    int penalized = 0;
};

// Full CV pass at one bandwidth; windows advance with two pointers since x is
// sorted.  Values below the FP noise floor (exact-fit plateaus) collapse to 0.
ObjectiveValue cv_pass(const SortedSample& s, double h, int p, const Kernel& k) {
    const std::size_t n = s.x.size();
    ObjectiveValue out;
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x0 = s.x[i];
        while (lo < n && s.x[lo] < x0 - h) ++lo;
        if (hi < lo) hi = lo;
        while (hi < n && s.x[hi] <= x0 + h) ++hi;

        double pred;
        if (loo_predict(s, i, lo, hi, h, p, k, &pred)) {
            const double r = pred - s.y[i];
            out.value += r * r;
        } else {
            const double r = s.ybar - s.y[i];
            out.value += r * r;
            ++out.penalized;
        }
    }
    const double eps = 1e-12 * s.yscale;
    if (out.value <= static_cast<double>(n) * eps * eps) out.value = 0.0;
    return out;
}

double success_fraction(const SortedSample& s, double h, int p, const Kernel& k) {
    const std::size_t n = s.x.size();
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::size_t good = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x0 = s.x[i];
        while (lo < n && s.x[lo] < x0 - h) ++lo;
        if (hi < lo) hi = lo;
        while (hi < n && s.x[hi] <= x0 + h) ++hi;
        double pred;
        if (loo_predict(s, i, lo, hi, h, p, k, &pred)) ++good;
    }
    return static_cast<double>(good) / static_cast<double>(n);
}

// Smallest h at which at least min_success of the leave-one-out fits are
// nonsingular: log-space bisection between the smallest positive regressor
// gap and range(X).
double find_h_min(const SortedSample& s, int p, const Kernel& k, double min_success) {
    const double hi = s.range;
    double lo = std::max(s.min_gap, hi * 1e-12);
    if (lo >= hi) return hi;
    if (success_fraction(s, hi, p, k) < min_success) return hi;
    if (success_fraction(s, lo, p, k) >= min_success) return lo;
    double llo = std::log(lo);
    double lhi = std::log(hi);
    for (int it = 0; it < 40; ++it) {
        const double mid = std::exp(0.5 * (llo + lhi));
        if (success_fraction(s, mid, p, k) >= min_success) {
            lhi = std::log(mid);
        } else {
            llo = std::log(mid);
        }
    }
    return std::exp(lhi);
}

std::vector<double> make_grid(double h_min, double h_max, int size) {
    if (!(h_max > h_min)) return {h_max};
    std::vector<double> grid(static_cast<std::size_t>(size));
    const double la = std::log(h_min);
    const double lb = std::log(h_max);
    for (int i = 0; i < size; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(size - 1);
        grid[static_cast<std::size_t>(i)] = std::exp(la + t * (lb - la));
    }
    grid.front() = h_min;
    grid.back() = h_max;
    return grid;
}

void check_cv_inputs(const Dataset& d, int p, const CvSearch& search) {
    validate(d);
    if (p < 0 || p + 1 > linalg::kMaxDim - 1) throw InvalidInput("h_cv: order out of range");
    if (static_cast<int>(d.size()) < p + 2) throw InvalidInput("h_cv: need n >= p + 2");
    if (search.grid_size < 2) throw InvalidInput("h_cv: grid_size must be >= 2");
}

} // namespace

double cv_objective(const Dataset& d, double h, int p, const Kernel& k) {
    if (!(h > 0.0)) throw InvalidInput("cv_objective: h must be > 0");
    const SortedSample s(d);
    return cv_pass(s, h, p, k).value;
}

std::vector<double> cv_grid(const Dataset& d, int p, const Kernel& k, const CvSearch& search) {
    check_cv_inputs(d, p, search);
    const SortedSample s(d);
    if (!(s.range > 0.0)) throw NoValidBandwidth("h_cv: all regressor values identical");
    const double h_min = find_h_min(s, p, k, search.min_success);
    return make_grid(h_min, s.range, search.grid_size);
}

BandwidthResult h_cv(const Dataset& d, int p, const Kernel& k, const CvSearch& search) {
    check_cv_inputs(d, p, search);
    const SortedSample s(d);
    if (!(s.range > 0.0)) throw NoValidBandwidth("h_cv: all regressor values identical");

    const double h_min = find_h_min(s, p, k, search.min_success);
    const std::vector<double> grid = make_grid(h_min, s.range, search.grid_size);
    const std::size_t n = s.x.size();

    double best_h = 0.0;
    ObjectiveValue best;
    best.value = std::numeric_limits<double>::infinity();
    bool any_defined = false;

    auto consider = [&](double h, const ObjectiveValue& v) {
        if (v.penalized < static_cast<int>(n)) any_defined = true;
        if (v.value < best.value || (v.value == best.value && h > best_h)) {
            best = v;
            best_h = h;
        }
    };

    std::vector<ObjectiveValue> grid_vals(grid.size());
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid_vals[i] = cv_pass(s, grid[i], p, k);
        consider(grid[i], grid_vals[i]);
        if (grid[i] == best_h) best_idx = i;
    }
    if (!any_defined) {
        throw NoValidBandwidth("h_cv: every leave-one-out term is singular on the whole grid");
    }

    // Golden-section refinement inside the cells bracketing the grid minimum.
    double a = grid[best_idx > 0 ? best_idx - 1 : best_idx];
    double b = grid[best_idx + 1 < grid.size() ? best_idx + 1 : best_idx];
    if (b > a) {
        constexpr double invphi = 0.6180339887498949;
        double x1 = b - invphi * (b - a);
        double x2 = a + invphi * (b - a);
        ObjectiveValue f1 = cv_pass(s, x1, p, k);
        ObjectiveValue f2 = cv_pass(s, x2, p, k);
        consider(x1, f1);
        consider(x2, f2);
        int iter = 0;
        while ((b - a) > search.refine_rel_tol * 0.5 * (a + b) && iter++ < 200) {
            if (f1.value < f2.value) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - invphi * (b - a);
                f1 = cv_pass(s, x1, p, k);
                consider(x1, f1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + invphi * (b - a);
                f2 = cv_pass(s, x2, p, k);
                consider(x2, f2);
            }
        }
    }

    BandwidthResult res;
    res.h = best_h;
    res.selector = Selector::cv;
    res.objective_value = best.value;
    res.diagnostics["h_min"] = h_min;
    res.diagnostics["grid_min"] = grid.front();
    res.diagnostics["grid_max"] = grid.back();
    res.diagnostics["grid_size"] = static_cast<double>(grid.size());
    res.diagnostics["penalized_at_opt"] = static_cast<double>(best.penalized);
    return res;
}

std::vector<double> rot_quartic_fit(const Dataset& d) {
    validate(d);
    const int n = static_cast<int>(d.size());
    if (n < 6) throw InvalidInput("h_rot: need n >= 6");
    std::vector<double> a(static_cast<std::size_t>(n) * 5);
    for (int i = 0; i < n; ++i) {
        const double x = d.x[static_cast<std::size_t>(i)];
        double* row = &a[static_cast<std::size_t>(i) * 5];
        row[0] = 1.0;
        row[1] = x;
        row[2] = x * x / 2.0;
        row[3] = x * x * x / 6.0;
        row[4] = x * x * x * x / 24.0;
    }
    return linalg::qr_least_squares(a, n, 5, d.y);
}

BandwidthResult h_rot(const Dataset& d, const Kernel& k, bool mu2_squared) {
    const std::vector<double> beta = rot_quartic_fit(d);
    const std::size_t n = d.size();

    double curvature = 0.0;
    double variance = 0.0;
    double xmin = d.x[0];
    double xmax = d.x[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double x = d.x[i];
        const double m2 = beta[2] + beta[3] * x + beta[4] * x * x / 2.0;
        curvature += m2 * m2;
        const double fitted = beta[0] + beta[1] * x + beta[2] * x * x / 2.0 +
                              beta[3] * x * x * x / 6.0 + beta[4] * x * x * x * x / 24.0;
        const double e = d.y[i] - fitted;
        variance += e * e;
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
    }
    curvature /= static_cast<double>(n);
    variance /= static_cast<double>(n);
    const double support = xmax - xmin;

    if (curvature <= 1e-12) {
        throw DegenerateSpec("h_rot: curvature estimate vanishes");
    }
    if (!(variance > 0.0)) {
        throw DegenerateSpec("h_rot: zero residual variance");
    }

    OracleSpec spec;
    spec.error_variance = variance;
    spec.kernel_l2 = kernel_moment(k, 0, true);
    spec.support_length = support;
    spec.kernel_mu2 = kernel_moment(k, 2, false);
    spec.curvature = curvature;
    spec.mu2_squared = mu2_squared;

    BandwidthResult res = h_amise(spec, static_cast<long>(n));
    res.selector = Selector::rot;
    res.diagnostics["variance"] = variance;
    res.diagnostics["curvature"] = curvature;
    res.diagnostics["support"] = support;
    for (int j = 0; j < 5; ++j) {
        res.diagnostics["beta" + std::to_string(j)] = beta[static_cast<std::size_t>(j)];
    }
    return res;
}

} // namespace locpoly

#include "locpoly/estimator.hpp"

#include <cmath>

#include "locpoly/errors.hpp"
#include "locpoly/numerics.hpp"

namespace locpoly {

double LocalFit::predict(double x) const {
    const double d = x - x0;
    double acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * d + coeffs[j];
    return acc;
}

namespace {

void check_args(double h, int l) {
    if (!(h > 0.0)) throw InvalidInput("kernel moment sums: h must be > 0");
    if (l < 0) throw InvalidInput("kernel moment sums: l must be >= 0");
}

double weighted_power_sum(const Dataset& d, double x0, double h, int l, const Kernel& k,
                          bool with_y) {
    const std::size_t n = d.size();
    double acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double u = (d.x[t] - x0) / h;
        const double w = k(u);
        if (w == 0.0) continue;
        const double term = w * numerics::ipow(u, l);
        acc += with_y ? term * d.y[t] : term;
    }
    return acc / (static_cast<double>(n) * h);
}

} // namespace

double moment_sums(const Dataset& d, double x0, double h, int l, const Kernel& k) {
    check_args(h, l);
    return weighted_power_sum(d, x0, h, l, k, false);
}

double response_sums(const Dataset& d, double x0, double h, int l, const Kernel& k) {
    check_args(h, l);
    return weighted_power_sum(d, x0, h, l, k, true);
}

LocalFit fit_local(const Dataset& d, double x0, double h, int p, const Kernel& k) {
    if (!(h > 0.0)) throw InvalidInput("fit_local: h must be > 0");
    if (p < 0 || p + 1 > linalg::kMaxDim) throw InvalidInput("fit_local: order out of range");
    if (d.x.size() != d.y.size() || d.x.empty()) throw InvalidInput("fit_local: bad dataset");

    const int dim = p + 1;
    int n_eff = 0;
    int n_pos = 0;
    for (std::size_t t = 0; t < d.size(); ++t) {
        const double dist = std::abs(d.x[t] - x0);
        if (dist <= h) ++n_eff;
        if (k((d.x[t] - x0) / h) > 0.0) ++n_pos;
    }
    if (n_pos < dim) {
        throw SingularDesign("fit_local: only " + std::to_string(n_pos) +
                             " weighted points inside the window, need " + std::to_string(dim));
    }

    LocalFit fit;
    fit.x0 = x0;
    fit.h = h;
    fit.p = p;
    fit.n_effective = n_eff;
    fit.s_matrix = linalg::SquareMatrix(dim);

    std::vector<double> s(2 * p + 1);
    std::vector<double> g(dim);
    for (int l = 0; l <= 2 * p; ++l) s[l] = moment_sums(d, x0, h, l, k);
    for (int l = 0; l <= p; ++l) g[l] = response_sums(d, x0, h, l, k);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) fit.s_matrix.at(i, j) = s[i + j];
    }

    std::vector<double> c;
    fit.condition = linalg::solve_sym(fit.s_matrix, g, c);
    if (!(fit.condition <= kSingularConditionLimit)) {
        throw SingularDesign("fit_local: moment matrix condition too large at x0=" +
                             format_double(x0));
    }

    fit.coeffs.resize(dim);
    double hp = 1.0;
    for (int j = 0; j < dim; ++j) {
        fit.coeffs[j] = c[j] / hp;
        hp *= h;
    }
    return fit;
}

LocalFit fit_local_loo(const Dataset& d, std::size_t t, double h, int p, const Kernel& k) {
    if (t >= d.size()) throw InvalidInput("fit_local_loo: index out of range");
    Dataset rest;
    rest.x.reserve(d.size() - 1);
    rest.y.reserve(d.size() - 1);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i == t) continue;
        rest.x.push_back(d.x[i]);
        rest.y.push_back(d.y[i]);
    }
    if (rest.x.empty()) throw SingularDesign("fit_local_loo: no remaining observations");
    return fit_local(rest, d.x[t], h, p, k);
}

} // namespace locpoly

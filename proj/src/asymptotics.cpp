#include "locpoly/asymptotics.hpp"

#include <cmath>

#include "locpoly/density.hpp"
#include "locpoly/errors.hpp"
#include "locpoly/stats.hpp"

namespace locpoly {

void moment_matrices(const Kernel& k, int p, linalg::SquareMatrix& s, linalg::SquareMatrix& st) {
    const auto moments = KernelMoments::compute(k, p);
    const int dim = p + 1;
    s = linalg::SquareMatrix(dim);
    st = linalg::SquareMatrix(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            s.at(i, j) = moments.mu[i + j];
            st.at(i, j) = moments.nu[i + j];
        }
    }
}

linalg::SquareMatrix sandwich(const Kernel& k, int p) {
    linalg::SquareMatrix s, st;
    moment_matrices(k, p, s, st);
    const linalg::SquareMatrix sinv = linalg::invert(s);
    const int dim = p + 1;

    linalg::SquareMatrix tmp(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            double acc = 0.0;
            for (int l = 0; l < dim; ++l) acc += sinv.at(i, l) * st.at(l, j);
            tmp.at(i, j) = acc;
        }
    }
    linalg::SquareMatrix out(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            double acc = 0.0;
            for (int l = 0; l < dim; ++l) acc += tmp.at(i, l) * sinv.at(l, j);
            out.at(i, j) = acc;
        }
    }
    // The product is symmetric in exact arithmetic; make it so in floating point.
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            const double v = 0.5 * (out.at(i, j) + out.at(j, i));
            out.at(i, j) = v;
            out.at(j, i) = v;
        }
    }
    return out;
}

std::vector<double> standard_errors(const linalg::SquareMatrix& sandwich_matrix, double sigma2,
                                    double fx, long n, double h) {
    if (!(fx > 0.0)) throw DegenerateDensity("standard_errors: nonpositive density");
    const int dim = sandwich_matrix.n;
    std::vector<double> se(dim);
    double h_power = h;  // h^{2j+1}
    for (int j = 0; j < dim; ++j) {
        se[j] = std::sqrt(sandwich_matrix.at(j, j) * sigma2 / fx) /
                std::sqrt(static_cast<double>(n) * h_power);
        h_power *= h * h;
    }
    return se;
}

AsymptoticSummary summarize(const LocalFit& fit, const Dataset& d, const Kernel& k,
                            double ci_level) {
    if (!(ci_level > 0.0 && ci_level < 1.0)) {
        throw InvalidInput("summarize: ci_level must lie in (0,1)");
    }
    validate(d);

    AsymptoticSummary out;
    out.x0 = fit.x0;
    out.h = fit.h;
    out.n = static_cast<long>(d.size());
    out.p = fit.p;
    out.ci_level = ci_level;

    // Kernel-weighted residual variance of the local fit.
    double sw = 0.0;
    double swr2 = 0.0;
    for (std::size_t t = 0; t < d.size(); ++t) {
        const double w = k((d.x[t] - fit.x0) / fit.h);
        if (w == 0.0) continue;
        const double r = d.y[t] - fit.predict(d.x[t]);
        sw += w;
        swr2 += w * r * r;
    }
    out.sigma2_hat = swr2 / sw;

    out.fx_hat = kde_at(d.x, fit.x0, silverman_bandwidth(d.x));
    if (out.fx_hat <= 1e-12) {
        throw DegenerateDensity("summarize: estimated regressor density vanishes at x0=" +
                                format_double(fit.x0));
    }

    const int dim = fit.p + 1;
    linalg::SquareMatrix sw_matrix = sandwich(k, fit.p);
    out.variance_matrix = linalg::SquareMatrix(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            out.variance_matrix.at(i, j) = sw_matrix.at(i, j) * out.sigma2_hat / out.fx_hat;
        }
    }

    out.scale_factors.resize(dim);
    double h_power = fit.h;
    for (int j = 0; j < dim; ++j) {
        out.scale_factors[j] = 1.0 / std::sqrt(static_cast<double>(out.n) * h_power);
        h_power *= fit.h * fit.h;
    }
    out.se = standard_errors(sw_matrix, out.sigma2_hat, out.fx_hat, out.n, fit.h);

    // m^(p+1) plug-in from an auxiliary order-(p+1) fit at 1.5h; its top
    // coefficient already carries the 1/(p+1)! factor.
    const LocalFit aux = fit_local(d, fit.x0, 1.5 * fit.h, fit.p + 1, k);
    const double top = aux.coeffs[fit.p + 1];
    out.bias.resize(dim);
    for (int j = 0; j < dim; ++j) {
        out.bias[j] = std::pow(fit.h, fit.p + 1 - j) * top;
    }

    const double z = stats::normal_quantile(0.5 * (1.0 + ci_level));
    out.ci_lower.resize(dim);
    out.ci_upper.resize(dim);
    for (int j = 0; j < dim; ++j) {
        out.ci_lower[j] = fit.coeffs[j] - z * out.se[j];
        out.ci_upper[j] = fit.coeffs[j] + z * out.se[j];
    }
    return out;
}

} // namespace locpoly

#include "locpoly/dgp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "locpoly/errors.hpp"

namespace locpoly {

const char* model_name(Model m) { return m == Model::m1 ? "m1" : "m2"; }

Model model_from_name(std::string_view name) {
    if (name == "m1") return Model::m1;
    if (name == "m2") return Model::m2;
    throw InvalidInput("unknown model: " + std::string(name));
}

double regression(Model m, double x) {
    if (m == Model::m1) return std::sin(x);
    const double c = x - 0.5;
    return 3.0 * c * c * c + 0.25 * x + 1.125;
}

double derivative(Model m, double x, bool paper_literal) {
    if (m == Model::m1) return paper_literal ? -std::cos(x) : std::cos(x);
    const double c = x - 0.5;
    return 9.0 * c * c + 0.25;
}

double preset_sigma2(double rho, double stationary_variance) {
    return stationary_variance * (1.0 - rho * rho);
}

std::vector<double> simulate_errors(double rho, double sigma2, int n, SplitMix64& stream) {
    if (!(std::abs(rho) < 1.0)) throw InvalidInput("simulate_errors: need |rho| < 1");
    if (!(sigma2 > 0.0)) throw InvalidInput("simulate_errors: need sigma2 > 0");
    if (n < 1) throw InvalidInput("simulate_errors: need n >= 1");

    const double sd = std::sqrt(sigma2);
    const double sd_stationary = std::sqrt(sigma2 / (1.0 - rho * rho));
    double e = sd_stationary * stream.normal();
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        e = rho * e + sd * stream.normal();
        out[static_cast<std::size_t>(t)] = e;
    }
    return out;
}

std::vector<double> simulate_regressors(Model m, int n, SplitMix64& stream) {
    if (n < 1) throw InvalidInput("simulate_regressors: need n >= 1");
    std::vector<double> out(static_cast<std::size_t>(n));
    if (m == Model::m1) {
        for (auto& v : out) v = stream.uniform(0.0, 2.0 * std::numbers::pi);
    } else {
        // Median of three uniforms is the Beta(2,2) order statistic.
        for (auto& v : out) {
            double a = stream.uniform01();
            double b = stream.uniform01();
            double c = stream.uniform01();
            v = std::max(std::min(a, b), std::min(std::max(a, b), c));
        }
    }
    return out;
}

Dataset simulate_dataset(const DgpSpec& spec) {
    SplitMix64 regressor_stream(derive_seed(spec.seed, 1));
    SplitMix64 error_stream(derive_seed(spec.seed, 2));

    Dataset d;
    d.x = simulate_regressors(spec.model, spec.n, regressor_stream);
    const auto errors = simulate_errors(spec.rho, spec.sigma2, spec.n, error_stream);
    d.y.resize(d.x.size());
    for (std::size_t t = 0; t < d.x.size(); ++t) {
        d.y[t] = regression(spec.model, d.x[t]) + errors[t];
    }
    return d;
}

} // namespace locpoly

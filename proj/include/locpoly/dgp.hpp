#pragma once

#include <cstdint>
#include <vector>

#include "locpoly/dataset.hpp"
#include "locpoly/rng.hpp"

namespace locpoly {

// Simulation designs: m1(x) = sin(x) with Uniform[0, 2pi] regressors,
// m2(x) = 3(x-1/2)^3 + x/4 + 9/8 with Beta(2,2) regressors.
enum class Model { m1, m2 };

const char* model_name(Model m);
Model model_from_name(std::string_view name);

double regression(Model m, double x);

// First derivative.  m1's true derivative is cos(x); paper_literal flips the
// sign to match a printed formula some reference tables were built against.
double derivative(Model m, double x, bool paper_literal = false);

struct DgpSpec {
    Model model = Model::m1;
    double rho = 0.0;
    double sigma2 = 0.01;   // innovation variance
    int n = 0;
    std::uint64_t seed = 0;
};

// Innovation variance that makes the stationary error variance equal 0.01;
// reproduces the presets (0, 0.01), (0.5, 0.0075), (0.9, 0.0019).
double preset_sigma2(double rho, double stationary_variance = 0.01);

// AR(1) errors e_t = rho e_{t-1} + sqrt(sigma2) U_t, initialized from the
// stationary law so the variance is exact at every t (no burn-in).
std::vector<double> simulate_errors(double rho, double sigma2, int n, SplitMix64& stream);

// m1: IID Uniform[0, 2pi];
// m2: IID Beta(2,2) as the median of three IID Uniform[0,1] draws.
std::vector<double> simulate_regressors(Model m, int n, SplitMix64& stream);

// Y_t = m(X_t) + e_t with independent regressor and error streams derived
// deterministically from spec.seed; a fixed seed gives a bit-identical sample.
Dataset simulate_dataset(const DgpSpec& spec);

} // namespace locpoly

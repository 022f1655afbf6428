#pragma once

#include <cmath>
#include <string_view>
#include <vector>

namespace locpoly {

enum class KernelId { epanechnikov, biweight, triangular };

// Symmetric kernel density with support [-1, 1].
class Kernel {
public:
    explicit Kernel(KernelId id) : id_(id) {}

    KernelId id() const { return id_; }
    std::string_view name() const;

    // Density value; exactly 0 outside [-1, 1].
    double operator()(double u) const {
        const double a = std::abs(u);
        if (a > 1.0) return 0.0;
        switch (id_) {
            case KernelId::epanechnikov: return 0.75 * (1.0 - u * u);
            case KernelId::biweight: {
                const double t = 1.0 - u * u;
                return 0.9375 * t * t;
            }
            case KernelId::triangular: return 1.0 - a;
        }
        return 0.0;
    }

    // K'(u) where defined; the kink of the triangular kernel at u = 0 is
    // pinned to 0, outside the support the derivative is 0.
    double derivative(double u) const {
        if (std::abs(u) > 1.0) return 0.0;
        switch (id_) {
            case KernelId::epanechnikov: return -1.5 * u;
            case KernelId::biweight: return -3.75 * u * (1.0 - u * u);
            case KernelId::triangular:
                if (u == 0.0) return 0.0;
                return u > 0.0 ? -1.0 : 1.0;
        }
        return 0.0;
    }

    static Kernel from_name(std::string_view name);

private:
    KernelId id_;
};

double kernel_eval(const Kernel& k, double u);

// mu_l = integral of u^l K(u) du when squared is false,
// nu_l = integral of u^l K(u)^2 du when squared is true.
// Closed forms for the built-in kernels, adaptive quadrature (abs tol 1e-12)
// otherwise.
double kernel_moment(const Kernel& k, int l, bool squared);

// Forces the quadrature path; used as an in-library cross-check.
double kernel_moment_quadrature(const Kernel& k, int l, bool squared);

// Moments mu_0..mu_2p and nu_0..nu_2p for a fit of order p, computed once.
struct KernelMoments {
    std::vector<double> mu;
    std::vector<double> nu;

    static KernelMoments compute(const Kernel& k, int p);
};

} // namespace locpoly

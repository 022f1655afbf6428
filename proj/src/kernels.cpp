#include "locpoly/kernels.hpp"

#include "locpoly/errors.hpp"
#include "locpoly/numerics.hpp"

namespace locpoly {

std::string_view Kernel::name() const {
    switch (id_) {
        case KernelId::epanechnikov: return "epanechnikov";
        case KernelId::biweight: return "biweight";
        case KernelId::triangular: return "triangular";
    }
    return "unknown";
}

Kernel Kernel::from_name(std::string_view name) {
    if (name == "epanechnikov") return Kernel(KernelId::epanechnikov);
    if (name == "biweight") return Kernel(KernelId::biweight);
    if (name == "triangular") return Kernel(KernelId::triangular);
    throw InvalidInput("unknown kernel: " + std::string(name));
}

double kernel_eval(const Kernel& k, double u) { return k(u); }

namespace {

// integral over [0,1] of u^l (1-u^2)^m du = 2^m m! / ((l+1)(l+3)...(l+2m+1)),
// so every built-in moment reduces to scale / (product of odd offsets).
double rational_moment(double scale, int l, int m) {
    double denom = 1.0;
    for (int k = 0; k <= m; ++k) denom *= static_cast<double>(l + 2 * k + 1);
    return scale / denom;
}

double triangular_moment(int l, bool squared) {
    const double l1 = l + 1.0;
    const double l2 = l + 2.0;
    const double l3 = l + 3.0;
    return squared ? 4.0 / (l1 * l2 * l3) : 2.0 / (l1 * l2);
}

} // namespace

double kernel_moment(const Kernel& k, int l, bool squared) {
    if (l < 0) throw InvalidInput("kernel_moment: l must be >= 0");
    if (l % 2 == 1) return 0.0;
    switch (k.id()) {
        case KernelId::epanechnikov:
            return squared ? rational_moment(9.0, l, 2) : rational_moment(3.0, l, 1);
        case KernelId::biweight:
            return squared ? rational_moment(675.0, l, 4) : rational_moment(15.0, l, 2);
        case KernelId::triangular:
            return triangular_moment(l, squared);
    }
    return kernel_moment_quadrature(k, l, squared);
}

double kernel_moment_quadrature(const Kernel& k, int l, bool squared) {
    if (l < 0) throw InvalidInput("kernel_moment_quadrature: l must be >= 0");
    auto f = [&](double u) {
        const double kv = k(u);
        return numerics::ipow(u, l) * (squared ? kv * kv : kv);
    };
    // Split at 0: the triangular kernel has a kink there.
    return numerics::integrate(f, -1.0, 0.0, 5e-13) + numerics::integrate(f, 0.0, 1.0, 5e-13);
}

KernelMoments KernelMoments::compute(const Kernel& k, int p) {
    if (p < 0) throw InvalidInput("KernelMoments: p must be >= 0");
    KernelMoments m;
    m.mu.resize(2 * p + 1);
    m.nu.resize(2 * p + 1);
    for (int l = 0; l <= 2 * p; ++l) {
        m.mu[l] = kernel_moment(k, l, false);
        m.nu[l] = kernel_moment(k, l, true);
    }
    return m;
}

} // namespace locpoly

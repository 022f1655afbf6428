#pragma once

#include <cmath>

namespace locpoly::numerics {

namespace detail {

template <class F>
double adapt(F& f, double a, double fa, double b, double fb, double m, double fm,
             double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= 52 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1);
}

} // namespace detail

// Adaptive Simpson quadrature with absolute tolerance.
template <class F>
double integrate(F f, double a, double b, double abs_tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adapt(f, a, fa, b, fb, m, fm, whole, abs_tol, 0);
}

// u^l for small nonnegative integer l.
inline double ipow(double u, int l) {
    double r = 1.0;
    for (int i = 0; i < l; ++i) r *= u;
    return r;
}

} // namespace locpoly::numerics

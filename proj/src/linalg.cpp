#include "locpoly/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "locpoly/errors.hpp"

namespace locpoly::linalg {

namespace {

// In-place LDLT of a symmetric matrix (unit L below the diagonal, D on it).
// Requires positive pivots; returns false otherwise.
bool ldlt_factor(double* m, int n) {
    for (int j = 0; j < n; ++j) {
        double d = m[j * n + j];
        for (int k = 0; k < j; ++k) d -= m[j * n + k] * m[j * n + k] * m[k * n + k];
        if (!(d > 0.0) || !std::isfinite(d)) return false;
        m[j * n + j] = d;
        for (int i = j + 1; i < n; ++i) {
            double v = m[i * n + j];
            for (int k = 0; k < j; ++k) v -= m[i * n + k] * m[j * n + k] * m[k * n + k];
            m[i * n + j] = v / d;
        }
    }
    return true;
}

void ldlt_solve(const double* f, int n, const double* b, double* x) {
    for (int i = 0; i < n; ++i) {
        double v = b[i];
        for (int k = 0; k < i; ++k) v -= f[i * n + k] * x[k];
        x[i] = v;
    }
    for (int i = 0; i < n; ++i) x[i] /= f[i * n + i];
    for (int i = n - 1; i >= 0; --i) {
        double v = x[i];
        for (int k = i + 1; k < n; ++k) v -= f[k * n + i] * x[k];
        x[i] = v;
    }
}

bool lu_factor(double* m, int* piv, int n) {
    for (int k = 0; k < n; ++k) {
        int best = k;
        double bmag = std::abs(m[k * n + k]);
        for (int i = k + 1; i < n; ++i) {
            const double mag = std::abs(m[i * n + k]);
            if (mag > bmag) {
                bmag = mag;
                best = i;
            }
        }
        if (!(bmag > 0.0) || !std::isfinite(bmag)) return false;
        piv[k] = best;
        if (best != k) {
            for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[best * n + j]);
        }
        const double pivot = m[k * n + k];
        for (int i = k + 1; i < n; ++i) {
            const double l = m[i * n + k] / pivot;
            m[i * n + k] = l;
            for (int j = k + 1; j < n; ++j) m[i * n + j] -= l * m[k * n + j];
        }
    }
    return true;
}

void lu_solve(const double* lu, const int* piv, int n, const double* b, double* x) {
    for (int i = 0; i < n; ++i) x[i] = b[i];
    for (int k = 0; k < n; ++k) {
        if (piv[k] != k) std::swap(x[k], x[piv[k]]);
        for (int i = k + 1; i < n; ++i) x[i] -= lu[i * n + k] * x[k];
    }
    for (int i = n - 1; i >= 0; --i) {
        double v = x[i];
        for (int k = i + 1; k < n; ++k) v -= lu[i * n + k] * x[k];
        x[i] = v / lu[i * n + i];
    }
}

} // namespace

double norm1(const double* a, int n) {
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::abs(a[i * n + j]);
        best = std::max(best, s);
    }
    return best;
}

double solve_sym(const double* a, int n, const double* b, double* x) {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    double f[kMaxDim * kMaxDim];
    int piv[kMaxDim];
    if (n < 1 || n > kMaxDim) throw InvalidInput("solve_sym: dimension out of range");

    std::copy(a, a + n * n, f);
    bool spd = ldlt_factor(f, n);
    if (!spd) {
        std::copy(a, a + n * n, f);
        if (!lu_factor(f, piv, n)) {
            std::fill(x, x + n, nan);
            return inf;
        }
    }

    auto solve_with = [&](const double* rhs, double* out) {
        if (spd) {
            ldlt_solve(f, n, rhs, out);
        } else {
            lu_solve(f, piv, n, rhs, out);
        }
    };

    solve_with(b, x);
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(x[i])) return inf;
    }

    // ||A^{-1}||_1 from its explicit columns; matrices are tiny.
    double inv_norm = 0.0;
    double e[kMaxDim];
    double col[kMaxDim];
    for (int j = 0; j < n; ++j) {
        std::fill(e, e + n, 0.0);
        e[j] = 1.0;
        solve_with(e, col);
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::abs(col[i]);
        if (!std::isfinite(s)) return inf;
        inv_norm = std::max(inv_norm, s);
    }
    return norm1(a, n) * inv_norm;
}

double solve_sym(const SquareMatrix& a, const std::vector<double>& b, std::vector<double>& x) {
    x.assign(a.n, 0.0);
    return solve_sym(a.a.data(), a.n, b.data(), x.data());
}

SquareMatrix invert(const SquareMatrix& a) {
    const int n = a.n;
    SquareMatrix inv(n);
    std::vector<double> e(n, 0.0);
    std::vector<double> col(n, 0.0);
    for (int j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[j] = 1.0;
        const double cond = solve_sym(a.a.data(), n, e.data(), col.data());
        if (!std::isfinite(cond)) throw SingularDesign("invert: matrix is numerically singular");
        for (int i = 0; i < n; ++i) inv.at(i, j) = col[i];
    }
    return inv;
}

std::vector<double> qr_least_squares(const std::vector<double>& a, int rows, int cols,
                                     const std::vector<double>& y) {
    if (rows < cols || cols < 1) throw InvalidInput("qr_least_squares: need rows >= cols >= 1");
    if (static_cast<int>(a.size()) != rows * cols || static_cast<int>(y.size()) != rows) {
        throw InvalidInput("qr_least_squares: inconsistent dimensions");
    }
    std::vector<double> r = a;
    std::vector<double> rhs = y;
    std::vector<double> v(rows);

    for (int k = 0; k < cols; ++k) {
        double norm = 0.0;
        for (int i = k; i < rows; ++i) norm += r[i * cols + k] * r[i * cols + k];
        norm = std::sqrt(norm);
        if (!(norm > 0.0)) throw SingularDesign("qr_least_squares: rank-deficient design");

        const double akk = r[k * cols + k];
        const double alpha = akk >= 0.0 ? -norm : norm;
        double vnorm2 = 0.0;
        v[k] = akk - alpha;
        vnorm2 += v[k] * v[k];
        for (int i = k + 1; i < rows; ++i) {
            v[i] = r[i * cols + k];
            vnorm2 += v[i] * v[i];
        }
        if (!(vnorm2 > 0.0)) continue; // column already triangular

        for (int j = k; j < cols; ++j) {
            double dot = 0.0;
            for (int i = k; i < rows; ++i) dot += v[i] * r[i * cols + j];
            const double scale = 2.0 * dot / vnorm2;
            for (int i = k; i < rows; ++i) r[i * cols + j] -= scale * v[i];
        }
        double dot = 0.0;
        for (int i = k; i < rows; ++i) dot += v[i] * rhs[i];
        const double scale = 2.0 * dot / vnorm2;
        for (int i = k; i < rows; ++i) rhs[i] -= scale * v[i];
    }

    std::vector<double> x(cols);
    for (int i = cols - 1; i >= 0; --i) {
        double vsum = rhs[i];
        for (int j = i + 1; j < cols; ++j) vsum -= r[i * cols + j] * x[j];
        const double diag = r[i * cols + i];
        if (!(std::abs(diag) > 0.0) || !std::isfinite(diag)) {
            throw SingularDesign("qr_least_squares: zero pivot in back substitution");
        }
        x[i] = vsum / diag;
    }
    return x;
}

} // namespace locpoly::linalg

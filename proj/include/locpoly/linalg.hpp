#pragma once

#include <cstddef>
#include <vector>

namespace locpoly::linalg {

// Every system in this project is (p+1) x (p+1) with small p.
inline constexpr int kMaxDim = 8;

// Row-major square matrix, small dimensions only.
struct SquareMatrix {
    int n = 0;
    std::vector<double> a;

    SquareMatrix() = default;
    explicit SquareMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

double norm1(const double* a, int n);

// Solves A x = b for symmetric A via LDLT, falling back to partially pivoted
// LU when the symmetric factorization breaks down.  Returns the 1-norm
// condition estimate ||A||_1 ||A^{-1}||_1, +inf when A is numerically
// singular (x is then filled with NaN).
double solve_sym(const double* a, int n, const double* b, double* x);
double solve_sym(const SquareMatrix& a, const std::vector<double>& b, std::vector<double>& x);

// Inverse through the same factorizations; throws SingularDesign when singular.
SquareMatrix invert(const SquareMatrix& a);

// Least squares min ||A x - y||_2 by Householder QR (rows >= cols); throws
// SingularDesign on rank deficiency.
std::vector<double> qr_least_squares(const std::vector<double>& a, int rows, int cols,
                                     const std::vector<double>& y);

} // namespace locpoly::linalg

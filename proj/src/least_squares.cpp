#include "btm/least_squares.hpp"

#include "btm/eigen.hpp"
#include "btm/error.hpp"

#include <cmath>

namespace btm {
namespace {

// Cholesky solve of a k x k SPD system; k is 2 in the separation path.
std::vector<double> cholesky_solve(Matrix g, std::vector<double> b) {
    const int k = g.rows();
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = g(i, j);
            for (int l = 0; l < j; ++l) s -= g(i, l) * g(j, l);
            if (i == j) {
                require(s > 0.0, "normal equations: matrix not positive definite");
                g(i, i) = std::sqrt(s);
            } else {
                g(i, j) = s / g(j, j);
            }
        }
    }
    for (int i = 0; i < k; ++i) {
        double s = b[i];
        for (int l = 0; l < i; ++l) s -= g(i, l) * b[l];
        b[i] = s / g(i, i);
    }
    for (int i = k - 1; i >= 0; --i) {
        double s = b[i];
        for (int l = i + 1; l < k; ++l) s -= g(l, i) * b[l];
        b[i] = s / g(i, i);
    }
    return b;
}

} // namespace

LeastSquaresSolution solve_normal_equations(const Matrix& X, std::span<const double> y) {
    const int t = X.rows(), k = X.cols();
    require(k >= 1 && t >= k, "normal equations: need T >= k >= 1");
    require(static_cast<int>(y.size()) == t, "normal equations: dimension mismatch");
    require(X.all_finite(), "normal equations: non-finite design matrix");

    bool all_zero = true;
    for (double v : X.data())
        if (v != 0.0) { all_zero = false; break; }
    require(!all_zero, "normal equations: all-zero design matrix");

    Matrix gram(k, k);
    std::vector<double> rhs(k, 0.0);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            double s = 0.0;
            for (int r = 0; r < t; ++r) s += X(r, i) * X(r, j);
            gram(i, j) = s;
            gram(j, i) = s;
        }
        double s = 0.0;
        for (int r = 0; r < t; ++r) s += X(r, i) * y[r];
        rhs[i] = s;
    }

    EigenPairs spec = symmetric_eigen(SymMatrix(gram));
    double lmax = spec.values.front(), lmin = spec.values.back();

    LeastSquaresSolution out;
    if (!(lmin > 0.0) || lmax / lmin > 1e10) {
        double tr = 0.0;
        for (int i = 0; i < k; ++i) tr += gram(i, i);
        // trace > 0 unless X == 0, which was rejected above
        double ridge = 1e-8 * tr / k;
        Matrix reg = gram;
        for (int i = 0; i < k; ++i) reg(i, i) += ridge;
        out.coefficients = cholesky_solve(std::move(reg), std::move(rhs));
        out.condition_flag = ConditionFlag::Regularized;
    } else {
        out.coefficients = cholesky_solve(gram, std::move(rhs));
        out.condition_flag = ConditionFlag::WellConditioned;
    }

    double rss = 0.0;
    for (int r = 0; r < t; ++r) {
        double fit = 0.0;
        for (int j = 0; j < k; ++j) fit += X(r, j) * out.coefficients[j];
        double d = fit - y[r];
        rss += d * d;
    }
    out.residual_l2 = std::sqrt(rss);
    return out;
}

} // namespace btm

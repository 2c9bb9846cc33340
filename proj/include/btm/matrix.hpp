#pragma once

#include <span>
#include <vector>

namespace btm {

// Dense row-major matrix. Everything in this project is small (a few hundred
// rows at most), so no view machinery beyond row spans.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<const double> row(int i) const { return {a_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }
    std::span<double> row(int i) { return {a_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }

    const std::vector<double>& data() const { return a_; }

    bool all_finite() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

// Symmetric matrix with validated construction: input must be square, finite,
// and symmetric within 1e-12; entries are then symmetrized exactly so
// downstream kernels can rely on a(i,j) == a(j,i).
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(Matrix m);

    int n() const { return m_.rows(); }
    double operator()(int i, int j) const { return m_(i, j); }
    const Matrix& full() const { return m_; }

    double trace() const;

private:
    Matrix m_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double squared_distance(std::span<const double> a, std::span<const double> b);

} // namespace btm

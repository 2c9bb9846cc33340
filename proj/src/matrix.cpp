#include "btm/matrix.hpp"

#include "btm/error.hpp"

#include <cmath>

namespace btm {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return {};
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        require(rows[i].size() == rows[0].size(), "from_rows: ragged rows");
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool Matrix::all_finite() const {
    for (double v : a_)
        if (!std::isfinite(v)) return false;
    return true;
}

SymMatrix::SymMatrix(Matrix m) {
    require(m.rows() == m.cols(), "SymMatrix: matrix is not square");
    require(m.all_finite(), "SymMatrix: non-finite entries");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j) {
            require(std::fabs(m(i, j) - m(j, i)) <= 1e-12,
                    "SymMatrix: input is not symmetric");
            double v = 0.5 * (m(i, j) + m(j, i));
            m(i, j) = v;
            m(j, i) = v;
        }
    m_ = std::move(m);
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n(); ++i) t += m_(i, i);
    return t;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

} // namespace btm

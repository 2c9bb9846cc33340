#include "btm/ref_kernels.hpp"

#include "btm/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace btm::ref {

Matrix similarity_matrix(const Matrix& profiles) {
    const int n = profiles.rows();
    require(n >= 2, "similarity matrix: need at least 2 profiles");

    Matrix dist(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dist(i, j) = std::sqrt(squared_distance(profiles.row(i), profiles.row(j)));

    std::vector<double> rho(n);
    for (int i = 0; i < n; ++i) {
        std::vector<double> others;
        for (int j = 0; j < n; ++j)
            if (j != i) others.push_back(dist(i, j));
        std::sort(others.begin(), others.end());
        int idx = std::min<int>(7, static_cast<int>(others.size())) - 1;
        rho[i] = std::max(others[idx], 1e-9);
    }

    Matrix w(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                w(i, j) = 1.0;
            } else {
                double d = dist(i, j);
                w(i, j) = std::exp(-(d * d) / (rho[i] * rho[j]));
            }
        }
    }
    return w;
}

double hubert_gamma(const Matrix& profiles, std::span<const int> labels, const Matrix& centers) {
    const int n = profiles.rows();
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double p = std::sqrt(squared_distance(profiles.row(i), profiles.row(j)));
            double q = std::sqrt(squared_distance(centers.row(labels[i]), centers.row(labels[j])));
            total += p * q;
        }
    return total / (0.5 * n * (n - 1));
}

std::vector<int> assign_labels(const Matrix& points, const Matrix& centers) {
    std::vector<int> labels(points.rows());
    for (int i = 0; i < points.rows(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        int arg = 0;
        for (int c = 0; c < centers.rows(); ++c) {
            double d = squared_distance(points.row(i), centers.row(c));
            if (d < best) {
                best = d;
                arg = c;
            }
        }
        labels[i] = arg;
    }
    return labels;
}

double residual_l1(std::span<const double> estimate, std::span<const double> measured) {
    double s = 0.0;
    for (size_t i = 0; i < estimate.size(); ++i) s += std::fabs(estimate[i] - measured[i]);
    return s;
}

} // namespace btm::ref

#pragma once

#include "btm/matrix.hpp"

#include <cstdint>
#include <vector>

namespace btm {

struct KMeansResult {
    std::vector<int> labels;
    Matrix centers; // k x d
    double wcss = 0.0;
    std::vector<double> wcss_history; // per Lloyd iteration of the winning restart
    int iterations = 0;
};

// k-means++ seeded Lloyd iterations, best of `restarts` by within-cluster sum
// of squares. Deterministic for a fixed seed. Iterates to an assignment
// fixpoint or 300 iterations; empty clusters are reseeded at the point
// farthest from its center.
KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed, int restarts = 8);

} // namespace btm

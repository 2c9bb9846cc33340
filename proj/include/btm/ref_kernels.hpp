#pragma once

#include "btm/matrix.hpp"

#include <span>
#include <vector>

namespace btm::ref {

// Plain serial implementations of the parallel kernels, kept as the oracle
// the OpenMP paths are tested and benchmarked against. Straight loops, scalar
// accumulators, no shared code with the production kernels beyond the small
// vector helpers.

// Gaussian-kernel similarity matrix with 7th-nearest-neighbour local scales.
Matrix similarity_matrix(const Matrix& profiles);

double hubert_gamma(const Matrix& profiles, std::span<const int> labels, const Matrix& centers);

// Nearest-center assignment step of k-means.
std::vector<int> assign_labels(const Matrix& points, const Matrix& centers);

double residual_l1(std::span<const double> estimate, std::span<const double> measured);

} // namespace btm::ref

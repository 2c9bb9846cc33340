#pragma once

#include "btm/eigen.hpp"
#include "btm/matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace btm {

// Fully connected similarity graph over profile vectors. Edge weights use a
// Gaussian kernel with per-vertex local scales rho_i (distance to the 7th
// nearest neighbour, or the farthest one for tiny graphs), floored at 1e-9.
struct SimilarityGraph {
    Matrix vertices;            // n x d profile vectors
    SymMatrix weights;          // W, entries in (0, 1], W(i,i) = 1
    std::vector<double> scales; // rho_i > 0
    bool degenerate_scales = false; // all pairwise distances hit the floor
};

SimilarityGraph build_similarity_graph(const Matrix& profiles);

// L = D^{-1/2} W D^{-1/2}, D = diag(row sums). Requires strictly positive
// row sums.
SymMatrix normalized_affinity(const SymMatrix& w);
SymMatrix normalized_affinity(const SimilarityGraph& g);

// Top-k eigenvectors of L (largest eigenvalues) as columns, rows normalized
// to unit length; rows with norm < 1e-12 are left at zero.
Matrix spectral_embed(const SymMatrix& l, int k);
Matrix spectral_embed(const EigenPairs& spectrum, int k);

// Modified Hubert Gamma statistic: mean over vertex pairs of
// ||V_i - V_j|| * ||center(label_i) - center(label_j)||.
double hubert_gamma(const Matrix& profiles, std::span<const int> labels, const Matrix& centers);

struct ClusteringResult {
    std::vector<int> labels;
    int k = 0;
    Matrix embedding;                // n x k
    std::vector<double> gamma_curve; // gamma at k = 2 .. k_max (empty for fixed-k runs)
};

// Full pipeline at a fixed cluster count: graph -> L -> embed -> k-means.
ClusteringResult cluster_profiles(const Matrix& profiles, int k, std::uint64_t seed);

// Sweeps k = 2..k_max, computes the Gamma curve, and returns the clustering
// at the knee. gamma[0] corresponds to k = 2.
ClusteringResult select_cluster_count(const Matrix& profiles, int k_max, std::uint64_t seed);

// Knee of a Gamma curve: interior k with the sharpest downward bend
// (max of 2*G(k) - G(k-1) - G(k+1)); ties resolve to the smallest k.
int knee_of_curve(std::span<const double> gamma, int k_first = 2);

// Mean profile per cluster, in the original profile space.
Matrix cluster_mean_profiles(const Matrix& profiles, std::span<const int> labels, int k);

} // namespace btm

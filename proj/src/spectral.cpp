#include "btm/spectral.hpp"

#include "btm/error.hpp"
#include "btm/kmeans.hpp"
#include "btm/parallel.hpp"
#include "btm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace btm {

namespace {
constexpr double kScaleFloor = 1e-9;
constexpr int kScaleNeighbour = 7;
} // namespace

SimilarityGraph build_similarity_graph(const Matrix& profiles) {
    const int n = profiles.rows();
    require(n >= 2, "similarity graph: need at least 2 profiles");
    require(profiles.all_finite(), "similarity graph: non-finite profile");

    Matrix dist(n, n);
    par::parallel_for(n, [&](std::ptrdiff_t i) {
        for (int j = 0; j < n; ++j)
            dist(static_cast<int>(i), j) =
                std::sqrt(squared_distance(profiles.row(static_cast<int>(i)), profiles.row(j)));
    });

    SimilarityGraph g;
    g.vertices = profiles;
    g.scales.resize(n);
    bool any_above_floor = false;
    for (int i = 0; i < n; ++i) {
        std::vector<double> others;
        others.reserve(n - 1);
        for (int j = 0; j < n; ++j)
            if (j != i) others.push_back(dist(i, j));
        std::sort(others.begin(), others.end());
        int idx = std::min<int>(kScaleNeighbour, static_cast<int>(others.size())) - 1;
        g.scales[i] = std::max(others[idx], kScaleFloor);
        if (g.scales[i] > kScaleFloor) any_above_floor = true;
    }
    g.degenerate_scales = !any_above_floor; // duplicate-only input; flagged, not fatal

    Matrix w(n, n);
    par::parallel_for(n, [&](std::ptrdiff_t ii) {
        const int i = static_cast<int>(ii);
        w(i, i) = 1.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            double d = dist(i, j);
            w(i, j) = std::exp(-(d * d) / (g.scales[i] * g.scales[j]));
        }
    });
    g.weights = SymMatrix(std::move(w));
    return g;
}

SymMatrix normalized_affinity(const SymMatrix& w) {
    const int n = w.n();
    std::vector<double> inv_sqrt_deg(n);
    for (int i = 0; i < n; ++i) {
        double deg = 0.0;
        for (int j = 0; j < n; ++j) deg += w(i, j);
        require(deg > 0.0, "normalized affinity: zero row sum");
        inv_sqrt_deg[i] = 1.0 / std::sqrt(deg);
    }
    Matrix l(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) l(i, j) = w(i, j) * inv_sqrt_deg[i] * inv_sqrt_deg[j];
    return SymMatrix(std::move(l));
}

SymMatrix normalized_affinity(const SimilarityGraph& g) { return normalized_affinity(g.weights); }

Matrix spectral_embed(const EigenPairs& spectrum, int k) {
    const int n = spectrum.vectors.rows();
    require(k >= 1 && k <= n, "spectral embed: k out of range");
    Matrix e(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) e(i, j) = spectrum.vectors(i, j);
    for (int i = 0; i < n; ++i) {
        double nrm = norm2(e.row(i));
        if (nrm < 1e-12) continue;
        for (int j = 0; j < k; ++j) e(i, j) /= nrm;
    }
    return e;
}

Matrix spectral_embed(const SymMatrix& l, int k) {
    return spectral_embed(symmetric_eigen(l), k);
}

double hubert_gamma(const Matrix& profiles, std::span<const int> labels, const Matrix& centers) {
    const int n = profiles.rows();
    require(n >= 2, "hubert gamma: need at least 2 vertices");
    require(static_cast<int>(labels.size()) == n, "hubert gamma: label count mismatch");
    for (int lab : labels)
        require(lab >= 0 && lab < centers.rows(), "hubert gamma: label out of range");

    // per-i partial sums, reduced serially, so the result does not depend on
    // the thread count
    std::vector<double> partial(n, 0.0);
    par::parallel_for(n, [&](std::ptrdiff_t ii) {
        const int i = static_cast<int>(ii);
        double s = 0.0;
        for (int j = i + 1; j < n; ++j) {
            double p = std::sqrt(squared_distance(profiles.row(i), profiles.row(j)));
            double q = std::sqrt(
                squared_distance(centers.row(labels[i]), centers.row(labels[j])));
            s += p * q;
        }
        partial[i] = s;
    });
    double total = 0.0;
    for (double v : partial) total += v;
    const double pairs = 0.5 * n * (n - 1);
    return total / pairs;
}

Matrix cluster_mean_profiles(const Matrix& profiles, std::span<const int> labels, int k) {
    Matrix centers(k, profiles.cols());
    std::vector<int> counts(k, 0);
    for (int i = 0; i < profiles.rows(); ++i) {
        int c = labels[i];
        require(c >= 0 && c < k, "cluster means: label out of range");
        ++counts[c];
        for (int j = 0; j < profiles.cols(); ++j) centers(c, j) += profiles(i, j);
    }
    for (int c = 0; c < k; ++c) {
        require(counts[c] > 0, "cluster means: empty cluster");
        for (int j = 0; j < profiles.cols(); ++j) centers(c, j) /= counts[c];
    }
    return centers;
}

namespace {

ClusteringResult run_at_k(const EigenPairs& spectrum, int k, std::uint64_t seed) {
    ClusteringResult res;
    res.k = k;
    res.embedding = spectral_embed(spectrum, k);
    KMeansResult km = kmeans(res.embedding, k, mix64(seed ^ (0x5bd1e995ULL * k)));
    res.labels = std::move(km.labels);
    return res;
}

} // namespace

ClusteringResult cluster_profiles(const Matrix& profiles, int k, std::uint64_t seed) {
    require(k >= 1 && k <= profiles.rows(), "cluster: k out of range");
    SimilarityGraph g = build_similarity_graph(profiles);
    EigenPairs spectrum = symmetric_eigen(normalized_affinity(g));
    return run_at_k(spectrum, k, seed);
}

int knee_of_curve(std::span<const double> gamma, int k_first) {
    require(gamma.size() >= 3, "knee: need at least 3 curve points");
    int best_k = k_first + 1;
    double best = -std::numeric_limits<double>::infinity();
    for (size_t i = 1; i + 1 < gamma.size(); ++i) {
        double bend = 2.0 * gamma[i] - gamma[i - 1] - gamma[i + 1];
        if (bend > best) { // strict: ties keep the smallest k
            best = bend;
            best_k = k_first + static_cast<int>(i);
        }
    }
    return best_k;
}

ClusteringResult select_cluster_count(const Matrix& profiles, int k_max, std::uint64_t seed) {
    const int n = profiles.rows();
    require(k_max >= 2 && k_max <= n - 1, "select cluster count: need 2 <= k_max <= n-1");
    require(k_max >= 4, "select cluster count: k_max must be >= 4 to bracket a knee");

    SimilarityGraph g = build_similarity_graph(profiles);
    EigenPairs spectrum = symmetric_eigen(normalized_affinity(g));

    std::vector<ClusteringResult> runs(k_max - 1);
    std::vector<double> gamma(k_max - 1);
    // per-k runs are independent; the spectrum is shared
    par::parallel_for(k_max - 1, [&](std::ptrdiff_t idx) {
        int k = 2 + static_cast<int>(idx);
        runs[idx] = run_at_k(spectrum, k, seed);
        Matrix centers = cluster_mean_profiles(profiles, runs[idx].labels, k);
        gamma[idx] = hubert_gamma(profiles, runs[idx].labels, centers);
    });

    int knee = knee_of_curve(gamma, 2);
    ClusteringResult res = std::move(runs[knee - 2]);
    res.gamma_curve = std::move(gamma);
    return res;
}

} // namespace btm

#include "btm/kmeans.hpp"

#include "btm/error.hpp"
#include "btm/parallel.hpp"
#include "btm/rng.hpp"

#include <cmath>
#include <limits>

namespace btm {
namespace {

constexpr int kMaxIterations = 300;

void assign_all(const Matrix& points, const Matrix& centers, std::vector<int>& labels,
                std::vector<double>& dist2) {
    const int n = points.rows(), k = centers.rows();
    par::parallel_for(n, [&](std::ptrdiff_t i) {
        double best = std::numeric_limits<double>::infinity();
        int arg = 0;
        for (int c = 0; c < k; ++c) {
            double d = squared_distance(points.row(static_cast<int>(i)), centers.row(c));
            if (d < best) {
                best = d;
                arg = c;
            }
        }
        labels[i] = arg;
        dist2[i] = best;
    });
}

Matrix plus_plus_init(const Matrix& points, int k, Rng& rng) {
    const int n = points.rows(), d = points.cols();
    Matrix centers(k, d);
    int first = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
    for (int j = 0; j < d; ++j) centers(0, j) = points(first, j);

    std::vector<double> dist2(n);
    for (int i = 0; i < n; ++i) dist2[i] = squared_distance(points.row(i), centers.row(0));

    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (double v : dist2) total += v;
        int pick;
        if (total <= 0.0) {
            pick = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
        } else {
            double u = rng.uniform() * total;
            double acc = 0.0;
            pick = n - 1;
            for (int i = 0; i < n; ++i) {
                acc += dist2[i];
                if (u < acc) {
                    pick = i;
                    break;
                }
            }
        }
        for (int j = 0; j < d; ++j) centers(c, j) = points(pick, j);
        for (int i = 0; i < n; ++i)
            dist2[i] = std::min(dist2[i], squared_distance(points.row(i), centers.row(c)));
    }
    return centers;
}

KMeansResult lloyd(const Matrix& points, int k, Rng rng) {
    const int n = points.rows(), d = points.cols();
    KMeansResult res;
    res.centers = plus_plus_init(points, k, rng);
    res.labels.assign(n, -1);

    std::vector<double> dist2(n);
    std::vector<int> prev(n, -1);
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        assign_all(points, res.centers, res.labels, dist2);

        double wcss = 0.0;
        for (double v : dist2) wcss += v;
        res.wcss_history.push_back(wcss);
        res.iterations = iter + 1;
        if (res.labels == prev) break;
        prev = res.labels;

        // recompute centers; reseed empties at the globally farthest point
        Matrix sums(k, d);
        std::vector<int> counts(k, 0);
        for (int i = 0; i < n; ++i) {
            ++counts[res.labels[i]];
            auto row = points.row(i);
            for (int j = 0; j < d; ++j) sums(res.labels[i], j) += row[j];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[c] == 0) {
                int far = 0;
                double best = -1.0;
                for (int i = 0; i < n; ++i)
                    if (dist2[i] > best) {
                        best = dist2[i];
                        far = i;
                    }
                for (int j = 0; j < d; ++j) sums(c, j) = points(far, j);
                counts[c] = 1;
                dist2[far] = 0.0;
            }
            for (int j = 0; j < d; ++j) res.centers(c, j) = sums(c, j) / counts[c];
        }
    }
    res.wcss = res.wcss_history.back();
    return res;
}

} // namespace

KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed, int restarts) {
    const int n = points.rows();
    require(n >= 1, "kmeans: empty input");
    require(k >= 1 && k <= n, "kmeans: k must be in [1, number of points]");
    require(restarts >= 1, "kmeans: restarts must be >= 1");
    require(points.all_finite(), "kmeans: non-finite input");

    KMeansResult best;
    best.wcss = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        KMeansResult cand = lloyd(points, k, Rng::derive(seed, "kmeans-restart", r));
        if (cand.wcss < best.wcss) best = std::move(cand);
    }
    return best;
}

} // namespace btm

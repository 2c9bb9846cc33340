#include "btm/eigen.hpp"

#include "btm/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace btm {

EigenPairs symmetric_eigen(const SymMatrix& m) {
    const int n = m.n();
    require(n >= 1, "symmetric_eigen: empty matrix");

    Matrix a = m.full();
    Matrix v(n, n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;

    double frob = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
    frob = std::sqrt(frob);
    const double tol = (frob > 0 ? frob : 1.0) * 1e-14;

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(off) <= tol) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (std::fabs(apq) <= tol / (n * n)) continue;
                double app = a(p, p), aqq = a(q, q);
                double theta = 0.5 * (aqq - app) / apq;
                double t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                for (int i = 0; i < n; ++i) {
                    double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a(p, i), aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) > a(j, j); });

    EigenPairs out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        int src = order[k];
        out.values[k] = a(src, src);
        // sign fix: largest-magnitude entry positive
        int arg = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            double mag = std::fabs(v(i, src));
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        double sgn = v(arg, src) < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) out.vectors(i, k) = sgn * v(i, src);
    }
    return out;
}

} // namespace btm

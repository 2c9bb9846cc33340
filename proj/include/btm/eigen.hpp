#pragma once

#include "btm/matrix.hpp"

#include <vector>

namespace btm {

// Full spectrum of a symmetric matrix. values sorted descending, vectors are
// the matching orthonormal columns. Sign convention: the largest-magnitude
// entry of each vector is positive, so decompositions are reproducible.
struct EigenPairs {
    std::vector<double> values;
    Matrix vectors; // n x n, column i pairs with values[i]
};

// Cyclic Jacobi rotations. Matrices here are at most a few hundred square
// (customer counts), where Jacobi is plenty fast and very robust.
EigenPairs symmetric_eigen(const SymMatrix& m);

} // namespace btm

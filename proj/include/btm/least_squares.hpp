#pragma once

#include "btm/matrix.hpp"

#include <span>
#include <vector>

namespace btm {

enum class ConditionFlag { WellConditioned, Regularized };

struct LeastSquaresSolution {
    std::vector<double> coefficients;
    double residual_l2 = 0.0;
    ConditionFlag condition_flag = ConditionFlag::WellConditioned;
};

// Minimizes ||X c - y||_2 through the normal equations. When cond(X'X)
// exceeds 1e10 (nighttime windows push the solar column toward zero and X'X
// toward singular) a ridge of 1e-8 * trace(X'X)/k is added to the diagonal
// and the solution is flagged Regularized.
LeastSquaresSolution solve_normal_equations(const Matrix& X, std::span<const double> y);

} // namespace btm

#pragma once

#include <Eigen/Core>

namespace bmax {

/// log(sum_i exp(x_i)) with the max-exponent shift. Safe for exponents far
/// outside the range of exp(); returns -inf for an empty input.
double log_sum_exp(const Eigen::Ref<const Eigen::VectorXd>& exponents);

/// Normalized exp(x_i - max x) weights. The input is a vector of log-scale
/// scores; the output sums to 1.
Eigen::VectorXd softmax(const Eigen::Ref<const Eigen::VectorXd>& exponents);

}  // namespace bmax

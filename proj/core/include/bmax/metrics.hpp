#pragma once

#include "bmax/types.hpp"

namespace bmax {

/// The model averaging estimate f_lambda = sum_j lambda_j f_j.
Vector mix(const Dictionary& dict, const SimplexWeights& lambda);

/// Kullback-Leibler divergence sum_j lambda_j log(lambda_j / pi_j) with the
/// convention 0 log 0 = 0. Requires a strictly positive prior.
double kl_divergence(const SimplexWeights& lambda, const SimplexWeights& prior);

/// The rho-entropy K_rho(lambda, pi): KL divergence for rho(t)=t, the linear
/// entropy sum_j lambda_j log(1/pi_j) for rho(t)=1.
double rho_entropy(const SimplexWeights& lambda, const SimplexWeights& prior,
                   Entropy entropy);

/// Mean squared error (1/n) ||estimate - truth||^2.
double mse(const Vector& estimate, const Vector& truth);

/// MSE of the estimate minus the MSE of the best dictionary element (the
/// oracle model). May be negative: an aggregate can beat the oracle model.
double regret(const Vector& estimate, const Vector& truth, const Dictionary& dict);

/// Index of the oracle model argmin_j mse(f_j, truth), smallest index on ties.
int oracle_index(const Dictionary& dict, const Vector& truth);

/// Total variation distance (1/2) sum_j |a_j - b_j|.
double total_variation(const SimplexWeights& a, const SimplexWeights& b);

}  // namespace bmax

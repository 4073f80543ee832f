#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bmax/objectives.hpp"
#include "bmax/types.hpp"

namespace bmax {

struct IterationRecord {
  int step;                   // k, starting at 1
  std::optional<int> chosen;  // candidate index J^(k) for greedy solvers
  double alpha;               // step size (2/(k+1) for greedy)
  double objective;           // objective value after the step
};

struct SolveTrace {
  std::vector<IterationRecord> iterations;
  double final_objective = 0.0;
  std::optional<SimplexWeights> final_weights;
};

enum class ExactMethod { FixedPoint, GradientDescent };

struct ExactSolveOptions {
  double grad_tolerance = 1e-10;
  int max_iterations = 100000;
  ExactMethod method = ExactMethod::FixedPoint;
};

struct ExactSolveResult {
  Vector psi;
  SolveTrace trace;
  bool converged = false;
  double grad_norm = 0.0;  // final ||grad log J||_2, reported either way
  int iterations = 0;
};

/// Minimize log J over R^n. FixedPoint iterates psi <- f_{lambda(psi)}
/// (stationarity of grad log J); GradientDescent takes steps of size 1/a2,
/// which is the same update damped by a1/a2. The fixed-point map is not a
/// contraction when the posterior spreads over candidates whose dispersion
/// exceeds 1/a1, so FixedPoint switches to the damped step after a stall is
/// detected. Non-convergence is reported through the result, not thrown.
ExactSolveResult solve_bmax_exact(const Dictionary& dict, const Observation& obs,
                                  const AggregationParams& params,
                                  const ExactSolveOptions& opts = {});

/// Warm-start overload; `initial_psi` must have n entries.
ExactSolveResult solve_bmax_exact(const Dictionary& dict, const Observation& obs,
                                  const AggregationParams& params,
                                  const ExactSolveOptions& opts,
                                  const Vector& initial_psi);

/// Called with (k, iterate) after each greedy step; the iterate is psi^(k)
/// for gma_bmax and f_{lambda^(k)} for gma_0.
using IterateObserver = std::function<void(int, const Vector&)>;

struct GmaBmaxResult {
  Vector psi;
  SolveTrace trace;
};

/// Greedy minimization of log J: psi^(0) = 0; at step k, alpha_k = 2/(k+1)
/// and J^(k) = argmin_j log J(psi^(k-1) + alpha_k (f_j - psi^(k-1))), ties to
/// the smallest index. Because alpha_1 = 1 the zero start is discarded after
/// one step and psi^(k) is a convex combination of at most k candidates.
GmaBmaxResult gma_bmax(const Dictionary& dict, const Observation& obs,
                       const AggregationParams& params, int k_max,
                       const IterateObserver& observer = {});

struct Gma0Result {
  SimplexWeights lambda;
  Vector estimate;
  SolveTrace trace;
};

/// Greedy minimization of Q over the simplex: lambda^(0) = 0 (off-simplex,
/// harmless since alpha_1 = 1), J^(k) = argmin_j Q(lambda^(k-1) +
/// alpha_k (e_j - lambda^(k-1))). Requires the linear entropy; KL is
/// rejected. Under a flat prior the selection uses the equivalent rule
/// argmin_j { ||f_j-Y||^2 - (1-nu)(1-alpha_k) ||f_lambda - f_j||^2 }.
Gma0Result gma_0(const Dictionary& dict, const Observation& obs,
                 const AggregationParams& params, int k_max,
                 const IterateObserver& observer = {});

struct EwmaResult {
  Vector estimate;
  SimplexWeights weights;
};

/// Exponential weighted model averaging: weights proportional to
/// pi_j exp(-||f_j - Y||^2 / (2 omega^2)).
EwmaResult solve_ewma(const Dictionary& dict, const Observation& obs,
                      const AggregationParams& params);

struct StarResult {
  Vector estimate;
  int k1;        // empirical risk minimizer
  int k2;        // paired candidate
  double alpha;  // mixing coefficient, clamped to [1e-12, 1-1e-12]
};

/// Two-point estimator: f_{k1} is the empirical risk minimizer; (alpha, k2)
/// jointly minimize the empirical risk of (1-alpha) f_{k1} + alpha f_j with
/// the closed-form per-candidate minimizer clamped to the open unit interval.
StarResult solve_star(const Dictionary& dict, const Observation& obs);

struct ProjResult {
  SimplexWeights lambda;
  Vector estimate;
};

/// Projection of Y onto the convex hull of the candidates, approximated by
/// gma_0 with nu = 0, linear entropy, flat prior.
ProjResult solve_proj(const Dictionary& dict, const Observation& obs,
                      int max_iter = 200);

namespace detail {
/// gma_bmax with the Gram-matrix fast path forced on or off (the public
/// entry point picks by dictionary size). Both paths select identically.
GmaBmaxResult gma_bmax_impl(const Dictionary& dict, const Observation& obs,
                            const AggregationParams& params, int k_max,
                            const IterateObserver& observer, bool use_gram);
}  // namespace detail

}  // namespace bmax

#pragma once

#include "bmax/metrics.hpp"
#include "bmax/types.hpp"

namespace bmax {

/// Curvature constants of log J:
///   a1 = (1-nu)/omega^2            (strong convexity lower bound)
///   a2 = a1 + a1^2 L^2             (smoothness upper bound)
///   a3 = a1 L^2 + a1^2 L^4         (greedy rate constant)
/// where L = max_j ||f_j||_2.
struct CurvatureConstants {
  double a1;
  double a2;
  double a3;
};

CurvatureConstants curvature(const Dictionary& dict, const AggregationParams& params);

struct GradLogJ {
  Vector gradient;
  SimplexWeights posterior;
};

/// Evaluation context for one (dictionary, observation, parameters) triple.
/// Caches the per-candidate data distances ||f_j - Y||^2 and log prior, which
/// the greedy loops would otherwise recompute O(M k) times. Holds references
/// to the dictionary and observation; keep them alive while in use.
///
/// All exponential sums use the max-shift log-sum-exp form: at paper scale
/// ||f_j - Y||^2 / omega^2 reaches the hundreds and the naive form overflows.
class Problem {
 public:
  Problem(const Dictionary& dict, const Observation& obs,
          const AggregationParams& params);

  /// log J(psi) = log sum_j pi_j exp(-||f_j-Y||^2/(2 omega^2)
  ///                              + (1-nu)||psi-f_j||^2/(2 omega^2)).
  double log_j(const Vector& psi) const;

  /// Gradient of log J and the posterior weights lambda(psi) with
  /// lambda_j proportional to pi_j exp(same exponent as log_j). The gradient
  /// is a1 * (psi - f_lambda).
  GradLogJ grad_log_j(const Vector& psi) const;

  /// Q(lambda) = ||f_lambda - Y||^2 + nu sum_j lambda_j ||f_j - f_lambda||^2
  ///           + 2 omega^2 K_rho(lambda, pi).
  double q_objective(const SimplexWeights& lambda) const;

  /// T(h) = -nu/(1-nu) ||h-Y||^2
  ///        - 2 omega^2 log sum_j pi_j exp(-nu ||f_j-h||^2 / (2 omega^2)).
  /// Defined for the KL entropy only; Linear entropy is rejected.
  double t_objective(const Vector& h) const;

  /// S(lambda, h) = -nu/(1-nu) ||h-Y||^2 + nu sum_j lambda_j ||f_j-h||^2
  ///              + 2 omega^2 K(lambda, pi).  KL entropy only.
  double s_objective(const SimplexWeights& lambda, const Vector& h) const;

  CurvatureConstants curvature() const;

  const Dictionary& dict() const { return dict_; }
  const Observation& obs() const { return obs_; }
  const AggregationParams& params() const { return params_; }
  /// Cached ||f_j - Y||^2.
  const Vector& dist_sq() const { return dist_sq_; }
  const Vector& log_prior() const { return log_prior_; }

  /// Per-candidate log_j exponents at psi (the vector whose log-sum-exp is
  /// log J). Exposed for the solvers.
  Vector exponents(const Vector& psi) const;

 private:
  const Dictionary& dict_;
  const Observation& obs_;
  AggregationParams params_;
  Vector dist_sq_;
  Vector log_prior_;
};

// Convenience free functions matching the Problem methods one-to-one.
double log_j(const Vector& psi, const Dictionary& dict, const Observation& obs,
             const AggregationParams& params);
GradLogJ grad_log_j(const Vector& psi, const Dictionary& dict,
                    const Observation& obs, const AggregationParams& params);
double q_objective(const SimplexWeights& lambda, const Dictionary& dict,
                   const Observation& obs, const AggregationParams& params);
double t_objective(const Vector& h, const Dictionary& dict,
                   const Observation& obs, const AggregationParams& params);
double s_objective(const SimplexWeights& lambda, const Vector& h,
                   const Dictionary& dict, const Observation& obs,
                   const AggregationParams& params);

}  // namespace bmax

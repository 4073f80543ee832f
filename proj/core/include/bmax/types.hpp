#pragma once

#include <Eigen/Core>
#include <optional>
#include <stdexcept>

namespace bmax {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A finite dictionary of M candidate functions evaluated at n design
/// points. Candidates are stored as the columns of an n x M matrix; the
/// maximum candidate l2-norm is cached at construction.
class Dictionary {
 public:
  /// `candidates` is n x M, one column per candidate. Throws
  /// std::invalid_argument on empty or non-finite input.
  explicit Dictionary(Matrix candidates);

  int n() const { return static_cast<int>(candidates_.rows()); }
  int m() const { return static_cast<int>(candidates_.cols()); }
  const Matrix& candidates() const { return candidates_; }
  Eigen::Ref<const Vector> candidate(int j) const { return candidates_.col(j); }

  /// max_j ||f_j||_2
  double l2_bound() const { return l2_bound_; }

 private:
  Matrix candidates_;
  double l2_bound_ = 0.0;
};

/// Observations at the design points. `truth` is the (unobservable)
/// regression function, available only in simulation.
struct Observation {
  Vector y;
  std::optional<Vector> truth;

  explicit Observation(Vector y_in, std::optional<Vector> truth_in = {});
  int n() const { return static_cast<int>(y.size()); }
};

/// A point on the flat probability simplex. Construction validates
/// nonnegativity and renormalizes weights whose sum is within 1e-9 of 1;
/// larger deviations are rejected. Entries in [-1e-12, 0) are clamped to
/// zero (greedy iterates accumulate rounding).
class SimplexWeights {
 public:
  explicit SimplexWeights(Vector w);

  static SimplexWeights flat(int m);
  static SimplexWeights vertex(int m, int j);

  int size() const { return static_cast<int>(w_.size()); }
  const Vector& coeffs() const { return w_; }
  double operator[](int j) const { return w_[j]; }

 private:
  Vector w_;
};

/// Entropy choice for the rho-entropy: rho(t)=t gives Kullback-Leibler,
/// rho(t)=1 gives the linear entropy sum_j lambda_j log(1/pi_j).
enum class Entropy { KL, Linear };

/// Parameters of the aggregation objectives: the loss mixing parameter nu,
/// the inflated noise variance omega^2, a strictly positive prior, and the
/// entropy kind.
///
/// nu lives in [0, 1): nu = 0 is admitted because the projection estimator
/// is the nu = 0 instance of the linear-entropy objective. Operations that
/// genuinely require nu > 0 (the dual h-map, the saddle solver) enforce it
/// themselves.
struct AggregationParams {
  double nu;
  double omega_sq;
  SimplexWeights prior;
  Entropy entropy;

  AggregationParams(double nu_in, double omega_sq_in, SimplexWeights prior_in,
                    Entropy entropy_in = Entropy::KL);
};

}  // namespace bmax

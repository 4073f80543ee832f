#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bmax/solvers.hpp"
#include "bmax/types.hpp"

namespace bmax {

enum class TruthKind { ThetaPlusDelta, F1PlusDelta };

/// Scale applied to the zeta perturbation of clustered candidates: either a
/// fixed s, or per-candidate sigma/||zeta_j||_2 (which places every clustered
/// candidate at distance sigma from Theta).
struct CandidateScale {
  enum class Kind { Fixed, SigmaOverZetaNorm };
  Kind kind = Kind::Fixed;
  double value = 1.0;

  static CandidateScale fixed(double v) { return {Kind::Fixed, v}; }
  static CandidateScale sigma_over_zeta_norm() {
    return {Kind::SigmaOverZetaNorm, 0.0};
  }
};

/// Synthetic scenario: candidates f_j = Theta + s zeta_j for j < m1 and
/// f_j = zeta_j otherwise, truth = (f_1 or Theta) + misspec_scale * Delta,
/// Y = truth + sigma * xi, all vectors i.i.d. standard normal draws from
/// counter-based streams keyed by (seed, replicate, stream).
struct ScenarioSpec {
  int n = 50;
  int m = 500;
  int m1 = 50;
  CandidateScale s = CandidateScale::fixed(1.0);
  double sigma = 2.0;
  double misspec_scale = 0.5;
  TruthKind truth_kind = TruthKind::F1PlusDelta;
  std::uint64_t seed = 1;
};

std::pair<Dictionary, Observation> generate_scenario(const ScenarioSpec& spec,
                                                     std::uint64_t replicate = 0);

enum class CvMethod { Ewma, GmaBmax };

/// Logarithmic grid of 12 omega^2 values from 0.5 sigma^2 to 50 sigma^2.
std::vector<double> default_omega_sq_grid(double sigma);

/// k-fold cross-validation over a grid of omega^2 values. Design points are
/// shuffled (keyed by seed/replicate), split into contiguous blocks, and for
/// each fold the estimator is fit on the training coordinates and scored by
/// the per-fold mean of coordinate-wise squared error on the held-out block.
/// Returns the omega^2 with the smallest mean score, smallest value on ties.
/// The GmaBmax fit uses the exact BMAX minimizer (the k -> infinity limit of
/// the greedy iterates).
double cross_validate_omega(const Dictionary& dict, const Observation& obs,
                            const AggregationParams& params_base,
                            const std::vector<double>& omega_sq_grid, int folds,
                            CvMethod method, std::uint64_t seed,
                            std::uint64_t replicate = 0);

enum class MethodKind { OracleModel, BmaxExact, GmaBmax, Gma0, Ewma, Star, Proj };

std::string method_label(MethodKind kind);

struct MethodConfig {
  MethodKind kind;
  std::string label;             // defaulted from kind when empty
  double nu = 0.5;
  bool cv_omega = false;         // tune omega^2 by 10-fold CV per replicate
  double omega_sq = 8.0;         // used when cv_omega is false
  std::vector<double> cv_grid;   // empty -> default grid from scenario sigma
  int k_max = 0;                 // 0 -> the run-level k_max (greedy methods)
};

struct MethodSeries {
  MethodConfig config;
  std::string label;
  std::vector<int> checkpoints;  // {0} for one-shot methods
  // regrets[c][r]: regret of replicate r at checkpoint c
  std::vector<std::vector<double>> regrets;
  std::vector<double> mean;
  std::vector<double> sd;  // sample standard deviation (n-1 denominator)
};

struct ReplicationResult {
  ScenarioSpec spec;
  int replicates = 0;
  int k_max = 0;
  std::vector<MethodSeries> methods;
};

/// Run `replicates` independent scenario draws and record the regret of every
/// method; greedy methods are additionally recorded at the checkpoint
/// iterations. Replicates are independent and may be evaluated by parallel
/// workers; results are reduced in replicate order, so the output is
/// identical for any worker count.
ReplicationResult run_replications(const ScenarioSpec& spec,
                                   const std::vector<MethodConfig>& methods,
                                   int replicates, int k_max, int workers = 1,
                                   std::vector<int> checkpoints = {1, 5, 15, 60,
                                                                   100, 150});

struct CumulativeFrequencyRow {
  std::string label;
  std::vector<int> counts;
};

struct CumulativeFrequencyTable {
  std::vector<double> boundaries;
  std::vector<CumulativeFrequencyRow> rows;
};

/// Per method, the number of replicates whose regret (at the final recorded
/// checkpoint) is <= each boundary. Boundaries must be sorted ascending.
CumulativeFrequencyTable cumulative_frequency(const ReplicationResult& result,
                                              const std::vector<double>& boundaries);

struct OracleCheckReport {
  int replicates = 0;
  double delta = 0.0;
  int deviation_hits = 0;       // replicates with LHS <= deviation RHS
  double frequency = 0.0;
  double required_frequency = 0.0;  // 1 - delta - binomial slack
  bool pass = false;
  double mean_lhs = 0.0;
  double mean_rhs_expectation = 0.0;
  bool expectation_holds = false;
};

/// Monte-Carlo check of the single-model oracle inequality for psi*:
/// ||psi* - eta||^2 <= min_j { ||f_j - eta||^2 + 2 omega^2 log(1/(pi_j
/// delta)) } must hold with empirical frequency >= 1 - delta -
/// 2 sqrt(delta(1-delta)/replicates). Requires omega^2 >= sigma^2 /
/// min(nu, 1-nu).
OracleCheckReport check_oracle_inequality(const ScenarioSpec& spec,
                                          const AggregationParams& params,
                                          int replicates, double delta,
                                          int workers = 1);

// Paper presets. exp1: clustered block of 50 among 500 with s = 1 and truth
// f_1 + 0.5 Delta; exp2: all candidates clustered at distance sigma with
// truth Theta + 0.5 Delta.
ScenarioSpec exp1_scenario(std::uint64_t seed = 1);
ScenarioSpec exp2_scenario(std::uint64_t seed = 1);
std::vector<MethodConfig> paper_methods(double sigma);
std::vector<double> exp1_boundaries();
std::vector<double> exp2_boundaries();

}  // namespace bmax

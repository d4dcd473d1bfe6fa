#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphon/centrality_function.hpp"
#include "graphon/graphon.hpp"
#include "graphon/sampling.hpp"
#include "graphon/spectral.hpp"

namespace graphon::convergence {

// Parameters of the operator-norm deviation bound: L is the per-piece
// Lipschitz constant, K the number of interior discontinuity lines, delta
// the failure probability, mode the latent-variable scheme.
struct BoundParams {
  double L = 0.0;
  int K = 0;
  double delta = 0.01;
  sampling::Mode mode = sampling::Mode::deterministic;
};

struct RhoResult {
  double rho = 0.0;
  double d_N = 0.0;
};

// Grid-deviation term d_N and the operator bound
// rho(N) = 2 sqrt((L^2 - K^2) d_N^2 + K d_N).
// d_N = 1/N for deterministic latents; 1/N + sqrt(8 log(N/delta)/(N+1))
// for sorted-uniform latents (delta then restricted per N).
RhoResult rho(int N, const BoundParams& bp);

// High-probability deviation bound for the rescaled sampled matrix:
// sqrt(4 log(2N/delta) / (kappa N)) + rho(N).
double sampled_bound(int N, double kappa, const BoundParams& bp);

// "N large enough" regime check: the uniform grid must resolve every block
// (2 d_N below the minimal block width) and the degree scale must dominate
// the sampling noise term.
struct DegreeCondition {
  bool holds = false;
  double lhs = 0.0;  // log(2N/delta)/N + d_N (2K + 3L)
  double rhs = 0.0;  // max of the degree function
  double spacing_lhs = 0.0;  // 2 d_N
  double spacing_rhs = 0.0;  // minimal gap between breakpoints (incl. 0, 1)
  double cd_max = 0.0;
  double d_N = 0.0;
};
DegreeCondition max_degree_condition(const Graphon& W, int N,
                                     const BoundParams& bp, double delta);

// Uniform order-statistics deviation bound sqrt(8 log(N/delta)/(N+1));
// requires N >= 20 and delta strictly inside (N e^{-N/5}, e^{-1}).
double order_stat_bound(int N, double delta);

struct OrderStatCheck {
  double violation_rate = 0.0;
  double bound = 0.0;
  int violations = 0;
  int n_trials = 0;
};
// Empirical check: fraction of trials where max_i |U_(i) - i/(N+1)|
// exceeds the bound. Must stay at or below delta.
OrderStatCheck order_stat_check(int N, double delta, int n_trials,
                                std::uint64_t seed);

// Eigenvector perturbation check: with gap = lambda1 - lambda2 of M and
// shift = |lambda1(M+H) - lambda1(M)|, verifies
// ||v1_hat - v1|| <= sqrt(2) ||H||_2 / (gap - shift) when gap > shift.
struct DavisKahanCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool applicable = false;
  bool holds = false;
  double gap = 0.0;
  double shift = 0.0;
  double h_norm = 0.0;
};
DavisKahanCheck davis_kahan_check(const num::Matrix& M, const num::Matrix& H);

struct ConvergencePoint {
  int N = 0;
  int n_seeds = 0;
  int n_excluded = 0;
  double mean_error = 0.0;  // sampled adjacency path, S/(N kappa)
  double std_error = 0.0;
  double median_error = 0.0;
  double det_mean_error = 0.0;  // expected-matrix path, P/N
  double det_std_error = 0.0;
  double rho_bound = 0.0;
  double sampled_bound = 0.0;
  double kappa = 1.0;
  bool aligned = true;           // uniform grid hits every block boundary
  bool bound_guaranteed = true;  // max_degree_condition holds at this N
};

struct Provenance {
  std::uint64_t master_seed = 0;
  int seeds_per_N = 0;
  std::string config_hash;
  std::string timestamp;
};

struct ConvergenceConfig {
  std::vector<int> N_values;
  int seeds_per_N = 20;
  sampling::Mode mode = sampling::Mode::deterministic;
  double tau = 0.0;
  double delta = 0.01;
  double L = 0.0;
  int K = 0;
  std::uint64_t master_seed = 12345;
  int jobs = 0;  // 0 = hardware concurrency
};

struct ConvergenceReport {
  std::string graphon_id;
  Kind kind = Kind::degree;
  Params params;
  sampling::Mode mode = sampling::Mode::deterministic;
  double tau = 0.0;
  double delta = 0.01;
  double L = 0.0;
  int K = 0;
  std::vector<ConvergencePoint> rows;
  // Log-log fits; NaN when undefined (fewer than two usable rows).
  double fitted_rate = 0.0;   // slope of log mean_error vs log N
  double fitted_C = 0.0;      // geometric-mean scale against sampled_bound
  double det_fitted_rate = 0.0;
  double det_fitted_C = 0.0;      // geometric-mean scale against rho
  double det_ratio_min = 0.0;     // min/max of det error / rho across N
  double det_ratio_max = 0.0;
  Provenance provenance;
};

// Samples graphs at each N for seeds_per_N seeds, computes the centrality of
// the rescaled adjacency and expected matrices, and records L2 distances to
// the reference function. Per-seed domain/numeric failures are excluded with
// a count; more than 10% exclusions at any N aborts the run.
ConvergenceReport run_convergence(const Graphon& W, Kind kind, Params params,
                                  const CentralityFunction& reference,
                                  const ConvergenceConfig& cfg);

nlohmann::json convergence_report_to_json(const ConvergenceReport& report);
std::string convergence_report_to_csv(const ConvergenceReport& report);

struct TwoSampleConfig {
  int N1 = 0;
  int N2 = 0;
  int n_pairs = 50;
  sampling::Mode mode = sampling::Mode::stochastic;
  double tau = 0.0;
  double delta = 0.01;
  double L = 0.0;
  int K = 0;
  std::uint64_t master_seed = 12345;
  int jobs = 0;
};

struct TwoSampleReport {
  std::string graphon_id;
  Kind kind = Kind::degree;
  Params params;
  sampling::Mode mode = sampling::Mode::stochastic;
  double tau = 0.0;
  double delta = 0.01;
  int N1 = 0;
  int N2 = 0;
  int n_pairs = 0;
  int n_excluded = 0;
  std::vector<double> distances;  // sorted ascending
  double mean_distance = 0.0;
  double std_distance = 0.0;
  double p95_distance = 0.0;
  double bound_base = 0.0;     // 2 * sampled_bound(N1, kappa(N1))
  double fitted_Cprime = 0.0;  // envelope scale: p95 / bound_base
  double fitted_bound = 0.0;   // fitted_Cprime * bound_base
  Provenance provenance;
};

// Distance distribution between centralities of two independently sampled
// graphs of sizes N1 <= N2, against the two-sample bound at N1 with an
// empirically fitted scale constant.
TwoSampleReport two_sample_robustness(const Graphon& W, Kind kind,
                                      Params params,
                                      const TwoSampleConfig& cfg);

nlohmann::json two_sample_report_to_json(const TwoSampleReport& report);

// Runs fn(0..n-1) on a worker pool (jobs <= 0 uses hardware concurrency).
// Unexpected exceptions propagate; callers handle per-item domain errors.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace graphon::convergence

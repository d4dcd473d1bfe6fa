#include "graphon/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "graphon/errors.hpp"
#include "graphon/graph_centrality.hpp"
#include "graphon/graphon_centrality.hpp"
#include "graphon/io_util.hpp"
#include "graphon/rng.hpp"

namespace graphon::convergence {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_delta_plain(double delta) {
  if (!(delta > 0.0) || !(delta < std::exp(-1.0))) {
    throw DomainError("delta must lie in (0, exp(-1))", delta);
  }
}

// Admissible failure probability for the order-statistics deviation bound:
// strictly between N exp(-N/5) and exp(-1).
void check_delta_stochastic(int N, double delta) {
  const double lo = N * std::exp(-N / 5.0);
  const double hi = std::exp(-1.0);
  if (!(delta > lo) || !(delta < hi)) {
    throw DomainError("delta must lie strictly inside (" + io::fmt_double(lo) +
                          ", " + io::fmt_double(hi) + ") for N = " +
                          std::to_string(N),
                      delta);
  }
}

struct Stats {
  double mean = kNaN;
  double stddev = kNaN;
  double median = kNaN;
  int n = 0;
};

// Sorted ascending reduction keeps the floating-point result independent of
// worker completion order.
Stats stats_of(std::vector<double> values) {
  Stats s;
  values.erase(std::remove_if(values.begin(), values.end(),
                              [](double v) { return !std::isfinite(v); }),
               values.end());
  s.n = static_cast<int>(values.size());
  if (s.n == 0) return s;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / s.n;
  if (s.n >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / (s.n - 1));
  } else {
    s.stddev = 0.0;
  }
  s.median = (s.n % 2 == 1) ? values[s.n / 2]
                            : 0.5 * (values[s.n / 2 - 1] + values[s.n / 2]);
  return s;
}

// Least-squares slope of log(y) vs log(x) over finite positive pairs.
double loglog_slope(const std::vector<double>& xs,
                    const std::vector<double>& ys) {
  std::vector<double> lx, ly;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] > 0.0 && ys[i] > 0.0 && std::isfinite(ys[i])) {
      lx.push_back(std::log(xs[i]));
      ly.push_back(std::log(ys[i]));
    }
  }
  const size_t n = lx.size();
  if (n < 2) return kNaN;
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < n; ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  if (den == 0.0) return kNaN;
  return num / den;
}

// Geometric-mean ratio y/b: the least-squares scale in log space.
double loglog_scale(const std::vector<double>& ys,
                    const std::vector<double>& bounds) {
  double acc = 0.0;
  int n = 0;
  for (size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] > 0.0 && bounds[i] > 0.0 && std::isfinite(ys[i]) &&
        std::isfinite(bounds[i])) {
      acc += std::log(ys[i] / bounds[i]);
      ++n;
    }
  }
  if (n == 0) return kNaN;
  return std::exp(acc / n);
}

bool grid_aligned(const Graphon& W, int N) {
  if (!W.is_sbm()) return true;
  for (double b : W.sbm().boundaries) {
    const double scaled = b * N;
    if (std::abs(scaled - std::round(scaled)) > 1e-9) return false;
  }
  return true;
}

nlohmann::json params_json(Kind kind, const Params& params) {
  nlohmann::json p = nlohmann::json::object();
  if (kind == Kind::katz) p["alpha"] = params.alpha;
  if (kind == Kind::pagerank) p["beta"] = params.beta;
  return p;
}

nlohmann::json provenance_json(const Provenance& prov) {
  nlohmann::json j;
  j["master_seed"] = prov.master_seed;
  j["seeds_per_N"] = prov.seeds_per_N;
  j["config_hash"] = prov.config_hash;
  j["timestamp"] = prov.timestamp;
  return j;
}

}  // namespace

RhoResult rho(int N, const BoundParams& bp) {
  if (N < 1) throw DomainError("N must be at least 1");
  if (bp.L < 0.0) throw DomainError("L must be non-negative");
  if (bp.K < 0) throw DomainError("K must be non-negative");
  RhoResult out;
  if (bp.mode == sampling::Mode::stochastic) {
    check_delta_stochastic(N, bp.delta);
    out.d_N = 1.0 / N + std::sqrt(8.0 * std::log(N / bp.delta) / (N + 1.0));
  } else {
    out.d_N = 1.0 / N;
  }
  const double K = static_cast<double>(bp.K);
  const double radicand = (bp.L * bp.L - K * K) * out.d_N * out.d_N + K * out.d_N;
  if (radicand < 0.0) {
    throw DomainError(
        "deviation bound is undefined here (negative radicand " +
            io::fmt_double(radicand) +
            "); increase N until the grid deviation d_N is small enough",
        radicand);
  }
  out.rho = 2.0 * std::sqrt(radicand);
  return out;
}

double sampled_bound(int N, double kappa, const BoundParams& bp) {
  if (!(kappa > 0.0) || kappa > 1.0) {
    throw DomainError("kappa must lie in (0, 1]", kappa);
  }
  check_delta_plain(bp.delta);
  const RhoResult r = rho(N, bp);
  return std::sqrt(4.0 * std::log(2.0 * N / bp.delta) / (kappa * N)) + r.rho;
}

DegreeCondition max_degree_condition(const Graphon& W, int N,
                                     const BoundParams& bp, double delta) {
  if (N < 1) throw ConfigError("N must be at least 1");
  DegreeCondition out;
  out.cd_max = max_degree(W);
  out.rhs = out.cd_max;
  out.spacing_rhs = min_breakpoint_spacing(W.metadata);
  BoundParams local = bp;
  local.delta = delta;
  try {
    out.d_N = rho(N, local).d_N;
  } catch (const DomainError&) {
    // Inadmissible delta at this N: the regime certainly does not hold.
    out.d_N = std::numeric_limits<double>::infinity();
  }
  out.spacing_lhs = 2.0 * out.d_N;
  out.lhs = std::log(2.0 * N / delta) / N + out.d_N * (2.0 * bp.K + 3.0 * bp.L);
  out.holds = (out.spacing_lhs < out.spacing_rhs) && (out.lhs < out.rhs);
  return out;
}

double order_stat_bound(int N, double delta) {
  if (N < 20) {
    throw DomainError("N must be at least 20", static_cast<double>(N));
  }
  check_delta_stochastic(N, delta);
  return std::sqrt(8.0 * std::log(N / delta) / (N + 1.0));
}

OrderStatCheck order_stat_check(int N, double delta, int n_trials,
                                std::uint64_t seed) {
  if (n_trials < 1) throw ConfigError("n_trials must be at least 1");
  OrderStatCheck out;
  out.bound = order_stat_bound(N, delta);
  out.n_trials = n_trials;
  std::vector<char> violated(static_cast<size_t>(n_trials), 0);
  const std::uint64_t trial_key = rng::stream_key(seed, rng::Tag::trials);
  parallel_for(n_trials, 0, [&](int t) {
    const std::uint64_t tseed =
        rng::combine(trial_key, static_cast<std::uint64_t>(t));
    sampling::LatentVariables lat =
        sampling::make_latents(N, sampling::Mode::stochastic, tseed);
    double dev = 0.0;
    for (int i = 0; i < N; ++i) {
      dev = std::max(dev, std::abs(lat.u[i] - (i + 1.0) / (N + 1.0)));
    }
    if (dev > out.bound) violated[static_cast<size_t>(t)] = 1;
  });
  for (char v : violated) out.violations += v;
  out.violation_rate = static_cast<double>(out.violations) / n_trials;
  return out;
}

DavisKahanCheck davis_kahan_check(const num::Matrix& M, const num::Matrix& H) {
  if (M.rows() != M.cols() || M.rows() < 2) {
    throw ConfigError("matrix must be square with size at least 2");
  }
  if (H.rows() != M.rows() || H.cols() != M.cols()) {
    throw ConfigError("perturbation must match the matrix size");
  }
  const num::Spectrum base = num::sym_eig(M);
  const num::Spectrum pert = num::sym_eig(M + H);
  DavisKahanCheck out;
  out.gap = base.eigenvalues(0) - base.eigenvalues(1);
  out.shift = std::abs(pert.eigenvalues(0) - base.eigenvalues(0));
  const num::Spectrum hs = num::sym_eig(H);
  out.h_norm = std::max(std::abs(hs.eigenvalues(0)),
                        std::abs(hs.eigenvalues(hs.eigenvalues.size() - 1)));
  out.applicable = out.gap > out.shift;
  num::Vector v1 = base.eigenvectors.col(0);
  num::Vector v1_hat = pert.eigenvectors.col(0);
  if (v1_hat.dot(v1) < 0.0) v1_hat = -v1_hat;
  out.lhs = (v1_hat - v1).norm();
  if (out.applicable) {
    out.rhs = std::sqrt(2.0) * out.h_norm / (out.gap - out.shift);
    out.holds = out.lhs <= out.rhs + 1e-12;
  }
  return out;
}

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  int workers = jobs > 0 ? jobs
                         : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

std::string convergence_config_hash(const Graphon& W, Kind kind,
                                    const Params& params,
                                    const ConvergenceConfig& cfg) {
  nlohmann::json j;
  j["graphon_id"] = W.id;
  j["kind"] = kind_name(kind);
  j["params"] = params_json(kind, params);
  j["mode"] = sampling::mode_name(cfg.mode);
  j["tau"] = cfg.tau;
  j["delta"] = cfg.delta;
  j["L"] = cfg.L;
  j["K"] = cfg.K;
  j["N_values"] = cfg.N_values;
  j["seeds_per_N"] = cfg.seeds_per_N;
  j["master_seed"] = cfg.master_seed;
  return io::fnv1a_hex(io::canonical_json(j));
}

// One sampled realization: centrality of the rescaled adjacency matrix and
// (per request) of the rescaled expected matrix, as L2 distances to `ref`.
struct SeedOutcome {
  double sampled_error = kNaN;
  double det_error = kNaN;
  bool excluded = false;
};

double centrality_distance(const num::Matrix& M, Kind kind,
                           const Params& params,
                           const CentralityFunction& ref) {
  graphs::CentralityVector c = graphs::centrality(M, kind, params);
  return l2_distance(graphs::embed_step(c), ref);
}

}  // namespace

ConvergenceReport run_convergence(const Graphon& W, Kind kind, Params params,
                                  const CentralityFunction& reference,
                                  const ConvergenceConfig& cfg) {
  if (cfg.N_values.empty()) {
    throw ConfigError("N_values must be non-empty");
  }
  for (size_t i = 0; i < cfg.N_values.size(); ++i) {
    if (cfg.N_values[i] < 1) throw ConfigError("every N must be at least 1");
    if (i > 0 && cfg.N_values[i] <= cfg.N_values[i - 1]) {
      throw ConfigError("N_values must be strictly ascending");
    }
  }
  if (cfg.seeds_per_N < 1) throw ConfigError("seeds_per_N must be at least 1");
  if (reference.kind != kind) {
    throw ConfigError("reference centrality kind does not match the request");
  }

  ConvergenceReport report;
  report.graphon_id = W.id;
  report.kind = kind;
  report.params = params;
  report.mode = cfg.mode;
  report.tau = cfg.tau;
  report.delta = cfg.delta;
  report.L = cfg.L;
  report.K = cfg.K;
  report.provenance.master_seed = cfg.master_seed;
  report.provenance.seeds_per_N = cfg.seeds_per_N;
  report.provenance.config_hash = convergence_config_hash(W, kind, params, cfg);
  report.provenance.timestamp = io::utc_timestamp();

  const BoundParams bp{cfg.L, cfg.K, cfg.delta, cfg.mode};

  for (int N : cfg.N_values) {
    ConvergencePoint row;
    row.N = N;
    row.kappa = sampling::kappa_schedule(N, cfg.tau);
    row.aligned = grid_aligned(W, N);
    try {
      row.rho_bound = rho(N, bp).rho;
      row.sampled_bound = convergence::sampled_bound(N, row.kappa, bp);
    } catch (const DomainError&) {
      row.rho_bound = kNaN;
      row.sampled_bound = kNaN;
    }
    DegreeCondition cond = max_degree_condition(W, N, bp, cfg.delta);
    row.bound_guaranteed = cond.holds && std::isfinite(row.sampled_bound);

    // With deterministic latents the expected matrix is seed-independent:
    // compute its path once.
    double shared_det_error = kNaN;
    bool shared_det = (cfg.mode == sampling::Mode::deterministic);
    if (shared_det) {
      sampling::LatentVariables lat =
          sampling::make_latents(N, cfg.mode, cfg.master_seed);
      num::Matrix P = sampling::probability_matrix(W, lat);
      try {
        shared_det_error = centrality_distance(
            graphs::rescale(P, graphs::Scaling::over_N), kind, params,
            reference);
      } catch (const DomainError&) {
      } catch (const NumericError&) {
      }
    }

    std::vector<SeedOutcome> outcomes(
        static_cast<size_t>(cfg.seeds_per_N));
    const std::uint64_t n_key =
        rng::combine(cfg.master_seed, static_cast<std::uint64_t>(N));
    parallel_for(cfg.seeds_per_N, cfg.jobs, [&](int k) {
      SeedOutcome& out = outcomes[static_cast<size_t>(k)];
      const std::uint64_t seed =
          rng::combine(n_key, static_cast<std::uint64_t>(k));
      try {
        sampling::SampledGraph g = sampling::sample_graph(W, N, cfg.mode,
                                                          cfg.tau, seed);
        out.sampled_error = centrality_distance(
            graphs::rescale(g.S, graphs::Scaling::over_N_kappa, g.kappa),
            kind, params, reference);
        if (shared_det) {
          out.det_error = shared_det_error;
        } else {
          out.det_error = centrality_distance(
              graphs::rescale(g.P, graphs::Scaling::over_N), kind, params,
              reference);
        }
      } catch (const DomainError&) {
        out.excluded = true;
      } catch (const NumericError&) {
        out.excluded = true;
      }
    });

    std::vector<double> sampled_errors, det_errors;
    for (const SeedOutcome& out : outcomes) {
      if (out.excluded) {
        ++row.n_excluded;
        continue;
      }
      sampled_errors.push_back(out.sampled_error);
      det_errors.push_back(out.det_error);
    }
    row.n_seeds = static_cast<int>(sampled_errors.size());
    if (row.n_excluded * 10 > cfg.seeds_per_N) {
      throw NumericError("more than 10% of seeds failed at N = " +
                         std::to_string(N) + " (" +
                         std::to_string(row.n_excluded) + " of " +
                         std::to_string(cfg.seeds_per_N) + ")");
    }
    const Stats s = stats_of(sampled_errors);
    row.mean_error = s.mean;
    row.std_error = s.stddev;
    row.median_error = s.median;
    const Stats d = stats_of(det_errors);
    row.det_mean_error = d.mean;
    row.det_std_error = d.stddev;
    report.rows.push_back(row);
  }

  std::vector<double> Ns, means, det_means, rhos, bounds;
  for (const ConvergencePoint& row : report.rows) {
    Ns.push_back(static_cast<double>(row.N));
    means.push_back(row.mean_error);
    det_means.push_back(row.det_mean_error);
    rhos.push_back(row.rho_bound);
    bounds.push_back(row.sampled_bound);
  }
  report.fitted_rate = loglog_slope(Ns, means);
  report.fitted_C = loglog_scale(means, bounds);
  report.det_fitted_rate = loglog_slope(Ns, det_means);
  report.det_fitted_C = loglog_scale(det_means, rhos);
  report.det_ratio_min = kNaN;
  report.det_ratio_max = kNaN;
  for (size_t i = 0; i < det_means.size(); ++i) {
    if (!(det_means[i] > 0.0) || !(rhos[i] > 0.0)) continue;
    const double ratio = det_means[i] / rhos[i];
    if (!std::isfinite(ratio)) continue;
    if (!std::isfinite(report.det_ratio_min) || ratio < report.det_ratio_min) {
      report.det_ratio_min = ratio;
    }
    if (!std::isfinite(report.det_ratio_max) || ratio > report.det_ratio_max) {
      report.det_ratio_max = ratio;
    }
  }
  return report;
}

nlohmann::json convergence_report_to_json(const ConvergenceReport& report) {
  nlohmann::json j;
  j["graphon_id"] = report.graphon_id;
  j["kind"] = kind_name(report.kind);
  j["params"] = params_json(report.kind, report.params);
  j["mode"] = sampling::mode_name(report.mode);
  j["tau"] = report.tau;
  j["delta"] = report.delta;
  j["L"] = report.L;
  j["K"] = report.K;
  nlohmann::json rows = nlohmann::json::array();
  for (const ConvergencePoint& row : report.rows) {
    nlohmann::json r;
    r["N"] = row.N;
    r["n_seeds"] = row.n_seeds;
    r["n_excluded"] = row.n_excluded;
    r["mean_error"] = row.mean_error;
    r["std_error"] = row.std_error;
    r["median_error"] = row.median_error;
    r["det_mean_error"] = row.det_mean_error;
    r["det_std_error"] = row.det_std_error;
    r["rho_bound"] = row.rho_bound;
    r["sampled_bound"] = row.sampled_bound;
    r["kappa"] = row.kappa;
    r["aligned"] = row.aligned;
    r["bound_guaranteed"] = row.bound_guaranteed;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["fitted_rate"] = report.fitted_rate;
  j["fitted_C"] = report.fitted_C;
  j["det_fitted_rate"] = report.det_fitted_rate;
  j["det_fitted_C"] = report.det_fitted_C;
  j["det_ratio_min"] = report.det_ratio_min;
  j["det_ratio_max"] = report.det_ratio_max;
  j["provenance"] = provenance_json(report.provenance);
  return j;
}

std::string convergence_report_to_csv(const ConvergenceReport& report) {
  std::string out = "N,statistic,value\r\n";
  auto emit = [&out](int N, const char* stat, const std::string& value) {
    out += std::to_string(N);
    out += ',';
    out += stat;
    out += ',';
    out += value;
    out += "\r\n";
  };
  for (const ConvergencePoint& row : report.rows) {
    emit(row.N, "n_seeds", std::to_string(row.n_seeds));
    emit(row.N, "n_excluded", std::to_string(row.n_excluded));
    emit(row.N, "mean_error", io::fmt_double(row.mean_error));
    emit(row.N, "std_error", io::fmt_double(row.std_error));
    emit(row.N, "median_error", io::fmt_double(row.median_error));
    emit(row.N, "det_mean_error", io::fmt_double(row.det_mean_error));
    emit(row.N, "det_std_error", io::fmt_double(row.det_std_error));
    emit(row.N, "rho_bound", io::fmt_double(row.rho_bound));
    emit(row.N, "sampled_bound", io::fmt_double(row.sampled_bound));
    emit(row.N, "kappa", io::fmt_double(row.kappa));
    emit(row.N, "aligned", row.aligned ? "true" : "false");
    emit(row.N, "bound_guaranteed", row.bound_guaranteed ? "true" : "false");
  }
  return out;
}

TwoSampleReport two_sample_robustness(const Graphon& W, Kind kind,
                                      Params params,
                                      const TwoSampleConfig& cfg) {
  if (cfg.N1 < 1 || cfg.N2 < 1) throw ConfigError("N1 and N2 must be at least 1");
  if (cfg.N1 > cfg.N2) throw ConfigError("N1 must not exceed N2");
  if (cfg.n_pairs < 1) throw ConfigError("n_pairs must be at least 1");

  TwoSampleReport report;
  report.graphon_id = W.id;
  report.kind = kind;
  report.params = params;
  report.mode = cfg.mode;
  report.tau = cfg.tau;
  report.delta = cfg.delta;
  report.N1 = cfg.N1;
  report.N2 = cfg.N2;
  report.provenance.master_seed = cfg.master_seed;
  report.provenance.seeds_per_N = cfg.n_pairs;
  {
    nlohmann::json j;
    j["graphon_id"] = W.id;
    j["kind"] = kind_name(kind);
    j["params"] = params_json(kind, params);
    j["mode"] = sampling::mode_name(cfg.mode);
    j["tau"] = cfg.tau;
    j["delta"] = cfg.delta;
    j["N1"] = cfg.N1;
    j["N2"] = cfg.N2;
    j["n_pairs"] = cfg.n_pairs;
    j["master_seed"] = cfg.master_seed;
    report.provenance.config_hash = io::fnv1a_hex(io::canonical_json(j));
  }
  report.provenance.timestamp = io::utc_timestamp();

  struct PairOutcome {
    double distance = kNaN;
    bool excluded = false;
  };
  std::vector<PairOutcome> outcomes(static_cast<size_t>(cfg.n_pairs));
  auto embedded = [&](int N, int k) {
    const std::uint64_t seed =
        rng::combine(rng::combine(cfg.master_seed, static_cast<std::uint64_t>(N)),
                     static_cast<std::uint64_t>(k));
    sampling::SampledGraph g =
        sampling::sample_graph(W, N, cfg.mode, cfg.tau, seed);
    graphs::CentralityVector c = graphs::centrality(
        graphs::rescale(g.S, graphs::Scaling::over_N_kappa, g.kappa), kind,
        params);
    return graphs::embed_step(c);
  };
  parallel_for(cfg.n_pairs, cfg.jobs, [&](int k) {
    PairOutcome& out = outcomes[static_cast<size_t>(k)];
    try {
      const CentralityFunction c1 = embedded(cfg.N1, k);
      const CentralityFunction c2 = embedded(cfg.N2, k);
      out.distance = l2_distance(c1, c2);
    } catch (const DomainError&) {
      out.excluded = true;
    } catch (const NumericError&) {
      out.excluded = true;
    }
  });

  for (const PairOutcome& out : outcomes) {
    if (out.excluded) {
      ++report.n_excluded;
    } else {
      report.distances.push_back(out.distance);
    }
  }
  report.n_pairs = static_cast<int>(report.distances.size());
  if (report.n_excluded * 10 > cfg.n_pairs) {
    throw NumericError("more than 10% of sample pairs failed (" +
                       std::to_string(report.n_excluded) + " of " +
                       std::to_string(cfg.n_pairs) + ")");
  }
  std::sort(report.distances.begin(), report.distances.end());
  const Stats s = stats_of(report.distances);
  report.mean_distance = s.mean;
  report.std_distance = s.stddev;
  if (report.n_pairs > 0) {
    const int idx = std::max(
        0, static_cast<int>(std::ceil(0.95 * report.n_pairs)) - 1);
    report.p95_distance = report.distances[static_cast<size_t>(idx)];
  } else {
    report.p95_distance = kNaN;
  }

  const BoundParams bp{cfg.L, cfg.K, cfg.delta, cfg.mode};
  const double kappa1 = sampling::kappa_schedule(cfg.N1, cfg.tau);
  try {
    report.bound_base = 2.0 * sampled_bound(cfg.N1, kappa1, bp);
  } catch (const DomainError&) {
    report.bound_base = kNaN;
  }
  report.fitted_Cprime =
      (report.bound_base > 0.0 && std::isfinite(report.p95_distance))
          ? report.p95_distance / report.bound_base
          : kNaN;
  report.fitted_bound = report.fitted_Cprime * report.bound_base;
  return report;
}

nlohmann::json two_sample_report_to_json(const TwoSampleReport& report) {
  nlohmann::json j;
  j["graphon_id"] = report.graphon_id;
  j["kind"] = kind_name(report.kind);
  j["params"] = params_json(report.kind, report.params);
  j["mode"] = sampling::mode_name(report.mode);
  j["tau"] = report.tau;
  j["delta"] = report.delta;
  j["N1"] = report.N1;
  j["N2"] = report.N2;
  j["n_pairs"] = report.n_pairs;
  j["n_excluded"] = report.n_excluded;
  j["distances"] = report.distances;
  j["mean_distance"] = report.mean_distance;
  j["std_distance"] = report.std_distance;
  j["p95_distance"] = report.p95_distance;
  j["bound_base"] = report.bound_base;
  j["fitted_Cprime"] = report.fitted_Cprime;
  j["fitted_bound"] = report.fitted_bound;
  j["provenance"] = provenance_json(report.provenance);
  return j;
}

}  // namespace graphon::convergence

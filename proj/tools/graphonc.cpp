// Command-line driver: centrality computation, graph sampling, convergence
// experiments, and deviation-bound evaluation.
//
// Exit codes: 0 success, 2 configuration error, 3 domain error,
// 4 numeric error.

#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphon/centrality_function.hpp"
#include "graphon/convergence.hpp"
#include "graphon/errors.hpp"
#include "graphon/graphon.hpp"
#include "graphon/graphon_centrality.hpp"
#include "graphon/io_util.hpp"
#include "graphon/presets.hpp"
#include "graphon/sampling.hpp"
#include "graphon/svg.hpp"

namespace {

using nlohmann::json;
using namespace graphon;

json load_config(const std::string& path,
                 const std::set<std::string>& allowed_keys) {
  json cfg;
  try {
    cfg = json::parse(io::read_file(path));
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config file ") + path + ": " + e.what());
  }
  if (!cfg.is_object()) {
    throw ConfigError("config file " + path + ": top level must be an object");
  }
  for (const auto& [key, value] : cfg.items()) {
    (void)value;
    if (allowed_keys.count(key) == 0) {
      throw ConfigError("config file " + path + ": unknown key \"" + key +
                        "\"");
    }
  }
  return cfg;
}

// Command-line flags override config-file values: a config key is applied
// only when its flag was not given.
template <typename T>
void merge_key(const CLI::App* cmd, const json& cfg, const std::string& flag,
               const std::string& key, T& var, bool* was_set = nullptr) {
  if (cmd->count(flag) > 0) {
    if (was_set) *was_set = true;
    return;
  }
  if (cfg.contains(key)) {
    try {
      var = cfg.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError("config key \"" + key + "\": " + e.what());
    }
    if (was_set) *was_set = true;
  }
}

Graphon load_graphon(const std::string& name_or_path) {
  if (presets::is_graphon_preset(name_or_path)) {
    return presets::graphon_by_name(name_or_path);
  }
  json j;
  try {
    j = json::parse(io::read_file(name_or_path));
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("graphon file ") + name_or_path + ": " +
                      e.what());
  }
  Graphon W = graphon_from_json(j);
  ValidationReport report = validate(W);
  if (!report.pass) {
    throw ConfigError("graphon file " + name_or_path +
                      " failed validation: " + report.first_violation);
  }
  return W;
}

struct ParamSpec {
  double alpha = 0.0;
  bool alpha_set = false;
  double alpha_frac = 0.0;
  bool alpha_frac_set = false;
  double beta = 0.0;
  bool beta_set = false;
};

// Resolves --alpha / --alpha-frac / --beta against the requested kind.
// alpha-frac is a fraction of the admissible limit 1/lambda1 of the target
// graphon's operator.
Params resolve_params(Kind kind, const ParamSpec& ps, const Graphon& W,
                      int resolution) {
  Params params;
  if (kind == Kind::katz) {
    if (ps.alpha_set == ps.alpha_frac_set) {
      throw ConfigError(
          "katz needs exactly one of --alpha or --alpha-frac");
    }
    if (ps.beta_set) throw ConfigError("--beta applies to pagerank only");
    if (ps.alpha_set) {
      params.alpha = ps.alpha;
    } else {
      const double lambda1 = graphon_lambda1(W, resolution);
      if (!(lambda1 > 0.0)) {
        throw DomainError(
            "cannot interpret --alpha-frac: dominant eigenvalue is not "
            "positive",
            lambda1);
      }
      params.alpha = ps.alpha_frac / lambda1;
    }
  } else if (kind == Kind::pagerank) {
    if (!ps.beta_set) throw ConfigError("pagerank needs --beta");
    if (ps.alpha_set || ps.alpha_frac_set) {
      throw ConfigError("--alpha/--alpha-frac apply to katz only");
    }
    params.beta = ps.beta;
  } else {
    if (ps.alpha_set || ps.alpha_frac_set || ps.beta_set) {
      throw ConfigError(kind_name(kind) +
                        " takes no --alpha/--alpha-frac/--beta");
    }
  }
  return params;
}

std::string join_doubles(const std::vector<double>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += io::fmt_double(values[i]);
  }
  return out;
}

std::string fmt_or_na(double v) {
  return std::isfinite(v) ? io::fmt_double(v) : std::string("n/a");
}

void print_centrality_summary(const Graphon& W, const CentralityFunction& c) {
  std::cout << "graphon: " << W.id << "\n";
  std::cout << "kind: " << kind_name(c.kind);
  if (c.kind == Kind::katz) std::cout << " (alpha=" << io::fmt_double(c.params.alpha) << ")";
  if (c.kind == Kind::pagerank) std::cout << " (beta=" << io::fmt_double(c.params.beta) << ")";
  std::cout << "\n";
  if (c.is_step()) {
    const StepFunction& s = c.step();
    std::cout << "representation: step (" << s.values.size() << " blocks)\n";
    std::cout << "boundaries: " << join_doubles(s.boundaries) << "\n";
    std::cout << "block values: " << join_doubles(s.values) << "\n";
  } else if (c.is_analytic()) {
    const AnalyticForm& a = c.analytic();
    const char* family = a.family == AnalyticForm::Family::quadratic
                             ? "quadratic"
                             : a.family == AnalyticForm::Family::sine_series
                                   ? "sine_series"
                                   : "parabolic";
    std::cout << "representation: analytic\n";
    std::cout << "analytic form: " << family << "\n";
    std::cout << "coeffs: " << join_doubles(a.coeffs) << "\n";
  } else {
    const GridFunction& g = c.grid();
    std::cout << "representation: grid (n=" << g.n << ")\n";
    const size_t show = std::min<size_t>(8, g.values.size());
    std::vector<double> head(g.values.begin(), g.values.begin() + show);
    std::cout << "first values: " << join_doubles(head) << "\n";
  }
  std::cout << "l2_norm: " << io::fmt_double(l2_norm(c)) << "\n";
  if (c.lambda1) std::cout << "lambda1: " << io::fmt_double(*c.lambda1) << "\n";
  if (c.refine_l2_diff) {
    std::cout << "refine_l2_diff: " << io::fmt_double(*c.refine_l2_diff) << "\n";
  }
  if (c.converged) {
    std::cout << "converged: " << (*c.converged ? "true" : "false") << "\n";
  }
}

void write_outputs(const std::string& prefix, const json& doc,
                   const std::string& csv, const std::string& svg) {
  if (prefix.empty()) return;
  io::atomic_write_file(prefix + ".json", io::canonical_json(doc));
  if (!csv.empty()) io::atomic_write_file(prefix + ".csv", csv);
  if (!svg.empty()) io::atomic_write_file(prefix + ".svg", svg);
  std::cout << "wrote " << prefix << ".json";
  if (!csv.empty()) std::cout << " " << prefix << ".csv";
  if (!svg.empty()) std::cout << " " << prefix << ".svg";
  std::cout << "\n";
}

// ---------------------------------------------------------------------------
// centrality
// ---------------------------------------------------------------------------
struct CentralityArgs {
  std::string graphon;
  std::string kind;
  ParamSpec ps;
  int resolution = 512;
  std::string out;
  std::string config;
};

int run_centrality(const CLI::App* cmd, CentralityArgs& a) {
  json cfg;
  if (!a.config.empty()) {
    cfg = load_config(a.config, {"graphon", "kind", "alpha", "alpha_frac",
                                 "beta", "resolution", "out"});
    merge_key(cmd, cfg, "--graphon", "graphon", a.graphon);
    merge_key(cmd, cfg, "--kind", "kind", a.kind);
    merge_key(cmd, cfg, "--alpha", "alpha", a.ps.alpha, &a.ps.alpha_set);
    merge_key(cmd, cfg, "--alpha-frac", "alpha_frac", a.ps.alpha_frac,
              &a.ps.alpha_frac_set);
    merge_key(cmd, cfg, "--beta", "beta", a.ps.beta, &a.ps.beta_set);
    merge_key(cmd, cfg, "--resolution", "resolution", a.resolution);
    merge_key(cmd, cfg, "--out", "out", a.out);
  }
  if (a.graphon.empty()) throw ConfigError("missing --graphon");
  if (a.kind.empty()) throw ConfigError("missing --kind");
  a.ps.alpha_set |= cmd->count("--alpha") > 0;
  a.ps.alpha_frac_set |= cmd->count("--alpha-frac") > 0;
  a.ps.beta_set |= cmd->count("--beta") > 0;

  const Graphon W = load_graphon(a.graphon);
  const Kind kind = kind_from_name(a.kind);
  const Params params = resolve_params(kind, a.ps, W, a.resolution);
  const CentralityFunction c = graphon_centrality(W, kind, params, a.resolution);
  print_centrality_summary(W, c);

  json doc = centrality_function_to_json(c);
  doc["graphon_id"] = W.id;
  write_outputs(a.out, doc, centrality_function_to_csv(c),
                svg::centrality_plot(c, W.id + " " + kind_name(kind)));
  return 0;
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------
struct SampleArgs {
  std::string graphon;
  int N = 0;
  std::string mode = "deterministic";
  double tau = 0.0;
  std::uint64_t seed = 12345;
  std::string out;
  std::string config;
};

int run_sample(const CLI::App* cmd, SampleArgs& a) {
  json cfg;
  if (!a.config.empty()) {
    cfg = load_config(a.config, {"graphon", "N", "mode", "tau", "seed", "out"});
    merge_key(cmd, cfg, "--graphon", "graphon", a.graphon);
    merge_key(cmd, cfg, "--N", "N", a.N);
    merge_key(cmd, cfg, "--mode", "mode", a.mode);
    merge_key(cmd, cfg, "--tau", "tau", a.tau);
    merge_key(cmd, cfg, "--seed", "seed", a.seed);
    merge_key(cmd, cfg, "--out", "out", a.out);
  }
  if (a.graphon.empty()) throw ConfigError("missing --graphon");
  if (a.N < 1) throw ConfigError("missing or invalid --N");

  const Graphon W = load_graphon(a.graphon);
  const sampling::Mode mode = sampling::mode_from_name(a.mode);
  const sampling::SampledGraph g =
      sampling::sample_graph(W, a.N, mode, a.tau, a.seed);
  const long long edges =
      static_cast<long long>(g.S.sum() / 2.0 + 0.5);
  std::cout << "graphon: " << W.id << "\n";
  std::cout << "N=" << g.N << " mode=" << sampling::mode_name(mode)
            << " tau=" << io::fmt_double(g.tau)
            << " seed=" << g.seed
            << " kappa=" << io::fmt_double(g.kappa)
            << " edges=" << edges << "\n";
  write_outputs(a.out, sampling::sampled_graph_to_json(g),
                sampling::adjacency_to_csv(g.S), "");
  return 0;
}

// ---------------------------------------------------------------------------
// converge
// ---------------------------------------------------------------------------
struct ConvergeArgs {
  std::string preset;
  std::string graphon;
  std::string kind;
  ParamSpec ps;
  int resolution = 512;
  std::vector<int> N_values;
  int seeds = 20;
  std::string mode = "deterministic";
  double tau = 0.0;
  double delta = 0.01;
  double L = 0.0;
  bool L_set = false;
  int K = 0;
  bool K_set = false;
  std::uint64_t seed = 12345;
  bool seed_set = false;
  int jobs = 0;
  std::string out;
  std::string config;
};

int run_converge(const CLI::App* cmd, ConvergeArgs& a) {
  json cfg;
  if (!a.config.empty()) {
    cfg = load_config(
        a.config, {"preset", "graphon", "kind", "alpha", "alpha_frac", "beta",
                   "resolution", "N_values", "seeds", "mode", "tau", "delta",
                   "L", "K", "seed", "jobs", "out"});
    merge_key(cmd, cfg, "--preset", "preset", a.preset);
    merge_key(cmd, cfg, "--graphon", "graphon", a.graphon);
    merge_key(cmd, cfg, "--kind", "kind", a.kind);
    merge_key(cmd, cfg, "--alpha", "alpha", a.ps.alpha, &a.ps.alpha_set);
    merge_key(cmd, cfg, "--alpha-frac", "alpha_frac", a.ps.alpha_frac,
              &a.ps.alpha_frac_set);
    merge_key(cmd, cfg, "--beta", "beta", a.ps.beta, &a.ps.beta_set);
    merge_key(cmd, cfg, "--resolution", "resolution", a.resolution);
    merge_key(cmd, cfg, "--N", "N_values", a.N_values);
    merge_key(cmd, cfg, "--seeds", "seeds", a.seeds);
    merge_key(cmd, cfg, "--mode", "mode", a.mode);
    merge_key(cmd, cfg, "--tau", "tau", a.tau);
    merge_key(cmd, cfg, "--delta", "delta", a.delta);
    merge_key(cmd, cfg, "--L", "L", a.L, &a.L_set);
    merge_key(cmd, cfg, "--K", "K", a.K, &a.K_set);
    merge_key(cmd, cfg, "--seed", "seed", a.seed, &a.seed_set);
    merge_key(cmd, cfg, "--jobs", "jobs", a.jobs);
    merge_key(cmd, cfg, "--out", "out", a.out);
  }
  a.ps.alpha_set |= cmd->count("--alpha") > 0;
  a.ps.alpha_frac_set |= cmd->count("--alpha-frac") > 0;
  a.ps.beta_set |= cmd->count("--beta") > 0;
  a.L_set |= cmd->count("--L") > 0;
  a.K_set |= cmd->count("--K") > 0;
  a.seed_set |= cmd->count("--seed") > 0;

  Graphon W;
  Kind kind = Kind::degree;
  Params params;
  convergence::ConvergenceConfig run_cfg;
  if (!a.preset.empty()) {
    presets::ConvergencePreset p = presets::convergence_preset(a.preset);
    W = p.W;
    kind = p.kind;
    params = p.params;
    run_cfg = p.cfg;
    // Explicit flags still override preset values.
    if (cmd->count("--N") > 0 || cfg.contains("N_values")) {
      run_cfg.N_values = a.N_values;
    }
    if (cmd->count("--seeds") > 0 || cfg.contains("seeds")) {
      run_cfg.seeds_per_N = a.seeds;
    }
    if (cmd->count("--mode") > 0 || cfg.contains("mode")) {
      run_cfg.mode = sampling::mode_from_name(a.mode);
    }
    if (cmd->count("--tau") > 0 || cfg.contains("tau")) run_cfg.tau = a.tau;
    if (cmd->count("--delta") > 0 || cfg.contains("delta")) {
      run_cfg.delta = a.delta;
    }
    if (a.L_set) run_cfg.L = a.L;
    if (a.K_set) run_cfg.K = a.K;
    if (a.seed_set) run_cfg.master_seed = a.seed;
    if (a.ps.alpha_set || a.ps.alpha_frac_set || a.ps.beta_set) {
      params = resolve_params(kind, a.ps, W, a.resolution);
    }
  } else {
    if (a.graphon.empty()) throw ConfigError("missing --graphon or --preset");
    if (a.kind.empty()) throw ConfigError("missing --kind");
    if (a.N_values.empty()) throw ConfigError("missing --N list");
    W = load_graphon(a.graphon);
    kind = kind_from_name(a.kind);
    params = resolve_params(kind, a.ps, W, a.resolution);
    run_cfg.N_values = a.N_values;
    run_cfg.seeds_per_N = a.seeds;
    run_cfg.mode = sampling::mode_from_name(a.mode);
    run_cfg.tau = a.tau;
    run_cfg.delta = a.delta;
    run_cfg.L = a.L_set ? a.L : W.metadata.lipschitz_L;
    run_cfg.K = a.K_set ? a.K
                        : static_cast<int>(W.metadata.breakpoints.size());
    run_cfg.master_seed = a.seed;
  }
  run_cfg.jobs = a.jobs;

  const CentralityFunction reference =
      graphon_centrality(W, kind, params, a.resolution);
  const convergence::ConvergenceReport report =
      convergence::run_convergence(W, kind, params, reference, run_cfg);

  std::cout << "graphon: " << report.graphon_id << " kind: "
            << kind_name(report.kind) << " mode: "
            << sampling::mode_name(report.mode) << " seeds: "
            << report.provenance.seeds_per_N << "\n";
  for (const auto& row : report.rows) {
    std::cout << "N=" << row.N
              << " mean_error=" << fmt_or_na(row.mean_error)
              << " std=" << fmt_or_na(row.std_error)
              << " det_error=" << fmt_or_na(row.det_mean_error)
              << " rho=" << fmt_or_na(row.rho_bound)
              << " sampled_bound=" << fmt_or_na(row.sampled_bound)
              << " aligned=" << (row.aligned ? "yes" : "no")
              << " guaranteed=" << (row.bound_guaranteed ? "yes" : "no")
              << " excluded=" << row.n_excluded << "\n";
  }
  std::cout << "fitted_rate=" << fmt_or_na(report.fitted_rate)
            << " fitted_C=" << fmt_or_na(report.fitted_C) << "\n";
  std::cout << "det_fitted_rate=" << fmt_or_na(report.det_fitted_rate)
            << " det_fitted_C=" << fmt_or_na(report.det_fitted_C) << "\n";

  write_outputs(a.out, convergence_report_to_json(report),
                convergence_report_to_csv(report),
                svg::convergence_plot(report));
  return 0;
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------
struct BoundArgs {
  std::string graphon;
  int N = 0;
  double L = 0.0;
  int K = 0;
  double delta = 0.01;
  double kappa = 1.0;
  std::string mode = "deterministic";
  std::string out;
  std::string config;
};

int run_bound(const CLI::App* cmd, BoundArgs& a) {
  json cfg;
  if (!a.config.empty()) {
    cfg = load_config(a.config, {"graphon", "N", "L", "K", "delta", "kappa",
                                 "mode", "out"});
    merge_key(cmd, cfg, "--graphon", "graphon", a.graphon);
    merge_key(cmd, cfg, "--N", "N", a.N);
    merge_key(cmd, cfg, "--L", "L", a.L);
    merge_key(cmd, cfg, "--K", "K", a.K);
    merge_key(cmd, cfg, "--delta", "delta", a.delta);
    merge_key(cmd, cfg, "--kappa", "kappa", a.kappa);
    merge_key(cmd, cfg, "--mode", "mode", a.mode);
    merge_key(cmd, cfg, "--out", "out", a.out);
  }
  if (a.N < 1) throw ConfigError("missing or invalid --N");

  convergence::BoundParams bp;
  bp.L = a.L;
  bp.K = a.K;
  bp.delta = a.delta;
  bp.mode = sampling::mode_from_name(a.mode);
  const convergence::RhoResult r = convergence::rho(a.N, bp);
  const double sb = convergence::sampled_bound(a.N, a.kappa, bp);

  json doc;
  doc["N"] = a.N;
  doc["L"] = a.L;
  doc["K"] = a.K;
  doc["delta"] = a.delta;
  doc["kappa"] = a.kappa;
  doc["mode"] = sampling::mode_name(bp.mode);
  doc["d_N"] = r.d_N;
  doc["rho"] = r.rho;
  doc["sampled_bound"] = sb;

  std::cout << "N=" << a.N << " mode=" << sampling::mode_name(bp.mode)
            << " L=" << io::fmt_double(a.L) << " K=" << a.K
            << " delta=" << io::fmt_double(a.delta)
            << " kappa=" << io::fmt_double(a.kappa) << "\n";
  std::cout << "d_N=" << io::fmt_double(r.d_N) << "\n";
  std::cout << "rho=" << io::fmt_double(r.rho) << "\n";
  std::cout << "sampled_bound=" << io::fmt_double(sb) << "\n";

  if (!a.graphon.empty()) {
    const Graphon W = load_graphon(a.graphon);
    const convergence::DegreeCondition cond =
        convergence::max_degree_condition(W, a.N, bp, a.delta);
    json jc;
    jc["holds"] = cond.holds;
    jc["lhs"] = cond.lhs;
    jc["rhs"] = cond.rhs;
    jc["spacing_lhs"] = cond.spacing_lhs;
    jc["spacing_rhs"] = cond.spacing_rhs;
    jc["cd_max"] = cond.cd_max;
    doc["degree_condition"] = jc;
    doc["graphon_id"] = W.id;
    std::cout << "degree_condition: holds="
              << (cond.holds ? "true" : "false")
              << " lhs=" << io::fmt_double(cond.lhs)
              << " rhs=" << io::fmt_double(cond.rhs)
              << " spacing_lhs=" << io::fmt_double(cond.spacing_lhs)
              << " spacing_rhs=" << io::fmt_double(cond.spacing_rhs) << "\n";
  }

  write_outputs(a.out, doc, "", "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphon centrality toolkit"};
  app.require_subcommand(1);

  CentralityArgs ca;
  CLI::App* c_cmd = app.add_subcommand(
      "centrality", "Compute a centrality function of a graphon");
  c_cmd->add_option("--graphon", ca.graphon,
                    "Preset name (example-sbm, example-fr, example-wg) or "
                    "JSON file path");
  c_cmd->add_option("--kind", ca.kind,
                    "degree | eigenvector | katz | pagerank");
  c_cmd->add_option("--alpha", ca.ps.alpha, "Katz parameter");
  c_cmd->add_option("--alpha-frac", ca.ps.alpha_frac,
                    "Katz parameter as a fraction of 1/lambda1");
  c_cmd->add_option("--beta", ca.ps.beta, "PageRank damping parameter");
  c_cmd->add_option("--resolution", ca.resolution,
                    "Discretization resolution for analytic kernels "
                    "(power of two, >= 16)");
  c_cmd->add_option("--out", ca.out, "Output path prefix (.json/.csv/.svg)");
  c_cmd->add_option("--config", ca.config, "JSON config file");

  SampleArgs sa;
  CLI::App* s_cmd =
      app.add_subcommand("sample", "Sample a random graph from a graphon");
  s_cmd->add_option("--graphon", sa.graphon, "Preset name or JSON file path");
  s_cmd->add_option("--N", sa.N, "Number of nodes");
  s_cmd->add_option("--mode", sa.mode, "deterministic | stochastic");
  s_cmd->add_option("--tau", sa.tau, "Sparsity exponent, kappa = N^-tau");
  s_cmd->add_option("--seed", sa.seed, "RNG seed");
  s_cmd->add_option("--out", sa.out, "Output path prefix (.json/.csv)");
  s_cmd->add_option("--config", sa.config, "JSON config file");

  ConvergeArgs va;
  CLI::App* v_cmd = app.add_subcommand(
      "converge", "Run a sampled-centrality convergence experiment");
  v_cmd->add_option("--preset", va.preset, "fig4 | fig5 | thm2-det");
  v_cmd->add_option("--graphon", va.graphon, "Preset name or JSON file path");
  v_cmd->add_option("--kind", va.kind,
                    "degree | eigenvector | katz | pagerank");
  v_cmd->add_option("--alpha", va.ps.alpha, "Katz parameter");
  v_cmd->add_option("--alpha-frac", va.ps.alpha_frac,
                    "Katz parameter as a fraction of 1/lambda1");
  v_cmd->add_option("--beta", va.ps.beta, "PageRank damping parameter");
  v_cmd->add_option("--resolution", va.resolution,
                    "Reference resolution for analytic kernels");
  v_cmd->add_option("--N", va.N_values, "Graph sizes (comma-separated)")
      ->delimiter(',');
  v_cmd->add_option("--seeds", va.seeds, "Seeds per N");
  v_cmd->add_option("--mode", va.mode, "deterministic | stochastic");
  v_cmd->add_option("--tau", va.tau, "Sparsity exponent");
  v_cmd->add_option("--delta", va.delta, "Bound failure probability");
  v_cmd->add_option("--L", va.L, "Lipschitz constant for the bounds");
  v_cmd->add_option("--K", va.K, "Breakpoint count for the bounds");
  v_cmd->add_option("--seed", va.seed, "Master seed");
  v_cmd->add_option("--jobs", va.jobs, "Worker threads (0 = all cores)");
  v_cmd->add_option("--out", va.out, "Output path prefix (.json/.csv/.svg)");
  v_cmd->add_option("--config", va.config, "JSON config file");

  BoundArgs ba;
  CLI::App* b_cmd = app.add_subcommand(
      "bound", "Evaluate the deviation bounds and the degree condition");
  b_cmd->add_option("--graphon", ba.graphon,
                    "Preset name or JSON file path (enables the degree "
                    "condition check)");
  b_cmd->add_option("--N", ba.N, "Number of nodes");
  b_cmd->add_option("--L", ba.L, "Lipschitz constant");
  b_cmd->add_option("--K", ba.K, "Breakpoint count");
  b_cmd->add_option("--delta", ba.delta, "Failure probability");
  b_cmd->add_option("--kappa", ba.kappa, "Sparsity parameter in (0, 1]");
  b_cmd->add_option("--mode", ba.mode, "deterministic | stochastic");
  b_cmd->add_option("--out", ba.out, "Output path prefix (.json)");
  b_cmd->add_option("--config", ba.config, "JSON config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_cmd->parsed()) return run_centrality(c_cmd, ca);
    if (s_cmd->parsed()) return run_sample(s_cmd, sa);
    if (v_cmd->parsed()) return run_converge(v_cmd, va);
    if (b_cmd->parsed()) return run_bound(b_cmd, ba);
    std::cerr << "no subcommand given\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 4;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}

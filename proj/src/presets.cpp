#include "graphon/presets.hpp"

#include "graphon/errors.hpp"

namespace graphon::presets {

namespace {

Graphon make_example_sbm() {
  Sbm sbm;
  sbm.boundaries = {0.0, 0.1, 0.4, 0.6, 0.9, 1.0};
  sbm.P.resize(5, 5);
  sbm.P << 1.0, 1.0, 1.0, 0.0, 0.0,
           1.0, 0.5, 0.0, 0.0, 0.0,
           1.0, 0.0, 0.25, 0.0, 1.0,
           0.0, 0.0, 0.0, 0.5, 1.0,
           0.0, 0.0, 1.0, 1.0, 1.0;
  Graphon W;
  W.variant = sbm;
  W.id = "example-sbm";
  W.metadata.lipschitz_L = 0.0;
  W.metadata.breakpoints = {0.1, 0.4, 0.6, 0.9};
  W.metadata.eta = 0.25;  // smallest block value of the degree function
  return W;
}

Graphon make_example_fr() {
  FiniteRank fr;
  fr.g = {ScalarFunc::poly({0.0, 0.0, 1.0}), ScalarFunc::poly({0.5})};
  fr.h = {ScalarFunc::poly({0.5}), ScalarFunc::poly({0.0, 0.0, 1.0})};
  Graphon W;
  W.variant = fr;
  W.id = "example-fr";
  W.metadata.lipschitz_L = 1.0;
  W.metadata.breakpoints = {};
  W.metadata.eta = 1.0 / 6.0;  // degree function (x^2 + 1/3)/2 at x = 0
  return W;
}

Graphon make_example_wg() {
  AnalyticKernel ak;
  ak.w = make_wg_kernel();
  Graphon W;
  W.variant = ak;
  W.id = "example-wg";
  W.metadata.lipschitz_L = 1.0;
  W.metadata.breakpoints = {};
  W.metadata.eta = 0.0;  // degree function x(1-x)/2 vanishes at the endpoints
  return W;
}

}  // namespace

Graphon graphon_by_name(const std::string& name) {
  if (name == "example-sbm") return make_example_sbm();
  if (name == "example-fr") return make_example_fr();
  if (name == "example-wg") return make_example_wg();
  throw ConfigError("unknown graphon preset '" + name +
                    "' (available: example-sbm, example-fr, example-wg)");
}

bool is_graphon_preset(const std::string& name) {
  return name == "example-sbm" || name == "example-fr" || name == "example-wg";
}

std::vector<std::string> graphon_preset_names() {
  return {"example-sbm", "example-fr", "example-wg"};
}

ConvergencePreset convergence_preset(const std::string& name) {
  ConvergencePreset p;
  if (name == "fig4") {
    p.W = make_example_fr();
    p.kind = Kind::eigenvector;
    p.cfg.N_values = {34, 48, 68, 96, 136, 192, 272, 384, 489};
    p.cfg.seeds_per_N = 20;
    p.cfg.mode = sampling::Mode::deterministic;
    p.cfg.tau = 0.0;
    p.cfg.delta = 0.01;
    p.cfg.L = 1.0;
    p.cfg.K = 0;
    p.cfg.master_seed = 101;
    return p;
  }
  if (name == "fig5") {
    p.W = make_example_sbm();
    p.kind = Kind::katz;
    p.params.alpha = 1.5;
    p.cfg.N_values = {58, 60, 115, 120, 235, 240, 475, 480, 955, 960};
    p.cfg.seeds_per_N = 20;
    p.cfg.mode = sampling::Mode::deterministic;
    p.cfg.tau = 0.0;
    p.cfg.delta = 0.01;
    p.cfg.L = 0.0;
    p.cfg.K = 4;
    p.cfg.master_seed = 102;
    return p;
  }
  if (name == "thm2-det") {
    p.W = make_example_fr();
    p.kind = Kind::eigenvector;
    p.cfg.N_values = {64, 128, 256, 512, 1024};
    p.cfg.seeds_per_N = 1;
    p.cfg.mode = sampling::Mode::deterministic;
    p.cfg.tau = 0.0;
    p.cfg.delta = 0.01;
    p.cfg.L = 1.0;
    p.cfg.K = 0;
    p.cfg.master_seed = 103;
    return p;
  }
  throw ConfigError("unknown convergence preset '" + name +
                    "' (available: fig4, fig5, thm2-det)");
}

bool is_convergence_preset(const std::string& name) {
  return name == "fig4" || name == "fig5" || name == "thm2-det";
}

std::vector<std::string> convergence_preset_names() {
  return {"fig4", "fig5", "thm2-det"};
}

}  // namespace graphon::presets

#pragma once

#include <string>
#include <vector>

#include "graphon/centrality_function.hpp"
#include "graphon/convergence.hpp"
#include "graphon/graphon.hpp"

namespace graphon::presets {

// Built-in graphons:
//   example-sbm — 5-block piecewise-constant graphon with a core-periphery
//                 structure and mirror symmetry;
//   example-fr  — rank-2 graphon W(x,y) = (x^2 + y^2) / 2;
//   example-wg  — analytic kernel min(x,y)(1 - max(x,y)).
Graphon graphon_by_name(const std::string& name);
bool is_graphon_preset(const std::string& name);
std::vector<std::string> graphon_preset_names();

struct ConvergencePreset {
  Graphon W;
  Kind kind = Kind::degree;
  Params params;
  convergence::ConvergenceConfig cfg;
};

// Built-in experiment configurations:
//   fig4     — example-fr, eigenvector, deterministic latents, 20 seeds;
//   fig5     — example-sbm, Katz(1.5), grid sizes alternating between
//              multiples of 10 (block-aligned) and misaligned neighbors;
//   thm2-det — example-fr, eigenvector, dyadic N ladder, single seed, for
//              the expected-matrix error-vs-rho comparison.
ConvergencePreset convergence_preset(const std::string& name);
bool is_convergence_preset(const std::string& name);
std::vector<std::string> convergence_preset_names();

}  // namespace graphon::presets

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphon/graphon.hpp"

namespace graphon::sampling {

enum class Mode { deterministic, stochastic };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& name);

// Latent positions u_1 < ... < u_N in [0, 1]: the uniform grid i/N in
// deterministic mode, sorted uniform order statistics in stochastic mode.
struct LatentVariables {
  std::vector<double> u;
  Mode mode = Mode::deterministic;
  std::uint64_t seed = 0;  // stochastic mode only
  int size() const { return static_cast<int>(u.size()); }
};

struct SampledGraph {
  int N = 0;
  Matrix P;  // probability matrix W(u_i, u_j)
  Matrix S;  // Bernoulli adjacency, symmetric, zero diagonal
  double kappa = 1.0;
  double tau = 0.0;
  LatentVariables latents;
  std::uint64_t seed = 0;
  std::string graphon_id;
};

// Latent construction; stochastic draws come from a counter-based stream so
// (N, seed) fully determines u.  A tie among the sorted draws (probability
// zero in exact arithmetic) raises NumericError rather than passing silently.
LatentVariables make_latents(int N, Mode mode, std::uint64_t seed = 0);

// P_ij = W(u_i, u_j), diagonal included.  On a deterministic uniform grid
// the point i/N is the right endpoint of cell ((i-1)/N, i/N], so exact
// block-boundary hits resolve to that cell's value (left limit); stochastic
// latents use plain pointwise evaluation.
Matrix probability_matrix(const Graphon& W, const LatentVariables& lat);

// kappa_N = N^{-tau}; DomainError unless 0 <= tau < 1.
double kappa_schedule(int N, double tau);

// Independent Bernoulli(kappa * P_ij) for i > j, mirrored, zero diagonal.
Matrix sample_adjacency(const Matrix& P, double kappa, std::uint64_t seed);

// Full pipeline: latents -> P -> kappa -> S with one seed.
SampledGraph sample_graph(const Graphon& W, int N, Mode mode, double tau,
                          std::uint64_t seed);

// JSON with a header (N, kappa, tau, mode, seed, latents, graphon id) and an
// edge list; the adjacency is reconstructible from it.
nlohmann::json sampled_graph_to_json(const SampledGraph& g);

// Dense 0/1 adjacency dump (RFC 4180 CSV, CRLF), intended for small N.
std::string adjacency_to_csv(const Matrix& S);

}  // namespace graphon::sampling

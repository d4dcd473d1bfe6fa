#include "graphon/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphon/io_util.hpp"
#include "graphon/rng.hpp"

namespace graphon::sampling {

std::string mode_name(Mode m) {
  return m == Mode::deterministic ? "deterministic" : "stochastic";
}

Mode mode_from_name(const std::string& name) {
  if (name == "deterministic") return Mode::deterministic;
  if (name == "stochastic") return Mode::stochastic;
  throw ConfigError("unknown latent mode \"" + name +
                    "\" (expected deterministic or stochastic)");
}

LatentVariables make_latents(int N, Mode mode, std::uint64_t seed) {
  if (N < 1) throw DomainError("make_latents: N must be >= 1");
  LatentVariables lat;
  lat.mode = mode;
  lat.seed = seed;
  lat.u.resize(N);
  if (mode == Mode::deterministic) {
    for (int i = 1; i <= N; ++i) {
      lat.u[i - 1] = static_cast<double>(i) / N;
    }
    return lat;
  }
  const std::uint64_t key = rng::stream_key(seed, rng::Tag::latents);
  for (int i = 0; i < N; ++i) {
    lat.u[i] = rng::uniform_at(key, static_cast<std::uint64_t>(i));
  }
  std::sort(lat.u.begin(), lat.u.end());
  for (int i = 1; i < N; ++i) {
    if (!(lat.u[i] > lat.u[i - 1])) {
      throw NumericError(
          "make_latents: tie among sorted uniforms (seed collision)");
    }
  }
  return lat;
}

Matrix probability_matrix(const Graphon& W, const LatentVariables& lat) {
  const int N = lat.size();
  Matrix P(N, N);
  if (W.is_sbm()) {
    const Sbm& s = W.sbm();
    std::vector<int> blk(N);
    for (int i = 0; i < N; ++i) {
      blk[i] = (lat.mode == Mode::deterministic)
                   ? sbm_block_left_limit(s, lat.u[i])
                   : sbm_block_of(s, lat.u[i]);
    }
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        P(i, j) = s.P(blk[i], blk[j]);
      }
    }
    return P;
  }
  for (int i = 0; i < N; ++i) {
    for (int j = i; j < N; ++j) {
      const double v = evaluate(W, lat.u[i], lat.u[j]);
      P(i, j) = v;
      P(j, i) = v;
    }
  }
  return P;
}

double kappa_schedule(int N, double tau) {
  if (N < 1) throw DomainError("kappa_schedule: N must be >= 1");
  if (!(tau >= 0.0 && tau < 1.0)) {
    throw DomainError("kappa_schedule: tau must lie in [0, 1)");
  }
  return std::pow(static_cast<double>(N), -tau);
}

Matrix sample_adjacency(const Matrix& P, double kappa, std::uint64_t seed) {
  if (P.rows() != P.cols()) {
    throw DomainError("sample_adjacency: P must be square");
  }
  if (!(kappa > 0.0)) throw DomainError("sample_adjacency: kappa must be > 0");
  const int N = static_cast<int>(P.rows());
  if (N > 0 && kappa * P.maxCoeff() > 1.0 + 1e-15) {
    std::ostringstream os;
    os << "sample_adjacency: kappa * max(P) = " << kappa * P.maxCoeff()
       << " exceeds 1";
    throw DomainError(os.str());
  }
  const std::uint64_t key = rng::stream_key(seed, rng::Tag::edges);
  Matrix S = Matrix::Zero(N, N);
  for (int i = 1; i < N; ++i) {
    for (int j = 0; j < i; ++j) {
      const double r = rng::uniform_at(key, static_cast<std::uint64_t>(i),
                                       static_cast<std::uint64_t>(j));
      const double edge = (r < kappa * P(i, j)) ? 1.0 : 0.0;
      S(i, j) = edge;
      S(j, i) = edge;
    }
  }
  return S;
}

SampledGraph sample_graph(const Graphon& W, int N, Mode mode, double tau,
                          std::uint64_t seed) {
  SampledGraph g;
  g.N = N;
  g.tau = tau;
  g.seed = seed;
  g.graphon_id = W.id;
  g.latents = make_latents(N, mode, seed);
  g.P = probability_matrix(W, g.latents);
  g.kappa = kappa_schedule(N, tau);
  g.S = sample_adjacency(g.P, g.kappa, seed);
  return g;
}

nlohmann::json sampled_graph_to_json(const SampledGraph& g) {
  nlohmann::json j;
  j["N"] = g.N;
  j["kappa"] = g.kappa;
  j["tau"] = g.tau;
  j["mode"] = mode_name(g.latents.mode);
  j["seed"] = g.seed;
  j["graphon_id"] = g.graphon_id;
  j["latents"] = g.latents.u;
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 1; i < g.N; ++i) {
    for (int k = 0; k < i; ++k) {
      if (g.S(i, k) != 0.0) {
        edges.push_back(nlohmann::json::array({k, i}));
      }
    }
  }
  j["edges"] = edges;
  j["edge_count"] = edges.size();
  return j;
}

std::string adjacency_to_csv(const Matrix& S) {
  std::ostringstream os;
  const int N = static_cast<int>(S.rows());
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (j) os << ",";
      os << (S(i, j) != 0.0 ? 1 : 0);
    }
    os << "\r\n";
  }
  return os.str();
}

}  // namespace graphon::sampling

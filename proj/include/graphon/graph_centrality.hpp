#pragma once

#include <string>

#include <json.hpp>

#include "graphon/centrality_function.hpp"
#include "graphon/spectral.hpp"

namespace graphon::graphs {

using num::Matrix;
using num::Vector;

enum class Scaling { raw, over_N, over_N_kappa };

std::string scaling_name(Scaling s);

// Per-node centrality scores for one measure on a (rescaled) adjacency or
// probability matrix.  `degenerate_warning` flags a near-multiple dominant
// eigenvalue (disconnected-graph heuristic) for the eigenvector kind.
struct CentralityVector {
  Vector values;
  Kind kind = Kind::degree;
  Params params;
  Scaling scaling = Scaling::raw;
  bool degenerate_warning = false;
  double lambda1 = 0.0;  // spectral kinds
  int size() const { return static_cast<int>(values.size()); }
};

// Row sums A * 1.  Requires a symmetric entrywise-nonnegative matrix.
CentralityVector degree(const Matrix& A);

// sqrt(N) * v1 with Perron orientation; warns (not fails) when the spectral
// gap is below 1e-10.
CentralityVector eigenvector(const Matrix& A);

// (I - alpha A)^{-1} 1 for 0 < alpha < 1/lambda1(A); DomainError carrying
// lambda1 otherwise.
CentralityVector katz(const Matrix& A, double alpha);

// (1-beta)(I - beta A D^dagger)^{-1} 1 where D = diag(degrees) and the
// pseudo-inverse zeroes the columns of zero-degree nodes.
CentralityVector pagerank(const Matrix& A, double beta);

CentralityVector centrality(const Matrix& A, Kind kind, Params params = {});

// Entrywise rescaling: M/N (over_N) or M/(N kappa) (over_N_kappa).
Matrix rescale(const Matrix& M, Scaling scaling, double kappa = 1.0);

// Step-function embedding on the uniform N-grid: block i carries value c_i.
CentralityFunction embed_step(const CentralityVector& c);

// Serialization and matrix input.
nlohmann::json centrality_vector_to_json(const CentralityVector& c);
std::string centrality_vector_to_csv(const CentralityVector& c);

// Edge-list text: one "i,j" (0-based) pair per line, optional trailing
// weight; builds a symmetric matrix of size max index + 1 (or `n` if given).
Matrix matrix_from_edge_list(const std::string& text, int n = -1);
// Dense CSV: N rows of N comma-separated entries.
Matrix matrix_from_dense_csv(const std::string& text);

}  // namespace graphon::graphs

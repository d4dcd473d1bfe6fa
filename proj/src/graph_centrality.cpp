#include "graphon/graph_centrality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "graphon/errors.hpp"
#include "graphon/io_util.hpp"

namespace graphon::graphs {

namespace {

constexpr double kAlphaGuard = 1e-9;

void require_square(const Matrix& A) {
  if (A.rows() != A.cols() || A.rows() < 1) {
    throw ConfigError("matrix must be square and non-empty");
  }
}

void require_symmetric_nonneg(const Matrix& A) {
  require_square(A);
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j <= i; ++j) {
      if (std::abs(A(i, j) - A(j, i)) > 1e-10 * scale) {
        throw DomainError("matrix is not symmetric");
      }
      if (A(i, j) < 0.0) {
        throw DomainError("matrix has a negative entry");
      }
    }
  }
}

}  // namespace

std::string scaling_name(Scaling s) {
  switch (s) {
    case Scaling::raw: return "raw";
    case Scaling::over_N: return "over_N";
    case Scaling::over_N_kappa: return "over_N_kappa";
  }
  return "raw";
}

CentralityVector degree(const Matrix& A) {
  require_symmetric_nonneg(A);
  CentralityVector out;
  out.kind = Kind::degree;
  out.values = A.rowwise().sum();
  return out;
}

CentralityVector eigenvector(const Matrix& A) {
  require_symmetric_nonneg(A);
  const int n = static_cast<int>(A.rows());
  num::Spectrum spec = num::sym_eig(A);
  CentralityVector out;
  out.kind = Kind::eigenvector;
  out.lambda1 = spec.eigenvalues(0);
  out.degenerate_warning = (spec.gap < 1e-10);
  // L2([0,1]) normalization of the embedded step function: the block step
  // built from c has squared norm (1/N) sum c_i^2, so c = sqrt(N) v1 with
  // v1 a unit eigenvector makes the embedding unit-norm.
  out.values = std::sqrt(static_cast<double>(n)) * spec.eigenvectors.col(0);
  return out;
}

CentralityVector katz(const Matrix& A, double alpha) {
  require_symmetric_nonneg(A);
  const int n = static_cast<int>(A.rows());
  num::Spectrum spec = num::sym_eig(A);
  const double lambda1 = spec.eigenvalues(0);
  if (lambda1 > 0.0) {
    const double limit = (1.0 - kAlphaGuard) / lambda1;
    if (!(alpha > 0.0) || !(alpha < limit)) {
      throw DomainError(
          "katz parameter alpha must lie in (0, " + io::fmt_double(limit) +
              ") for this matrix (dominant eigenvalue " +
              io::fmt_double(lambda1) + ")",
          lambda1);
    }
  } else if (!(alpha > 0.0)) {
    throw DomainError("katz parameter alpha must be positive", lambda1);
  }
  CentralityVector out;
  out.kind = Kind::katz;
  out.params.alpha = alpha;
  out.lambda1 = lambda1;
  Matrix system = Matrix::Identity(n, n) - alpha * A;
  out.values = num::linear_solve(system, Vector::Ones(n));
  return out;
}

CentralityVector pagerank(const Matrix& A, double beta) {
  require_symmetric_nonneg(A);
  if (!(beta > 0.0) || !(beta < 1.0)) {
    throw DomainError("pagerank parameter beta must lie in (0, 1)");
  }
  const int n = static_cast<int>(A.rows());
  Vector deg = A.rowwise().sum();
  Matrix walk = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    if (deg(j) > 0.0) {
      walk.col(j) = A.col(j) / deg(j);
    }
  }
  CentralityVector out;
  out.kind = Kind::pagerank;
  out.params.beta = beta;
  Matrix system = Matrix::Identity(n, n) - beta * walk;
  out.values = (1.0 - beta) * num::linear_solve(system, Vector::Ones(n));
  return out;
}

CentralityVector centrality(const Matrix& A, Kind kind, Params params) {
  switch (kind) {
    case Kind::degree: return degree(A);
    case Kind::eigenvector: return eigenvector(A);
    case Kind::katz: return katz(A, params.alpha);
    case Kind::pagerank: return pagerank(A, params.beta);
  }
  throw ConfigError("unknown centrality kind");
}

Matrix rescale(const Matrix& M, Scaling scaling, double kappa) {
  require_square(M);
  const double n = static_cast<double>(M.rows());
  switch (scaling) {
    case Scaling::raw: return M;
    case Scaling::over_N: return M / n;
    case Scaling::over_N_kappa:
      if (!(kappa > 0.0)) {
        throw DomainError("kappa must be positive for over_N_kappa scaling");
      }
      return M / (n * kappa);
  }
  return M;
}

CentralityFunction embed_step(const CentralityVector& c) {
  const int n = c.size();
  if (n < 1) {
    throw ConfigError("cannot embed an empty centrality vector");
  }
  StepFunction step;
  step.boundaries.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    step.boundaries[i] = static_cast<double>(i) / n;
  }
  step.values.assign(c.values.data(), c.values.data() + n);
  CentralityFunction out;
  out.kind = c.kind;
  out.params = c.params;
  out.rep = std::move(step);
  if (c.kind == Kind::eigenvector || c.kind == Kind::katz) {
    out.lambda1 = c.lambda1;
  }
  return out;
}

nlohmann::json centrality_vector_to_json(const CentralityVector& c) {
  nlohmann::json j;
  j["kind"] = kind_name(c.kind);
  nlohmann::json params = nlohmann::json::object();
  if (c.kind == Kind::katz) params["alpha"] = c.params.alpha;
  if (c.kind == Kind::pagerank) params["beta"] = c.params.beta;
  j["params"] = params;
  j["scaling"] = scaling_name(c.scaling);
  j["n"] = c.size();
  std::vector<double> vals(c.values.data(), c.values.data() + c.size());
  j["values"] = vals;
  if (c.kind == Kind::eigenvector || c.kind == Kind::katz) {
    j["lambda1"] = c.lambda1;
  }
  if (c.degenerate_warning) {
    j["degenerate_warning"] = true;
  }
  return j;
}

std::string centrality_vector_to_csv(const CentralityVector& c) {
  std::string out = "node_index,value\r\n";
  for (int i = 0; i < c.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += io::fmt_double(c.values(i));
    out += "\r\n";
  }
  return out;
}

Matrix matrix_from_edge_list(const std::string& text, int n) {
  struct Edge {
    int i, j;
    double w;
  };
  std::vector<Edge> edges;
  int max_index = -1;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // Strip comments and whitespace-only lines.
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    Edge e{-1, -1, 1.0};
    if (!(fields >> e.i >> e.j)) {
      throw ConfigError("edge list line " + std::to_string(line_no) +
                        ": expected two node indices");
    }
    fields >> e.w;  // optional weight
    if (e.i < 0 || e.j < 0) {
      throw ConfigError("edge list line " + std::to_string(line_no) +
                        ": node indices must be non-negative");
    }
    if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
      throw ConfigError("edge list line " + std::to_string(line_no) +
                        ": weight must be finite and non-negative");
    }
    max_index = std::max({max_index, e.i, e.j});
    edges.push_back(e);
  }
  int size = (n > 0) ? n : max_index + 1;
  if (size < 1) {
    throw ConfigError("edge list is empty and no node count was given");
  }
  if (max_index >= size) {
    throw ConfigError("edge list references node " + std::to_string(max_index) +
                      " but the matrix size is " + std::to_string(size));
  }
  Matrix A = Matrix::Zero(size, size);
  for (const Edge& e : edges) {
    if (e.i == e.j) continue;  // simple graphs: no self-loops
    A(e.i, e.j) = e.w;
    A(e.j, e.i) = e.w;
  }
  return A;
}

Matrix matrix_from_dense_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ConfigError("matrix CSV line " + std::to_string(line_no) +
                          ": cannot parse entry '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  const int size = static_cast<int>(rows.size());
  if (size < 1) {
    throw ConfigError("matrix CSV is empty");
  }
  Matrix A(size, size);
  for (int i = 0; i < size; ++i) {
    if (static_cast<int>(rows[i].size()) != size) {
      throw ConfigError("matrix CSV row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(size));
    }
    for (int j = 0; j < size; ++j) A(i, j) = rows[i][j];
  }
  return A;
}

}  // namespace graphon::graphs

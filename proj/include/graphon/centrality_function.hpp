#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "graphon/errors.hpp"

namespace graphon {

// The four centrality measures.  Katz carries alpha, PageRank carries beta.
enum class Kind { degree, eigenvector, katz, pagerank };

struct Params {
  double alpha = 0.0;  // katz
  double beta = 0.0;   // pagerank
};

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

// ---------------------------------------------------------------------------
// Function representations on [0, 1].
// ---------------------------------------------------------------------------

// Piecewise constant on its own partition.
struct StepFunction {
  std::vector<double> boundaries;  // 0 = b_0 < ... < b_m = 1
  std::vector<double> values;      // one per block
};

// Piecewise constant on the uniform n-grid; values sampled at block
// midpoints (the step reading of a grid of samples).
struct GridFunction {
  int n = 0;
  std::vector<double> values;
};

// Named closed forms:
//   quadratic   coeffs = {a, c}            a*x^2 + c
//   sine_series coeffs = {c0, a1, a2, ...} c0 + sum a_k sin(k pi x)
//   parabolic   coeffs = {a}               a*x*(1-x)
// The sine_series offset c0 extends the pure sine sum so that Katz-style
// "1 + series" forms stay in closed form.
struct AnalyticForm {
  enum class Family { quadratic, sine_series, parabolic };
  Family family = Family::quadratic;
  std::vector<double> coeffs;
};

struct CentralityFunction {
  Kind kind = Kind::degree;
  Params params;
  std::variant<StepFunction, GridFunction, AnalyticForm> rep;

  // Optional diagnostics populated by discretization-based computations.
  std::optional<double> lambda1;
  std::optional<double> refine_l2_diff;
  std::optional<bool> converged;

  double evaluate(double x) const;

  bool is_step() const { return std::holds_alternative<StepFunction>(rep); }
  bool is_grid() const { return std::holds_alternative<GridFunction>(rep); }
  bool is_analytic() const { return std::holds_alternative<AnalyticForm>(rep); }
  const StepFunction& step() const { return std::get<StepFunction>(rep); }
  const GridFunction& grid() const { return std::get<GridFunction>(rep); }
  const AnalyticForm& analytic() const { return std::get<AnalyticForm>(rep); }
};

// L2 norm and distance over [0, 1].  Step-step pairings are computed exactly
// on the merged partition; pairings involving grid or analytic
// representations integrate (f - g)^2 by per-cell Gauss-Legendre quadrature
// on the merged partition, refined to abs_tol 1e-10.
double l2_norm(const CentralityFunction& c);
double l2_distance(const CentralityFunction& a, const CentralityFunction& b);

// JSON (schema in the README).
nlohmann::json centrality_function_to_json(const CentralityFunction& c);
CentralityFunction centrality_function_from_json(const nlohmann::json& j);

// CSV sample table "x,value" on a uniform grid (RFC 4180, CRLF).
std::string centrality_function_to_csv(const CentralityFunction& c,
                                       int samples = 512);

}  // namespace graphon

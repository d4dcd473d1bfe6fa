#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "graphon/quadrature.hpp"
#include "graphon/spectral.hpp"

namespace graphon {

using json = nlohmann::json;
using num::Matrix;
using num::Vector;

// ---------------------------------------------------------------------------
// Scalar functions on [0, 1]: the closed grammar for finite-rank factors.
// Polynomials (c0 + c1 x + ...) and scaled sines (amplitude * sin(n pi x)).
// Built-in names accepted by the JSON schema (monomial, constant, sine)
// normalize onto these two forms at parse time.
// ---------------------------------------------------------------------------
struct ScalarFunc {
  enum class Kind { poly, sine };
  Kind kind = Kind::poly;
  std::vector<double> coeffs;  // poly only: ascending powers
  double amplitude = 0.0;      // sine only
  int frequency = 1;           // sine only: sin(frequency * pi * x)

  double evaluate(double x) const;
  bool is_poly() const { return kind == Kind::poly; }

  static ScalarFunc poly(std::vector<double> c);
  static ScalarFunc sine(double amplitude, int frequency);
};

// Exact integral over [0, 1] of the product f * g when both are closed-form
// (polynomial x polynomial uses rational antiderivatives; pairings with a
// sine use the standard closed-form antiderivatives).
double integrate_product(const ScalarFunc& f, const ScalarFunc& g);
double integrate_one(const ScalarFunc& f);  // exact integral of f over [0,1]

// ---------------------------------------------------------------------------
// Kernel expressions for analytic graphons: a fixed small grammar over
// {+, -, *, min, max, constants, x, y, x^2, y^2}.
// ---------------------------------------------------------------------------
struct KernelExpr {
  enum class Op { constant, x, y, x2, y2, add, sub, mul, min_, max_ };
  Op op = Op::constant;
  double value = 0.0;             // constant only
  std::vector<KernelExpr> args;   // composite ops

  double evaluate(double x, double y) const;
};

// The built-in kernel min(x, y) * (1 - max(x, y)) as an expression tree.
KernelExpr make_wg_kernel();

// ---------------------------------------------------------------------------
// Graphon variants.
// ---------------------------------------------------------------------------
struct Sbm {
  std::vector<double> boundaries;  // 0 = b_0 < b_1 < ... < b_m = 1
  Matrix P;                        // m x m symmetric, entries in [0, 1]
  int blocks() const { return static_cast<int>(boundaries.size()) - 1; }
};

struct FiniteRank {
  std::vector<ScalarFunc> g;
  std::vector<ScalarFunc> h;
  int rank() const { return static_cast<int>(g.size()); }
};

struct AnalyticKernel {
  KernelExpr w;
};

struct GraphonMetadata {
  double lipschitz_L = 0.0;          // piecewise Lipschitz constant
  std::vector<double> breakpoints;   // interior discontinuities, sorted
  double eta = 0.0;                  // asserted lower bound on the degree function
};

struct Graphon {
  std::variant<Sbm, FiniteRank, AnalyticKernel> variant;
  GraphonMetadata metadata;
  std::string id = "custom";

  bool is_sbm() const { return std::holds_alternative<Sbm>(variant); }
  bool is_finite_rank() const { return std::holds_alternative<FiniteRank>(variant); }
  bool is_analytic() const { return std::holds_alternative<AnalyticKernel>(variant); }
  const Sbm& sbm() const { return std::get<Sbm>(variant); }
  const FiniteRank& finite_rank() const { return std::get<FiniteRank>(variant); }
  const AnalyticKernel& analytic() const { return std::get<AnalyticKernel>(variant); }
};

struct ValidationReport {
  bool pass = true;
  std::string first_violation;  // human-readable location + reason
};

// Effective measure matrix Q, effective connectivity matrix E, and their
// normalized companions.  D_E is populated for SBM graphons only.
struct EffectiveMatrices {
  Matrix Q;
  Matrix E;
  Vector g_bar;
  Vector h_bar;
  Vector h_nor;    // empty unless computed (requires positive degrees)
  Matrix E_nor;    // empty unless computed
  Matrix D_E;      // SBM only: diag(E * 1)
};

// ---------------------------------------------------------------------------
// Operations.
// ---------------------------------------------------------------------------

// Block index of x in an SBM: half-open membership [b_{i-1}, b_i), final
// block closed at 1.
int sbm_block_of(const Sbm& s, double x);

// Block index with exact boundary hits resolved downward (the left-limit
// value).  Used for uniform-grid evaluation where the grid point i/n is the
// right endpoint of cell ((i-1)/n, i/n] and must carry that cell's value.
int sbm_block_left_limit(const Sbm& s, double x);

// Pointwise evaluation W(x, y); DomainError when (x, y) leaves [0,1]^2.
double evaluate(const Graphon& W, double x, double y);

// Grid-based structural validation (symmetry, range, boundary monotonicity).
ValidationReport validate(const Graphon& W, int grid = 128);

// Q, E, g_bar, h_bar (always), plus h_nor / E_nor when `normalized` is
// requested: closed form for SBM; quadrature for finite-rank, where the
// normalization integrands divide by the degree function and require
// metadata eta > 0 (DomainError otherwise).
EffectiveMatrices effective_matrices(const Graphon& W,
                                     const num::QuadratureSpec& quad = {},
                                     bool normalized = false);

// Uniform-block SBM approximation with P_ij = W(i/n, j/n); exact boundary
// hits take the left-limit value, so aligned grids copy an SBM blockwise.
Graphon discretize_to_sbm(const Graphon& W, int n_blocks);

// Maximum of the degree function c^d(x) = int W(x, y) dy (exact for SBM,
// sampled quadrature otherwise).
double max_degree(const Graphon& W);

// Minimum spacing of the piecewise-Lipschitz partition induced by
// metadata.breakpoints (spacing to 0 and 1 included).
double min_breakpoint_spacing(const GraphonMetadata& meta);

// JSON serialization (schema documented in the README).
Graphon graphon_from_json(const json& j);
json graphon_to_json(const Graphon& W);
json scalar_func_to_json(const ScalarFunc& f);
ScalarFunc scalar_func_from_json(const json& j);
json kernel_expr_to_json(const KernelExpr& e);
KernelExpr kernel_expr_from_json(const json& j);

}  // namespace graphon

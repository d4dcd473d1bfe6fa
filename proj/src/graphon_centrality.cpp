#include "graphon/graphon_centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace graphon {

namespace {

const double kPi = std::acos(-1.0);
constexpr double kAlphaGuard = 1e-9;  // strict-bound guard band for Katz

void check_kind_params(Kind kind, const Params& params, double lambda1) {
  if (kind == Kind::katz) {
    const double limit = (lambda1 > 0.0)
                             ? (1.0 - kAlphaGuard) / lambda1
                             : std::numeric_limits<double>::infinity();
    if (!(params.alpha > 0.0) || !(params.alpha < limit)) {
      std::ostringstream os;
      os << "katz requires 0 < alpha < 1/lambda1 = "
         << (lambda1 > 0 ? 1.0 / lambda1 : std::numeric_limits<double>::infinity())
         << " (got alpha=" << params.alpha << ", lambda1=" << lambda1 << ")";
      throw DomainError(os.str(), lambda1);
    }
  }
  if (kind == Kind::pagerank) {
    if (!(params.beta > 0.0 && params.beta < 1.0)) {
      throw DomainError("pagerank requires 0 < beta < 1");
    }
  }
}

void clamp_tiny_negatives(std::vector<double>& v) {
  for (double& x : v) {
    if (x < 0.0 && x > -1e-10) x = 0.0;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SBM closed forms
// ---------------------------------------------------------------------------

CentralityFunction sbm_centrality(const Graphon& W, Kind kind, Params params) {
  if (!W.is_sbm()) throw DomainError("sbm_centrality requires an SBM graphon");
  const Sbm& s = W.sbm();
  const EffectiveMatrices em =
      effective_matrices(W, {}, /*normalized=*/kind == Kind::pagerank);
  const int m = s.blocks();

  Vector values;
  CentralityFunction out;
  out.kind = kind;
  out.params = params;

  switch (kind) {
    case Kind::degree:
      values = em.h_bar;  // E * 1
      break;
    case Kind::eigenvector: {
      const num::DominantPair dom = num::general_eig_dominant(em.E);
      out.lambda1 = dom.lambda1;
      const double scale = std::sqrt(dom.v1.dot(em.Q * dom.v1));
      values = dom.v1 / scale;
      break;
    }
    case Kind::katz: {
      const num::DominantPair dom = num::general_eig_dominant(em.E);
      out.lambda1 = dom.lambda1;
      check_kind_params(kind, params, dom.lambda1);
      values = num::linear_solve(Matrix::Identity(m, m) - params.alpha * em.E,
                                 Vector::Ones(m));
      break;
    }
    case Kind::pagerank: {
      check_kind_params(kind, params, 0.0);
      for (int j = 0; j < m; ++j) {
        if (!(em.D_E(j, j) > 0.0)) {
          std::ostringstream os;
          os << "pagerank undefined: block " << j + 1
             << " has zero expected degree (minimal-degree assumption "
                "violated)";
          throw DomainError(os.str());
        }
      }
      values = (1.0 - params.beta) *
               num::linear_solve(
                   Matrix::Identity(m, m) - params.beta * em.E_nor,
                   Vector::Ones(m));
      break;
    }
  }

  StepFunction step;
  step.boundaries = s.boundaries;
  step.values.assign(values.data(), values.data() + values.size());
  clamp_tiny_negatives(step.values);
  out.rep = std::move(step);
  return out;
}

// ---------------------------------------------------------------------------
// Finite-rank closed forms
// ---------------------------------------------------------------------------

namespace {

// Compose c(x) = c0 + w' g(x) into polynomial coefficients if every g_i is a
// polynomial; returns false otherwise.
bool compose_poly(const FiniteRank& fr, const Vector& w, double c0,
                  std::vector<double>& out) {
  std::size_t deg = 1;
  for (const auto& gi : fr.g) {
    if (!gi.is_poly()) return false;
    deg = std::max(deg, gi.coeffs.size());
  }
  out.assign(deg, 0.0);
  out[0] = c0;
  for (int i = 0; i < fr.rank(); ++i) {
    for (std::size_t k = 0; k < fr.g[i].coeffs.size(); ++k) {
      out[k] += w[i] * fr.g[i].coeffs[k];
    }
  }
  return true;
}

// Classify a polynomial into one of the named analytic families.
bool classify_poly(const std::vector<double>& poly, AnalyticForm& out) {
  double scale = 0.0;
  for (double c : poly) scale = std::max(scale, std::abs(c));
  const double eps = 1e-12 * std::max(1.0, scale);
  std::size_t deg = poly.size();
  while (deg > 1 && std::abs(poly[deg - 1]) <= eps) --deg;

  if (deg > 3) return false;
  const double c0 = poly.empty() ? 0.0 : poly[0];
  const double c1 = (poly.size() > 1 && deg > 1) ? poly[1] : 0.0;
  const double c2 = (poly.size() > 2 && deg > 2) ? poly[2] : 0.0;
  if (std::abs(c1) <= eps) {
    out.family = AnalyticForm::Family::quadratic;  // a x^2 + c
    out.coeffs = {c2, c0};
    return true;
  }
  if (std::abs(c0) <= eps && std::abs(c1 + c2) <= eps) {
    out.family = AnalyticForm::Family::parabolic;  // a x (1 - x)
    out.coeffs = {c1};
    return true;
  }
  return false;
}

CentralityFunction fr_from_closed_form(const FiniteRank& fr, const Vector& w,
                                       double c0, Kind kind, Params params,
                                       int fallback_grid = 512) {
  CentralityFunction out;
  out.kind = kind;
  out.params = params;
  std::vector<double> poly;
  AnalyticForm form;
  if (compose_poly(fr, w, c0, poly) && classify_poly(poly, form)) {
    out.rep = std::move(form);
    return out;
  }
  GridFunction gf;
  gf.n = fallback_grid;
  gf.values.resize(gf.n);
  for (int i = 0; i < gf.n; ++i) {
    const double x = (i + 0.5) / gf.n;
    double acc = c0;
    for (int k = 0; k < fr.rank(); ++k) acc += w[k] * fr.g[k].evaluate(x);
    gf.values[i] = acc;
  }
  clamp_tiny_negatives(gf.values);
  out.rep = std::move(gf);
  return out;
}

}  // namespace

CentralityFunction fr_centrality(const Graphon& W, Kind kind, Params params,
                                 const num::QuadratureSpec& quad) {
  if (!W.is_finite_rank()) {
    throw DomainError("fr_centrality requires a finite-rank graphon");
  }
  const FiniteRank& fr = W.finite_rank();
  const EffectiveMatrices em =
      effective_matrices(W, quad, /*normalized=*/kind == Kind::pagerank);
  const int m = fr.rank();

  Vector w;
  double c0 = 0.0;
  double lambda1 = std::nan("");

  switch (kind) {
    case Kind::degree:
      w = em.h_bar;
      break;
    case Kind::eigenvector: {
      const num::DominantPair dom = num::general_eig_dominant(em.E);
      lambda1 = dom.lambda1;
      w = dom.v1 / std::sqrt(dom.v1.dot(em.Q * dom.v1));
      break;
    }
    case Kind::katz: {
      const num::DominantPair dom = num::general_eig_dominant(em.E);
      lambda1 = dom.lambda1;
      check_kind_params(kind, params, dom.lambda1);
      w = params.alpha *
          num::linear_solve(Matrix::Identity(m, m) - params.alpha * em.E,
                            em.h_bar);
      c0 = 1.0;
      break;
    }
    case Kind::pagerank: {
      check_kind_params(kind, params, 0.0);
      w = (1.0 - params.beta) * params.beta *
          num::linear_solve(Matrix::Identity(m, m) - params.beta * em.E_nor,
                            em.h_nor);
      c0 = 1.0 - params.beta;
      break;
    }
  }

  CentralityFunction out = fr_from_closed_form(fr, w, c0, kind, params);
  if (!std::isnan(lambda1)) out.lambda1 = lambda1;
  return out;
}

// ---------------------------------------------------------------------------
// Discretization route for analytic kernels
// ---------------------------------------------------------------------------

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

GridFunction degree_grid(const Graphon& W, int n) {
  GridFunction gf;
  gf.n = n;
  gf.values.resize(n);
  num::QuadratureSpec spec;
  spec.panels = 4;
  spec.nodes_per_panel = 24;
  spec.abs_tol = 5e-13;
  spec.max_refinements = 12;
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) / n;
    // Split at y = x: built-in kernels may kink along the diagonal.
    gf.values[i] =
        num::integrate([&](double y) { return evaluate(W, x, y); }, 0.0, x,
                       spec) +
        num::integrate([&](double y) { return evaluate(W, x, y); }, x, 1.0,
                       spec);
  }
  return gf;
}

CentralityFunction spectra_grid(const Graphon& W, Kind kind, Params params,
                                int n) {
  const Graphon disc = discretize_to_sbm(W, n);
  CentralityFunction c = sbm_centrality(disc, kind, params);
  GridFunction gf;
  gf.n = n;
  gf.values = c.step().values;
  CentralityFunction out;
  out.kind = kind;
  out.params = params;
  out.rep = std::move(gf);
  out.lambda1 = c.lambda1;
  return out;
}

}  // namespace

CentralityFunction analytic_centrality(const Graphon& W, Kind kind,
                                       Params params, int resolution,
                                       double threshold) {
  if (resolution < 16 || !is_power_of_two(resolution)) {
    throw DomainError(
        "analytic_centrality: resolution must be a power of two >= 16");
  }

  CentralityFunction coarse, fine;
  if (kind == Kind::degree) {
    coarse.kind = fine.kind = kind;
    coarse.rep = degree_grid(W, resolution);
    fine.rep = degree_grid(W, 2 * resolution);
  } else {
    coarse = spectra_grid(W, kind, params, resolution);
    fine = spectra_grid(W, kind, params, 2 * resolution);
  }

  const double diff = l2_distance(coarse, fine);
  fine.refine_l2_diff = diff;
  fine.converged = diff <= threshold;
  return fine;
}

// ---------------------------------------------------------------------------
// Built-in reference forms for the min-max kernel
// ---------------------------------------------------------------------------

CentralityFunction wg_reference(Kind kind, Params params, int n_terms) {
  CentralityFunction out;
  out.kind = kind;
  out.params = params;
  AnalyticForm form;
  switch (kind) {
    case Kind::degree:
      form.family = AnalyticForm::Family::parabolic;
      form.coeffs = {0.5};  // x (1 - x) / 2
      break;
    case Kind::eigenvector:
      form.family = AnalyticForm::Family::sine_series;
      form.coeffs = {0.0, std::sqrt(2.0)};  // sqrt(2) sin(pi x)
      out.lambda1 = 1.0 / (kPi * kPi);
      break;
    case Kind::katz: {
      const double alpha = params.alpha;
      if (!(alpha > 0.0) || alpha >= kPi * kPi) {
        throw DomainError("reference katz requires 0 < alpha < pi^2",
                          kPi * kPi);
      }
      if (n_terms < 1) throw DomainError("n_terms must be >= 1");
      form.family = AnalyticForm::Family::sine_series;
      form.coeffs.assign(n_terms + 1, 0.0);
      form.coeffs[0] = 1.0;
      for (int n = 1; n <= n_terms; n += 2) {  // even terms vanish
        const double npi = n * kPi;
        form.coeffs[n] = (2.0 * alpha / (npi * npi - alpha)) * (2.0 / npi);
      }
      out.lambda1 = 1.0 / (kPi * kPi);
      break;
    }
    case Kind::pagerank:
      throw DomainError(
          "reference forms cover degree, eigenvector, and katz only");
  }
  out.rep = std::move(form);
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch helpers
// ---------------------------------------------------------------------------

CentralityFunction graphon_centrality(const Graphon& W, Kind kind, Params params,
                                      int resolution) {
  if (W.is_sbm()) return sbm_centrality(W, kind, params);
  if (W.is_finite_rank()) return fr_centrality(W, kind, params);
  return analytic_centrality(W, kind, params, resolution);
}

double graphon_lambda1(const Graphon& W, int resolution) {
  if (W.is_sbm() || W.is_finite_rank()) {
    return num::general_eig_dominant(effective_matrices(W).E).lambda1;
  }
  const Graphon disc = discretize_to_sbm(W, resolution);
  return num::general_eig_dominant(effective_matrices(disc).E).lambda1;
}

}  // namespace graphon

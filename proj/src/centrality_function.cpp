#include "graphon/centrality_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphon/io_util.hpp"
#include "graphon/quadrature.hpp"

namespace graphon {

namespace {
const double kPi = std::acos(-1.0);
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::degree: return "degree";
    case Kind::eigenvector: return "eigenvector";
    case Kind::katz: return "katz";
    case Kind::pagerank: return "pagerank";
  }
  return "?";
}

Kind kind_from_name(const std::string& name) {
  if (name == "degree") return Kind::degree;
  if (name == "eigenvector") return Kind::eigenvector;
  if (name == "katz") return Kind::katz;
  if (name == "pagerank") return Kind::pagerank;
  throw ConfigError("unknown centrality kind \"" + name +
                    "\" (expected degree, eigenvector, katz, or pagerank)");
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

int step_block_of(const std::vector<double>& boundaries, double x) {
  auto it = std::upper_bound(boundaries.begin(), boundaries.end(), x);
  int idx = static_cast<int>(it - boundaries.begin()) - 1;
  const int m = static_cast<int>(boundaries.size()) - 1;
  return std::clamp(idx, 0, m - 1);
}

double eval_analytic(const AnalyticForm& a, double x) {
  switch (a.family) {
    case AnalyticForm::Family::quadratic:
      return a.coeffs.at(0) * x * x + a.coeffs.at(1);
    case AnalyticForm::Family::parabolic:
      return a.coeffs.at(0) * x * (1.0 - x);
    case AnalyticForm::Family::sine_series: {
      double acc = a.coeffs.empty() ? 0.0 : a.coeffs[0];
      for (std::size_t k = 1; k < a.coeffs.size(); ++k) {
        if (a.coeffs[k] != 0.0) acc += a.coeffs[k] * std::sin(k * kPi * x);
      }
      return acc;
    }
  }
  throw NumericError("analytic form: unreachable family");
}

}  // namespace

double CentralityFunction::evaluate(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("centrality function argument must lie in [0,1]");
  }
  if (is_step()) {
    const StepFunction& s = step();
    return s.values[step_block_of(s.boundaries, x)];
  }
  if (is_grid()) {
    const GridFunction& g = grid();
    int idx = std::min(static_cast<int>(x * g.n), g.n - 1);
    return g.values[idx];
  }
  return eval_analytic(analytic(), x);
}

// ---------------------------------------------------------------------------
// L2 algebra
// ---------------------------------------------------------------------------

namespace {

std::vector<double> breakpoints_of(const CentralityFunction& f) {
  if (f.is_step()) return f.step().boundaries;
  if (f.is_grid()) {
    const int n = f.grid().n;
    std::vector<double> b(n + 1);
    for (int i = 0; i <= n; ++i) b[i] = static_cast<double>(i) / n;
    return b;
  }
  return {0.0, 1.0};
}

std::vector<double> merge_breakpoints(const std::vector<double>& a,
                                      const std::vector<double>& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Exact step-step L2 distance squared on the merged partition.
double step_step_dist2(const StepFunction& a, const StepFunction& b) {
  const auto cells = merge_breakpoints(a.boundaries, b.boundaries);
  double acc = 0.0;
  std::size_t ia = 0, ib = 0;
  for (std::size_t c = 0; c + 1 < cells.size(); ++c) {
    const double lo = cells[c], hi = cells[c + 1];
    while (ia + 2 < a.boundaries.size() && a.boundaries[ia + 1] <= lo) ++ia;
    while (ib + 2 < b.boundaries.size() && b.boundaries[ib + 1] <= lo) ++ib;
    const double d = a.values[ia] - b.values[ib];
    acc += d * d * (hi - lo);
  }
  return acc;
}

double generic_dist2(const CentralityFunction& a, const CentralityFunction& b) {
  const auto cells = merge_breakpoints(breakpoints_of(a), breakpoints_of(b));
  const std::size_t ncells = cells.size() - 1;
  num::QuadratureSpec spec;
  spec.panels = 1;
  spec.nodes_per_panel = 24;
  spec.abs_tol = std::max(1e-10 / static_cast<double>(ncells), 1e-15);
  spec.max_refinements = 10;
  double acc = 0.0;
  for (std::size_t c = 0; c < ncells; ++c) {
    acc += num::integrate(
        [&](double x) {
          const double d = a.evaluate(x) - b.evaluate(x);
          return d * d;
        },
        cells[c], cells[c + 1], spec);
  }
  return acc;
}

CentralityFunction zero_function() {
  CentralityFunction z;
  z.rep = StepFunction{{0.0, 1.0}, {0.0}};
  return z;
}

}  // namespace

double l2_distance(const CentralityFunction& a, const CentralityFunction& b) {
  double d2;
  if (a.is_step() && b.is_step()) {
    d2 = step_step_dist2(a.step(), b.step());
  } else {
    d2 = generic_dist2(a, b);
  }
  return std::sqrt(std::max(0.0, d2));
}

double l2_norm(const CentralityFunction& c) {
  return l2_distance(c, zero_function());
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

const char* family_name(AnalyticForm::Family f) {
  switch (f) {
    case AnalyticForm::Family::quadratic: return "quadratic";
    case AnalyticForm::Family::parabolic: return "parabolic";
    case AnalyticForm::Family::sine_series: return "sine_series";
  }
  return "?";
}

AnalyticForm::Family family_from_name(const std::string& name) {
  if (name == "quadratic") return AnalyticForm::Family::quadratic;
  if (name == "parabolic") return AnalyticForm::Family::parabolic;
  if (name == "sine_series") return AnalyticForm::Family::sine_series;
  throw ConfigError("unknown analytic family \"" + name + "\"");
}

}  // namespace

nlohmann::json centrality_function_to_json(const CentralityFunction& c) {
  nlohmann::json j;
  j["kind"] = kind_name(c.kind);
  nlohmann::json params = nlohmann::json::object();
  if (c.kind == Kind::katz) params["alpha"] = c.params.alpha;
  if (c.kind == Kind::pagerank) params["beta"] = c.params.beta;
  j["params"] = params;

  nlohmann::json rep;
  if (c.is_step()) {
    rep["type"] = "step";
    rep["boundaries"] = c.step().boundaries;
    rep["values"] = c.step().values;
  } else if (c.is_grid()) {
    rep["type"] = "grid";
    rep["n"] = c.grid().n;
    rep["values"] = c.grid().values;
  } else {
    rep["type"] = "analytic";
    rep["family"] = family_name(c.analytic().family);
    rep["coefficients"] = c.analytic().coeffs;
  }
  j["representation"] = rep;

  nlohmann::json diag = nlohmann::json::object();
  if (c.lambda1) diag["lambda1"] = *c.lambda1;
  if (c.refine_l2_diff) diag["refine_l2_diff"] = *c.refine_l2_diff;
  if (c.converged) diag["converged"] = *c.converged;
  if (!diag.empty()) j["diagnostics"] = diag;
  return j;
}

CentralityFunction centrality_function_from_json(const nlohmann::json& j) {
  CentralityFunction c;
  c.kind = kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("params")) {
    c.params.alpha = j.at("params").value("alpha", 0.0);
    c.params.beta = j.at("params").value("beta", 0.0);
  }
  const nlohmann::json& rep = j.at("representation");
  const std::string type = rep.at("type").get<std::string>();
  if (type == "step") {
    StepFunction s;
    s.boundaries = rep.at("boundaries").get<std::vector<double>>();
    s.values = rep.at("values").get<std::vector<double>>();
    if (s.boundaries.size() < 2 || s.values.size() + 1 != s.boundaries.size()) {
      throw ConfigError("step function: need m+1 boundaries for m values");
    }
    c.rep = std::move(s);
  } else if (type == "grid") {
    GridFunction g;
    g.n = rep.at("n").get<int>();
    g.values = rep.at("values").get<std::vector<double>>();
    if (g.n < 1 || static_cast<int>(g.values.size()) != g.n) {
      throw ConfigError("grid function: values length must equal n");
    }
    c.rep = std::move(g);
  } else if (type == "analytic") {
    AnalyticForm a;
    a.family = family_from_name(rep.at("family").get<std::string>());
    a.coeffs = rep.at("coefficients").get<std::vector<double>>();
    c.rep = std::move(a);
  } else {
    throw ConfigError("unknown representation type \"" + type + "\"");
  }
  if (j.contains("diagnostics")) {
    const auto& d = j.at("diagnostics");
    if (d.contains("lambda1")) c.lambda1 = d.at("lambda1").get<double>();
    if (d.contains("refine_l2_diff")) {
      c.refine_l2_diff = d.at("refine_l2_diff").get<double>();
    }
    if (d.contains("converged")) c.converged = d.at("converged").get<bool>();
  }
  return c;
}

std::string centrality_function_to_csv(const CentralityFunction& c,
                                       int samples) {
  std::ostringstream os;
  os << "x,value\r\n";
  for (int i = 0; i < samples; ++i) {
    const double x = (i + 0.5) / samples;
    os << io::fmt_double(x) << "," << io::fmt_double(c.evaluate(x)) << "\r\n";
  }
  return os.str();
}

}  // namespace graphon

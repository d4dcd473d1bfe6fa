#include "graphon/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace graphon::num {

namespace {

constexpr long long kHardEvalCap = 1000000;  // panels * nodes_per_panel cap

// Newton iteration on the Legendre polynomial P_n; nodes are its roots,
// weights 2 / ((1 - x^2) P_n'(x)^2).
std::pair<std::vector<double>, std::vector<double>> compute_gl(int n) {
  std::vector<double> nodes(n), weights(n);
  const double pi = std::acos(-1.0);
  for (int k = 0; k < (n + 1) / 2; ++k) {
    double x = std::cos(pi * (k + 0.75) / (n + 0.5));  // Chebyshev-like start
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      if (n == 1) {
        p1 = x;
      }
      for (int m = 2; m <= n; ++m) {
        double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      double pn = (n == 1) ? x : p1;
      double pn1 = (n == 1) ? 1.0 : p0;  // P_{n-1}
      dp = n * (x * pn - pn1) / (x * x - 1.0);
      double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[k] = -x;
    nodes[n - 1 - k] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[k] = w;
    weights[n - 1 - k] = w;
  }
  if (n % 2 == 1) {
    nodes[n / 2] = 0.0;  // central root is exact
  }
  return {nodes, weights};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
  if (n < 1 || n > 256) {
    throw DomainError("Gauss-Legendre order must be in [1, 256], got " +
                      std::to_string(n));
  }
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, compute_gl(n)).first;
  }
  return it->second;
}

double fixed_panels(const std::function<double(double)>& f, double a, double b,
                    int panels, int nodes_per_panel) {
  const auto& [nodes, weights] = gauss_legendre(nodes_per_panel);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    double panel_sum = 0.0;
    for (int k = 0; k < nodes_per_panel; ++k) {
      panel_sum += weights[k] * f(mid + 0.5 * h * nodes[k]);
    }
    total += panel_sum * 0.5 * h;
  }
  return total;
}

QuadratureResult integrate_full(const std::function<double(double)>& f, double a,
                                double b, const QuadratureSpec& spec) {
  if (!(a < b)) {
    throw DomainError("integration interval requires a < b");
  }
  if (spec.panels < 1 || spec.nodes_per_panel < 1 || spec.max_refinements < 1 ||
      !(spec.abs_tol > 0)) {
    throw DomainError("invalid quadrature spec: panels>=1, nodes_per_panel>=1, "
                      "abs_tol>0, max_refinements>=1 required");
  }
  if (static_cast<long long>(spec.panels) * spec.nodes_per_panel > kHardEvalCap) {
    throw DomainError("quadrature spec exceeds evaluation cap (panels * "
                      "nodes_per_panel <= 1e6)");
  }

  QuadratureResult res;
  int panels = spec.panels;
  double prev = fixed_panels(f, a, b, panels, spec.nodes_per_panel);
  res.evaluations = static_cast<long long>(panels) * spec.nodes_per_panel;
  for (int r = 1; r <= spec.max_refinements; ++r) {
    if (static_cast<long long>(panels) * 2 * spec.nodes_per_panel > kHardEvalCap) {
      break;  // budget exhausted below
    }
    panels *= 2;
    const double cur = fixed_panels(f, a, b, panels, spec.nodes_per_panel);
    res.evaluations += static_cast<long long>(panels) * spec.nodes_per_panel;
    res.refinements = r;
    res.error_estimate = std::abs(cur - prev);
    if (res.error_estimate < spec.abs_tol) {
      res.value = cur;
      return res;
    }
    prev = cur;
  }
  std::ostringstream msg;
  msg << "quadrature did not reach abs_tol=" << spec.abs_tol << " within "
      << spec.max_refinements << " refinements; last delta "
      << res.error_estimate;
  throw NumericError(msg.str(), res.error_estimate);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  return integrate_full(f, a, b, spec).value;
}

}  // namespace graphon::num

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "graphon/errors.hpp"

namespace graphon::num {

struct QuadratureSpec {
  int panels = 4;            // initial number of equal panels
  int nodes_per_panel = 16;  // Gauss-Legendre order per panel
  double abs_tol = 1e-12;    // successive-refinement stopping tolerance
  int max_refinements = 14;  // panel-doubling budget
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |last estimate - previous estimate|
  int refinements = 0;          // doublings actually performed
  long long evaluations = 0;    // total integrand evaluations
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
// cached per order.  Thread-safe.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

// Composite Gauss-Legendre integration of f over [a, b]: the panel count is
// doubled until two successive estimates differ by less than abs_tol.
// Throws DomainError for an invalid spec or interval and NumericError
// (carrying the last delta) when the refinement budget is exhausted.
QuadratureResult integrate_full(const std::function<double(double)>& f, double a,
                                double b, const QuadratureSpec& spec = {});

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

// Single fixed-panel pass without refinement (internal building block,
// exposed for tests of polynomial exactness).
double fixed_panels(const std::function<double(double)>& f, double a, double b,
                    int panels, int nodes_per_panel);

}  // namespace graphon::num

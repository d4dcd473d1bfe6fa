#pragma once

#include "graphon/centrality_function.hpp"
#include "graphon/graphon.hpp"

namespace graphon {

// Closed-form centrality functions for SBM graphons: a step function on the
// SBM's own blocks with values
//   degree      E * 1
//   eigenvector v1 / sqrt(v1' Q v1)
//   katz        (I - alpha E)^{-1} 1,          0 < alpha < 1/lambda1(E)
//   pagerank    (1-beta)(I - beta E D_E^{-1})^{-1} 1,   0 < beta < 1
// Katz outside its admissible range raises DomainError carrying lambda1;
// PageRank on a zero-degree block raises DomainError.
CentralityFunction sbm_centrality(const Graphon& W, Kind kind, Params params = {});

// Closed-form centrality functions for finite-rank graphons,
//   c(x) = c0 + w' g(x)
// with (c0, w) per kind.  Returns an AnalyticForm when the composition is a
// polynomial in one of the named families (quadratic a*x^2+c, parabolic
// a*x*(1-x)); otherwise samples the closed form into a GridFunction.
// PageRank additionally requires metadata eta > 0.
CentralityFunction fr_centrality(const Graphon& W, Kind kind, Params params = {},
                                 const num::QuadratureSpec& quad = {});

// Discretization route for analytic kernels: evaluate the centrality of the
// uniform SBM discretization at `resolution` (>= 16, power of two) and at
// double that; return the finer GridFunction with the successive L2
// difference recorded as an a-posteriori error estimate and a convergence
// flag against `threshold`.  Degree bypasses the spectral path and
// integrates int W(x_i, .) directly at grid midpoints.
CentralityFunction analytic_centrality(const Graphon& W, Kind kind,
                                       Params params, int resolution,
                                       double threshold = 1e-2);

// Built-in closed forms for the reference kernel min(x,y)(1-max(x,y)):
//   degree       x(1-x)/2
//   eigenvector  sqrt(2) sin(pi x)
//   katz         1 + sum_{n<=n_terms} [2 alpha/(n^2 pi^2 - alpha)]
//                    [(1-(-1)^n)/(pi n)] sin(n pi x),  alpha < pi^2
CentralityFunction wg_reference(Kind kind, Params params = {}, int n_terms = 2000);

// Variant dispatcher used by the CLI and experiment drivers.
CentralityFunction graphon_centrality(const Graphon& W, Kind kind,
                                      Params params = {}, int resolution = 512);

// Dominant eigenvalue of the graphon operator (lambda1 of E for SBM /
// finite-rank; discretization estimate for analytic kernels).
double graphon_lambda1(const Graphon& W, int resolution = 512);

}  // namespace graphon

#pragma once

#include <Eigen/Dense>

#include "graphon/errors.hpp"

namespace graphon::num {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Full spectrum of a symmetric matrix, eigenvalues sorted descending and
// columns of `eigenvectors` aligned with them.  Every column is oriented so
// that its entry-sum is nonnegative (Perron orientation for the dominant
// one, a fixed deterministic choice for the rest).
struct Spectrum {
  Vector eigenvalues;
  Matrix eigenvectors;
  double gap = 0.0;  // lambda1 - lambda2; +inf for a 1x1 matrix
};

struct DominantPair {
  double lambda1 = 0.0;
  Vector v1;              // unit 2-norm, entry-sum >= 0
  double residual = 0.0;  // ||M v1 - lambda1 v1||_2 at return
  int iterations = 0;
};

// Dense symmetric eigendecomposition.  Throws DomainError if M is not
// symmetric within 1e-10 relative tolerance, NumericError on solver failure.
Spectrum sym_eig(const Matrix& M);

// Dominant eigenpair of a general square matrix by power iteration with
// Rayleigh-quotient estimates; intended for matrices with a real simple
// dominant eigenvalue (effective connectivity matrices are entrywise
// nonnegative, so Perron-Frobenius applies).  Converges when
// ||M v - lambda v|| <= tol * ||M||_F.  Throws NumericError (carrying the
// last residual) if max_iter is exhausted.
DominantPair general_eig_dominant(const Matrix& M, double tol = 1e-12,
                                  int max_iter = 50000);

// Partial-pivot LU solve with a reciprocal-condition estimate; throws
// NumericError when the estimated condition number exceeds 1e12 or the
// residual contract ||Mx - b|| <= 1e-10 (||M||_F ||x|| + ||b||) fails.
Vector linear_solve(const Matrix& M, const Vector& b);

// Truncated Neumann series sum_{k=0}^{terms} alpha^k M^k b.  Serves as an
// independent oracle for solver-based Katz/PageRank computations.  Throws
// DomainError if alpha * spectral_radius(M) >= 1 or divergence is detected.
Vector neumann_apply(const Matrix& M, double alpha, const Vector& b, int terms);

// |dominant eigenvalue| estimate via power iteration (best-effort; returns
// the last Rayleigh magnitude even without full convergence).
double spectral_radius_estimate(const Matrix& M, int max_iter = 10000);

}  // namespace graphon::num

#include "graphon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace graphon::num {

namespace {

void check_square(const Matrix& M, const char* who) {
  if (M.rows() != M.cols() || M.rows() < 1) {
    throw DomainError(std::string(who) + ": matrix must be square and nonempty");
  }
}

// Orient a vector so its entry-sum is nonnegative; on a zero sum, make the
// first nonzero entry positive so the choice stays deterministic.
void orient(Eigen::Ref<Vector> v) {
  double s = v.sum();
  if (s == 0.0) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v[i] != 0.0) {
        s = v[i];
        break;
      }
    }
  }
  if (s < 0.0) v = -v;
}

}  // namespace

Spectrum sym_eig(const Matrix& M) {
  check_square(M, "sym_eig");
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "sym_eig: matrix asymmetry " << asym << " exceeds 1e-10 relative";
    throw DomainError(msg.str(), asym);
  }

  const Matrix S = 0.5 * (M + M.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(S);
  if (solver.info() != Eigen::Success) {
    throw NumericError("sym_eig: eigendecomposition failed to converge");
  }

  const Eigen::Index n = M.rows();
  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues[i] = solver.eigenvalues()[n - 1 - i];
    out.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    orient(out.eigenvectors.col(i));
  }
  out.gap = (n >= 2) ? out.eigenvalues[0] - out.eigenvalues[1]
                     : std::numeric_limits<double>::infinity();
  return out;
}

DominantPair general_eig_dominant(const Matrix& M, double tol, int max_iter) {
  check_square(M, "general_eig_dominant");
  if (!(tol > 0)) throw DomainError("general_eig_dominant: tol must be > 0");
  const Eigen::Index n = M.rows();
  const double frob = M.norm();

  DominantPair out;
  Vector x = Vector::Ones(n) / std::sqrt(static_cast<double>(n));
  if (frob == 0.0) {  // zero matrix: any unit vector, lambda 0
    out.v1 = x;
    return out;
  }

  double lambda = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= max_iter; ++it) {
    Vector y = M * x;
    lambda = x.dot(y);  // Rayleigh quotient (x has unit norm)
    residual = (y - lambda * x).norm();
    out.iterations = it;
    if (residual <= tol * frob) {
      break;
    }
    const double ynorm = y.norm();
    if (ynorm == 0.0) {  // start vector lies in the kernel: deterministic restart
      x = Vector::Zero(n);
      x[(it - 1) % n] = 1.0;
      continue;
    }
    x = y / ynorm;
  }
  if (residual > tol * frob) {
    std::ostringstream msg;
    msg << "general_eig_dominant: power iteration did not converge in "
        << max_iter << " iterations; last residual " << residual;
    throw NumericError(msg.str(), residual);
  }
  orient(x);
  out.lambda1 = lambda;
  out.v1 = x;
  out.residual = residual;
  return out;
}

Vector linear_solve(const Matrix& M, const Vector& b) {
  check_square(M, "linear_solve");
  if (M.rows() != b.size()) {
    throw DomainError("linear_solve: dimension mismatch between M and b");
  }
  Eigen::PartialPivLU<Matrix> lu(M);
  const double rc = lu.rcond();
  if (!(rc > 1e-12) || !std::isfinite(rc)) {
    std::ostringstream msg;
    msg << "linear_solve: matrix is singular or ill-conditioned "
        << "(condition estimate " << (rc > 0 ? 1.0 / rc : std::numeric_limits<double>::infinity())
        << ")";
    throw NumericError(msg.str(), rc > 0 ? 1.0 / rc : std::numeric_limits<double>::infinity());
  }
  Vector x = lu.solve(b);
  // One step of iterative refinement, then enforce the residual contract.
  Vector r = b - M * x;
  x += lu.solve(r);
  r = b - M * x;
  const double bound = 1e-10 * (M.norm() * x.norm() + b.norm());
  if (r.norm() > bound) {
    std::ostringstream msg;
    msg << "linear_solve: residual " << r.norm() << " exceeds contract "
        << bound;
    throw NumericError(msg.str(), r.norm());
  }
  return x;
}

double spectral_radius_estimate(const Matrix& M, int max_iter) {
  check_square(M, "spectral_radius_estimate");
  const Eigen::Index n = M.rows();
  const double frob = M.norm();
  if (frob == 0.0) return 0.0;
  Vector x = Vector::Ones(n) / std::sqrt(static_cast<double>(n));
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Vector y = M * x;
    lambda = x.dot(y);
    if ((y - lambda * x).norm() <= 1e-12 * frob) break;
    const double ynorm = y.norm();
    if (ynorm == 0.0) {
      x = Vector::Zero(n);
      x[it % n] = 1.0;
      continue;
    }
    x = y / ynorm;
  }
  return std::abs(lambda);
}

Vector neumann_apply(const Matrix& M, double alpha, const Vector& b, int terms) {
  check_square(M, "neumann_apply");
  if (M.rows() != b.size()) {
    throw DomainError("neumann_apply: dimension mismatch between M and b");
  }
  if (terms < 0) throw DomainError("neumann_apply: terms must be >= 0");
  if (alpha != 0.0) {
    const double radius = spectral_radius_estimate(M);
    if (std::abs(alpha) * radius >= 1.0) {
      std::ostringstream msg;
      msg << "neumann_apply: |alpha| * spectral_radius = "
          << std::abs(alpha) * radius << " >= 1, series does not converge";
      throw DomainError(msg.str(), radius);
    }
  }
  Vector acc = b;
  Vector term = b;
  const double guard = 1e6 * (1.0 + b.norm());
  for (int k = 1; k <= terms; ++k) {
    term = alpha * (M * term);
    acc += term;
    if (term.norm() > guard) {
      throw DomainError("neumann_apply: term norm growing, series diverges",
                        term.norm());
    }
    if (term.norm() == 0.0) break;  // exact nilpotency or alpha == 0
  }
  return acc;
}

}  // namespace graphon::num

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "graphon/errors.hpp"
#include "graphon/graphon.hpp"
#include "graphon/graphon_centrality.hpp"
#include "graphon/presets.hpp"
#include "graphon/quadrature.hpp"

using namespace graphon;
using namespace graphon::presets;

namespace {

// Apply the block preset's integral operator to one of its own step
// functions: (T v)_i = sum_j P_ij len_j v_j.
Vector apply_block_operator(const Sbm& s, const Vector& v) {
  const int m = s.blocks();
  Vector out = Vector::Zero(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out(i) += s.P(i, j) * (s.boundaries[j + 1] - s.boundaries[j]) * v(j);
  return out;
}

// The finite-rank preset is W(x,y) = (x^2 + y^2) / 2; its operator applied
// to a*x^2 + c has the closed form below.
double fr_apply(double a, double c, double x) {
  return 0.5 * x * x * (a / 3.0 + c) + 0.5 * (a / 5.0 + c / 3.0);
}

}  // namespace

TEST_CASE("block preset: degree and eigenvector step values") {
  const Graphon W = graphon_by_name("example-sbm");

  auto deg = sbm_centrality(W, Kind::degree);
  REQUIRE(deg.is_step());
  const std::vector<double> dexp = {0.6, 0.25, 0.25, 0.25, 0.6};
  REQUIRE(deg.step().values.size() == 5);
  for (int i = 0; i < 5; ++i)
    CHECK(deg.step().values[i] == doctest::Approx(dexp[i]).epsilon(1e-12));

  auto eig = sbm_centrality(W, Kind::eigenvector);
  REQUIRE(eig.is_step());
  const std::vector<double> eexp = {1.5633475088, 0.7246396782, 0.9902709614,
                                    0.7246396782, 1.5633475088};
  for (int i = 0; i < 5; ++i)
    CHECK(eig.step().values[i] == doctest::Approx(eexp[i]).epsilon(1e-8));
  REQUIRE(eig.lambda1.has_value());
  CHECK(*eig.lambda1 == doctest::Approx(0.3657413616568514).epsilon(1e-10));
  // Unit L2 norm and mirror symmetry of the block layout.
  CHECK(l2_norm(eig) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(eig.step().values[0] == doctest::Approx(eig.step().values[4]).epsilon(1e-12));
  CHECK(eig.step().values[1] == doctest::Approx(eig.step().values[3]).epsilon(1e-12));

  // Eigenfunction identity on the blocks: T v = lambda1 v.
  Vector v(5);
  for (int i = 0; i < 5; ++i) v(i) = eig.step().values[i];
  Vector Tv = apply_block_operator(W.sbm(), v);
  for (int i = 0; i < 5; ++i)
    CHECK(Tv(i) == doctest::Approx(*eig.lambda1 * v(i)).epsilon(1e-9));
}

TEST_CASE("block preset: resolvent-type centralities") {
  const Graphon W = graphon_by_name("example-sbm");

  Params p;
  p.alpha = 0.5;
  auto k05 = sbm_centrality(W, Kind::katz, p);
  const std::vector<double> k05exp = {1.3575333804, 1.1544612638, 1.1648752185};
  for (int i = 0; i < 3; ++i)
    CHECK(k05.step().values[i] == doctest::Approx(k05exp[i]).epsilon(1e-8));

  p.alpha = 1.5;
  auto k15 = sbm_centrality(W, Kind::katz, p);
  const std::vector<double> k15exp = {2.86200799, 1.844259611, 2.0092998887};
  for (int i = 0; i < 3; ++i)
    CHECK(k15.step().values[i] == doctest::Approx(k15exp[i]).epsilon(1e-8));
  // Series identity: c = 1 + alpha T c.
  Vector v(5);
  for (int i = 0; i < 5; ++i) v(i) = k15.step().values[i];
  Vector Tv = apply_block_operator(W.sbm(), v);
  for (int i = 0; i < 5; ++i)
    CHECK(1.0 + 1.5 * Tv(i) == doctest::Approx(v(i)).epsilon(1e-10));

  // Admissibility: the resolvent exists only below 1/lambda1.
  p.alpha = 2.8;
  CHECK_THROWS_AS(sbm_centrality(W, Kind::katz, p), DomainError);
  try {
    sbm_centrality(W, Kind::katz, p);
  } catch (const DomainError& e) {
    CHECK(e.detail() == doctest::Approx(0.3657413616568514).epsilon(1e-9));
  }
  p.alpha = 0.0;
  CHECK_THROWS_AS(sbm_centrality(W, Kind::katz, p), DomainError);
  p.alpha = -0.3;
  CHECK_THROWS_AS(sbm_centrality(W, Kind::katz, p), DomainError);

  Params q;
  q.beta = 0.85;
  auto pr = sbm_centrality(W, Kind::pagerank, q);
  const std::vector<double> prexp = {1.7661465388, 0.8167430469, 0.7836243205,
                                     0.8167430469, 1.7661465388};
  for (int i = 0; i < 5; ++i)
    CHECK(pr.step().values[i] == doctest::Approx(prexp[i]).epsilon(1e-8));
  // Probability mass: int c dPi = sum len_i c_i = 1.
  double mass = 0.0;
  const auto& b = W.sbm().boundaries;
  for (int i = 0; i < 5; ++i) mass += (b[i + 1] - b[i]) * pr.step().values[i];
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));

  q.beta = 1.0;
  CHECK_THROWS_AS(sbm_centrality(W, Kind::pagerank, q), DomainError);
  q.beta = 0.0;
  CHECK_THROWS_AS(sbm_centrality(W, Kind::pagerank, q), DomainError);

  // A zero-degree block admits no degree normalization.
  Sbm z;
  z.boundaries = {0.0, 0.5, 1.0};
  z.P = Matrix::Zero(2, 2);
  z.P(0, 0) = 0.6;
  Graphon Wz;
  Wz.variant = z;
  q.beta = 0.85;
  CHECK_THROWS_AS(sbm_centrality(Wz, Kind::pagerank, q), DomainError);
}

TEST_CASE("finite-rank preset: closed forms for all four kinds") {
  const Graphon W = graphon_by_name("example-fr");

  auto deg = fr_centrality(W, Kind::degree);
  REQUIRE(deg.is_analytic());
  REQUIRE(deg.analytic().family == AnalyticForm::Family::quadratic);
  REQUIRE(deg.analytic().coeffs.size() == 2);
  CHECK(deg.analytic().coeffs[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(deg.analytic().coeffs[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-13));

  auto eig = fr_centrality(W, Kind::eigenvector);
  REQUIRE(eig.is_analytic());
  REQUIRE(eig.analytic().family == AnalyticForm::Family::quadratic);
  const double a = eig.analytic().coeffs[0];
  const double c = eig.analytic().coeffs[1];
  CHECK(a == doctest::Approx(1.1968176729).epsilon(1e-9));
  CHECK(c == doctest::Approx(0.5352331347).epsilon(1e-9));
  CHECK(l2_norm(eig) == doctest::Approx(1.0).epsilon(1e-10));
  REQUIRE(eig.lambda1.has_value());
  // lambda1 = 1/6 + 1/sqrt(20) in closed form.
  const double lam = 1.0 / 6.0 + 1.0 / std::sqrt(20.0);
  CHECK(*eig.lambda1 == doctest::Approx(lam).epsilon(1e-10));
  // Eigenfunction identity at off-grid sample points.
  for (double x : {0.0, 0.17, 0.5, 0.83, 1.0})
    CHECK(fr_apply(a, c, x) == doctest::Approx(lam * eig.evaluate(x)).epsilon(1e-9));

  Params p;
  p.alpha = 0.9 / lam;
  auto katz = fr_centrality(W, Kind::katz, p);
  REQUIRE(katz.is_analytic());
  REQUIRE(katz.analytic().family == AnalyticForm::Family::quadratic);
  CHECK(katz.analytic().coeffs[0] == doctest::Approx(10.1920734198).epsilon(1e-8));
  CHECK(katz.analytic().coeffs[1] == doctest::Approx(5.4419662003).epsilon(1e-8));
  // Resolvent identity c = 1 + alpha T c.
  for (double x : {0.1, 0.5, 0.9})
    CHECK(1.0 + p.alpha * fr_apply(katz.analytic().coeffs[0],
                                   katz.analytic().coeffs[1], x) ==
          doctest::Approx(katz.evaluate(x)).epsilon(1e-8));
  p.alpha = 1.0 / lam;
  CHECK_THROWS_AS(fr_centrality(W, Kind::katz, p), DomainError);

  Params q;
  q.beta = 0.85;
  auto pr = fr_centrality(W, Kind::pagerank, q);
  REQUIRE(pr.is_analytic());
  REQUIRE(pr.analytic().family == AnalyticForm::Family::quadratic);
  // Frozen coefficients of the degree-normalized resolvent.
  REQUIRE(pr.analytic().coeffs.size() == 2);
  CHECK(pr.analytic().coeffs[0] == doctest::Approx(1.3089690540).epsilon(1e-8));
  CHECK(pr.analytic().coeffs[1] == doctest::Approx(0.5636769820).epsilon(1e-8));
  CHECK(pr.evaluate(0.0) == doctest::Approx(0.5636769820).epsilon(1e-8));
  // Probability mass 1 by quadrature.
  const double mass =
      num::integrate([&](double x) { return pr.evaluate(x); }, 0.0, 1.0);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));

  // PageRank needs the asserted positive degree floor.
  Graphon W0 = W;
  W0.metadata.eta = 0.0;
  CHECK_THROWS_AS(fr_centrality(W0, Kind::pagerank, q), DomainError);
}

TEST_CASE("finite-rank classifier falls back to grid sampling") {
  // W(x, y) = x y: eigenvector sqrt(3) x is linear, not in the named
  // families, so it must arrive as a grid of samples.
  FiniteRank fr;
  fr.g = {ScalarFunc::poly({0.0, 1.0})};
  fr.h = {ScalarFunc::poly({0.0, 1.0})};
  Graphon W;
  W.variant = fr;
  auto eig = fr_centrality(W, Kind::eigenvector);
  REQUIRE(eig.is_grid());
  const int n = eig.grid().n;
  REQUIRE(n > 0);
  for (int i : {10, n / 2, n - 3}) {
    const double x = (i + 0.5) / n;  // samples live at cell midpoints
    CHECK(eig.evaluate(x) == doctest::Approx(std::sqrt(3.0) * x).epsilon(1e-9));
  }
  REQUIRE(eig.lambda1.has_value());
  CHECK(*eig.lambda1 == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("smooth kernel route: discretize, refine, compare to closed forms") {
  const Graphon W = graphon_by_name("example-wg");

  auto deg = analytic_centrality(W, Kind::degree, {}, 512);
  REQUIRE(deg.is_grid());
  CHECK(deg.grid().n == 1024);
  // Degree quadrature hits the closed form x(1-x)/2 at every midpoint.
  double sup = 0.0;
  for (int i = 0; i < deg.grid().n; ++i) {
    const double x = (i + 0.5) / deg.grid().n;
    sup = std::max(sup, std::abs(deg.grid().values[i] - 0.5 * x * (1.0 - x)));
  }
  CHECK(sup < 1e-10);

  auto eig = analytic_centrality(W, Kind::eigenvector, {}, 512);
  REQUIRE(eig.is_grid());
  CHECK(eig.grid().n == 1024);
  REQUIRE(eig.lambda1.has_value());
  CHECK(*eig.lambda1 == doctest::Approx(1.0 / (M_PI * M_PI)).epsilon(1e-5));
  REQUIRE(eig.converged.has_value());
  CHECK(*eig.converged);
  REQUIRE(eig.refine_l2_diff.has_value());
  CHECK(*eig.refine_l2_diff < 1e-2);
  // Grid values sample the eigenfunction at the right endpoints of the
  // discretization cells; against midpoints the sup error is O(1/n).
  auto ref = wg_reference(Kind::eigenvector);
  sup = 0.0;
  for (int i = 0; i < eig.grid().n; ++i) {
    const double x = (i + 0.5) / eig.grid().n;
    sup = std::max(sup, std::abs(eig.grid().values[i] - ref.evaluate(x)));
  }
  CHECK(sup < 1e-2);
  CHECK(sup > 1e-4);  // the offset is real, not an accident of tolerances

  CHECK_THROWS_AS(analytic_centrality(W, Kind::degree, {}, 100), DomainError);
  CHECK_THROWS_AS(analytic_centrality(W, Kind::degree, {}, 8), DomainError);
}

TEST_CASE("reference closed forms for the smooth kernel") {
  auto deg = wg_reference(Kind::degree);
  REQUIRE(deg.is_analytic());
  REQUIRE(deg.analytic().family == AnalyticForm::Family::parabolic);
  CHECK(deg.analytic().coeffs[0] == doctest::Approx(0.5).epsilon(1e-14));

  auto eig = wg_reference(Kind::eigenvector);
  REQUIRE(eig.is_analytic());
  REQUIRE(eig.analytic().family == AnalyticForm::Family::sine_series);
  CHECK(eig.evaluate(0.5) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(l2_norm(eig) == doctest::Approx(1.0).epsilon(1e-10));

  Params p;
  p.alpha = 2.0;
  auto katz = wg_reference(Kind::katz, p, 400);
  REQUIRE(katz.is_analytic());
  REQUIRE(katz.analytic().family == AnalyticForm::Family::sine_series);
  const auto& cs = katz.analytic().coeffs;
  REQUIRE(cs.size() == 401);
  CHECK(cs[0] == doctest::Approx(1.0));
  // Odd harmonics only; the n-th coefficient is
  // [2 alpha / (n^2 pi^2 - alpha)] * [(1 - (-1)^n) / (pi n)].
  CHECK(cs[2] == doctest::Approx(0.0));
  CHECK(cs[1] ==
        doctest::Approx((2.0 * p.alpha / (M_PI * M_PI - p.alpha)) * (2.0 / M_PI))
            .epsilon(1e-13));
  CHECK(cs[3] == doctest::Approx((2.0 * p.alpha / (9.0 * M_PI * M_PI - p.alpha)) *
                                 (2.0 / (3.0 * M_PI)))
                     .epsilon(1e-13));

  // Resolvent identity checked by quadrature: c(x) = 1 + alpha int W c.
  // The integrand carries 400 sine modes, so roundoff keeps successive
  // refinements from meeting the default 1e-12 target; 1e-9 is ample for a
  // 1e-6 comparison.
  num::QuadratureSpec loose;
  loose.panels = 64;
  loose.abs_tol = 1e-9;
  const Graphon W = graphon_by_name("example-wg");
  for (double x : {0.25, 0.6}) {
    const double Tc = num::integrate(
        [&](double y) { return evaluate(W, x, y) * katz.evaluate(y); }, 0.0,
        1.0, loose);
    CHECK(1.0 + p.alpha * Tc == doctest::Approx(katz.evaluate(x)).epsilon(1e-6));
  }

  p.alpha = M_PI * M_PI;
  CHECK_THROWS_AS(wg_reference(Kind::katz, p), DomainError);
  try {
    wg_reference(Kind::katz, p);
  } catch (const DomainError& e) {
    CHECK(e.detail() == doctest::Approx(M_PI * M_PI));
  }
  CHECK_THROWS_AS(wg_reference(Kind::pagerank), DomainError);
}

TEST_CASE("series and discretization routes agree on the smooth kernel") {
  Params p;
  p.alpha = 0.9 * M_PI * M_PI;
  auto series = wg_reference(Kind::katz, p);
  auto disc = analytic_centrality(graphon_by_name("example-wg"), Kind::katz, p, 512);
  CHECK(l2_distance(series, disc) < 5e-2);
}

TEST_CASE("dispatcher picks the right route per variant") {
  CHECK(graphon_centrality(graphon_by_name("example-sbm"), Kind::degree).is_step());
  CHECK(graphon_centrality(graphon_by_name("example-fr"), Kind::degree).is_analytic());
  CHECK(graphon_centrality(graphon_by_name("example-wg"), Kind::degree, {}, 64).is_grid());

  CHECK(graphon_lambda1(graphon_by_name("example-sbm")) ==
        doctest::Approx(0.3657413616568514).epsilon(1e-10));
  CHECK(graphon_lambda1(graphon_by_name("example-fr")) ==
        doctest::Approx(1.0 / 6.0 + 1.0 / std::sqrt(20.0)).epsilon(1e-10));
  CHECK(graphon_lambda1(graphon_by_name("example-wg"), 256) ==
        doctest::Approx(1.0 / (M_PI * M_PI)).epsilon(1e-4));
}

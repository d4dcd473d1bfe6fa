#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "graphon/errors.hpp"
#include "graphon/graphon.hpp"
#include "graphon/presets.hpp"
#include "graphon/quadrature.hpp"

using namespace graphon;
using namespace graphon::presets;

namespace {

Graphon constant_graphon(double p) {
  KernelExpr c;
  c.op = KernelExpr::Op::constant;
  c.value = p;
  Graphon W;
  W.variant = AnalyticKernel{c};
  W.id = "constant";
  return W;
}

}  // namespace

TEST_CASE("scalar function evaluation and exact product integrals") {
  auto p = ScalarFunc::poly({1.0, 2.0});        // 1 + 2x
  auto q = ScalarFunc::poly({0.0, 0.0, 3.0});   // 3x^2
  CHECK(p.evaluate(0.5) == doctest::Approx(2.0));
  CHECK(q.evaluate(0.5) == doctest::Approx(0.75));

  CHECK(integrate_product(p, q) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(integrate_one(ScalarFunc::poly({1.0, 2.0, 3.0})) ==
        doctest::Approx(3.0).epsilon(1e-14));

  auto s3 = ScalarFunc::sine(2.0, 3);
  auto t3 = ScalarFunc::sine(5.0, 3);
  auto t2 = ScalarFunc::sine(5.0, 2);
  CHECK(s3.evaluate(0.5) == doctest::Approx(2.0 * std::sin(1.5 * M_PI)));
  // Same frequency: amplitudes * 1/2.  Orthogonal frequencies: zero.
  CHECK(integrate_product(s3, t3) == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(integrate_product(s3, t2) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  CHECK(integrate_one(ScalarFunc::sine(1.0, 1)) ==
        doctest::Approx(2.0 / M_PI).epsilon(1e-13));
  CHECK(integrate_one(ScalarFunc::sine(2.0, 2)) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-13));

  // Mixed polynomial/sine pairing against adaptive quadrature.
  auto x2 = ScalarFunc::poly({0.0, 0.0, 1.0});
  auto s1 = ScalarFunc::sine(1.0, 1);
  const double closed = integrate_product(x2, s1);
  const double numeric = num::integrate(
      [&](double x) { return x2.evaluate(x) * s1.evaluate(x); }, 0.0, 1.0);
  CHECK(closed == doctest::Approx(numeric).epsilon(1e-12));
}

TEST_CASE("piecewise-constant graphon evaluation conventions") {
  const Graphon W = graphon_by_name("example-sbm");
  REQUIRE(W.is_sbm());
  const Sbm& s = W.sbm();
  REQUIRE(s.blocks() == 5);

  // Membership is half-open upward: [b_{i-1}, b_i), last block closed.
  CHECK(sbm_block_of(s, 0.0) == 0);
  CHECK(sbm_block_of(s, 0.05) == 0);
  CHECK(sbm_block_of(s, 0.1) == 1);
  CHECK(sbm_block_of(s, 0.4) == 2);
  CHECK(sbm_block_of(s, 0.9) == 4);
  CHECK(sbm_block_of(s, 1.0) == 4);

  // Exact boundary hits resolve downward in the left-limit variant, so a
  // uniform grid point i/n carries the value of the cell it terminates.
  CHECK(sbm_block_left_limit(s, 0.1) == 0);
  CHECK(sbm_block_left_limit(s, 0.4) == 1);
  CHECK(sbm_block_left_limit(s, 0.9) == 3);
  CHECK(sbm_block_left_limit(s, 0.0) == 0);
  CHECK(sbm_block_left_limit(s, 1.0) == 4);
  CHECK(sbm_block_left_limit(s, 0.15) == 1);

  CHECK(evaluate(W, 0.05, 0.05) == doctest::Approx(1.0));
  CHECK(evaluate(W, 0.1, 0.05) == doctest::Approx(1.0));
  CHECK(evaluate(W, 0.39, 0.39) == doctest::Approx(0.5));
  CHECK(evaluate(W, 0.4, 0.4) == doctest::Approx(0.25));
  CHECK(evaluate(W, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(evaluate(W, 0.95, 0.5) == doctest::Approx(1.0));
  CHECK(evaluate(W, 0.6, 0.1) == doctest::Approx(0.0));

  CHECK_THROWS_AS(evaluate(W, -0.01, 0.5), DomainError);
  CHECK_THROWS_AS(evaluate(W, 0.5, 1.01), DomainError);
}

TEST_CASE("finite-rank and analytic evaluation") {
  const Graphon F = graphon_by_name("example-fr");
  REQUIRE(F.is_finite_rank());
  CHECK(evaluate(F, 0.3, 0.7) == doctest::Approx(0.29).epsilon(1e-14));
  CHECK(evaluate(F, 0.7, 0.3) == doctest::Approx(0.29).epsilon(1e-14));
  CHECK(evaluate(F, 0.0, 0.0) == doctest::Approx(0.0));
  CHECK(evaluate(F, 1.0, 1.0) == doctest::Approx(1.0));

  const Graphon G = graphon_by_name("example-wg");
  REQUIRE(G.is_analytic());
  CHECK(evaluate(G, 0.3, 0.7) == doctest::Approx(0.09).epsilon(1e-14));
  CHECK(evaluate(G, 0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(evaluate(G, 0.0, 0.8) == doctest::Approx(0.0));
  CHECK(evaluate(G, 1.0, 0.8) == doctest::Approx(0.0));
}

TEST_CASE("structural validation accepts the presets and localizes defects") {
  for (const auto& name : graphon_preset_names()) {
    const auto rep = validate(graphon_by_name(name));
    CHECK_MESSAGE(rep.pass, name, ": ", rep.first_violation);
  }

  // Asymmetric block matrix.
  Sbm bad;
  bad.boundaries = {0.0, 0.5, 1.0};
  bad.P = Matrix(2, 2);
  bad.P << 0.0, 1.0, 0.5, 0.0;
  Graphon Wb;
  Wb.variant = bad;
  auto rep = validate(Wb);
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_violation.find("asymmetric") != std::string::npos);
  CHECK(rep.first_violation.find("(1,2)") != std::string::npos);

  // Entry out of range.
  bad.P << 0.0, 1.5, 1.5, 0.0;
  Wb.variant = bad;
  rep = validate(Wb);
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_violation.find("out of [0,1]") != std::string::npos);

  // Non-increasing boundaries.
  bad.boundaries = {0.0, 0.7, 0.7, 1.0};
  bad.P = Matrix::Zero(3, 3);
  Wb.variant = bad;
  rep = validate(Wb);
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_violation.find("increasing") != std::string::npos);

  // Mismatched factor lists.
  FiniteRank fr;
  fr.g = {ScalarFunc::poly({1.0})};
  Graphon Wf;
  Wf.variant = fr;
  rep = validate(Wf);
  CHECK_FALSE(rep.pass);

  // Range violation on an analytic kernel (negative constant).
  rep = validate(constant_graphon(-0.1));
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_violation.find("range violation") != std::string::npos);

  // Asymmetric analytic kernel W(x, y) = x.
  KernelExpr ex;
  ex.op = KernelExpr::Op::x;
  Graphon Wx;
  Wx.variant = AnalyticKernel{ex};
  rep = validate(Wx);
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_violation.find("asymmetry") != std::string::npos);

  // Bad metadata.
  Graphon Wm = graphon_by_name("example-wg");
  Wm.metadata.breakpoints = {0.5, 0.2};
  CHECK_FALSE(validate(Wm).pass);
  Wm = graphon_by_name("example-wg");
  Wm.metadata.lipschitz_L = -1.0;
  CHECK_FALSE(validate(Wm).pass);
}

TEST_CASE("effective matrices of the block preset are exact") {
  const Graphon W = graphon_by_name("example-sbm");
  const auto em = effective_matrices(W, {}, true);

  // Q is the diagonal of block lengths.
  const std::vector<double> len = {0.1, 0.3, 0.2, 0.3, 0.1};
  REQUIRE(em.Q.rows() == 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(em.Q(i, j) == doctest::Approx(i == j ? len[i] : 0.0).epsilon(1e-15));

  // E = P * Q, hand-computed.
  Matrix E_exp(5, 5);
  E_exp << 0.1, 0.3, 0.2, 0.0, 0.0,
           0.1, 0.15, 0.0, 0.0, 0.0,
           0.1, 0.0, 0.05, 0.0, 0.1,
           0.0, 0.0, 0.0, 0.15, 0.1,
           0.0, 0.0, 0.2, 0.3, 0.1;
  CHECK((em.E - E_exp).cwiseAbs().maxCoeff() < 1e-14);

  const std::vector<double> hbar = {0.6, 0.25, 0.25, 0.25, 0.6};
  for (int i = 0; i < 5; ++i) {
    CHECK(em.h_bar(i) == doctest::Approx(hbar[i]).epsilon(1e-14));
    CHECK(em.D_E(i, i) == doctest::Approx(hbar[i]).epsilon(1e-14));
  }

  // Normalized connectivity: columns of E divided by the block degrees.
  REQUIRE(em.E_nor.rows() == 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(em.E_nor(i, j) == doctest::Approx(E_exp(i, j) / hbar[j]).epsilon(1e-13));
  const std::vector<double> hnor = {13.0 / 6.0, 23.0 / 30.0, 8.0 / 15.0, 23.0 / 30.0,
                                    13.0 / 6.0};
  REQUIRE(em.h_nor.size() == 5);
  for (int i = 0; i < 5; ++i)
    CHECK(em.h_nor(i) == doctest::Approx(hnor[i]).epsilon(1e-12));
}

TEST_CASE("effective matrices of the finite-rank preset are exact") {
  const Graphon W = graphon_by_name("example-fr");
  const auto em = effective_matrices(W, {}, true);

  REQUIRE(em.Q.rows() == 2);
  CHECK(em.Q(0, 0) == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(em.Q(0, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(em.Q(1, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(em.Q(1, 1) == doctest::Approx(0.25).epsilon(1e-13));

  CHECK(em.E(0, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(em.E(0, 1) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(em.E(1, 0) == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(em.E(1, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));

  CHECK(em.g_bar(0) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(em.g_bar(1) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(em.h_bar(0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(em.h_bar(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

  // Degree-normalized companions, closed forms via arctan integrals:
  // h_nor = (pi/sqrt(3), 2 - 2*pi/(3*sqrt(3))).
  const double pi_s3 = M_PI / std::sqrt(3.0);
  REQUIRE(em.h_nor.size() == 2);
  CHECK(em.h_nor(0) == doctest::Approx(pi_s3).epsilon(1e-9));
  CHECK(em.h_nor(1) == doctest::Approx(2.0 - 2.0 * M_PI / (3.0 * std::sqrt(3.0))).epsilon(1e-9));
  CHECK(em.E_nor(0, 0) == doctest::Approx(1.0 - M_PI / (3.0 * std::sqrt(3.0))).epsilon(1e-9));
  CHECK(em.E_nor(0, 1) == doctest::Approx(0.5 * pi_s3).epsilon(1e-9));
  CHECK(em.E_nor(1, 0) == doctest::Approx(2.0 * M_PI * std::sqrt(3.0) / 27.0).epsilon(1e-9));
  CHECK(em.E_nor(1, 1) == doctest::Approx(1.0 - M_PI / (3.0 * std::sqrt(3.0))).epsilon(1e-9));

  // Analytic kernels have no finite factor structure to integrate against.
  CHECK_THROWS_AS(effective_matrices(graphon_by_name("example-wg")), DomainError);
}

TEST_CASE("uniform discretization copies aligned block structure exactly") {
  const Graphon W = graphon_by_name("example-sbm");
  const Graphon D = discretize_to_sbm(W, 10);
  REQUIRE(D.is_sbm());
  CHECK(D.sbm().blocks() == 10);
  CHECK(D.id == std::string("example-sbm:disc10"));

  // All boundaries of the original are multiples of 1/10, so the
  // discretization agrees with the original everywhere, boundaries included.
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double x = i / 40.0;
      const double y = j / 40.0;
      CHECK(evaluate(D, x, y) == evaluate(W, x, y));
    }
  }

  // Smooth kernel at the coarsest level: values are taken at grid points,
  // exact boundary hits from the left.
  const Graphon G2 = discretize_to_sbm(graphon_by_name("example-wg"), 2);
  REQUIRE(G2.is_sbm());
  CHECK(G2.sbm().P(0, 0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(G2.sbm().P(0, 1) == doctest::Approx(0.0));
  CHECK(G2.sbm().P(1, 0) == doctest::Approx(0.0));
  CHECK(G2.sbm().P(1, 1) == doctest::Approx(0.0));

  CHECK_THROWS_AS(discretize_to_sbm(W, 0), DomainError);
}

TEST_CASE("degree bounds and partition spacing") {
  CHECK(max_degree(graphon_by_name("example-sbm")) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(max_degree(graphon_by_name("example-fr")) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-4));
  CHECK(max_degree(graphon_by_name("example-wg")) == doctest::Approx(0.125).epsilon(1e-3));
  CHECK(max_degree(constant_graphon(0.3)) == doctest::Approx(0.3).epsilon(1e-10));

  CHECK(min_breakpoint_spacing(graphon_by_name("example-sbm").metadata) ==
        doctest::Approx(0.1).epsilon(1e-12));
  GraphonMetadata none;
  CHECK(min_breakpoint_spacing(none) == doctest::Approx(1.0));
  GraphonMetadata one;
  one.breakpoints = {0.25};
  CHECK(min_breakpoint_spacing(one) == doctest::Approx(0.25));
}

TEST_CASE("json round trips preserve graphon behaviour") {
  for (const auto& name : graphon_preset_names()) {
    const Graphon W = graphon_by_name(name);
    const Graphon R = graphon_from_json(graphon_to_json(W));
    CHECK(R.id == W.id);
    CHECK(R.metadata.lipschitz_L == W.metadata.lipschitz_L);
    CHECK(R.metadata.eta == W.metadata.eta);
    CHECK(R.metadata.breakpoints == W.metadata.breakpoints);
    for (int i = 0; i <= 16; ++i)
      for (int j = 0; j <= 16; ++j)
        CHECK(evaluate(R, i / 16.0, j / 16.0) ==
              doctest::Approx(evaluate(W, i / 16.0, j / 16.0)).epsilon(1e-15));
  }

  // Builtin scalar names normalize onto the closed grammar.
  const auto mono = scalar_func_from_json(
      json{{"kind", "builtin"}, {"name", "monomial"}, {"k", 2}});
  CHECK(mono.is_poly());
  CHECK(mono.evaluate(0.5) == doctest::Approx(0.25));
  const auto cst = scalar_func_from_json(
      json{{"kind", "builtin"}, {"name", "constant"}, {"value", 0.5}});
  CHECK(cst.evaluate(0.9) == doctest::Approx(0.5));
  CHECK_THROWS_AS(scalar_func_from_json(
                      json{{"kind", "builtin"}, {"name", "monomial"}, {"k", 17}}),
                  ConfigError);

  // Builtin kernel name expands to the expression tree.
  const auto wg = kernel_expr_from_json(json{{"builtin", "wg"}});
  CHECK(wg.evaluate(0.3, 0.7) == doctest::Approx(0.09).epsilon(1e-14));

  // Malformed documents are rejected as configuration errors.
  CHECK_THROWS_AS(graphon_from_json(json{{"variant", "nope"}}), ConfigError);
  CHECK_THROWS_AS(
      graphon_from_json(json{{"variant", "sbm"},
                             {"boundaries", {0.0, 1.0}},
                             {"P", {{0.1, 0.2}, {0.2, 0.1}}}}),
      ConfigError);  // block count mismatch
  CHECK_THROWS_AS(kernel_expr_from_json(json{{"op", "frobnicate"}}), ConfigError);
  json bad_sub = {{"op", "sub"}, {"args", json::array({json{{"op", "x"}}})}};
  CHECK_THROWS_AS(kernel_expr_from_json(bad_sub), ConfigError);
}

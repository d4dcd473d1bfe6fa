#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "graphon/errors.hpp"
#include "graphon/graph_centrality.hpp"
#include "graphon/graphon.hpp"
#include "graphon/graphon_centrality.hpp"
#include "graphon/rng.hpp"
#include "graphon/spectral.hpp"

using namespace graphon;
using namespace graphon::graphs;

namespace {

// Random connected simple graph: a random spanning tree plus extra edges,
// fully determined by `seed`.
Matrix random_connected_graph(int n, std::uint64_t seed, double extra = 0.3) {
  Matrix A = Matrix::Zero(n, n);
  const std::uint64_t key = rng::stream_key(seed, rng::Tag::matrices);
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng::uniform_at(key, v) * v);
    A(u, v) = A(v, u) = 1.0;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng::uniform_at(key, i, j) < extra) A(i, j) = A(j, i) = 1.0;
  return A;
}

Matrix path3() {
  Matrix A = Matrix::Zero(3, 3);
  A(0, 1) = A(1, 0) = A(1, 2) = A(2, 1) = 1.0;
  return A;
}

// Wrap a 0/1 adjacency as a block graphon on the uniform n-grid.  Its
// integral operator acts on block values as A/n, so the matrix route on the
// rescaled adjacency A/n must reproduce the closed block forms exactly.
Graphon graphon_of_adjacency(const Matrix& A) {
  const int n = static_cast<int>(A.rows());
  Sbm s;
  s.boundaries.resize(n + 1);
  for (int i = 0; i <= n; ++i) s.boundaries[i] = static_cast<double>(i) / n;
  s.P = A;
  Graphon W;
  W.variant = std::move(s);
  W.id = "adjacency";
  return W;
}

}  // namespace

TEST_CASE("degree, eigenvector, and resolvent scores on a path") {
  const Matrix A = path3();

  auto d = degree(A);
  REQUIRE(d.size() == 3);
  CHECK(d.values(0) == doctest::Approx(1.0));
  CHECK(d.values(1) == doctest::Approx(2.0));
  CHECK(d.values(2) == doctest::Approx(1.0));

  auto e = eigenvector(A);
  CHECK(e.lambda1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(e.degenerate_warning);
  // sqrt(3) * unit eigenvector (1/2, sqrt(2)/2, 1/2).
  CHECK(e.values(0) == doctest::Approx(std::sqrt(3.0) * 0.5).epsilon(1e-10));
  CHECK(e.values(1) == doctest::Approx(std::sqrt(3.0) * std::sqrt(0.5)).epsilon(1e-10));
  CHECK(e.values.norm() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  // Katz on the path: (I - a A)^{-1} 1 has the closed form below.
  const double a = 0.25;
  auto k = katz(A, a);
  const double denom = 1.0 - 2.0 * a * a;
  CHECK(k.values(1) == doctest::Approx((2.0 * a + 1.0) / denom).epsilon(1e-12));
  CHECK(k.values(0) == doctest::Approx((1.0 + a) / denom).epsilon(1e-10));

  CHECK_THROWS_AS(katz(A, 1.0 / std::sqrt(2.0)), DomainError);
  CHECK_THROWS_AS(katz(A, 0.0), DomainError);
  try {
    katz(A, 5.0);
  } catch (const DomainError& ex) {
    CHECK(ex.detail() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  }

  auto p = pagerank(A, 0.85);
  CHECK(p.values.sum() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(p.values(0) == doctest::Approx(p.values(2)).epsilon(1e-12));
  CHECK(p.values(1) > p.values(0));
  CHECK_THROWS_AS(pagerank(A, 0.0), DomainError);
  CHECK_THROWS_AS(pagerank(A, 1.0), DomainError);
}

TEST_CASE("input validation of the matrix routes") {
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = 1.0;  // asymmetric
  CHECK_THROWS_AS(degree(bad), DomainError);
  CHECK_THROWS_AS(eigenvector(bad), DomainError);
  CHECK_THROWS_AS(katz(bad, 0.1), DomainError);
  CHECK_THROWS_AS(pagerank(bad, 0.85), DomainError);

  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 1) = neg(1, 0) = -0.5;
  CHECK_THROWS_AS(degree(neg), DomainError);

  // Shape problems are configuration mistakes, not numeric-domain ones.
  CHECK_THROWS_AS(degree(Matrix::Zero(2, 3)), ConfigError);
}

TEST_CASE("permutation equivariance of all four measures") {
  const int n = 9;
  const Matrix A = random_connected_graph(n, 17);
  // A fixed permutation (rotation by 4, then a swap).
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = (i + 4) % n;
  std::swap(perm[0], perm[5]);
  Matrix Pm = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) Pm(perm[i], i) = 1.0;
  const Matrix B = Pm * A * Pm.transpose();

  Params kp;
  kp.alpha = 0.2 / num::sym_eig(A).eigenvalues[0];
  Params pp;
  pp.beta = 0.85;
  const std::vector<std::pair<Kind, Params>> cases = {
      {Kind::degree, {}},
      {Kind::eigenvector, {}},
      {Kind::katz, kp},
      {Kind::pagerank, pp},
  };
  for (const auto& [kind, params] : cases) {
    auto ca = centrality(A, kind, params);
    auto cb = centrality(B, kind, params);
    Vector mapped = Pm * ca.values;
    CHECK((cb.values - mapped).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("small-coupling expansion of the resolvent score") {
  const Matrix A = random_connected_graph(12, 23);
  const auto spec = num::sym_eig(A);
  const double lam = spec.eigenvalues[0];
  const Vector deg = A.rowwise().sum();
  for (double frac : {1e-3, 1e-2}) {
    const double alpha = frac / lam;
    auto k = katz(A, alpha);
    // |katz - 1 - alpha deg|_inf <= sqrt(N) (alpha lam)^2 / (1 - alpha lam).
    const double tail =
        std::sqrt(12.0) * frac * frac / (1.0 - frac) + 1e-12;
    const double dev =
        (k.values - Vector::Ones(12) - alpha * deg).cwiseAbs().maxCoeff();
    CHECK(dev <= tail);
  }
}

TEST_CASE("graph scores embed to the block-graphon closed forms") {
  // For the uniform block graphon built from A/n, the graphon centralities
  // restricted to the grid must match the matrix computation on A/n.
  for (std::uint64_t seed : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10,
                             11, 12, 13, 14, 15, 16, 17, 18, 19, 20}) {
    const int n = 8 + static_cast<int>(seed % 5);
    const Matrix A = random_connected_graph(n, seed);
    const Matrix M = rescale(A, Scaling::over_N);
    const Graphon W = graphon_of_adjacency(A);

    const double lam_m = num::sym_eig(M).eigenvalues[0];
    Params kp;
    kp.alpha = 0.5 / lam_m;
    Params pp;
    pp.beta = 0.85;
    const std::vector<std::pair<Kind, Params>> cases = {
        {Kind::degree, {}},
        {Kind::eigenvector, {}},
        {Kind::katz, kp},
        {Kind::pagerank, pp},
    };
    for (const auto& [kind, params] : cases) {
      auto from_graph = embed_step(centrality(M, kind, params));
      auto from_graphon = sbm_centrality(W, kind, params);
      CHECK(l2_distance(from_graph, from_graphon) < 1e-9);
    }
  }
}

TEST_CASE("disconnection is flagged, not fatal") {
  // Two disjoint triangles: the dominant eigenvalue 2 has multiplicity 2.
  Matrix A = Matrix::Zero(6, 6);
  auto tri = [&](int base) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) A(base + i, base + j) = 1.0;
  };
  tri(0);
  tri(3);
  auto e = eigenvector(A);
  CHECK(e.degenerate_warning);
  CHECK(e.lambda1 == doctest::Approx(2.0).epsilon(1e-10));

  auto ep = eigenvector(path3());
  CHECK_FALSE(ep.degenerate_warning);
}

TEST_CASE("pagerank tolerates zero-degree nodes") {
  Matrix A = Matrix::Zero(4, 4);
  A(0, 1) = A(1, 0) = A(1, 2) = A(2, 1) = 1.0;  // node 3 isolated
  auto p = pagerank(A, 0.85);
  CHECK(p.values(3) == doctest::Approx(0.15).epsilon(1e-12));
  for (int i = 0; i < 4; ++i) CHECK(p.values(i) > 0.0);
  // Mass concentrates on the positive-degree component plus the leak.
  CHECK(p.values.sum() < 4.0 + 1e-12);
}

TEST_CASE("rescaling and embedding") {
  Matrix A = path3();
  const Matrix M1 = rescale(A, Scaling::raw);
  CHECK((M1 - A).cwiseAbs().maxCoeff() == 0.0);
  const Matrix M2 = rescale(A, Scaling::over_N);
  CHECK(M2(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  const Matrix M3 = rescale(A, Scaling::over_N_kappa, 0.5);
  CHECK(M3(0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(rescale(A, Scaling::over_N_kappa, 0.0), DomainError);
  CHECK_THROWS_AS(rescale(A, Scaling::over_N_kappa, -1.0), DomainError);

  auto d = degree(A);
  auto f = embed_step(d);
  REQUIRE(f.is_step());
  REQUIRE(f.step().boundaries.size() == 4);
  CHECK(f.step().boundaries[1] == doctest::Approx(1.0 / 3.0));
  CHECK(f.evaluate(0.1) == doctest::Approx(1.0));
  CHECK(f.evaluate(0.5) == doctest::Approx(2.0));
  CHECK(f.kind == Kind::degree);

  auto e = eigenvector(A);
  auto fe = embed_step(e);
  REQUIRE(fe.lambda1.has_value());
  CHECK(*fe.lambda1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("score serialization") {
  auto d = degree(path3());
  const auto j = centrality_vector_to_json(d);
  CHECK(j.at("kind") == "degree");
  CHECK(j.at("n") == 3);
  CHECK(j.at("scaling") == "raw");
  REQUIRE(j.at("values").size() == 3);
  CHECK(j.at("values")[1].get<double>() == doctest::Approx(2.0));
  CHECK_FALSE(j.contains("degenerate_warning"));

  Params kp;
  kp.alpha = 0.3;
  auto k = centrality(path3(), Kind::katz, kp);
  const auto jk = centrality_vector_to_json(k);
  CHECK(jk.at("params").at("alpha").get<double>() == doctest::Approx(0.3));
  CHECK(jk.contains("lambda1"));

  const std::string csv = centrality_vector_to_csv(d);
  REQUIRE(csv.rfind("node_index,value\r\n", 0) == 0);
  std::size_t lines = 0;
  for (std::size_t i = 0; i + 1 < csv.size(); ++i)
    if (csv[i] == '\r' && csv[i + 1] == '\n') ++lines;
  CHECK(lines == 4);
  CHECK(csv.find("0,1\r\n") != std::string::npos);
  CHECK(csv.find("1,2\r\n") != std::string::npos);
}

TEST_CASE("matrix input parsing") {
  const Matrix A = matrix_from_edge_list("0,1\n1,2\n");
  REQUIRE(A.rows() == 3);
  CHECK((A - path3()).cwiseAbs().maxCoeff() == 0.0);

  // Space separation, comments, weights, and an explicit size.
  const Matrix B = matrix_from_edge_list("# a square\n0 1\n1 2 0.5\n\n", 4);
  REQUIRE(B.rows() == 4);
  CHECK(B(1, 2) == doctest::Approx(0.5));
  CHECK(B(2, 1) == doctest::Approx(0.5));
  CHECK(B(0, 1) == doctest::Approx(1.0));
  CHECK(B.row(3).cwiseAbs().sum() == 0.0);

  // Self-loops are dropped rather than poisoning the diagonal.
  const Matrix C = matrix_from_edge_list("0,0\n0,1\n");
  CHECK(C(0, 0) == 0.0);
  CHECK(C(0, 1) == 1.0);

  CHECK_THROWS_AS(matrix_from_edge_list("0,5\n", 3), ConfigError);
  CHECK_THROWS_AS(matrix_from_edge_list("-1,2\n"), ConfigError);
  CHECK_THROWS_AS(matrix_from_edge_list("abc\n"), ConfigError);
  CHECK_THROWS_AS(matrix_from_edge_list(""), ConfigError);
  try {
    matrix_from_edge_list("0,1\nbogus line\n");
  } catch (const ConfigError& ex) {
    CHECK(std::string(ex.what()).find("line 2") != std::string::npos);
  }

  const Matrix D = matrix_from_dense_csv("0,1\r\n1,0\r\n");
  REQUIRE(D.rows() == 2);
  CHECK(D(0, 1) == 1.0);
  CHECK_THROWS_AS(matrix_from_dense_csv("0,1\n1\n"), ConfigError);
  CHECK_THROWS_AS(matrix_from_dense_csv("0,x\n1,0\n"), ConfigError);
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mnlck/cochain.hpp"
#include "mnlck/simplicial_complex.hpp"
#include "mnlck/triangulations.hpp"
#include "oracles.hpp"

using mnlck::Rational;
using mnlck::Simplex;
using mnlck::SimplicialComplex;

TEST_CASE("building the circle", "[complex]") {
  const auto k = mnlck::builtin_complex("circle3");
  REQUIRE(k.vertex_count() == 3);
  REQUIRE(k.dimension() == 1);
  REQUIRE(k.f_vector() == std::vector<int>{3, 3});
  REQUIRE(k.euler_characteristic() == 0);
  REQUIRE(k.contains({0, 2}));
  REQUIRE(k.contains({2, 0}));  // lookup canonicalizes
  REQUIRE_FALSE(k.contains({0, 1, 2}));
  REQUIRE(k.index_of({1, 2}) == 2);  // lexicographic: {0,1},{0,2},{1,2}
}

TEST_CASE("face closure fills in everything below the generators", "[complex]") {
  const auto k = SimplicialComplex::build(4, {{3, 1, 0}});  // unsorted on purpose
  REQUIRE(k.f_vector() == std::vector<int>{4, 3, 1});
  REQUIRE(k.contains({0, 1}));
  REQUIRE(k.contains({1, 3}));
  REQUIRE(k.contains({0, 3}));
  REQUIRE(k.simplices(2).front() == Simplex{0, 1, 3});
  // vertex 2 appears in no generator but is still a 0-simplex
  REQUIRE(k.contains({2}));

  SECTION("closure is idempotent through maximal simplices") {
    const auto again = SimplicialComplex::build(4, k.maximal_simplices());
    REQUIRE(again == k);
  }
}

TEST_CASE("invalid generators are rejected", "[complex]") {
  REQUIRE_THROWS_AS(SimplicialComplex::build(3, {{0, 1, 3}}), std::out_of_range);
  REQUIRE_THROWS_AS(SimplicialComplex::build(3, {{-1, 0}}), std::out_of_range);
  REQUIRE_THROWS_AS(SimplicialComplex::build(3, {{1, 1, 2}}), std::invalid_argument);
  REQUIRE_THROWS_AS(SimplicialComplex::build(-1, {}), std::invalid_argument);
}

TEST_CASE("built-in library has the expected face counts", "[complex]") {
  REQUIRE(mnlck::builtin_complex("point").f_vector() == std::vector<int>{1});
  REQUIRE(mnlck::builtin_complex("circle4").f_vector() == std::vector<int>{4, 4});
  REQUIRE(mnlck::builtin_complex("tetra").f_vector() == std::vector<int>{4, 6, 4});
  REQUIRE(mnlck::builtin_complex("torus9").f_vector() == std::vector<int>{9, 27, 18});
  REQUIRE(mnlck::builtin_complex("rp2_6").f_vector() == std::vector<int>{6, 15, 10});
  REQUIRE(mnlck::builtin_complex("torus9").euler_characteristic() == 0);
  REQUIRE(mnlck::builtin_complex("rp2_6").euler_characteristic() == 1);
  REQUIRE_THROWS_AS(mnlck::builtin_complex("klein"), std::invalid_argument);

  // every edge of a closed surface triangulation lies in exactly two triangles
  const auto torus = mnlck::builtin_complex("torus9");
  for (const auto& edge : torus.simplices(1)) {
    int incident = 0;
    for (const auto& tri : torus.simplices(2)) {
      incident += std::includes(tri.begin(), tri.end(), edge.begin(), edge.end()) ? 1 : 0;
    }
    REQUIRE(incident == 2);
  }
}

TEST_CASE("boundary matrices have the textbook ranks", "[complex]") {
  const auto tetra = mnlck::builtin_complex("tetra");
  const auto d1 = mnlck::boundary_matrix<Rational>(tetra, 1);
  const auto d2 = mnlck::boundary_matrix<Rational>(tetra, 2);
  REQUIRE(d1.rows() == 4);
  REQUIRE(d1.cols() == 6);
  REQUIRE(d2.rows() == 6);
  REQUIRE(d2.cols() == 4);
  REQUIRE((d1 * d2).is_zero());
  REQUIRE(oracle::rank_gauss(d1) == 3);
  REQUIRE(oracle::rank_gauss(d2) == 3);
  REQUIRE(mnlck::rank_exact(d1) == 3);
  REQUIRE(mnlck::rank_exact(d2) == 3);
  REQUIRE_THROWS_AS(mnlck::boundary_matrix<Rational>(tetra, 0), std::out_of_range);
  REQUIRE_THROWS_AS(mnlck::boundary_matrix<Rational>(tetra, 3), std::out_of_range);

  SECTION("untwisted Betti numbers of the library") {
    REQUIRE(oracle::betti_untwisted(mnlck::builtin_complex("circle3")) ==
            std::vector<long long>{1, 1});
    REQUIRE(oracle::betti_untwisted(tetra) == std::vector<long long>{1, 0, 1});
    REQUIRE(oracle::betti_untwisted(mnlck::builtin_complex("torus9")) ==
            std::vector<long long>{1, 2, 1});
    REQUIRE(oracle::betti_untwisted(mnlck::builtin_complex("rp2_6")) ==
            std::vector<long long>{1, 0, 0});
  }
}

TEST_CASE("cocycle validation pinpoints broken triangles", "[cochain]") {
  const auto tetra = mnlck::builtin_complex("tetra");
  // additive theta = coboundary of a vertex potential, hence exactly closed
  const std::vector<double> potential = {0.0, 0.7, -0.3, 1.1};
  std::vector<double> theta;
  for (const auto& e : tetra.simplices(1)) theta.push_back(potential[e[1]] - potential[e[0]]);

  auto lee = mnlck::lee_from_additive(tetra, theta);
  REQUIRE(mnlck::validate_cocycle(tetra, lee).empty());

  SECTION("perturbing one edge flags exactly its two triangles") {
    auto broken = theta;
    broken[tetra.index_of({0, 1})] += 1.0;
    const auto violations =
        mnlck::validate_cocycle(tetra, mnlck::lee_from_additive(tetra, broken));
    REQUIRE(violations.size() == 2);
    REQUIRE(violations[0].triangle == Simplex{0, 1, 2});
    REQUIRE(violations[1].triangle == Simplex{0, 1, 3});
    REQUIRE(violations[0].residual > 1.0);  // e^1 - 1
  }

  SECTION("exact weights are checked exactly") {
    const auto edges = tetra.simplices(1);
    std::vector<Rational> w(edges.size(), Rational(1));
    w[tetra.index_of({1, 2})] = Rational(3, 2);
    const auto violations = mnlck::validate_cocycle(tetra, mnlck::make_lee(tetra, w));
    REQUIRE(violations.size() == 2);  // triangles {0,1,2} and {1,2,3}
    REQUIRE(violations[0].triangle == Simplex{0, 1, 2});
    REQUIRE(violations[1].triangle == Simplex{1, 2, 3});
  }
}

TEST_CASE("holonomy multiplies transport along closed paths", "[cochain]") {
  const auto circle = mnlck::builtin_complex("circle3");
  // weights on lexicographic edges {0,1},{0,2},{1,2}
  const auto lee = mnlck::make_lee<Rational>(circle, {Rational(7, 2), 1, 1});
  REQUIRE(mnlck::holonomy(circle, lee, {0, 1, 2, 0}) == Rational(7, 2));
  REQUIRE(mnlck::holonomy(circle, lee, {0, 2, 1, 0}) == Rational(2, 7));
  REQUIRE(mnlck::holonomy(circle, lee, {1, 2, 0, 1}) == Rational(7, 2));

  SECTION("holonomy of a closed cochain around contractible loops is 1") {
    const auto tetra = mnlck::builtin_complex("tetra");
    const std::vector<Rational> g = {1, 2, Rational(1, 3), 5};
    std::vector<Rational> w;
    for (const auto& e : tetra.simplices(1)) w.push_back(g[e[1]] / g[e[0]]);
    const auto flat = mnlck::make_lee(tetra, w);
    REQUIRE(mnlck::validate_cocycle(tetra, flat).empty());
    REQUIRE(mnlck::holonomy(tetra, flat, {0, 1, 2, 0}) == Rational(1));
    REQUIRE(mnlck::holonomy(tetra, flat, {0, 1, 3, 2, 0}) == Rational(1));
    REQUIRE(mnlck::holonomy(tetra, flat, {0, 2, 1, 3, 0}) == Rational(1));
  }

  SECTION("bad paths are rejected") {
    REQUIRE_THROWS_AS(mnlck::holonomy(circle, lee, {0, 1, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(mnlck::holonomy(circle, lee, {0}), std::invalid_argument);
    REQUIRE_THROWS_AS(mnlck::holonomy(circle, lee, {0, 0}), std::invalid_argument);
    const auto tetra_minus = SimplicialComplex::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto unit = mnlck::make_lee<Rational>(tetra_minus, {1, 1, 1, 1});
    REQUIRE_THROWS_AS(mnlck::holonomy(tetra_minus, unit, {0, 2, 0}), std::invalid_argument);
  }

  SECTION("weight construction validates alignment and positivity") {
    REQUIRE_THROWS_AS(mnlck::make_lee<Rational>(circle, {1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(mnlck::make_lee<Rational>(circle, {1, -1, 1}), std::invalid_argument);
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mnlck/rng.hpp"
#include "mnlck/triangulations.hpp"
#include "mnlck/twisted.hpp"
#include "oracles.hpp"

using mnlck::DenseMatrix;
using mnlck::Rational;

namespace {

/** Exactly flat random weights: the multiplicative coboundary of a random
 * positive vertex potential (every such system is flat by construction). */
mnlck::LeeCocycle<Rational> random_flat_weights(const mnlck::SimplicialComplex& k,
                                                std::uint64_t stream) {
  auto gen = mnlck::stream_rng(1234, stream);
  std::uniform_int_distribution<int> num(1, 9), den(1, 9);
  std::vector<Rational> g;
  for (int v = 0; v < k.vertex_count(); ++v) g.emplace_back(num(gen), den(gen));
  std::vector<Rational> w;
  for (const auto& e : k.simplices(1)) w.push_back(g[e[1]] / g[e[0]]);
  return mnlck::make_lee(k, std::move(w));
}

}  // namespace

TEST_CASE("unit weights reproduce the untwisted coboundary", "[twisted]") {
  for (const auto& name : {"circle3", "tetra", "torus9", "rp2_6"}) {
    const auto k = mnlck::builtin_complex(name);
    std::vector<Rational> ones(k.count(1), Rational(1));
    const auto tc = mnlck::assemble_twisted(k, mnlck::make_lee(k, ones));
    CAPTURE(name);
    REQUIRE(static_cast<int>(tc.d.size()) == k.dimension() + 1);
    for (int deg = 1; deg <= k.dimension(); ++deg) {
      REQUIRE(tc.d[deg - 1] == mnlck::boundary_matrix<Rational>(k, deg).transposed());
    }
  }
}

TEST_CASE("twisted coboundary squares to zero exactly", "[twisted]") {
  for (const auto& name : {"tetra", "torus9", "rp2_6"}) {
    const auto k = mnlck::builtin_complex(name);
    for (std::uint64_t stream = 0; stream < 5; ++stream) {
      const auto tc = mnlck::assemble_twisted(k, random_flat_weights(k, stream));
      CAPTURE(name, stream);
      for (std::size_t deg = 0; deg + 1 < tc.d.size(); ++deg) {
        REQUIRE((tc.d[deg + 1] * tc.d[deg]).is_zero());
      }
    }
  }
}

TEST_CASE("non-flat weights are rejected at assembly", "[twisted]") {
  const auto tetra = mnlck::builtin_complex("tetra");
  std::vector<Rational> w(tetra.count(1), Rational(1));
  w[tetra.index_of({0, 1})] = 2;
  REQUIRE_THROWS_AS(mnlck::assemble_twisted(tetra, mnlck::make_lee(tetra, w)),
                    std::invalid_argument);
}

TEST_CASE("circle transport matrix has determinant t - 1", "[twisted]") {
  const auto circle = mnlck::builtin_complex("circle3");
  for (const Rational& t : {Rational(1), Rational(2), Rational(5, 3)}) {
    const auto tc =
        mnlck::assemble_twisted(circle, mnlck::make_lee<Rational>(circle, {t, 1, 1}));
    CAPTURE(mnlck::to_string(t));
    REQUIRE(oracle::det3(tc.d[0]) == t - 1);
    const auto betti = mnlck::twisted_betti(tc);
    if (t == 1) {
      REQUIRE(betti.betti == std::vector<long long>{1, 1});
    } else {
      REQUIRE(betti.betti == std::vector<long long>{0, 0});
    }
    REQUIRE(betti.euler == circle.euler_characteristic());
  }
}

TEST_CASE("float backend matches the exact backend on the circle", "[twisted]") {
  const auto circle = mnlck::builtin_complex("circle3");
  const auto edge01 = circle.index_of({0, 1});
  for (const double t : {2.0, 0.5, 3.0}) {
    std::vector<double> theta(circle.count(1), 0.0);
    theta[edge01] = std::log(t);
    const auto tc = mnlck::assemble_twisted(circle, mnlck::lee_from_additive(circle, theta));
    const auto betti = mnlck::twisted_betti(tc);
    CAPTURE(t);
    REQUIRE(betti.betti == std::vector<long long>{0, 0});
    REQUIRE_FALSE(betti.low_confidence);
  }
}

TEST_CASE("flat systems on simply connected complexes do not move Betti numbers",
          "[twisted]") {
  const auto tetra = mnlck::builtin_complex("tetra");
  for (std::uint64_t stream = 0; stream < 3; ++stream) {
    const auto tc = mnlck::assemble_twisted(tetra, random_flat_weights(tetra, stream));
    const auto betti = mnlck::twisted_betti(tc);
    CAPTURE(stream);
    REQUIRE(betti.betti == std::vector<long long>{1, 0, 1});
  }
}

TEST_CASE("twisted Euler characteristic never moves", "[twisted]") {
  for (const auto& name : {"tetra", "torus9", "rp2_6"}) {
    const auto k = mnlck::builtin_complex(name);
    const auto tc = mnlck::assemble_twisted(k, random_flat_weights(k, 17));
    CAPTURE(name);
    REQUIRE(mnlck::twisted_betti(tc).euler == k.euler_characteristic());
  }
}

TEST_CASE("gauge transforms conjugate the coboundary and preserve Betti numbers",
          "[twisted]") {
  const auto torus = mnlck::builtin_complex("torus9");
  std::vector<Rational> ones(torus.count(1), Rational(1));
  const auto tc = mnlck::assemble_twisted(torus, mnlck::make_lee(torus, ones));

  std::vector<Rational> g;
  auto gen = mnlck::stream_rng(5150, 3);
  std::uniform_int_distribution<int> num(1, 9), den(1, 9);
  for (int v = 0; v < torus.vertex_count(); ++v) g.emplace_back(num(gen), den(gen));

  const auto gauged = mnlck::gauge_transform(tc, g);

  SECTION("diagonal intertwining identity holds exactly") {
    for (int deg = 0; deg < torus.dimension(); ++deg) {
      REQUIRE(gauged.conjugators[deg + 1] * gauged.transformed.d[deg] ==
              tc.d[deg] * gauged.conjugators[deg]);
    }
  }

  SECTION("Betti numbers and holonomy are gauge invariants") {
    REQUIRE(mnlck::twisted_betti(gauged.transformed).betti ==
            mnlck::twisted_betti(tc).betti);
    const std::vector<int> loop = {0, 1, 2, 0};  // a homotopically nontrivial grid loop
    REQUIRE(mnlck::holonomy(torus, gauged.transformed.lee, loop) ==
            mnlck::holonomy(torus, tc.lee, loop));
  }

  SECTION("bad gauges are rejected") {
    REQUIRE_THROWS_AS(mnlck::gauge_transform(tc, std::vector<Rational>(3, Rational(1))),
                      std::invalid_argument);
    std::vector<Rational> negative(torus.vertex_count(), Rational(1));
    negative[4] = -1;
    REQUIRE_THROWS_AS(mnlck::gauge_transform(tc, negative), std::invalid_argument);
  }
}

TEST_CASE("gauge transform works in the float backend too", "[twisted]") {
  const auto circle = mnlck::builtin_complex("circle4");
  std::vector<double> theta(circle.count(1), 0.0);
  theta[circle.index_of({0, 1})] = std::log(3.0);
  const auto tc = mnlck::assemble_twisted(circle, mnlck::lee_from_additive(circle, theta));
  const auto gauged = mnlck::gauge_transform(tc, std::vector<double>{1.0, 2.5, 0.25, 7.0});
  REQUIRE(mnlck::twisted_betti(gauged.transformed).betti ==
          mnlck::twisted_betti(tc).betti);
  REQUIRE(mnlck::holonomy(circle, gauged.transformed.lee, {0, 1, 2, 3, 0}) ==
          Catch::Approx(3.0));
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "mnlck/deformation.hpp"
#include "mnlck/hopf.hpp"
#include "mnlck/rational.hpp"

using namespace mnlck;

TEST_CASE("continued fractions pick the deepest convergent in range", "[deform]") {
  REQUIRE(deform::best_rational_approx(std::numbers::sqrt2, 100) == Rational(99, 70));
  REQUIRE(deform::best_rational_approx(std::numbers::sqrt2, 12) == Rational(17, 12));
  REQUIRE(deform::best_rational_approx(std::numbers::sqrt2, 1) == Rational(1));
  REQUIRE(deform::best_rational_approx(-std::numbers::sqrt2, 100) == Rational(-99, 70));
  REQUIRE(deform::best_rational_approx(std::numbers::pi, 120) == Rational(355, 113));
  REQUIRE(deform::best_rational_approx(0.5, 1000) == Rational(1, 2));
  REQUIRE(deform::best_rational_approx(3.0, 10) == Rational(3));
  REQUIRE(deform::best_rational_approx(0.0, 10) == Rational(0));
  REQUIRE_THROWS_AS(deform::best_rational_approx(1.0, 0), std::invalid_argument);
}

TEST_CASE("period deformation produces rational ratios within tolerance", "[deform]") {
  SECTION("a single period is already cyclic") {
    const auto result = deform::rational_lee_deformation({std::log(2.0)}, 1e-9, 10);
    REQUIRE(result.scale == std::log(2.0));
    REQUIRE(result.ratios == std::vector<Rational>{Rational(1)});
    REQUIRE(result.deformed[0] == std::log(2.0));
    REQUIRE(result.error == 0.0);
  }
  SECTION("the classic irrational pair") {
    const auto result =
        deform::rational_lee_deformation({1.0, std::numbers::sqrt2}, 1e-2, 100);
    REQUIRE(result.scale == 1.0);
    REQUIRE(result.ratios[0] == Rational(1));
    REQUIRE(result.ratios[1] == Rational(99, 70));
    REQUIRE(result.error <= 1e-4);
    REQUIRE(result.error == Catch::Approx(7.2e-5).margin(2e-6));
  }
  SECTION("leading zeros ride along") {
    const auto result =
        deform::rational_lee_deformation({0.0, 2.0, 3.0}, 1e-9, 10);
    REQUIRE(result.scale == 2.0);
    REQUIRE(result.ratios == std::vector<Rational>{Rational(0), Rational(1),
                                                   Rational(3, 2)});
    REQUIRE(result.error == 0.0);
  }
  SECTION("an unreachable tolerance reports failure") {
    REQUIRE_THROWS_AS(
        deform::rational_lee_deformation({1.0, std::numbers::sqrt2}, 1e-9, 3),
        std::runtime_error);
  }
  SECTION("degenerate inputs are rejected") {
    REQUIRE_THROWS_AS(deform::rational_lee_deformation({}, 1e-2, 10),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(deform::rational_lee_deformation({0.0, 0.0}, 1e-2, 10),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(deform::rational_lee_deformation({1.0}, 0.0, 10),
                      std::invalid_argument);
  }
}

TEST_CASE("deformed Hopf data keeps phases, character and positivity", "[deform]") {
  const auto base =
      hopf::HopfData::from_exponents({2.0, 3.0}, std::exp(2.0), {0.3, -1.1});
  const auto deformed = deform::deform_lee_class(base, 1e-3, 100000);

  REQUIRE(deformed.data.C == base.C);
  REQUIRE(deformed.periods.error <= 1e-3);
  for (std::size_t i = 0; i < base.alpha.size(); ++i) {
    REQUIRE(std::arg(deformed.data.alpha[i]) ==
            Catch::Approx(std::arg(base.alpha[i])).margin(1e-12));
    REQUIRE(std::abs(std::abs(deformed.data.alpha[i]) - std::abs(base.alpha[i])) <=
            1e-3);
    // the deformed period really is scale * ratio
    REQUIRE(-std::log(std::abs(deformed.data.alpha[i])) ==
            Catch::Approx(deformed.periods.scale *
                          to_double(deformed.periods.ratios[i]))
                .epsilon(1e-12));
  }

  const auto sweep = hopf::positivity_sweep(deformed.data, 300, 777);
  REQUIRE(sweep.min_eigenvalue > 0.0);
}

TEST_CASE("empirical positivity threshold and its half-size check", "[deform]") {
  const auto base =
      hopf::HopfData::from_exponents({2.5, 3.5}, std::exp(2.0), {0.4, 1.9});
  const auto report = deform::positivity_threshold(base, 100, 2025, 6, 10);
  REQUIRE(report.base_min_eigenvalue > 0.0);
  REQUIRE(report.threshold > 0.0);

  // fresh perturbations at half the reported threshold stay positive
  const double tau = report.threshold / 2.0;
  std::vector<double> periods;
  for (const auto& a : base.alpha) periods.push_back(-std::log(std::abs(a)));
  for (std::uint64_t direction = 0; direction < 6; ++direction) {
    auto gen = stream_rng(909090, direction);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<hopf::Complex> alpha(periods.size());
    for (std::size_t i = 0; i < periods.size(); ++i) {
      alpha[i] = std::polar(std::exp(-(periods[i] + tau * unit(gen))),
                            std::arg(base.alpha[i]));
    }
    const auto sweep = hopf::positivity_sweep(
        hopf::HopfData::make(std::move(alpha), base.C), 100, 2025);
    CAPTURE(direction, tau);
    REQUIRE(sweep.min_eigenvalue > 0.0);
  }

  // the rational deformation at tau/2 is one such perturbation
  const auto deformed = deform::deform_lee_class(base, tau, 1000000);
  const auto sweep = hopf::positivity_sweep(deformed.data, 300, 2025);
  REQUIRE(sweep.min_eigenvalue > 0.0);
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "mnlck/deformation.hpp"
#include "mnlck/exterior.hpp"
#include "mnlck/hopf.hpp"
#include "mnlck/polynomial.hpp"
#include "mnlck/rng.hpp"

using namespace mnlck;
using hopf::Complex;
using hopf::HopfData;

namespace {

// real 2n x 2n matrix of the diagonal contraction z -> (alpha_i z_i)
Eigen::MatrixXd real_contraction(const HopfData& data) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(data.real_dim(), data.real_dim());
  for (int j = 0; j < data.n(); ++j) {
    const double a = data.alpha[static_cast<std::size_t>(j)].real();
    const double b = data.alpha[static_cast<std::size_t>(j)].imag();
    m(2 * j, 2 * j) = a;
    m(2 * j, 2 * j + 1) = -b;
    m(2 * j + 1, 2 * j) = b;
    m(2 * j + 1, 2 * j + 1) = a;
  }
  return m;
}

// independent scalar-gradient oracle by central differences
template <typename F>
Eigen::VectorXd fd_gradient(F&& f, const Eigen::VectorXd& x, double h) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd shifted = x;
  for (int a = 0; a < x.size(); ++a) {
    shifted(a) = x(a) + h;
    const double plus = f(shifted);
    shifted(a) = x(a) - h;
    const double minus = f(shifted);
    shifted(a) = x(a);
    g(a) = (plus - minus) / (2.0 * h);
  }
  return g;
}

geometry::Polynomial random_test_potential(int variables, std::uint64_t stream,
                                           int degree = 2) {
  auto gen = stream_rng(97531, stream);
  return geometry::Polynomial::random(variables, degree, 8, gen, 0.05);
}

}  // namespace

TEST_CASE("exponents and eigenvalue moduli determine each other", "[hopf]") {
  const double e2 = std::exp(2.0);
  const auto data = HopfData::make({Complex(std::exp(-1.0), 0.0)}, e2);
  REQUIRE(data.beta[0] == Catch::Approx(2.0).epsilon(1e-13));

  for (const auto& [name, config] : hopf::standard_configurations()) {
    CAPTURE(name);
    for (std::size_t i = 0; i < config.alpha.size(); ++i) {
      const double modulus = std::abs(config.alpha[i]);
      REQUIRE(modulus > 0.0);
      REQUIRE(modulus < 1.0);
      REQUIRE(config.beta[i] > 0.0);
      REQUIRE(std::abs(std::pow(modulus, config.beta[i]) * config.C - 1.0) <= 1e-14);
    }
  }

  REQUIRE_THROWS_AS(HopfData::make({}, 2.0), std::invalid_argument);
  REQUIRE_THROWS_AS(HopfData::make({Complex(0.0, 0.0)}, 2.0), std::invalid_argument);
  REQUIRE_THROWS_AS(HopfData::make({Complex(1.2, 0.0)}, 2.0), std::invalid_argument);
  REQUIRE_THROWS_AS(HopfData::make({Complex(0.5, 0.0)}, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(HopfData::from_exponents({-2.0}, 2.0), std::invalid_argument);
  REQUIRE_THROWS_AS(HopfData::from_exponents({2.0, 3.0}, 2.0, {0.1}),
                    std::invalid_argument);
}

TEST_CASE("potential values and automorphy", "[hopf]") {
  const auto n1 = HopfData::from_exponents({2.0}, std::exp(2.0));
  REQUIRE(hopf::potential(n1, std::vector<Complex>{Complex(3.0, 4.0)}) ==
          Catch::Approx(25.0));

  // a single nonzero coordinate contributes |z_j|^{beta_j}
  const auto n2 = HopfData::from_exponents({2.0, 3.0}, std::exp(2.0));
  REQUIRE(hopf::potential(n2, std::vector<Complex>{Complex(0.0, 0.0),
                                                   Complex(0.0, 2.0)}) ==
          Catch::Approx(8.0));

  Eigen::VectorXd origin = Eigen::VectorXd::Zero(2);
  REQUIRE_THROWS_AS(hopf::potential(n1, origin), std::invalid_argument);
  REQUIRE_THROWS_AS(hopf::potential(n2, origin), std::invalid_argument);

  for (const auto& [name, config] : hopf::standard_configurations()) {
    auto gen = stream_rng(11, 0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto z = hopf::annulus_sample(config.n(), gen, 0.1, 10.0);
      worst = std::max(worst, hopf::automorphy_residual(config, z));
    }
    CAPTURE(name);
    REQUIRE(worst <= 1e-12);
  }
}

TEST_CASE("Lee form is d log phi and pulls back invariantly", "[hopf]") {
  const auto n1 = HopfData::from_exponents({2.0}, std::exp(2.0));
  Eigen::VectorXd p(2);
  p << 1.0, 2.0;  // theta = (2x dx + 2y dy)/|z|^2
  const Eigen::VectorXd theta = hopf::lee_form(n1, p);
  REQUIRE(theta(0) == Catch::Approx(0.4));
  REQUIRE(theta(1) == Catch::Approx(0.8));

  for (const auto& [name, config] : hopf::standard_configurations()) {
    const Eigen::MatrixXd a_real = real_contraction(config);
    auto gen = stream_rng(12, 7);
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::VectorXd x =
          hopf::real_point(hopf::annulus_sample(config.n(), gen, 0.5, 2.0));
      const Eigen::VectorXd pulled =
          a_real.transpose() * hopf::lee_form(config, (a_real * x).eval());
      CAPTURE(name, trial);
      REQUIRE((pulled - hopf::lee_form(config, x)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }

  // central differences of log phi agree at O(h^2)
  const auto config = HopfData::from_exponents({2.0, 3.0}, std::exp(2.0), {0.3, -1.1});
  auto gen = stream_rng(13, 1);
  const Eigen::VectorXd x =
      hopf::real_point(hopf::balanced_sample(config.n(), gen, 0.8, 1.25));
  const auto logphi = [&](const Eigen::VectorXd& y) {
    return std::log(hopf::potential(config, y));
  };
  const Eigen::VectorXd exact = hopf::lee_form(config, x);
  const double err_h = (fd_gradient(logphi, x, 1e-4) - exact).cwiseAbs().maxCoeff();
  const double err_half = (fd_gradient(logphi, x, 5e-5) - exact).cwiseAbs().maxCoeff();
  const double ratio = err_h / err_half;
  REQUIRE(ratio > 3.0);
  REQUIRE(ratio < 5.0);
}

TEST_CASE("Lee field is the weighted Euler field", "[hopf]") {
  const auto uniform =
      HopfData::make({Complex(std::exp(-1.0), 0.0), Complex(std::exp(-1.0), 0.0)},
                     std::exp(2.0));
  const std::vector<Complex> z{Complex(0.5, -0.3), Complex(1.2, 0.4)};
  const auto field = hopf::lee_field(uniform, z);
  REQUIRE(std::abs(field[0] - z[0]) < 1e-15);  // -log|alpha| = 1: Euler field
  REQUIRE(std::abs(field[1] - z[1]) < 1e-15);

  const auto mixed = HopfData::from_exponents({2.0, 3.0}, std::exp(2.0), {0.3, -1.1});
  const std::vector<Complex> e1{Complex(1.0, 0.0), Complex(0.0, 0.0)};
  const auto at_e1 = hopf::lee_field(mixed, e1);
  REQUIRE(std::abs(at_e1[0] - Complex(-std::log(std::abs(mixed.alpha[0])), 0.0)) <
          1e-15);
  REQUIRE(std::abs(at_e1[1]) == 0.0);
}

TEST_CASE("assembled form is positive with clean diagnostics", "[hopf]") {
  // n=1, beta=2: omega = (4/|z|^2) dx^dy, the cylinder form
  const auto n1 = HopfData::from_exponents({2.0}, std::exp(2.0));
  Eigen::VectorXd p(2);
  p << 2.0, 0.0;
  const auto frame = hopf::lck_form(n1, p);
  REQUIRE(frame.omega(0, 1) == Catch::Approx(1.0));  // 4/u at u=4
  REQUIRE(hopf::min_metric_eigenvalue(frame) == Catch::Approx(1.0));
  REQUIRE(frame.conformal_residual <= 1e-14);

  // n=2 uniform configuration at z=(1,1): positive by Sylvester minors
  const auto uniform =
      HopfData::make({Complex(std::exp(-1.0), 0.0), Complex(std::exp(-1.0), 0.0)},
                     std::exp(2.0));
  Eigen::VectorXd q(4);
  q << 1.0, 0.0, 1.0, 0.0;
  const auto frame2 = hopf::lck_form(uniform, q);
  const Eigen::MatrixXd metric = hopf::lck_metric(frame2);
  REQUIRE((metric - metric.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  for (int k = 1; k <= metric.rows(); ++k) {
    REQUIRE(metric.topLeftCorner(k, k).determinant() > 0.0);
  }
  REQUIRE(hopf::min_metric_eigenvalue(frame2) > 0.0);

  for (const auto& [name, config] : hopf::standard_configurations()) {
    const auto sweep = hopf::positivity_sweep(config, 200, 4242);
    CAPTURE(name);
    REQUIRE(sweep.min_eigenvalue > 0.0);
    REQUIRE(sweep.max_i_invariance <= 1e-10);
    REQUIRE(sweep.max_conformal <= 1e-8);
  }

  // beta < 2 is singular on its coordinate hyperplane but fine off it
  const auto sharp = HopfData::from_exponents({1.5, 2.5}, 2.0);
  Eigen::VectorXd on_plane(4);
  on_plane << 0.0, 0.0, 1.0, 0.0;
  REQUIRE(hopf::potential(sharp, on_plane) == Catch::Approx(1.0));
  REQUIRE_THROWS_AS(hopf::lck_form(sharp, on_plane), std::domain_error);
  Eigen::VectorXd off_plane(4);
  off_plane << 0.5, 0.0, 1.0, 0.0;
  REQUIRE(hopf::min_metric_eigenvalue(hopf::lck_form(sharp, off_plane)) > 0.0);
}

TEST_CASE("structure equation converges at second order", "[hopf]") {
  // a complex curve has no 3-forms: the residual is identically zero
  const auto n1 = HopfData::from_exponents({2.0}, std::exp(2.0));
  Eigen::VectorXd p(2);
  p << 1.0, 0.5;
  REQUIRE(hopf::structure_equation_residual(n1, p, 1e-3) == 0.0);

  const auto config = HopfData::from_exponents({2.0, 3.0}, std::exp(2.0), {0.3, -1.1});
  auto gen = stream_rng(21, 3);
  double worst_h = 0.0, worst_half = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::VectorXd x =
        hopf::real_point(hopf::balanced_sample(config.n(), gen, 0.8, 1.25));
    worst_h = std::max(worst_h, hopf::structure_equation_residual(config, x, 1e-3));
    worst_half =
        std::max(worst_half, hopf::structure_equation_residual(config, x, 5e-4));
  }
  REQUIRE(worst_h <= 1e-5);
  const double ratio = worst_h / worst_half;
  REQUIRE(ratio > 3.5);
  REQUIRE(ratio < 4.5);

  // the wrong sign does not converge: d omega != +theta ^ omega
  const Eigen::VectorXd x =
      hopf::real_point(hopf::balanced_sample(config.n(), gen, 0.8, 1.25));
  const auto frame = hopf::lck_form(config, x);
  const auto omega_field = [&](const Eigen::VectorXd& y) {
    return hopf::lck_form(config, y).omega;
  };
  const auto partials = geometry::fd_partials(omega_field, x, 1e-3);
  double wrong_sign = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (int c = b + 1; c < 4; ++c) {
        wrong_sign = std::max(
            wrong_sign,
            std::abs(geometry::d_two_form_component(partials, a, b, c) -
                     geometry::wedge_component(frame.theta, frame.omega, a, b, c)));
      }
    }
  }
  REQUIRE(wrong_sign > 1e-2);

  // degeneration: dd^c phi itself is closed, and exactly so under central
  // differences because the Hessian 2-form never mixes coordinate blocks
  const auto exact_field = [&](const Eigen::VectorXd& y) {
    const auto f = hopf::lck_form(config, y);
    return (f.omega * f.phi).eval();
  };
  const auto closed_partials = geometry::fd_partials(exact_field, x, 1e-3);
  double closedness = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (int c = b + 1; c < 4; ++c) {
        closedness = std::max(
            closedness,
            std::abs(geometry::d_two_form_component(closed_partials, a, b, c)));
      }
    }
  }
  REQUIRE(closedness <= 1e-10);
}

TEST_CASE("potential expansion identity", "[hopf]") {
  const auto configs = {HopfData::from_exponents({2.0}, std::exp(2.0)),
                        HopfData::from_exponents({2.0, 3.0}, std::exp(2.0), {0.3, -1.1})};
  std::uint64_t stream = 0;
  for (const auto& config : configs) {
    auto gen = stream_rng(31, static_cast<std::uint64_t>(config.n()));
    for (int trial = 0; trial < 10; ++trial, ++stream) {
      const auto test = random_test_potential(config.real_dim(), stream);
      const Eigen::VectorXd x =
          hopf::real_point(hopf::balanced_sample(config.n(), gen, 0.8, 1.25));
      CAPTURE(config.n(), trial);
      REQUIRE(hopf::potential_identity_residual(config, test, x, 1e-3) <= 1e-6);
    }
  }

  // a constant test potential exercises only the theta-wedge terms
  const auto config = HopfData::from_exponents({2.0, 3.0}, std::exp(2.0), {0.3, -1.1});
  geometry::Polynomial constant(4);
  constant.add_term(0.05, {0, 0, 0, 0});
  auto gen = stream_rng(32, 0);
  const Eigen::VectorXd x =
      hopf::real_point(hopf::balanced_sample(config.n(), gen, 0.8, 1.25));
  REQUIRE(hopf::potential_identity_residual(config, constant, x, 1e-3) <= 1e-6);

  // Richardson ratio on a cubic test potential
  const auto cubic = random_test_potential(4, 999, 3);
  const double r_h = hopf::potential_identity_residual(config, cubic, x, 1e-3);
  const double r_half = hopf::potential_identity_residual(config, cubic, x, 5e-4);
  const double ratio = r_h / r_half;
  REQUIRE(ratio > 3.5);
  REQUIRE(ratio < 4.5);

  // untwisted reduction: exact up to roundoff for degree <= 3
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto test = random_test_potential(4, 700 + s, 3);
    CAPTURE(s);
    REQUIRE(hopf::potential_identity_residual(test, x, 1e-3) <= 1e-8);
  }

  geometry::Polynomial odd(3);
  odd.add_term(1.0, {1, 0, 0});
  REQUIRE_THROWS_AS(hopf::potential_identity_residual(odd, Eigen::VectorXd::Ones(3), 1e-3),
                    std::invalid_argument);
  geometry::Polynomial wrong_dim(2);
  wrong_dim.add_term(1.0, {1, 0});
  REQUIRE_THROWS_AS(hopf::potential_identity_residual(config, wrong_dim, x, 1e-3),
                    std::invalid_argument);
}

TEST_CASE("polynomial derivatives match finite differences", "[hopf][polynomial]") {
  auto gen = stream_rng(41, 0);
  const auto poly = geometry::Polynomial::random(3, 4, 12, gen, 1.0);
  Eigen::VectorXd x(3);
  x << 0.7, -1.2, 0.4;
  const Eigen::VectorXd fd = fd_gradient(poly, x, 1e-5);
  REQUIRE((poly.gradient(x) - fd).cwiseAbs().maxCoeff() <= 1e-8);

  const Eigen::MatrixXd hess = poly.hessian(x);
  REQUIRE((hess - hess.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  // d(df) = 0: for a cubic the gradient is quadratic, central differences
  // are exact on it, and the symmetric Hessian cancels in antisymmetrisation
  const auto cubic = geometry::Polynomial::random(3, 3, 12, gen, 1.0);
  const auto grad_field = [&](const Eigen::VectorXd& y) { return cubic.gradient(y); };
  REQUIRE(geometry::fd_exterior_derivative(grad_field, x, 1e-4).cwiseAbs().maxCoeff() <=
          1e-9);

  REQUIRE_THROWS_AS(geometry::Polynomial(0), std::invalid_argument);
  geometry::Polynomial p(2);
  REQUIRE_THROWS_AS(p.add_term(1.0, {1}), std::invalid_argument);
  REQUIRE_THROWS_AS(p.add_term(1.0, {-1, 0}), std::invalid_argument);
}

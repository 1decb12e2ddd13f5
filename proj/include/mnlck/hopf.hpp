#ifndef MNLCK_HOPF_HPP
#define MNLCK_HOPF_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mnlck/exterior.hpp"
#include "mnlck/parallel.hpp"
#include "mnlck/polynomial.hpp"
#include "mnlck/rng.hpp"

/**
 * Pointwise certification of the locally conformally Kahler structure on
 * diagonal Hopf manifolds (C^n \ 0)/<A>, A = diag(alpha_i) contracting.
 *
 * The Kahler potential on the cover is phi(z) = sum_i |z_i|^{beta_i} with
 * beta_i = log C / log(1/|alpha_i|), so that phi(Az) = phi(z)/C.  All
 * first and second derivatives of phi are evaluated in closed form; finite
 * differences appear only as the independent cross-check in the structure
 * and potential identities.
 *
 * Sign conventions, fixed once and used everywhere:
 *   - complex structure z_j = x_{2j} + i x_{2j+1}, so I e_{2j} = e_{2j+1};
 *   - on covectors (I eta)(X) = -eta(IX);
 *   - d^c f = I(df), and on the closed 1-form theta, d^c theta = -d(I theta).
 * Under these conventions the form omega = -d^c theta + theta ^ I theta
 * (theta = d log phi) is positive, and satisfies d omega = omega ^ (-theta):
 * the Lee form of the assembled omega is -d log phi.  (The two-sided sign
 * check lives in the test suite; picking the opposite I convention flips
 * positivity, which is the anchoring requirement.)
 */
namespace mnlck::hopf {

using Complex = std::complex<double>;

/** Diagonal Hopf manifold data: contraction eigenvalues and the character. */
struct HopfData {
  /** Eigenvalues of the contraction, 0 < |alpha_i| < 1. */
  std::vector<Complex> alpha;
  /** Character constant C > 1; the deck generator scales phi by 1/C. */
  double C = 0.0;
  /** Derived exponents beta_i = log C / log(1/|alpha_i|). */
  std::vector<double> beta;

  /** @returns Complex dimension n. */
  int n() const { return static_cast<int>(alpha.size()); }
  /** @returns Real dimension 2n. */
  int real_dim() const { return 2 * n(); }

  /**
   * Validate and derive the exponents.
   *
   * @param alpha Contraction eigenvalues, each with 0 < |alpha_i| < 1.
   * @param C     Character constant, C > 1.
   * @returns HopfData with beta_i = log C / log(1/|alpha_i|).
   * @throws std::invalid_argument If empty, |alpha_i| outside (0,1), C <= 1,
   *         or the defining relation |alpha_i|^{beta_i} C = 1 fails to hold
   *         within 1e-14 (it cannot, unless inputs are degenerate).
   */
  static HopfData make(std::vector<Complex> alpha, double C) {
    if (alpha.empty()) throw std::invalid_argument("need at least one eigenvalue");
    if (!(C > 1.0)) throw std::invalid_argument("character constant must exceed 1");
    HopfData data;
    data.C = C;
    data.beta.reserve(alpha.size());
    for (const Complex& a : alpha) {
      const double modulus = std::abs(a);
      if (!(modulus > 0.0) || !(modulus < 1.0)) {
        throw std::invalid_argument("eigenvalues must satisfy 0 < |alpha| < 1");
      }
      const double exponent = std::log(C) / std::log(1.0 / modulus);
      if (std::abs(std::pow(modulus, exponent) * C - 1.0) > 1e-14) {
        throw std::invalid_argument("exponent relation |alpha|^beta C = 1 violated");
      }
      data.beta.push_back(exponent);
    }
    data.alpha = std::move(alpha);
    return data;
  }

  /**
   * Build the data from prescribed exponents instead of eigenvalues.
   *
   * @param beta   Exponents beta_i > 0.
   * @param C      Character constant, C > 1.
   * @param phases Optional arguments of alpha_i (radians); defaults to 0.
   * @returns HopfData with |alpha_i| = C^{-1/beta_i}.
   * @throws std::invalid_argument On non-positive exponents or size mismatch.
   */
  static HopfData from_exponents(const std::vector<double>& beta, double C,
                                 const std::vector<double>& phases = {}) {
    if (!phases.empty() && phases.size() != beta.size()) {
      throw std::invalid_argument("one phase per exponent, or none");
    }
    std::vector<Complex> alpha;
    alpha.reserve(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) {
      if (!(beta[i] > 0.0)) throw std::invalid_argument("exponents must be positive");
      const double modulus = std::exp(-std::log(C) / beta[i]);
      const double phase = phases.empty() ? 0.0 : phases[i];
      alpha.push_back(std::polar(modulus, phase));
    }
    return make(std::move(alpha), C);
  }
};

/** @returns The real coordinates (Re z_1, Im z_1, ...) of a complex point. */
inline Eigen::VectorXd real_point(const std::vector<Complex>& z) {
  Eigen::VectorXd x(2 * static_cast<int>(z.size()));
  for (std::size_t j = 0; j < z.size(); ++j) {
    x(2 * static_cast<int>(j)) = z[j].real();
    x(2 * static_cast<int>(j) + 1) = z[j].imag();
  }
  return x;
}

/** @returns The complex point with coordinates z_j = x_{2j} + i x_{2j+1}. */
inline std::vector<Complex> complex_point(const Eigen::VectorXd& x) {
  if (x.size() % 2 != 0) throw std::invalid_argument("odd real dimension");
  std::vector<Complex> z(static_cast<std::size_t>(x.size() / 2));
  for (std::size_t j = 0; j < z.size(); ++j) {
    z[j] = Complex(x(2 * static_cast<int>(j)), x(2 * static_cast<int>(j) + 1));
  }
  return z;
}

/** @returns The image A z = (alpha_1 z_1, ..., alpha_n z_n). */
inline std::vector<Complex> contraction_image(const HopfData& data,
                                              const std::vector<Complex>& z) {
  if (static_cast<int>(z.size()) != data.n()) {
    throw std::invalid_argument("point dimension mismatch");
  }
  std::vector<Complex> image(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) image[i] = data.alpha[i] * z[i];
  return image;
}

/** @returns The matrix of the complex structure on R^{2n}: I e_{2j} = e_{2j+1}. */
inline Eigen::MatrixXd complex_structure(int n) {
  Eigen::MatrixXd j_matrix = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    j_matrix(2 * j + 1, 2 * j) = 1.0;
    j_matrix(2 * j, 2 * j + 1) = -1.0;
  }
  return j_matrix;
}

/**
 * I acting on covectors by (I eta)(X) = -eta(IX).
 *
 * @param eta Covector of even dimension.
 * @returns (-eta_1, eta_0, -eta_3, eta_2, ...).
 */
inline Eigen::VectorXd i_covector(const Eigen::VectorXd& eta) {
  if (eta.size() % 2 != 0) throw std::invalid_argument("odd real dimension");
  Eigen::VectorXd out(eta.size());
  for (int j = 0; 2 * j < eta.size(); ++j) {
    out(2 * j) = -eta(2 * j + 1);
    out(2 * j + 1) = eta(2 * j);
  }
  return out;
}

namespace detail {

inline void check_point(const HopfData& data, const Eigen::VectorXd& x) {
  if (static_cast<int>(x.size()) != data.real_dim()) {
    throw std::invalid_argument("point dimension mismatch");
  }
  if (x.isZero(0.0)) throw std::invalid_argument("the potential is defined on C^n \\ 0");
}

/** Squared moduli u_j = |z_j|^2 from real coordinates. */
inline Eigen::VectorXd squared_moduli(const Eigen::VectorXd& x) {
  Eigen::VectorXd u(x.size() / 2);
  for (int j = 0; 2 * j < x.size(); ++j) {
    u(j) = x(2 * j) * x(2 * j) + x(2 * j + 1) * x(2 * j + 1);
  }
  return u;
}

}  // namespace detail

/**
 * The automorphic Kahler potential phi(z) = sum_i |z_i|^{beta_i}.
 *
 * @param data Hopf manifold data.
 * @param x    Point in real coordinates, x != 0.
 * @returns phi(x) > 0.
 * @throws std::invalid_argument At the excluded origin or on dimension mismatch.
 */
inline double potential(const HopfData& data, const Eigen::VectorXd& x) {
  detail::check_point(data, x);
  const Eigen::VectorXd u = detail::squared_moduli(x);
  double value = 0.0;
  for (int j = 0; j < data.n(); ++j) value += std::pow(u(j), data.beta[j] / 2.0);
  return value;
}

/** Convenience overload taking a complex point. */
inline double potential(const HopfData& data, const std::vector<Complex>& z) {
  return potential(data, real_point(z));
}

/**
 * Analytic gradient of the potential.  Away from the coordinate
 * hyperplanes this is beta_j x_a u_j^{beta_j/2-1} on block j; on a
 * hyperplane it extends continuously by 0 whenever beta_j >= 1.
 *
 * @throws std::domain_error On a hyperplane z_j = 0 with beta_j < 2, where
 *         the potential is not C^2 (first derivatives already blow up for
 *         beta_j < 1).
 */
inline Eigen::VectorXd potential_gradient(const HopfData& data, const Eigen::VectorXd& x) {
  detail::check_point(data, x);
  const Eigen::VectorXd u = detail::squared_moduli(x);
  Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
  for (int j = 0; j < data.n(); ++j) {
    const double b = data.beta[j];
    if (u(j) == 0.0) {
      if (b < 2.0) {
        throw std::domain_error("potential is singular on a coordinate hyperplane for beta < 2");
      }
      continue;  // gradient extends by zero
    }
    const double t1 = b * std::pow(u(j), b / 2.0 - 1.0);
    g(2 * j) = x(2 * j) * t1;
    g(2 * j + 1) = x(2 * j + 1) * t1;
  }
  return g;
}

/** Analytic Hessian of the potential (block diagonal over coordinates). */
inline Eigen::MatrixXd potential_hessian(const HopfData& data, const Eigen::VectorXd& x) {
  detail::check_point(data, x);
  const Eigen::VectorXd u = detail::squared_moduli(x);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(x.size(), x.size());
  for (int j = 0; j < data.n(); ++j) {
    const double b = data.beta[j];
    if (u(j) == 0.0) {
      if (b < 2.0) {
        throw std::domain_error("potential is singular on a coordinate hyperplane for beta < 2");
      }
      if (b == 2.0) {  // |z_j|^2 contributes the flat metric block
        h(2 * j, 2 * j) = 2.0;
        h(2 * j + 1, 2 * j + 1) = 2.0;
      }
      continue;  // beta > 2: second derivatives vanish on the hyperplane
    }
    const double t1 = b * std::pow(u(j), b / 2.0 - 1.0);
    const double t2 = b * (b - 2.0) * std::pow(u(j), b / 2.0 - 2.0);
    for (int a = 2 * j; a <= 2 * j + 1; ++a) {
      for (int c = 2 * j; c <= 2 * j + 1; ++c) {
        h(a, c) = (a == c ? t1 : 0.0) + x(a) * x(c) * t2;
      }
    }
  }
  return h;
}

/**
 * The Lee form theta = d log phi at a point, as a real covector.
 *
 * @throws std::invalid_argument / std::domain_error As potential_gradient.
 */
inline Eigen::VectorXd lee_form(const HopfData& data, const Eigen::VectorXd& x) {
  return potential_gradient(data, x) / potential(data, x);
}

/**
 * The holomorphic Lee field -sum_i z_i log|alpha_i| d/dz_i evaluated at z.
 *
 * @param data Hopf manifold data.
 * @param z    Complex point.
 * @returns Component vector (-log|alpha_i| z_i)_i.
 */
inline std::vector<Complex> lee_field(const HopfData& data, const std::vector<Complex>& z) {
  if (static_cast<int>(z.size()) != data.n()) {
    throw std::invalid_argument("point dimension mismatch");
  }
  std::vector<Complex> field(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    field[i] = -std::log(std::abs(data.alpha[i])) * z[i];
  }
  return field;
}

/** Everything assembled at one point, with self-diagnostics. */
struct PointFrame {
  Eigen::VectorXd x;        ///< point in real coordinates
  double phi = 0.0;         ///< potential value
  Eigen::VectorXd theta;    ///< Lee form d log phi
  Eigen::VectorXd i_theta;  ///< I theta
  Eigen::MatrixXd omega;    ///< -d^c theta + theta ^ I theta, antisymmetric
  /** max |omega + omega^T| (exact 0 by construction, kept for reporting). */
  double antisymmetry_residual = 0.0;
  /** max |omega(I., I.) - omega|, the I-invariance defect. */
  double i_invariance_residual = 0.0;
  /** max |omega - dd^c phi / phi|: two independent analytic assemblies. */
  double conformal_residual = 0.0;
};

/**
 * Assemble the candidate LCK form omega = -d^c theta + theta ^ I theta
 * from analytic derivatives, along with its diagnostics.
 *
 * Since theta is closed, -d^c theta = d(I theta), whose matrix is
 * assembled from the Hessian of log phi; the conformal cross-check
 * compares against dd^c phi / phi computed from the Hessian of phi.
 *
 * @param data Hopf manifold data.
 * @param x    Point in real coordinates, off the singular hyperplanes.
 * @returns PointFrame at x.
 * @throws std::domain_error On a coordinate hyperplane with beta < 2.
 */
inline PointFrame lck_form(const HopfData& data, const Eigen::VectorXd& x) {
  PointFrame frame;
  frame.x = x;
  frame.phi = potential(data, x);
  const Eigen::VectorXd g = potential_gradient(data, x);
  const Eigen::MatrixXd h = potential_hessian(data, x);
  const Eigen::MatrixXd j_matrix = complex_structure(data.n());

  frame.theta = g / frame.phi;
  frame.i_theta = i_covector(frame.theta);

  // d(I theta) from the Hessian of log phi: del_a (I theta)_b = -(Hlog J)_ab
  const Eigen::MatrixXd hlog =
      h / frame.phi - (g / frame.phi) * (g / frame.phi).transpose();
  const Eigen::MatrixXd m = -hlog * j_matrix;
  const Eigen::MatrixXd d_i_theta = m - m.transpose();
  frame.omega = d_i_theta + geometry::wedge(frame.theta, frame.i_theta);

  // diagnostics
  frame.antisymmetry_residual =
      (frame.omega + frame.omega.transpose()).cwiseAbs().maxCoeff();
  frame.i_invariance_residual =
      (j_matrix.transpose() * frame.omega * j_matrix - frame.omega)
          .cwiseAbs()
          .maxCoeff();
  const Eigen::MatrixXd m2 = -h * j_matrix;
  const Eigen::MatrixXd dd_c_phi = m2 - m2.transpose();
  frame.conformal_residual =
      (frame.omega - dd_c_phi / frame.phi).cwiseAbs().maxCoeff();
  return frame;
}

/**
 * The metric of a frame: g(X, Y) = omega(X, IY), as a matrix.
 *
 * @param frame Assembled point frame.
 * @returns Matrix G = omega * J (symmetric when omega is I-invariant).
 */
inline Eigen::MatrixXd lck_metric(const PointFrame& frame) {
  const int n = static_cast<int>(frame.x.size()) / 2;
  return frame.omega * complex_structure(n);
}

/** @returns Smallest eigenvalue of the symmetrised metric of the frame. */
inline double min_metric_eigenvalue(const PointFrame& frame) {
  const Eigen::MatrixXd g = lck_metric(frame);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver((g + g.transpose()) / 2.0);
  return solver.eigenvalues().minCoeff();
}

/**
 * Relative automorphy defect |phi(Az) - phi(z)/C| / phi(z).
 *
 * @param data Hopf manifold data.
 * @param z    Complex point, z != 0.
 * @returns Relative residual (exactly 0 in exact arithmetic).
 */
inline double automorphy_residual(const HopfData& data, const std::vector<Complex>& z) {
  const double value = potential(data, z);
  const double image = potential(data, contraction_image(data, z));
  return std::abs(image - value / data.C) / value;
}

/**
 * Max-norm residual of the structure equation at one point:
 * the assembled omega satisfies d omega = omega ^ theta_omega with Lee form
 * theta_omega = -d log phi, so the residual is |d omega + (d log phi) ^ omega|
 * over all tangent triples, with d omega by central differences of the
 * analytic omega field.  Converges to 0 at O(h^2); identically 0 when n = 1
 * (no 3-forms on a surface).
 *
 * @param data Hopf manifold data.
 * @param x    Point in real coordinates.
 * @param h    Central-difference step, h > 0.
 * @returns Max-norm of the residual 3-form.
 */
inline double structure_equation_residual(const HopfData& data, const Eigen::VectorXd& x,
                                          double h) {
  const auto omega_field = [&data](const Eigen::VectorXd& y) {
    return lck_form(data, y).omega;
  };
  const std::vector<Eigen::MatrixXd> partials = geometry::fd_partials(omega_field, x, h);
  const PointFrame frame = lck_form(data, x);
  const int m = data.real_dim();
  double worst = 0.0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        const double d_omega = geometry::d_two_form_component(partials, a, b, c);
        const double twist = geometry::wedge_component(frame.theta, frame.omega, a, b, c);
        worst = std::max(worst, std::abs(d_omega + twist));
      }
    }
  }
  return worst;
}

/**
 * Residual of the twisted potential expansion at one point: the 2-form
 * d_theta(d^c_theta f) computed operationally (analytic 1-form
 * d^c_theta f = I df - f I theta, outer exterior derivative by central
 * differences, then -theta ^ .) is compared against the analytic
 * expansion f(theta ^ I theta + d^c theta) - theta ^ d^c f + I theta ^ df
 * + dd^c f, with theta the Lee form of the Hopf data.
 *
 * @param data Hopf manifold data supplying theta.
 * @param test Polynomial test potential on R^{2n}.
 * @param x    Evaluation point.
 * @param h    Central-difference step for the operational route.
 * @returns Max-norm of the difference; O(h^2) in the step.
 */
inline double potential_identity_residual(const HopfData& data,
                                          const geometry::Polynomial& test,
                                          const Eigen::VectorXd& x, double h) {
  if (test.variables() != data.real_dim()) {
    throw std::invalid_argument("test potential must live on R^{2n}");
  }
  const auto eta = [&](const Eigen::VectorXd& y) {  // d^c_theta f at y
    return (i_covector(test.gradient(y)) - test(y) * i_covector(lee_form(data, y)))
        .eval();
  };
  const Eigen::MatrixXd d_eta = geometry::fd_exterior_derivative(eta, x, h);
  const PointFrame frame = lck_form(data, x);
  const Eigen::MatrixXd lhs = d_eta - geometry::wedge(frame.theta, eta(x));

  const Eigen::MatrixXd j_matrix = complex_structure(data.n());
  const Eigen::VectorXd df = test.gradient(x);
  const Eigen::MatrixXd m3 = -test.hessian(x) * j_matrix;
  const Eigen::MatrixXd dd_c_f = m3 - m3.transpose();
  // d^c theta = -d(I theta) = theta ^ I theta - omega
  const Eigen::MatrixXd d_c_theta =
      geometry::wedge(frame.theta, frame.i_theta) - frame.omega;
  const Eigen::MatrixXd rhs =
      test(x) * (geometry::wedge(frame.theta, frame.i_theta) + d_c_theta) -
      geometry::wedge(frame.theta, i_covector(df)) +
      geometry::wedge(frame.i_theta, df) + dd_c_f;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

/**
 * Untwisted reduction of the same identity (theta = 0): the operational
 * route computes d(d^c f) by an outer central difference of the analytic
 * 1-form I df, compared against the analytic dd^c f.  Exact up to
 * roundoff for polynomial degree <= 3 (central differences are exact on
 * quadratic integrands).
 *
 * @param test Polynomial test potential on an even-dimensional space.
 * @param x    Evaluation point.
 * @param h    Central-difference step.
 * @returns Max-norm of the difference.
 */
inline double potential_identity_residual(const geometry::Polynomial& test,
                                          const Eigen::VectorXd& x, double h) {
  if (test.variables() % 2 != 0) {
    throw std::invalid_argument("test potential must live on an even-dimensional space");
  }
  const auto eta = [&](const Eigen::VectorXd& y) {
    return i_covector(test.gradient(y)).eval();
  };
  const Eigen::MatrixXd lhs = geometry::fd_exterior_derivative(eta, x, h);
  const Eigen::MatrixXd j_matrix = complex_structure(test.variables() / 2);
  const Eigen::MatrixXd m3 = -test.hessian(x) * j_matrix;
  const Eigen::MatrixXd rhs = m3 - m3.transpose();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

/**
 * A complex point with every |z_j| log-uniform in [low, high] and uniform
 * phase.  Keeps all coordinates away from the hyperplanes, which is what
 * the finite-difference convergence studies need (truncation error grows
 * like |z_j|^{-5} near a hyperplane).
 */
inline std::vector<Complex> balanced_sample(int n, std::mt19937_64& gen, double low,
                                            double high) {
  std::uniform_real_distribution<double> radial(std::log(low), std::log(high));
  std::uniform_real_distribution<double> angular(0.0, 2.0 * 3.14159265358979323846);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (auto& coordinate : z) {
    coordinate = std::polar(std::exp(radial(gen)), angular(gen));
  }
  return z;
}

/**
 * A complex point with log-uniform total radius in [low, high] and uniform
 * direction on the sphere; individual coordinates may be near zero.
 */
inline std::vector<Complex> annulus_sample(int n, std::mt19937_64& gen, double low,
                                           double high) {
  std::uniform_real_distribution<double> radial(std::log(low), std::log(high));
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd direction(2 * n);
  do {
    for (int a = 0; a < 2 * n; ++a) direction(a) = gauss(gen);
  } while (direction.norm() == 0.0);
  direction.normalize();
  const double radius = std::exp(radial(gen));
  return complex_point((radius * direction).eval());
}

/** Result of a randomized positivity sweep. */
struct SweepResult {
  double min_eigenvalue = 0.0;     ///< smallest metric eigenvalue seen
  Eigen::VectorXd worst_point;     ///< where it was attained
  double max_i_invariance = 0.0;   ///< largest I-invariance defect seen
  double max_conformal = 0.0;      ///< largest conformal cross-check defect
  int points = 0;
  std::uint64_t seed = 0;
};

/**
 * Sweep the annulus low <= |z| <= high with seeded sample points and track
 * the minimum metric eigenvalue and the worst diagnostics.  Points are
 * drawn from per-index random streams, so serial and parallel runs agree.
 *
 * @param data   Hopf manifold data.
 * @param points Number of sample points (>= 1).
 * @param seed   Base seed recorded in the result.
 * @param low    Inner radius (default 0.1).
 * @param high   Outer radius (default 10).
 * @returns SweepResult over the sample.
 */
inline SweepResult positivity_sweep(const HopfData& data, int points, std::uint64_t seed,
                                    double low = 0.1, double high = 10.0) {
  if (points < 1) throw std::invalid_argument("need at least one sample point");
  std::vector<double> eigenvalues(static_cast<std::size_t>(points));
  std::vector<double> invariance(static_cast<std::size_t>(points));
  std::vector<double> conformal(static_cast<std::size_t>(points));
  std::vector<Eigen::VectorXd> where(static_cast<std::size_t>(points));
  parallel_chunks(points, [&](int index) {
    auto gen = stream_rng(seed, static_cast<std::uint64_t>(index));
    const Eigen::VectorXd x = real_point(annulus_sample(data.n(), gen, low, high));
    const PointFrame frame = lck_form(data, x);
    eigenvalues[static_cast<std::size_t>(index)] = min_metric_eigenvalue(frame);
    invariance[static_cast<std::size_t>(index)] = frame.i_invariance_residual;
    conformal[static_cast<std::size_t>(index)] = frame.conformal_residual;
    where[static_cast<std::size_t>(index)] = x;
  });
  SweepResult result;
  result.points = points;
  result.seed = seed;
  result.min_eigenvalue = eigenvalues[0];
  result.worst_point = where[0];
  for (int i = 0; i < points; ++i) {
    if (eigenvalues[static_cast<std::size_t>(i)] < result.min_eigenvalue) {
      result.min_eigenvalue = eigenvalues[static_cast<std::size_t>(i)];
      result.worst_point = where[static_cast<std::size_t>(i)];
    }
    result.max_i_invariance =
        std::max(result.max_i_invariance, invariance[static_cast<std::size_t>(i)]);
    result.max_conformal =
        std::max(result.max_conformal, conformal[static_cast<std::size_t>(i)]);
  }
  return result;
}

/** A named, shipped configuration for reports and acceptance runs. */
struct NamedConfiguration {
  std::string name;
  HopfData data;
};

/**
 * The shipped test configurations: all have beta_i >= 2 so the metric is
 * positive across the whole annulus, including the hyperplanes.
 */
inline std::vector<NamedConfiguration> standard_configurations() {
  const double e2 = std::exp(2.0);
  std::vector<NamedConfiguration> configs;
  configs.push_back({"n1-beta2", HopfData::from_exponents({2.0}, e2)});
  configs.push_back({"n1-beta3.2", HopfData::from_exponents({3.2}, 1.5, {0.7})});
  configs.push_back({"n2-beta2-3", HopfData::from_exponents({2.0, 3.0}, e2, {0.3, -1.1})});
  configs.push_back({"n2-beta2.5-4", HopfData::from_exponents({2.5, 4.0}, 3.0, {0.0, 2.2})});
  configs.push_back(
      {"n3-beta2-3-4", HopfData::from_exponents({2.0, 3.0, 4.0}, std::exp(2.0), {1.0, -0.5, 2.0})});
  return configs;
}

}  // namespace mnlck::hopf

#endif  // MNLCK_HOPF_HPP

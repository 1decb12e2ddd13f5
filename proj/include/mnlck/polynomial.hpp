#ifndef MNLCK_POLYNOMIAL_HPP
#define MNLCK_POLYNOMIAL_HPP

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

/**
 * Dense multivariate real polynomials with analytic gradient and Hessian.
 * These serve as smooth test potentials: low degree keeps central
 * differences of their derivatives exact up to roundoff.
 */
namespace mnlck::geometry {

class Polynomial {
 public:
  /**
   * @param variables Number of variables, at least 1.
   * @throws std::invalid_argument If variables < 1.
   */
  explicit Polynomial(int variables) : variables_(variables) {
    if (variables < 1) throw std::invalid_argument("polynomial needs >= 1 variable");
  }

  /**
   * Append a monomial coefficient * prod_a x_a^{powers[a]}.
   *
   * @param coefficient Real coefficient (zero terms are skipped).
   * @param powers      One exponent per variable, all >= 0.
   * @throws std::invalid_argument On size mismatch or negative exponent.
   */
  void add_term(double coefficient, std::vector<int> powers) {
    if (static_cast<int>(powers.size()) != variables_) {
      throw std::invalid_argument("exponent vector size must match variable count");
    }
    for (int p : powers) {
      if (p < 0) throw std::invalid_argument("exponents must be non-negative");
    }
    if (coefficient != 0.0) terms_.emplace_back(coefficient, std::move(powers));
  }

  /** @returns Number of variables. */
  int variables() const { return variables_; }

  /**
   * Evaluate at a point.
   *
   * @param x Point with one entry per variable.
   * @returns Polynomial value.
   * @throws std::invalid_argument On dimension mismatch.
   */
  double operator()(const Eigen::VectorXd& x) const {
    check_point(x);
    double value = 0.0;
    for (const auto& [coefficient, powers] : terms_) {
      value += coefficient * monomial(x, powers);
    }
    return value;
  }

  /** Analytic gradient at a point. */
  Eigen::VectorXd gradient(const Eigen::VectorXd& x) const {
    check_point(x);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(variables_);
    for (const auto& [coefficient, powers] : terms_) {
      for (int a = 0; a < variables_; ++a) {
        if (powers[a] == 0) continue;
        g(a) += coefficient * powers[a] * monomial_lowered(x, powers, a, -1);
      }
    }
    return g;
  }

  /** Analytic Hessian at a point. */
  Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const {
    check_point(x);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(variables_, variables_);
    for (const auto& [coefficient, powers] : terms_) {
      for (int a = 0; a < variables_; ++a) {
        if (powers[a] == 0) continue;
        for (int c = 0; c < variables_; ++c) {
          const int pc = c == a ? powers[a] - 1 : powers[c];
          if (pc == 0) continue;
          const double scale = coefficient * powers[a] * pc;
          h(a, c) += scale * monomial_lowered_two(x, powers, a, c);
        }
      }
    }
    return h;
  }

  /**
   * Random polynomial of bounded total degree with uniform coefficients.
   *
   * @param variables Number of variables.
   * @param degree    Maximum total degree (>= 0).
   * @param terms     Number of random monomials to draw.
   * @param gen       Seeded random generator.
   * @param scale     Coefficients are uniform in [-scale, scale].
   * @returns Polynomial with the drawn terms (duplicates simply add).
   */
  static Polynomial random(int variables, int degree, int terms, std::mt19937_64& gen,
                           double scale = 1.0) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    Polynomial p(variables);
    std::uniform_real_distribution<double> coef(-scale, scale);
    std::uniform_int_distribution<int> total(0, degree);
    std::uniform_int_distribution<int> var(0, variables - 1);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> powers(variables, 0);
      const int d = total(gen);
      for (int i = 0; i < d; ++i) powers[var(gen)] += 1;
      p.add_term(coef(gen), powers);
    }
    return p;
  }

 private:
  void check_point(const Eigen::VectorXd& x) const {
    if (static_cast<int>(x.size()) != variables_) {
      throw std::invalid_argument("point dimension must match variable count");
    }
  }

  static double monomial(const Eigen::VectorXd& x, const std::vector<int>& powers) {
    double value = 1.0;
    for (std::size_t a = 0; a < powers.size(); ++a) {
      value *= std::pow(x(static_cast<int>(a)), powers[a]);
    }
    return value;
  }

  // monomial with the exponent of variable `lowered` shifted by `delta`
  static double monomial_lowered(const Eigen::VectorXd& x, const std::vector<int>& powers,
                                 int lowered, int delta) {
    double value = 1.0;
    for (std::size_t a = 0; a < powers.size(); ++a) {
      const int p = static_cast<int>(a) == lowered ? powers[a] + delta : powers[a];
      value *= std::pow(x(static_cast<int>(a)), p);
    }
    return value;
  }

  // monomial with exponents lowered once at `a` and once at `c` (possibly equal)
  static double monomial_lowered_two(const Eigen::VectorXd& x,
                                     const std::vector<int>& powers, int a, int c) {
    double value = 1.0;
    for (std::size_t v = 0; v < powers.size(); ++v) {
      int p = powers[v];
      if (static_cast<int>(v) == a) --p;
      if (static_cast<int>(v) == c) --p;
      value *= std::pow(x(static_cast<int>(v)), p);
    }
    return value;
  }

  int variables_;
  std::vector<std::pair<double, std::vector<int>>> terms_;
};

}  // namespace mnlck::geometry

#endif  // MNLCK_POLYNOMIAL_HPP

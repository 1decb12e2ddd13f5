#ifndef MNLCK_EXTERIOR_HPP
#define MNLCK_EXTERIOR_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

/**
 * Small exterior-calculus toolkit on R^m in coordinates: covectors are
 * Eigen vectors, 2-forms are antisymmetric matrices W with
 * W(a,b) = omega(e_a, e_b), and 3-forms are only ever consumed
 * component-wise, so they are not materialised.  Finite-difference
 * exterior derivatives use central differences (O(h^2) truncation).
 */
namespace mnlck::geometry {

/**
 * Wedge of two 1-forms as an antisymmetric coefficient matrix.
 *
 * @param a First covector.
 * @param b Second covector.
 * @returns Matrix of (a ^ b)(e_i, e_j) = a_i b_j - a_j b_i.
 */
inline Eigen::MatrixXd wedge(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("wedge of covectors of different dimension");
  }
  return a * b.transpose() - b * a.transpose();
}

/**
 * One component of the wedge of a 1-form with a 2-form.
 *
 * @param theta Covector.
 * @param w     Antisymmetric 2-form matrix.
 * @param a     First index of the tangent triple.
 * @param b     Second index.
 * @param c     Third index.
 * @returns (theta ^ w)(e_a, e_b, e_c).
 */
inline double wedge_component(const Eigen::VectorXd& theta, const Eigen::MatrixXd& w,
                              int a, int b, int c) {
  return theta(a) * w(b, c) - theta(b) * w(a, c) + theta(c) * w(a, b);
}

/**
 * Finite-difference exterior derivative of a covector field.
 *
 * @param field Callable mapping a point (Eigen::VectorXd) to a covector.
 * @param x     Evaluation point.
 * @param h     Central-difference step, h > 0.
 * @returns Antisymmetric matrix (d eta)(e_a, e_b) = del_a eta_b - del_b eta_a.
 * @throws std::invalid_argument If the step is not positive.
 */
template <typename CovectorField>
Eigen::MatrixXd fd_exterior_derivative(CovectorField&& field, const Eigen::VectorXd& x,
                                       double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const int m = static_cast<int>(x.size());
  Eigen::MatrixXd partials(m, m);  // row a holds del_a eta
  Eigen::VectorXd shifted = x;
  for (int a = 0; a < m; ++a) {
    shifted(a) = x(a) + h;
    const Eigen::VectorXd plus = field(shifted);
    shifted(a) = x(a) - h;
    const Eigen::VectorXd minus = field(shifted);
    shifted(a) = x(a);
    partials.row(a) = ((plus - minus) / (2.0 * h)).transpose();
  }
  return partials - partials.transpose();
}

/**
 * All coordinate partial derivatives of a matrix-valued field by central
 * differences, as the list [del_0 W, del_1 W, ...].
 *
 * @param field Callable mapping a point to an Eigen::MatrixXd.
 * @param x     Evaluation point.
 * @param h     Central-difference step, h > 0.
 * @returns One matrix per coordinate direction.
 * @throws std::invalid_argument If the step is not positive.
 */
template <typename MatrixField>
std::vector<Eigen::MatrixXd> fd_partials(MatrixField&& field, const Eigen::VectorXd& x,
                                         double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const int m = static_cast<int>(x.size());
  std::vector<Eigen::MatrixXd> partials;
  partials.reserve(m);
  Eigen::VectorXd shifted = x;
  for (int a = 0; a < m; ++a) {
    shifted(a) = x(a) + h;
    const Eigen::MatrixXd plus = field(shifted);
    shifted(a) = x(a) - h;
    const Eigen::MatrixXd minus = field(shifted);
    shifted(a) = x(a);
    partials.push_back((plus - minus) / (2.0 * h));
  }
  return partials;
}

/**
 * Component of the exterior derivative of a 2-form from precomputed
 * coordinate partials.
 *
 * @param partials Output of fd_partials (or analytic partials).
 * @param a        First index.
 * @param b        Second index.
 * @param c        Third index.
 * @returns (dW)(e_a, e_b, e_c) = del_a W_bc - del_b W_ac + del_c W_ab.
 */
inline double d_two_form_component(const std::vector<Eigen::MatrixXd>& partials, int a,
                                   int b, int c) {
  return partials[a](b, c) - partials[b](a, c) + partials[c](a, b);
}

}  // namespace mnlck::geometry

#endif  // MNLCK_EXTERIOR_HPP

/**
 * Small dense linear algebra layer shared by both scalar backends.
 *
 * The exact backend stores matrices over boost rationals and computes ranks
 * by fraction-free (Bareiss) elimination after clearing denominators, so the
 * only divisions performed are exact integer divisions.  The float backend
 * hands matrices to Eigen and thresholds singular values with a *relative*
 * cutoff; a rank decision whose singular spectrum does not show a clear gap
 * across the cutoff is flagged as low-confidence rather than silently
 * trusted.
 */
#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <complex>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mnlck/rational.hpp"

namespace mnlck {

/** Relative singular-value cutoff for numeric rank decisions. */
inline constexpr double kRankEps = 1e-8;

/** Minimum gap ratio across the cutoff for a confident numeric rank. */
inline constexpr double kConfidenceGap = 1e3;

/**
 * Row-major dense matrix over an arbitrary scalar.
 *
 * Deliberately minimal: the library only needs construction, element access,
 * multiplication (for cocycle/coboundary identities) and transposition.
 * Heavy numeric work goes through Eigen; exact work through rank_exact().
 */
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;

  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), T(0)) {
    if (rows < 0 || cols < 0) {
      throw std::invalid_argument("matrix dimensions must be non-negative");
    }
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  DenseMatrix operator*(const DenseMatrix& other) const {
    if (cols_ != other.rows_) {
      throw std::invalid_argument("incompatible shapes in matrix product");
    }
    DenseMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < other.cols_; ++j) {
          out(i, j) += a * other(k, j);
        }
      }
    }
    return out;
  }

  DenseMatrix transposed() const {
    DenseMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (!(v == T(0))) return false;
    return true;
  }

  bool operator==(const DenseMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

/** Convert a dense double matrix to Eigen for numeric factorizations. */
inline Eigen::MatrixXd to_eigen(const DenseMatrix<double>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

/**
 * Exact rank by fraction-free elimination.
 *
 * Rows are first scaled by the least common multiple of their denominators
 * (rank preserving), then eliminated Bareiss-style: every division is an
 * exact integer division by the previous pivot, so no rounding can occur and
 * intermediate entries stay polynomial-sized minors instead of exploding.
 *
 * @param mat Matrix over exact rationals (any shape, may be empty).
 * @returns Rank of the matrix.
 */
inline int rank_exact(const DenseMatrix<Rational>& mat) {
  const int nr = mat.rows(), nc = mat.cols();
  if (nr == 0 || nc == 0) return 0;

  DenseMatrix<Integer> m(nr, nc);
  for (int i = 0; i < nr; ++i) {
    Integer scale = 1;
    for (int j = 0; j < nc; ++j) {
      scale = boost::multiprecision::lcm(scale,
                                         boost::multiprecision::denominator(mat(i, j)));
    }
    for (int j = 0; j < nc; ++j) {
      const Rational v = mat(i, j) * scale;
      m(i, j) = boost::multiprecision::numerator(v);
    }
  }

  int rank = 0;
  int row = 0;
  Integer prev = 1;
  for (int col = 0; col < nc && row < nr; ++col) {
    int pivot = -1;
    for (int i = row; i < nr; ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = 0; j < nc; ++j) std::swap(m(pivot, j), m(row, j));
    }
    for (int i = row + 1; i < nr; ++i) {
      for (int j = col + 1; j < nc; ++j) {
        m(i, j) = (m(row, col) * m(i, j) - m(i, col) * m(row, j)) / prev;
      }
      m(i, col) = 0;
    }
    prev = m(row, col);
    ++row;
    ++rank;
  }
  return rank;
}

/** Outcome of a numeric rank decision, with its reliability evidence. */
struct NumericRank {
  int rank = 0;
  /** Largest singular value (0 for an identically zero matrix). */
  double max_singular = 0.0;
  /** sigma_rank / sigma_rank+1 across the cutoff; +inf when one side is empty. */
  double gap_ratio = std::numeric_limits<double>::infinity();
  /** True when the singular spectrum straddles the cutoff without a clear gap. */
  bool low_confidence = false;
};

namespace detail {

template <typename Matrix>
NumericRank rank_svd_impl(const Matrix& a, double eps) {
  NumericRank out;
  if (a.rows() == 0 || a.cols() == 0) return out;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  out.max_singular = sv.size() > 0 ? sv(0) : 0.0;
  if (out.max_singular == 0.0) return out;
  const double cut = eps * out.max_singular;
  int r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  out.rank = r;
  if (r > 0 && r < sv.size() && sv(r) > 0.0) {
    out.gap_ratio = sv(r - 1) / sv(r);
  }
  out.low_confidence = out.gap_ratio < kConfidenceGap;
  return out;
}

}  // namespace detail

/** Numeric rank of a real matrix with relative cutoff `eps`. */
inline NumericRank rank_svd(const Eigen::MatrixXd& a, double eps = kRankEps) {
  return detail::rank_svd_impl(a, eps);
}

/** Numeric rank of a complex matrix with relative cutoff `eps`. */
inline NumericRank rank_svd(const Eigen::MatrixXcd& a, double eps = kRankEps) {
  return detail::rank_svd_impl(a, eps);
}

/**
 * Orthonormal basis of ker(a) as columns, via the right singular vectors
 * belonging to singular values at or below the relative cutoff.  A matrix
 * with no rows has full kernel.
 */
inline Eigen::MatrixXcd kernel_basis(const Eigen::MatrixXcd& a, double eps = kRankEps) {
  if (a.cols() == 0) return Eigen::MatrixXcd(0, 0);
  if (a.rows() == 0) return Eigen::MatrixXcd::Identity(a.cols(), a.cols());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double max_sv = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = eps * max_sv;
  int r = 0;
  if (max_sv > 0.0) {
    while (r < sv.size() && sv(r) > cut) ++r;
  }
  return svd.matrixV().rightCols(a.cols() - r);
}

/** dim(span(cols a) + span(cols b)); the blocks must share row count. */
inline int dim_column_span_union(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                 double eps = kRankEps) {
  if (a.cols() == 0) return rank_svd(b, eps).rank;
  if (b.cols() == 0) return rank_svd(a, eps).rank;
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("column spans live in different ambient spaces");
  }
  Eigen::MatrixXcd stacked(a.rows(), a.cols() + b.cols());
  stacked << a, b;
  return rank_svd(stacked, eps).rank;
}

}  // namespace mnlck

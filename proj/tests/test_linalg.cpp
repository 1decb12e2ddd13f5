#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mnlck/linalg.hpp"
#include "mnlck/rational.hpp"
#include "mnlck/rng.hpp"
#include "oracles.hpp"

using mnlck::DenseMatrix;
using mnlck::Rational;

namespace {

DenseMatrix<Rational> random_rational_matrix(int rows, int cols, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  DenseMatrix<Rational> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(num(gen), den(gen));
  return m;
}

}  // namespace

TEST_CASE("dense matrix basics", "[linalg]") {
  DenseMatrix<Rational> a(2, 3);
  a(0, 0) = 1;
  a(0, 2) = Rational(1, 2);
  a(1, 1) = -2;
  REQUIRE(a.rows() == 2);
  REQUIRE(a.cols() == 3);
  REQUIRE(a.transposed()(2, 0) == Rational(1, 2));
  REQUIRE_FALSE(a.is_zero());
  REQUIRE(DenseMatrix<Rational>(3, 4).is_zero());

  const auto id = DenseMatrix<Rational>::identity(3);
  REQUIRE(a * id == a);
  REQUIRE_THROWS_AS(id * a, std::invalid_argument);
}

TEST_CASE("exact rank agrees with plain elimination on random matrices", "[linalg]") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    auto gen = mnlck::stream_rng(20260814, trial);
    std::uniform_int_distribution<int> dims(1, 8);
    const int rows = dims(gen), cols = dims(gen);
    const auto m = random_rational_matrix(rows, cols, gen);
    CAPTURE(trial, rows, cols);
    REQUIRE(mnlck::rank_exact(m) == oracle::rank_gauss(m));
  }
}

TEST_CASE("exact rank detects engineered rank deficiency", "[linalg]") {
  // A (6x3) * B (3x7) has rank at most 3; generically exactly 3.
  auto gen = mnlck::stream_rng(7, 0);
  const auto a = random_rational_matrix(6, 3, gen);
  const auto b = random_rational_matrix(3, 7, gen);
  const auto product = a * b;
  const int r = mnlck::rank_exact(product);
  REQUIRE(r <= 3);
  REQUIRE(r == oracle::rank_gauss(product));

  DenseMatrix<Rational> empty(0, 5);
  REQUIRE(mnlck::rank_exact(empty) == 0);
}

TEST_CASE("numeric rank thresholds relative to the largest singular value", "[linalg]") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 0) = 10.0;
  d(1, 1) = 1e-3;
  d(2, 2) = 1e-12;  // 1e-13 relative: below the 1e-8 cutoff
  const auto r = mnlck::rank_svd(d);
  REQUIRE(r.rank == 2);
  REQUIRE_FALSE(r.low_confidence);
  REQUIRE(r.max_singular == Catch::Approx(10.0));

  const auto zero = mnlck::rank_svd(Eigen::MatrixXd(Eigen::MatrixXd::Zero(4, 2)));
  REQUIRE(zero.rank == 0);
  REQUIRE_FALSE(zero.low_confidence);
}

TEST_CASE("numeric rank flags a straddling singular spectrum", "[linalg]") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 2e-8;  // just above the relative cutoff ...
  d(2, 2) = 5e-9;  // ... just below: gap ratio 4, nowhere near confident
  const auto r = mnlck::rank_svd(d);
  REQUIRE(r.rank == 2);
  REQUIRE(r.low_confidence);
  REQUIRE(r.gap_ratio == Catch::Approx(4.0));

  // A clean spectrum on both sides of the cutoff is confident.
  d(1, 1) = 1e-2;
  d(2, 2) = 1e-14;
  const auto clean = mnlck::rank_svd(d);
  REQUIRE(clean.rank == 2);
  REQUIRE_FALSE(clean.low_confidence);
}

TEST_CASE("numeric and exact ranks agree on well-separated problems", "[linalg]") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    auto gen = mnlck::stream_rng(99, trial);
    const auto a = random_rational_matrix(5, 3, gen);
    const auto b = random_rational_matrix(3, 6, gen);
    const auto product = a * b;
    Eigen::MatrixXd num(product.rows(), product.cols());
    for (int i = 0; i < product.rows(); ++i)
      for (int j = 0; j < product.cols(); ++j) num(i, j) = mnlck::to_double(product(i, j));
    CAPTURE(trial);
    REQUIRE(mnlck::rank_svd(num).rank == mnlck::rank_exact(product));
  }
}

TEST_CASE("kernel bases annihilate and have complementary dimension", "[linalg]") {
  auto gen = mnlck::stream_rng(4242, 1);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd a(3, 5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) a(i, j) = {normal(gen), normal(gen)};
  const auto kernel = mnlck::kernel_basis(a);
  REQUIRE(kernel.cols() == 5 - mnlck::rank_svd(a).rank);
  REQUIRE((a * kernel).norm() < 1e-12 * a.norm());

  const auto full = mnlck::kernel_basis(Eigen::MatrixXcd(0, 4));
  REQUIRE(full.cols() == 4);
}

TEST_CASE("column span union counts overlap once", "[linalg]") {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(4, 2);
  b(1, 0) = 2.0;  // same line as a's second column
  b(2, 1) = 1.0;
  REQUIRE(mnlck::dim_column_span_union(a, b) == 3);
  REQUIRE(mnlck::dim_column_span_union(a, Eigen::MatrixXcd(4, 0)) == 2);
  REQUIRE_THROWS_AS(mnlck::dim_column_span_union(a, Eigen::MatrixXcd::Zero(3, 1)),
                    std::invalid_argument);
}

TEST_CASE("rational parsing round-trips and rejects garbage", "[rational]") {
  REQUIRE(mnlck::parse_rational("355/113") == Rational(355, 113));
  REQUIRE(mnlck::parse_rational("-7") == Rational(-7));
  REQUIRE(mnlck::parse_rational("6/4") == Rational(3, 2));
  REQUIRE(mnlck::to_string(Rational(3, 2)) == "3/2");
  REQUIRE(mnlck::to_string(Rational(-4, 2)) == "-2");
  REQUIRE(mnlck::to_double(Rational(1, 4)) == Catch::Approx(0.25));
  REQUIRE_THROWS_AS(mnlck::parse_rational("1/0"), std::invalid_argument);
  REQUIRE_THROWS_AS(mnlck::parse_rational("a/b"), std::invalid_argument);
  REQUIRE_THROWS_AS(mnlck::parse_rational("1/2/3"), std::invalid_argument);
  REQUIRE_THROWS_AS(mnlck::parse_rational(""), std::invalid_argument);
}

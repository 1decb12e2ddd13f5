/**
 * Twisted (Morse-Novikov) cochain complexes of a rank-one local system.
 *
 * Given transport weights t(e) satisfying the multiplicative cocycle
 * condition, the twisted coboundary of a degree-k cochain f evaluates on a
 * (k+1)-simplex sigma = (v0,...,v_k+1) as
 *
 *     (D f)(sigma) = t(v0,v1) * f(d0 sigma) + sum_i>=1 (-1)^i f(di sigma),
 *
 * i.e. the ordinary simplicial coboundary with the single face that drops
 * the minimal vertex transported back along the edge (v0,v1).  The cocycle
 * condition is precisely what makes D * D = 0, and with all weights equal to
 * one D is the ordinary coboundary.  Twisted Betti numbers are computed from
 * matrix ranks: exactly (fraction-free elimination) over rationals, by
 * thresholded SVD over doubles.
 */
#pragma once

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "mnlck/cochain.hpp"
#include "mnlck/linalg.hpp"
#include "mnlck/simplicial_complex.hpp"

namespace mnlck {

/**
 * A complex together with a flat system of transport weights and the
 * assembled twisted coboundary matrices d[k] : C^k -> C^k+1 (the entry for
 * k = dimension has zero rows).
 */
template <typename T>
struct TwistedComplex {
  SimplicialComplex complex;
  LeeCocycle<T> lee;
  std::vector<DenseMatrix<T>> d;
};

/**
 * Assemble the twisted coboundary matrices for a flat weight system.
 *
 * @param k_complex The underlying complex.
 * @param lee Multiplicative edge weights.
 * @param tol Relative flatness tolerance for float weights.
 * @returns The assembled twisted complex.
 * @throws std::invalid_argument If the weights violate the cocycle condition
 *         (exactly for exact scalars, beyond tol for floats) or are not
 *         aligned with the edge list.
 */
template <typename T>
TwistedComplex<T> assemble_twisted(const SimplicialComplex& k_complex, LeeCocycle<T> lee,
                                   double tol = 1e-10) {
  const auto violations = validate_cocycle(k_complex, lee, tol);
  if (!violations.empty()) {
    throw std::invalid_argument("transport weights are not a cocycle on " +
                                std::to_string(violations.size()) + " triangle(s)");
  }
  TwistedComplex<T> tc{k_complex, std::move(lee), {}};
  const int dim = k_complex.dimension();
  tc.d.reserve(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    const auto& targets = k_complex.simplices(k + 1);
    DenseMatrix<T> d(static_cast<int>(targets.size()), k_complex.count(k));
    for (int row = 0; row < static_cast<int>(targets.size()); ++row) {
      const Simplex& sigma = targets[row];
      for (int i = 0; i <= k + 1; ++i) {
        const int col = k_complex.index_of(face_of(sigma, i));
        if (i == 0) {
          d(row, col) += detail::edge_weight(k_complex, tc.lee, sigma[0], sigma[1]);
        } else {
          d(row, col) += (i % 2 == 0) ? T(1) : T(-1);
        }
      }
    }
    tc.d.push_back(std::move(d));
  }
  return tc;
}

/** Rank evidence for one twisted coboundary matrix. */
struct DegreeRank {
  int rank = 0;
  /** Always false for the exact backend. */
  bool low_confidence = false;
  double gap_ratio = std::numeric_limits<double>::infinity();
};

/** Twisted Betti numbers plus the rank evidence they were derived from. */
struct BettiResult {
  std::vector<long long> betti;
  /** Alternating sum of the betti entries; always equals chi(K). */
  long long euler = 0;
  std::vector<DegreeRank> ranks;
  /** True if any float rank decision lacked a clear singular-value gap. */
  bool low_confidence = false;
};

namespace detail {

inline DegreeRank rank_of(const DenseMatrix<Rational>& m) { return {rank_exact(m), false, {}}; }

inline DegreeRank rank_of(const DenseMatrix<double>& m) {
  const NumericRank r = rank_svd(to_eigen(m));
  return {r.rank, r.low_confidence, r.gap_ratio};
}

}  // namespace detail

/**
 * Twisted Betti numbers b^0..b^dim of an assembled twisted complex,
 * b^k = dim C^k - rank d_k - rank d_k-1.
 */
template <typename T>
BettiResult twisted_betti(const TwistedComplex<T>& tc) {
  BettiResult out;
  const int dim = tc.complex.dimension();
  out.ranks.reserve(dim + 1);
  for (const auto& d : tc.d) out.ranks.push_back(detail::rank_of(d));
  for (int k = 0; k <= dim; ++k) {
    const long long below = (k == 0) ? 0 : out.ranks[k - 1].rank;
    out.betti.push_back(tc.complex.count(k) - out.ranks[k].rank - below);
    out.euler += (k % 2 == 0 ? 1 : -1) * out.betti.back();
    out.low_confidence = out.low_confidence || out.ranks[k].low_confidence;
  }
  return out;
}

/** A gauge-transformed complex with the diagonal change of basis realizing it. */
template <typename T>
struct GaugeResult {
  TwistedComplex<T> transformed;
  /**
   * conjugators[k] is the diagonal matrix with entry g(min vertex of sigma)
   * per k-simplex sigma; the transformed coboundaries satisfy
   * conjugators[k+1] * transformed.d[k] = d[k] * conjugators[k] exactly.
   */
  std::vector<DenseMatrix<T>> conjugators;
};

/**
 * Apply the gauge transformation t'(u,v) = t(u,v) g(v) / g(u) induced by a
 * positive 0-cochain g, and return the diagonal conjugators that intertwine
 * the old and new coboundaries (so all twisted Betti numbers are preserved).
 *
 * @throws std::invalid_argument If g is misaligned or not strictly positive.
 */
template <typename T>
GaugeResult<T> gauge_transform(const TwistedComplex<T>& tc, const std::vector<T>& g) {
  const SimplicialComplex& kc = tc.complex;
  if (static_cast<int>(g.size()) != kc.vertex_count()) {
    throw std::invalid_argument("gauge cochain must have one value per vertex");
  }
  for (const T& v : g) {
    if (!(v > T(0))) throw std::invalid_argument("gauge values must be positive");
  }
  const auto& edges = kc.simplices(1);
  std::vector<T> weights(tc.lee.weights);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    weights[e] = weights[e] * g[edges[e][1]] / g[edges[e][0]];
  }
  GaugeResult<T> out{assemble_twisted(kc, LeeCocycle<T>{std::move(weights)}), {}};
  for (int k = 0; k <= kc.dimension(); ++k) {
    const auto& level = kc.simplices(k);
    DenseMatrix<T> s(static_cast<int>(level.size()), static_cast<int>(level.size()));
    for (int i = 0; i < static_cast<int>(level.size()); ++i) s(i, i) = g[level[i][0]];
    out.conjugators.push_back(std::move(s));
  }
  return out;
}

}  // namespace mnlck

/**
 * Cochains and multiplicative transport weights on a simplicial complex.
 *
 * A rank-one real-positive local system is described by one positive scalar
 * t(e) per edge, interpreted as parallel transport from the lower to the
 * higher endpoint in the canonical orientation.  The exact backend stores
 * the weights themselves; the float backend is usually fed an additive
 * degree-1 cochain theta and exponentiates, t = exp(theta).  Flatness of the
 * local system is the multiplicative cocycle condition on every triangle,
 *
 *     t(v0,v1) * t(v1,v2) = t(v0,v2),       v0 < v1 < v2,
 *
 * which is exactly what makes the twisted coboundary square to zero.
 */
#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "mnlck/rational.hpp"
#include "mnlck/simplicial_complex.hpp"

namespace mnlck {

/** Degree-k cochain: one scalar per k-simplex, in lexicographic order. */
template <typename T>
struct Cochain {
  int degree = 0;
  std::vector<T> values;

  static Cochain zero(const SimplicialComplex& k_complex, int degree) {
    Cochain c;
    c.degree = degree;
    c.values.assign(k_complex.count(degree), T(0));
    return c;
  }
};

/**
 * Multiplicative edge-transport weights of a rank-one local system, aligned
 * with the lexicographic edge list of a fixed complex.
 */
template <typename T>
struct LeeCocycle {
  std::vector<T> weights;
};

/** A triangle on which the multiplicative cocycle condition fails. */
struct CocycleViolation {
  int triangle_index = -1;
  Simplex triangle;
  /** |t01*t12/t02 - 1|, rounded to double for reporting. */
  double residual = 0.0;
};

/**
 * Wrap explicit edge weights, checking alignment and positivity.
 *
 * @throws std::invalid_argument If the count differs from the edge count or
 *         any weight is non-positive.
 */
template <typename T>
LeeCocycle<T> make_lee(const SimplicialComplex& k_complex, std::vector<T> weights) {
  if (static_cast<int>(weights.size()) != k_complex.count(1)) {
    throw std::invalid_argument("weight count does not match edge count");
  }
  for (const T& w : weights) {
    if (!(w > T(0))) throw std::invalid_argument("transport weights must be positive");
  }
  return LeeCocycle<T>{std::move(weights)};
}

/** Float-backend constructor: exponentiate an additive degree-1 cochain. */
inline LeeCocycle<double> lee_from_additive(const SimplicialComplex& k_complex,
                                            const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != k_complex.count(1)) {
    throw std::invalid_argument("cochain value count does not match edge count");
  }
  std::vector<double> w(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) w[i] = std::exp(theta[i]);
  return LeeCocycle<double>{std::move(w)};
}

namespace detail {

template <typename T>
const T& edge_weight(const SimplicialComplex& k_complex, const LeeCocycle<T>& lee, int u,
                     int v) {
  const int idx = k_complex.index_of({u, v});
  if (idx < 0) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} is not in the complex");
  }
  return lee.weights[idx];
}

}  // namespace detail

/**
 * Check the multiplicative cocycle condition on every triangle.
 *
 * Exact scalars are compared exactly; floats within a relative tolerance.
 *
 * @param tol Relative tolerance for float weights (ignored by exact types).
 * @returns All violating triangles with their residuals; empty means flat.
 */
template <typename T>
std::vector<CocycleViolation> validate_cocycle(const SimplicialComplex& k_complex,
                                               const LeeCocycle<T>& lee,
                                               double tol = 1e-10) {
  if (static_cast<int>(lee.weights.size()) != k_complex.count(1)) {
    throw std::invalid_argument("weight count does not match edge count");
  }
  std::vector<CocycleViolation> out;
  const auto& triangles = k_complex.simplices(2);
  for (int idx = 0; idx < static_cast<int>(triangles.size()); ++idx) {
    const Simplex& tri = triangles[idx];
    const T& t01 = detail::edge_weight(k_complex, lee, tri[0], tri[1]);
    const T& t12 = detail::edge_weight(k_complex, lee, tri[1], tri[2]);
    const T& t02 = detail::edge_weight(k_complex, lee, tri[0], tri[2]);
    const T ratio = t01 * t12 / t02;
    bool bad;
    double residual;
    if constexpr (std::is_floating_point_v<T>) {
      residual = std::abs(static_cast<double>(ratio) - 1.0);
      bad = residual > tol;
    } else {
      bad = ratio != T(1);
      residual = bad ? std::abs(to_double(Rational(ratio) - 1)) : 0.0;
    }
    if (bad) out.push_back({idx, tri, residual});
  }
  return out;
}

/**
 * Holonomy of the local system around a closed edge path.
 *
 * The path is a vertex sequence whose first and last entries agree; each
 * consecutive pair must span an edge.  Traversing an edge upward (lower to
 * higher vertex) multiplies by t(e), downward by 1/t(e).
 *
 * @throws std::invalid_argument If the path is open, too short, or uses a
 *         pair of vertices that is not an edge.
 */
template <typename T>
T holonomy(const SimplicialComplex& k_complex, const LeeCocycle<T>& lee,
           const std::vector<int>& loop) {
  if (loop.size() < 2 || loop.front() != loop.back()) {
    throw std::invalid_argument("holonomy requires a closed vertex path");
  }
  T h(1);
  for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
    const int a = loop[i], b = loop[i + 1];
    if (a == b) throw std::invalid_argument("path repeats a vertex consecutively");
    const T& t = detail::edge_weight(k_complex, lee, std::min(a, b), std::max(a, b));
    if (a < b) {
      h *= t;
    } else {
      h /= t;
    }
  }
  return h;
}

}  // namespace mnlck

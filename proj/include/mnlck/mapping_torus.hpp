/**
 * Mapping tori of simplicial automorphisms, triangulated by stacked prisms.
 *
 * The suspension of an automorphism phi of a complex W is built from
 * `layers` copies of W.  Layer l holds vertex (v,l) with id l*|V(W)| + v.
 * Each slab W x [l, l+1] is subdivided by the staircase (path) triangulation
 * of every prism: a k-simplex (v_0 < ... < v_k) with bottom ids b_i and top
 * ids t_i contributes the (k+1)-simplices {b_0..b_i, t_i..t_k}.  The top of
 * the last slab is glued to layer 0 through phi, so the result triangulates
 * the mapping torus; with phi = id it is just W x S^1.
 *
 * The projection to the base circle sends layer l to the l-th base vertex.
 * Characters of the base fundamental group pull back to transport weights on
 * the suspension; see base_character() for the two backend conventions.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "mnlck/cochain.hpp"
#include "mnlck/simplicial_complex.hpp"
#include "mnlck/twisted.hpp"

namespace mnlck {

/** Vertex permutation inducing a simplicial automorphism. */
struct SimplicialAutomorphism {
  std::vector<int> perm;

  static SimplicialAutomorphism identity(int vertex_count) {
    SimplicialAutomorphism a;
    a.perm.resize(vertex_count);
    for (int v = 0; v < vertex_count; ++v) a.perm[v] = v;
    return a;
  }
};

/**
 * True when perm is a bijection of the vertices mapping every simplex of the
 * complex onto a simplex of the complex.
 */
inline bool is_automorphism(const SimplicialComplex& k_complex,
                            const SimplicialAutomorphism& phi) {
  const int n = k_complex.vertex_count();
  if (static_cast<int>(phi.perm.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (const int image : phi.perm) {
    if (image < 0 || image >= n || hit[image]) return false;
    hit[image] = true;
  }
  for (int k = 1; k <= k_complex.dimension(); ++k) {
    for (const Simplex& s : k_complex.simplices(k)) {
      Simplex image(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) image[i] = phi.perm[s[i]];
      if (!k_complex.contains(image)) return false;
    }
  }
  return true;
}

/** A triangulated mapping torus with its layer structure and base loop. */
struct SuspensionComplex {
  SimplicialComplex complex;
  int fiber_vertex_count = 0;
  int layers = 0;
  /**
   * Closed vertex path projecting with degree one to the base circle: up the
   * vertical tree over vertex 0, across the gluing, then back to vertex 0
   * inside layer 0 along fiber edges.
   */
  std::vector<int> base_loop;

  int layer_of(int vertex) const { return vertex / fiber_vertex_count; }
  int fiber_vertex(int vertex) const { return vertex % fiber_vertex_count; }
};

/**
 * Triangulate the mapping torus of an automorphism.
 *
 * @param fiber The fiber complex W (must have at least one vertex).
 * @param phi Automorphism of W; the last slab is glued through it.
 * @param layers Number of fiber copies; at least 3 so no prism is glued to
 *        itself and every base edge joins distinct layers.
 * @throws std::invalid_argument If phi is not an automorphism, layers < 3,
 *         the fiber is empty, or the layer-0 gluing vertex cannot be joined
 *         back to vertex 0 (disconnected fiber).
 */
inline SuspensionComplex mapping_torus(const SimplicialComplex& fiber,
                                       const SimplicialAutomorphism& phi, int layers) {
  if (fiber.vertex_count() == 0) {
    throw std::invalid_argument("fiber must have at least one vertex");
  }
  if (layers < 3) {
    throw std::invalid_argument("suspension needs at least 3 layers");
  }
  if (!is_automorphism(fiber, phi)) {
    throw std::invalid_argument("vertex map is not a simplicial automorphism");
  }
  const int nv = fiber.vertex_count();
  std::vector<Simplex> generators;
  for (int k = 0; k <= fiber.dimension(); ++k) {
    for (const Simplex& s : fiber.simplices(k)) {
      for (int layer = 0; layer < layers; ++layer) {
        std::vector<int> bottom(s.size()), top(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
          bottom[i] = layer * nv + s[i];
          top[i] = (layer + 1 < layers) ? (layer + 1) * nv + s[i] : phi.perm[s[i]];
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex prism;
          prism.insert(prism.end(), bottom.begin(), bottom.begin() + i + 1);
          prism.insert(prism.end(), top.begin() + i, top.end());
          generators.push_back(std::move(prism));
        }
      }
    }
  }
  SuspensionComplex m;
  m.complex = SimplicialComplex::build(layers * nv, generators);
  m.fiber_vertex_count = nv;
  m.layers = layers;

  for (int layer = 0; layer < layers; ++layer) m.base_loop.push_back(layer * nv);
  const int glued = phi.perm[0];
  m.base_loop.push_back(glued);
  if (glued != 0) {
    // Close up inside layer 0 with a shortest fiber path from phi(0) to 0.
    std::vector<int> parent(nv, -1);
    std::deque<int> queue{glued};
    parent[glued] = glued;
    while (!queue.empty() && parent[0] < 0) {
      const int u = queue.front();
      queue.pop_front();
      for (const Simplex& e : fiber.simplices(1)) {
        for (int side = 0; side < 2; ++side) {
          const int a = e[side], b = e[1 - side];
          if (a == u && parent[b] < 0) {
            parent[b] = u;
            queue.push_back(b);
          }
        }
      }
    }
    if (parent[0] < 0) {
      throw std::invalid_argument("fiber is disconnected: cannot close the base loop");
    }
    std::vector<int> tail;
    for (int v = 0; v != glued; v = parent[v]) tail.push_back(v);
    std::reverse(tail.begin(), tail.end());
    m.base_loop.insert(m.base_loop.end(), tail.begin(), tail.end());
  }
  return m;
}

/**
 * Pull back the base character of holonomy t to transport weights on the
 * suspension.  Edges inside a layer always carry weight 1.  The exact
 * backend concentrates the character on the single base edge {layers-2,
 * layers-1} (weight t there, 1 on every other crossing); the float backend
 * spreads it uniformly, exp(+log(t)/layers) per ascending crossing with the
 * wrap edges {0, layers-1} carrying exp(-log(t)/layers) since their upward
 * direction runs against the base orientation.  Both are pullbacks of a
 * cellular cocycle on the base circle, hence flat, with base-loop holonomy
 * exactly t.
 *
 * @throws std::invalid_argument If t <= 0.
 */
template <typename T>
LeeCocycle<T> base_character(const SuspensionComplex& m, const T& t) {
  if (!(t > T(0))) throw std::invalid_argument("character value must be positive");
  const auto& edges = m.complex.simplices(1);
  std::vector<T> weights(edges.size(), T(1));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int la = m.layer_of(edges[e][0]);
    const int lb = m.layer_of(edges[e][1]);
    if (la == lb) continue;
    if constexpr (std::is_floating_point_v<T>) {
      const T step = std::log(t) / static_cast<T>(m.layers);
      weights[e] = std::exp(lb == la + 1 ? step : -step);
    } else {
      if (la == m.layers - 2 && lb == m.layers - 1) weights[e] = t;
    }
  }
  return LeeCocycle<T>{std::move(weights)};
}

/** Outcome of the suspension vanishing check for one character value. */
struct VanishingReport {
  SuspensionComplex suspension;
  BettiResult betti;
  /** True when every twisted Betti number is zero. */
  bool vanished = false;
};

/**
 * Build the mapping torus, pull back the character t and compute its twisted
 * Betti numbers with the exact backend.  For t != 1 every twisted Betti
 * number of a mapping torus vanishes; the report records whether that held.
 *
 * @throws std::invalid_argument If t <= 0 or the suspension inputs are bad.
 */
inline VanishingReport vanishing_check(const SimplicialComplex& fiber,
                                       const SimplicialAutomorphism& phi, int layers,
                                       const Rational& t) {
  VanishingReport report;
  report.suspension = mapping_torus(fiber, phi, layers);
  const auto tc = assemble_twisted(report.suspension.complex,
                                   base_character<Rational>(report.suspension, t));
  report.betti = twisted_betti(tc);
  report.vanished = std::all_of(report.betti.betti.begin(), report.betti.betti.end(),
                                [](long long b) { return b == 0; });
  return report;
}

}  // namespace mnlck

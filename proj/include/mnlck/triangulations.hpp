/**
 * Built-in fiber triangulations and named automorphisms.
 *
 * The library is small but exercises all the behaviour the suspension
 * machinery cares about: a point, short cycles, the boundary of the
 * 3-simplex, the 9-vertex flat torus, and the 6-vertex projective plane
 * (whose automorphism group is the icosahedral A5).
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mnlck/mapping_torus.hpp"
#include "mnlck/simplicial_complex.hpp"

namespace mnlck {

/** Cycle triangulation of the circle on m >= 3 vertices. */
inline SimplicialComplex circle_complex(int m) {
  if (m < 3) throw std::invalid_argument("a triangulated circle needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (int v = 0; v < m; ++v) edges.push_back({v, (v + 1) % m});
  return SimplicialComplex::build(m, edges);
}

/** 3x3 grid triangulation of the 2-torus; vertex (i,j) has id 3i+j, mod 3. */
inline SimplicialComplex torus9_complex() {
  std::vector<Simplex> tris;
  const auto id = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + ((j % 3 + 3) % 3); };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  }
  return SimplicialComplex::build(9, tris);
}

/** Minimal 6-vertex triangulation of the real projective plane. */
inline SimplicialComplex rp2_complex() {
  return SimplicialComplex::build(6, {{0, 1, 4},
                                      {0, 1, 5},
                                      {0, 2, 3},
                                      {0, 2, 5},
                                      {0, 3, 4},
                                      {1, 2, 3},
                                      {1, 2, 4},
                                      {1, 3, 5},
                                      {2, 4, 5},
                                      {3, 4, 5}});
}

/** The boundary of the 3-simplex (a triangulated 2-sphere). */
inline SimplicialComplex tetra_complex() {
  return SimplicialComplex::build(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"point", "circle3", "circle4",
                                                 "tetra", "torus9", "rp2_6"};
  return names;
}

/**
 * Look up a built-in complex by name.
 * @throws std::invalid_argument For unknown names.
 */
inline SimplicialComplex builtin_complex(const std::string& name) {
  if (name == "point") return SimplicialComplex::build(1, {});
  if (name == "circle3") return circle_complex(3);
  if (name == "circle4") return circle_complex(4);
  if (name == "tetra") return tetra_complex();
  if (name == "torus9") return torus9_complex();
  if (name == "rp2_6") return rp2_complex();
  throw std::invalid_argument("unknown built-in complex: \"" + name + "\"");
}

/**
 * Named automorphism of a built-in complex; keys are "id" and (for all
 * fibers except the point, which has no nontrivial symmetry) "rot":
 * rotation of the cycles, a 4-cycle on the tetrahedron boundary, the
 * row-shift translation of the torus grid, and an order-5 icosahedral
 * rotation of the projective plane.
 *
 * @throws std::invalid_argument For unknown names/keys or "rot" on "point".
 */
inline SimplicialAutomorphism builtin_automorphism(const std::string& name,
                                                   const std::string& key) {
  const SimplicialComplex k_complex = builtin_complex(name);
  if (key == "id") return SimplicialAutomorphism::identity(k_complex.vertex_count());
  if (key != "rot") throw std::invalid_argument("unknown automorphism key: \"" + key + "\"");

  SimplicialAutomorphism a;
  if (name == "circle3" || name == "circle4") {
    const int m = k_complex.vertex_count();
    for (int v = 0; v < m; ++v) a.perm.push_back((v + 1) % m);
  } else if (name == "tetra") {
    a.perm = {1, 2, 3, 0};
  } else if (name == "torus9") {
    for (int v = 0; v < 9; ++v) a.perm.push_back((v + 3) % 9);
  } else if (name == "rp2_6") {
    a.perm = {0, 2, 4, 1, 5, 3};
  } else {
    throw std::invalid_argument("complex \"" + name + "\" has no named rotation");
  }
  return a;
}

}  // namespace mnlck

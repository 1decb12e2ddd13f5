/**
 * Finite abstract simplicial complexes with canonical vertex orientations.
 *
 * A simplex is stored as its strictly increasing vertex tuple; that sorted
 * order *is* the chosen orientation of the simplex, so no orientation data is
 * carried separately and all boundary/coboundary signs are the alternating
 * signs of vertex omission.  Within each dimension simplices are kept in
 * lexicographic order, which fixes the row/column order of every matrix in
 * the library and makes runs bit-for-bit reproducible.
 */
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "mnlck/linalg.hpp"

namespace mnlck {

/** Vertex tuple of a simplex, strictly increasing once canonicalized. */
using Simplex = std::vector<int>;

/** The i-th face of a simplex: the tuple with vertex position i omitted. */
inline Simplex face_of(const Simplex& s, int i) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (int j = 0; j < static_cast<int>(s.size()); ++j) {
    if (j != i) f.push_back(s[j]);
  }
  return f;
}

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /**
   * Build the face closure of a generating set of simplices.
   *
   * Every vertex in 0..vertex_count-1 becomes a 0-simplex whether or not it
   * appears in a generator, so isolated vertices contribute to b_0.
   * Generators may list their vertices in any order; each tuple is sorted
   * into the canonical orientation before closure.
   *
   * @param vertex_count Number of vertices of the complex.
   * @param generators Generating simplices (faces are added automatically).
   * @returns The face-closed complex.
   * @throws std::out_of_range If a generator mentions a vertex outside
   *         0..vertex_count-1.
   * @throws std::invalid_argument If a generator repeats a vertex.
   */
  static SimplicialComplex build(int vertex_count, const std::vector<Simplex>& generators) {
    if (vertex_count < 0) {
      throw std::invalid_argument("vertex count must be non-negative");
    }
    SimplicialComplex k;
    k.vertex_count_ = vertex_count;
    k.by_dim_.assign(1, {});
    k.by_dim_[0].reserve(vertex_count);
    for (int v = 0; v < vertex_count; ++v) k.by_dim_[0].push_back({v});

    for (const Simplex& g : generators) {
      Simplex s = g;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw std::invalid_argument("simplex repeats a vertex");
      }
      if (!s.empty() && (s.front() < 0 || s.back() >= vertex_count)) {
        throw std::out_of_range("simplex vertex outside declared vertex range");
      }
      // Insert every non-empty subset; subsets of a sorted tuple are sorted.
      const int n = static_cast<int>(s.size());
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Simplex f;
        for (int j = 0; j < n; ++j) {
          if (mask & (1u << j)) f.push_back(s[j]);
        }
        const int dim = static_cast<int>(f.size()) - 1;
        if (dim == 0) continue;  // vertices are pre-populated
        if (dim >= static_cast<int>(k.by_dim_.size())) k.by_dim_.resize(dim + 1);
        k.by_dim_[dim].push_back(std::move(f));
      }
    }
    for (auto& level : k.by_dim_) {
      std::sort(level.begin(), level.end());
      level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    while (k.by_dim_.size() > 1 && k.by_dim_.back().empty()) k.by_dim_.pop_back();
    return k;
  }

  int vertex_count() const { return vertex_count_; }

  /** Dimension of the complex (largest k with a k-simplex); -1 when empty. */
  int dimension() const {
    for (int k = static_cast<int>(by_dim_.size()) - 1; k >= 0; --k) {
      if (!by_dim_[k].empty()) return k;
    }
    return -1;
  }

  /** All k-simplices in lexicographic order (empty list above dimension). */
  const std::vector<Simplex>& simplices(int k) const {
    static const std::vector<Simplex> kEmpty;
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return kEmpty;
    return by_dim_[k];
  }

  int count(int k) const { return static_cast<int>(simplices(k).size()); }

  /**
   * Position of a simplex within its dimension's lexicographic list, or -1.
   * The query tuple may be unsorted; it is canonicalized before lookup.
   */
  int index_of(const Simplex& query) const {
    if (query.empty()) return -1;
    Simplex s = query;
    std::sort(s.begin(), s.end());
    const auto& level = simplices(static_cast<int>(s.size()) - 1);
    const auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return -1;
    return static_cast<int>(it - level.begin());
  }

  bool contains(const Simplex& query) const { return index_of(query) >= 0; }

  std::vector<int> f_vector() const {
    std::vector<int> f;
    for (int k = 0; k <= dimension(); ++k) f.push_back(count(k));
    return f;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (int k = 0; k <= dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * count(k);
    return chi;
  }

  /** Simplices not properly contained in any other simplex. */
  std::vector<Simplex> maximal_simplices() const {
    std::vector<Simplex> out;
    for (int k = 0; k <= dimension(); ++k) {
      for (const Simplex& s : simplices(k)) {
        bool covered = false;
        for (int m = k + 1; m <= dimension() && !covered; ++m) {
          for (const Simplex& t : simplices(m)) {
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
              covered = true;
              break;
            }
          }
        }
        if (!covered) out.push_back(s);
      }
    }
    return out;
  }

  bool operator==(const SimplicialComplex& other) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
};

/**
 * Untwisted boundary matrix of degree k: the matrix of the chain map
 * C_k -> C_k-1 sending a simplex to the alternating sum of its faces, in the
 * canonical orientations and lexicographic bases.  Rows index (k-1)-simplices
 * and columns index k-simplices.
 *
 * @throws std::out_of_range Unless 1 <= k <= dimension.
 */
template <typename T>
DenseMatrix<T> boundary_matrix(const SimplicialComplex& k_complex, int k) {
  if (k < 1 || k > k_complex.dimension()) {
    throw std::out_of_range("boundary degree must lie in 1..dimension");
  }
  const auto& rows = k_complex.simplices(k - 1);
  const auto& cols = k_complex.simplices(k);
  DenseMatrix<T> b(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    const Simplex& s = cols[j];
    for (int i = 0; i <= k; ++i) {
      const int r = k_complex.index_of(face_of(s, i));
      b(r, j) += (i % 2 == 0) ? T(1) : T(-1);
    }
  }
  return b;
}

}  // namespace mnlck

#ifndef MNLCK_IO_JSON_HPP
#define MNLCK_IO_JSON_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "mnlck/cochain.hpp"
#include "mnlck/rational.hpp"
#include "mnlck/simplicial_complex.hpp"

/**
 * JSON interchange for complexes and weight cochains.
 *
 * Complex files:   {"vertices": n, "simplices": [[0,1,2], ...]}
 *                  (any generating set; faces are closed over on load, and
 *                  saves list the maximal simplices).
 * Cochain files:   {"degree": k, "values": {"0,1": scalar, ...}}
 *                  with one comma-joined vertex key per k-simplex.
 * Rational scalars travel as "p/q" strings, floating ones as numbers.
 *
 * Structural problems throw std::invalid_argument with a message naming
 * the offending key; callers map these to their "malformed input" path.
 */
namespace mnlck::io {

using Json = nlohmann::ordered_json;

/** @returns The comma-joined vertex key of a simplex, e.g. "0,2,5". */
inline std::string simplex_key(const Simplex& simplex) {
  std::string key;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (i > 0) key += ',';
    key += std::to_string(simplex[i]);
  }
  return key;
}

/** Parse a comma-joined vertex key back into a simplex. */
inline Simplex parse_simplex_key(const std::string& key) {
  Simplex simplex;
  std::size_t start = 0;
  while (start <= key.size()) {
    const std::size_t comma = key.find(',', start);
    const std::string part =
        key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed simplex key '" + key + "'");
    }
    simplex.push_back(std::stoi(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return simplex;
}

/** Serialise a complex as its maximal simplices. */
inline Json complex_to_json(const SimplicialComplex& complex) {
  Json j;
  j["vertices"] = complex.vertex_count();
  j["simplices"] = Json::array();
  for (const Simplex& s : complex.maximal_simplices()) {
    j["simplices"].push_back(s);
  }
  return j;
}

/**
 * Load a complex from JSON.
 *
 * @param j Parsed JSON value.
 * @returns The face-closed complex.
 * @throws std::invalid_argument On missing keys, wrong types, or generator
 *         lists that violate the complex invariants.
 */
inline SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("simplices")) {
    throw std::invalid_argument("complex JSON needs 'vertices' and 'simplices'");
  }
  if (!j["vertices"].is_number_integer()) {
    throw std::invalid_argument("'vertices' must be an integer");
  }
  if (!j["simplices"].is_array()) {
    throw std::invalid_argument("'simplices' must be an array of vertex lists");
  }
  std::vector<Simplex> generators;
  for (const auto& entry : j["simplices"]) {
    if (!entry.is_array()) {
      throw std::invalid_argument("each simplex must be an array of vertex indices");
    }
    Simplex simplex;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) {
        throw std::invalid_argument("vertex indices must be integers");
      }
      simplex.push_back(v.get<int>());
    }
    generators.push_back(std::move(simplex));
  }
  return SimplicialComplex::build(j["vertices"].get<int>(), generators);
}

namespace detail {

inline Json scalar_to_json(const Rational& value) { return to_string(value); }
inline Json scalar_to_json(double value) { return value; }

template <typename T>
T scalar_from_json(const Json& value);

template <>
inline Rational scalar_from_json<Rational>(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (!value.is_string()) {
    throw std::invalid_argument("rational scalars must be \"p/q\" strings");
  }
  return parse_rational(value.get<std::string>());
}

template <>
inline double scalar_from_json<double>(const Json& value) {
  if (!value.is_number()) throw std::invalid_argument("float scalars must be numbers");
  return value.get<double>();
}

}  // namespace detail

/** Serialise edge weights as a degree-1 cochain keyed by edge. */
template <typename T>
Json lee_to_json(const SimplicialComplex& complex, const LeeCocycle<T>& lee) {
  const auto& edges = complex.simplices(1);
  if (lee.weights.size() != edges.size()) {
    throw std::invalid_argument("weight vector does not match the edge count");
  }
  Json values = Json::object();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    values[simplex_key(edges[e])] = detail::scalar_to_json(lee.weights[e]);
  }
  Json j;
  j["degree"] = 1;
  j["values"] = values;
  return j;
}

/**
 * Load edge weights for a complex from a degree-1 cochain file.
 *
 * @param complex The complex whose edges index the weights.
 * @param j       Parsed JSON value.
 * @returns LeeCocycle aligned with complex.simplices(1).
 * @throws std::invalid_argument On wrong degree, unknown edges, missing
 *         edges, or scalars of the wrong shape.
 */
template <typename T>
LeeCocycle<T> lee_from_json(const SimplicialComplex& complex, const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("values")) {
    throw std::invalid_argument("cochain JSON needs 'degree' and 'values'");
  }
  if (!j["degree"].is_number_integer() || j["degree"].get<int>() != 1) {
    throw std::invalid_argument("weight cochains must have degree 1");
  }
  if (!j["values"].is_object()) {
    throw std::invalid_argument("'values' must map edge keys to scalars");
  }
  const auto& edges = complex.simplices(1);
  LeeCocycle<T> lee;
  lee.weights.assign(edges.size(), T(0));
  std::vector<bool> seen(edges.size(), false);
  for (const auto& [key, value] : j["values"].items()) {
    const Simplex edge = parse_simplex_key(key);
    if (edge.size() != 2) {
      throw std::invalid_argument("edge key '" + key + "' does not name an edge");
    }
    const int index = complex.index_of(edge);
    if (index < 0) {
      throw std::invalid_argument("edge '" + key + "' is not in the complex");
    }
    lee.weights[static_cast<std::size_t>(index)] = detail::scalar_from_json<T>(value);
    seen[static_cast<std::size_t>(index)] = true;
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!seen[e]) {
      throw std::invalid_argument("missing weight for edge '" + simplex_key(edges[e]) +
                                  "'");
    }
  }
  return lee;
}

}  // namespace mnlck::io

#endif  // MNLCK_IO_JSON_HPP

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmt/gradient.hpp"
#include "dmt/rng.hpp"

namespace dmt {

// All primitive vector fields of K (single covering pairs), sorted by
// (alpha id, sigma id).
std::vector<GvfPair> primitive_fields(const SimplicialComplex& K);

// Every acyclic matching on K, the empty one included, in a deterministic
// backtracking order. Throws GuardExceeded past limits.max_matchings.
std::vector<GradientVectorField> enumerate_matchings(const SimplicialComplex& K,
                                                     const Limits& limits = {});

// The complex of discrete Morse functions: vertices are primitive vector
// fields, q-simplices the acyclic matchings of q+1 pairs. The augmented
// variant records the empty simplex as a face of every vertex.
struct MorseFunctionComplex {
  const SimplicialComplex* K = nullptr;
  std::vector<GvfPair> fields;          // P(K), vertex order
  std::vector<std::vector<int>> faces;  // nonempty matchings as sorted field-index lists
  bool augmented = false;

  std::vector<long long> f_vector() const;  // faces by dimension
  int num_vertices() const { return static_cast<int>(fields.size()); }
};

MorseFunctionComplex build_morse_function_complex(const SimplicialComplex& K, bool augmented,
                                                  const Limits& limits = {});

struct ConnectivityReport {
  long long num_faces = 0;  // nodes of the covering graph (empty face included if augmented)
  long long components = 0;
  std::optional<std::vector<long long>> betti;
};

// Connected components of the covering graph (faces plus covering relations;
// the empty simplex counts when augmented). Betti numbers of the unaugmented
// complex are computed on request via the simplicial machinery.
ConnectivityReport connectivity_report(const MorseFunctionComplex& mfc, bool with_betti = false,
                                       const Limits& limits = {});

// DOT dump of the covering graph.
std::string covering_graph_dot(const MorseFunctionComplex& mfc);

// A seeded random acyclic matching: primitive fields are visited in a random
// order and each valid one is kept with probability 1/2.
GradientVectorField random_matching(const SimplicialComplex& K, Rng& rng);

// The face complex as a SimplicialComplex on field indices; requires at least
// one nonempty face.
SimplicialComplex as_simplicial_complex(const MorseFunctionComplex& mfc);

}  // namespace dmt

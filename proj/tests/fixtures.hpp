#pragma once

#include <vector>

#include "dmt/complex.hpp"
#include "dmt/gradient.hpp"

namespace dmt::fixtures {

inline int id(const SimplicialComplex& K, std::vector<int> verts) {
  auto i = K.id_of(Simplex(std::move(verts)));
  if (!i) throw std::logic_error("fixture simplex missing");
  return *i;
}

inline GvfPair pair_of(const SimplicialComplex& K, std::vector<int> alpha,
                       std::vector<int> sigma) {
  return {id(K, std::move(alpha)), id(K, std::move(sigma))};
}

// An edge and its endpoints.
inline SimplicialComplex edge() {
  return SimplicialComplex::parse("0 1\n");
}

// The hollow triangle: three vertices, three edges.
inline SimplicialComplex triangle_graph() {
  return SimplicialComplex::parse("0 1\n1 2\n0 2\n");
}

inline SimplicialComplex filled_triangle() {
  return SimplicialComplex::parse("0 1 2\n");
}

// Hexagon 1..6 with chord {1,5} and the filled triangle {1,5,6}:
// 6 vertices, 7 edges, 1 triangle.
inline SimplicialComplex hexagon() {
  return SimplicialComplex::parse("1 2\n2 3\n3 4\n4 5\n1 5 6\n");
}

// The two gradient vector fields drawn on the hexagon complex. V1 matches
// the chord {1,5} with vertex {1}; V2 leaves that pair out, freeing the
// critical pair (alpha = {1}, sigma = {1,5}).
inline GradientVectorField hexagon_v1(const SimplicialComplex& K) {
  return GradientVectorField(K, {pair_of(K, {2}, {1, 2}), pair_of(K, {6}, {5, 6}),
                                 pair_of(K, {3}, {3, 4}), pair_of(K, {5}, {4, 5}),
                                 pair_of(K, {1}, {1, 5})});
}

inline GradientVectorField hexagon_v2(const SimplicialComplex& K) {
  return GradientVectorField(K, {pair_of(K, {2}, {1, 2}), pair_of(K, {6}, {5, 6}),
                                 pair_of(K, {3}, {3, 4}), pair_of(K, {5}, {4, 5})});
}

inline SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex::parse("0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
}

// A 2x2 grid of squares, each split along its main diagonal: 9 vertices,
// 16 edges, 8 triangles.
inline SimplicialComplex grid2x2() {
  std::string text;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      int a = 3 * r + c, b = a + 1, d = a + 3, e = a + 4;
      text += std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(e) + "\n";
      text += std::to_string(a) + " " + std::to_string(d) + " " + std::to_string(e) + "\n";
    }
  }
  return SimplicialComplex::parse(text);
}

struct NamedComplex {
  const char* name;
  SimplicialComplex K;
};

inline std::vector<NamedComplex> corpus() {
  std::vector<NamedComplex> v;
  v.push_back({"edge", edge()});
  v.push_back({"triangle_graph", triangle_graph()});
  v.push_back({"filled_triangle", filled_triangle()});
  v.push_back({"hexagon", hexagon()});
  v.push_back({"tetrahedron_boundary", tetrahedron_boundary()});
  v.push_back({"grid2x2", grid2x2()});
  return v;
}

}  // namespace dmt::fixtures

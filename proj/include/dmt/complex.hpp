#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmt/matrix.hpp"
#include "dmt/simplex.hpp"

namespace dmt {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration or path search exceeds a configured guard.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Limits {
  long long max_paths = 1'000'000;
  long long max_matchings = 100'000;
};

// A finite abstract simplicial complex, closed under taking faces.
//
// Simplices are stored sorted by (dimension, lexicographic vertices) and
// addressed by their index in that order, so ids of a fixed dimension form a
// contiguous range. Immutable after construction.
class SimplicialComplex {
 public:
  static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal);

  // One maximal simplex per line, whitespace-separated vertex labels,
  // '#' starts a comment, blank lines ignored.
  static SimplicialComplex parse(std::string_view text);

  // Emits maximal simplices sorted lexicographically, one per line.
  std::string serialize() const;

  int size() const { return static_cast<int>(simplices_.size()); }
  int dimension() const { return dim_; }
  int count(int q) const;
  int dim_begin(int q) const;
  int dim_end(int q) const;  // one past the last id of dimension q
  int vertex_count() const { return count(0); }

  const Simplex& simplex(int id) const { return simplices_[id]; }
  int dim_of(int id) const { return simplices_[id].dim(); }
  std::optional<int> id_of(const Simplex& s) const;

  // Covering relations of the Hasse diagram, annotated with [sigma : alpha].
  const std::vector<std::pair<int, int>>& facets_of(int id) const { return facets_[id]; }
  const std::vector<std::pair<int, int>>& cofacets_of(int id) const { return cofacets_[id]; }

  // Standard simplicial boundary in degree q; degree 0 yields the 0 x |K_0|
  // zero matrix. Columns follow id order within dimension q.
  Mat boundary_matrix(int q) const;

  long long euler_characteristic() const;

 private:
  explicit SimplicialComplex(std::vector<Simplex> sorted_unique);

  std::vector<Simplex> simplices_;
  std::vector<std::vector<std::pair<int, int>>> facets_;
  std::vector<std::vector<std::pair<int, int>>> cofacets_;
  std::vector<int> dim_begin_;  // dim_begin_[q] .. dim_begin_[q+1]
  int dim_ = 0;
};

}  // namespace dmt

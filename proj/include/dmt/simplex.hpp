#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dmt {

// An abstract simplex: a nonempty strictly increasing list of vertex labels.
class Simplex {
 public:
  explicit Simplex(std::vector<int> vertices);  // sorts; rejects empty/dup/negative

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  const std::vector<int>& vertices() const { return verts_; }

  // The facet obtained by omitting the vertex at position `omit`.
  Simplex facet(int omit) const;

  std::string str() const;  // "0 1 2"

  friend bool operator==(const Simplex& a, const Simplex& b) = default;
  // Ordered by (dimension, lexicographic vertex list).
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

 private:
  std::vector<int> verts_;
};

// Incidence number [sigma : alpha] = (-1)^i where alpha omits sigma's i-th
// vertex. Throws std::invalid_argument if alpha is not a facet of sigma.
int incidence(const Simplex& sigma, const Simplex& alpha);

}  // namespace dmt

#include "dmt/simplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dmt {

Simplex::Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
  if (verts_.empty()) throw std::invalid_argument("simplex must have at least one vertex");
  std::sort(verts_.begin(), verts_.end());
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (verts_[i] < 0) throw std::invalid_argument("vertex labels must be non-negative");
    if (i > 0 && verts_[i] == verts_[i - 1]) {
      throw std::invalid_argument("duplicate vertex in simplex");
    }
  }
}

Simplex Simplex::facet(int omit) const {
  if (dim() == 0) throw std::invalid_argument("a vertex has no facets");
  if (omit < 0 || omit > dim()) throw std::invalid_argument("facet index out of range");
  std::vector<int> v;
  v.reserve(verts_.size() - 1);
  for (int i = 0; i <= dim(); ++i) {
    if (i != omit) v.push_back(verts_[i]);
  }
  return Simplex(std::move(v));
}

std::string Simplex::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) os << ' ';
    os << verts_[i];
  }
  return os.str();
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  return a.verts_ <=> b.verts_;
}

int incidence(const Simplex& sigma, const Simplex& alpha) {
  if (alpha.dim() != sigma.dim() - 1) {
    throw std::invalid_argument("incidence requires a codimension-1 face");
  }
  const auto& sv = sigma.vertices();
  const auto& av = alpha.vertices();
  int omitted = -1;
  std::size_t j = 0;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    if (j < av.size() && sv[i] == av[j]) {
      ++j;
    } else if (omitted < 0) {
      omitted = static_cast<int>(i);
    } else {
      throw std::invalid_argument("not a facet");
    }
  }
  if (j != av.size() || omitted < 0) throw std::invalid_argument("not a facet");
  return (omitted % 2 == 0) ? 1 : -1;
}

}  // namespace dmt

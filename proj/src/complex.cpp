#include "dmt/complex.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace dmt {

namespace {

// All nonempty subsets of the vertex set of `s`.
void add_faces(const Simplex& s, std::set<std::vector<int>>& out) {
  const auto& v = s.vertices();
  int n = static_cast<int>(v.size());
  if (n > 24) throw ParseError("simplex too large: " + s.str());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> face;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) face.push_back(v[i]);
    }
    out.insert(std::move(face));
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Simplex> sorted_unique)
    : simplices_(std::move(sorted_unique)) {
  dim_ = 0;
  for (const auto& s : simplices_) dim_ = std::max(dim_, s.dim());

  dim_begin_.assign(dim_ + 2, 0);
  for (const auto& s : simplices_) dim_begin_[s.dim() + 1]++;
  for (int q = 0; q <= dim_; ++q) dim_begin_[q + 1] += dim_begin_[q];

  facets_.resize(simplices_.size());
  cofacets_.resize(simplices_.size());
  for (int id = 0; id < size(); ++id) {
    const Simplex& s = simplices_[id];
    if (s.dim() == 0) continue;
    for (int omit = 0; omit <= s.dim(); ++omit) {
      Simplex f = s.facet(omit);
      auto fid = id_of(f);
      if (!fid) throw std::logic_error("complex is not face-closed");
      int sign = (omit % 2 == 0) ? 1 : -1;
      facets_[id].emplace_back(*fid, sign);
      cofacets_[*fid].emplace_back(id, sign);
    }
  }
  for (auto& v : cofacets_) std::sort(v.begin(), v.end());
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& maximal) {
  if (maximal.empty()) throw ParseError("empty complex");
  std::set<std::vector<int>> faces;
  for (const auto& s : maximal) add_faces(s, faces);
  std::vector<Simplex> all;
  all.reserve(faces.size());
  for (const auto& f : faces) all.emplace_back(f);
  std::sort(all.begin(), all.end());
  return SimplicialComplex(std::move(all));
}

SimplicialComplex SimplicialComplex::parse(std::string_view text) {
  std::vector<Simplex> maximal;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<int> verts;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      int v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
      if (ec != std::errc{} || ptr != line.data() + j || v < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex token '" +
                         std::string(line.substr(i, j - i)) + "'");
      }
      verts.push_back(v);
      i = j;
    }
    if (verts.empty()) continue;
    try {
      maximal.emplace_back(std::move(verts));
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (maximal.empty()) throw ParseError("no simplices in input");
  return from_maximal(maximal);
}

std::string SimplicialComplex::serialize() const {
  std::vector<const Simplex*> maximal;
  for (int id = 0; id < size(); ++id) {
    if (cofacets_[id].empty()) maximal.push_back(&simplices_[id]);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const Simplex* a, const Simplex* b) { return a->vertices() < b->vertices(); });
  std::ostringstream os;
  for (const auto* s : maximal) os << s->str() << '\n';
  return os.str();
}

int SimplicialComplex::count(int q) const {
  if (q < 0 || q > dim_) return 0;
  return dim_begin_[q + 1] - dim_begin_[q];
}

int SimplicialComplex::dim_begin(int q) const {
  if (q < 0 || q > dim_) throw std::invalid_argument("dimension out of range");
  return dim_begin_[q];
}

int SimplicialComplex::dim_end(int q) const {
  if (q < 0 || q > dim_) throw std::invalid_argument("dimension out of range");
  return dim_begin_[q + 1];
}

std::optional<int> SimplicialComplex::id_of(const Simplex& s) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
  if (it != simplices_.end() && *it == s) {
    return static_cast<int>(it - simplices_.begin());
  }
  return std::nullopt;
}

Mat SimplicialComplex::boundary_matrix(int q) const {
  if (q < 0 || q > dim_) throw std::invalid_argument("boundary degree out of range");
  Mat d(count(q - 1), count(q));
  if (q == 0) return d;
  int col0 = dim_begin(q);
  int row0 = dim_begin(q - 1);
  for (int id = col0; id < dim_end(q); ++id) {
    for (auto [fid, sign] : facets_[id]) {
      d(fid - row0, id - col0) = sign;
    }
  }
  return d;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int q = 0; q <= dim_; ++q) chi += (q % 2 == 0) ? count(q) : -count(q);
  return chi;
}

}  // namespace dmt

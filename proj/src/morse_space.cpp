#include "dmt/morse_space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dmt/morse_complex.hpp"

namespace dmt {

std::vector<GvfPair> primitive_fields(const SimplicialComplex& K) {
  std::vector<GvfPair> fields;
  for (int id = 0; id < K.size(); ++id) {
    for (auto [cid, sign] : K.cofacets_of(id)) {
      (void)sign;
      fields.push_back({id, cid});
    }
  }
  std::sort(fields.begin(), fields.end());
  return fields;
}

namespace {

// Backtracking over primitive fields in index order; a pair is added only if
// both simplices are free and the band digraph stays acyclic.
struct MatchingEnumerator {
  const SimplicialComplex& K;
  const std::vector<GvfPair>& fields;
  const Limits& limits;
  std::vector<GvfPair> current;
  std::vector<char> used;  // per simplex id
  std::vector<std::vector<GvfPair>> out;

  void emit() {
    if (static_cast<long long>(out.size()) >= limits.max_matchings) {
      throw GuardExceeded("matching enumeration guard exceeded");
    }
    out.push_back(current);
  }

  void rec(std::size_t idx) {
    if (idx == fields.size()) {
      emit();
      return;
    }
    // exclude fields[idx]
    rec(idx + 1);
    // include it, if valid
    const GvfPair& p = fields[idx];
    if (!used[p.alpha] && !used[p.sigma]) {
      current.push_back(p);
      if (is_acyclic(K, current)) {
        used[p.alpha] = used[p.sigma] = 1;
        rec(idx + 1);
        used[p.alpha] = used[p.sigma] = 0;
      }
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<GradientVectorField> enumerate_matchings(const SimplicialComplex& K,
                                                     const Limits& limits) {
  (void)limits;
  auto fields = primitive_fields(K);
  MatchingEnumerator e{K, fields, limits, {}, std::vector<char>(K.size(), 0), {}};
  e.rec(0);
  std::sort(e.out.begin(), e.out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<GradientVectorField> result;
  result.reserve(e.out.size());
  for (auto& pairs : e.out) result.emplace_back(K, std::move(pairs));
  return result;
}

std::vector<long long> MorseFunctionComplex::f_vector() const {
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.size());
  std::vector<long long> fv(top, 0);
  for (const auto& f : faces) {
    if (!f.empty()) fv[f.size() - 1]++;
  }
  return fv;
}

MorseFunctionComplex build_morse_function_complex(const SimplicialComplex& K, bool augmented,
                                                  const Limits& limits) {
  (void)limits;
  MorseFunctionComplex mfc;
  mfc.K = &K;
  mfc.fields = primitive_fields(K);
  mfc.augmented = augmented;

  std::map<GvfPair, int> index;
  for (std::size_t i = 0; i < mfc.fields.size(); ++i) {
    index[mfc.fields[i]] = static_cast<int>(i);
  }
  auto matchings = enumerate_matchings(K, limits);
  for (const auto& V : matchings) {
    if (V.empty()) continue;
    std::vector<int> face;
    for (const auto& p : V.pairs()) face.push_back(index.at(p));
    std::sort(face.begin(), face.end());
    mfc.faces.push_back(std::move(face));

    // Downward closure: dropping any pair of an acyclic matching must leave
    // an acyclic matching. Definition-level assumption, asserted here.
    if (V.size() > 1) {
      for (const auto& p : V.pairs()) {
        if (!is_acyclic(K, V.without_pair(K, p).pairs())) {
          throw std::logic_error("acyclic matchings are not downward closed");
        }
      }
    }
  }
  std::sort(mfc.faces.begin(), mfc.faces.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return mfc;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ConnectivityReport connectivity_report(const MorseFunctionComplex& mfc, bool with_betti,
                                       const Limits& limits) {
  (void)limits;
  ConnectivityReport rep;
  std::map<std::vector<int>, int> node;
  for (const auto& f : mfc.faces) node[f] = static_cast<int>(node.size());
  if (mfc.augmented) node[{}] = static_cast<int>(node.size());

  UnionFind uf(static_cast<int>(node.size()));
  for (const auto& f : mfc.faces) {
    if (f.size() == 1 && !mfc.augmented) continue;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != drop) sub.push_back(f[i]);
      }
      if (sub.empty() && !mfc.augmented) continue;
      uf.unite(node.at(f), node.at(sub));
    }
  }
  rep.num_faces = static_cast<long long>(node.size());
  std::vector<int> roots;
  for (auto& [face, id] : node) roots.push_back(uf.find(id));
  std::sort(roots.begin(), roots.end());
  rep.components = std::unique(roots.begin(), roots.end()) - roots.begin();

  if (with_betti && !mfc.faces.empty()) {
    rep.betti = simplicial_betti(as_simplicial_complex(mfc));
  }
  return rep;
}

std::string covering_graph_dot(const MorseFunctionComplex& mfc) {
  const SimplicialComplex& K = *mfc.K;
  auto label = [&](const std::vector<int>& face) {
    if (face.empty()) return std::string("{}");
    std::ostringstream os;
    for (std::size_t i = 0; i < face.size(); ++i) {
      const GvfPair& p = mfc.fields[face[i]];
      if (i) os << ", ";
      os << "(" << K.simplex(p.alpha).str() << " | " << K.simplex(p.sigma).str() << ")";
    }
    return os.str();
  };
  std::map<std::vector<int>, int> node;
  for (const auto& f : mfc.faces) node[f] = static_cast<int>(node.size());
  if (mfc.augmented) node[{}] = static_cast<int>(node.size());

  std::ostringstream os;
  os << "graph morse_space {\n";
  for (const auto& [face, id] : node) {
    os << "  n" << id << " [label=\"" << label(face) << "\"];\n";
  }
  for (const auto& f : mfc.faces) {
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != drop) sub.push_back(f[i]);
      }
      if (sub.empty() && !mfc.augmented) continue;
      if (auto it = node.find(sub); it != node.end()) {
        os << "  n" << it->second << " -- n" << node.at(f) << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

GradientVectorField random_matching(const SimplicialComplex& K, Rng& rng) {
  auto fields = primitive_fields(K);
  for (std::size_t i = fields.size(); i > 1; --i) {
    std::swap(fields[i - 1], fields[rng.below(i)]);
  }
  std::vector<char> used(K.size(), 0);
  std::vector<GvfPair> pairs;
  for (const auto& p : fields) {
    if (used[p.alpha] || used[p.sigma] || !rng.coin()) continue;
    pairs.push_back(p);
    if (is_acyclic(K, pairs)) {
      used[p.alpha] = used[p.sigma] = 1;
    } else {
      pairs.pop_back();
    }
  }
  return GradientVectorField(K, std::move(pairs));
}

SimplicialComplex as_simplicial_complex(const MorseFunctionComplex& mfc) {
  if (mfc.faces.empty()) throw std::invalid_argument("empty Morse function complex");
  std::vector<Simplex> maximal;
  for (const auto& f : mfc.faces) maximal.emplace_back(f);
  return SimplicialComplex::from_maximal(maximal);
}

}  // namespace dmt

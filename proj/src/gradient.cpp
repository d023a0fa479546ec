#include "dmt/gradient.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace dmt {

GradientVectorField::GradientVectorField(const SimplicialComplex& K, std::vector<GvfPair> pairs)
    : pairs_(std::move(pairs)), partner_(K.size(), -1) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  for (const auto& p : pairs_) {
    if (p.alpha < 0 || p.sigma < 0 || p.alpha >= K.size() || p.sigma >= K.size()) {
      throw std::invalid_argument("gradient pair references unknown simplex");
    }
    bool is_facet = false;
    for (auto [fid, sign] : K.facets_of(p.sigma)) {
      (void)sign;
      if (fid == p.alpha) is_facet = true;
    }
    if (!is_facet) {
      throw std::invalid_argument("gradient pair (" + K.simplex(p.alpha).str() + " | " +
                                  K.simplex(p.sigma).str() + ") is not a covering pair");
    }
    if (partner_[p.alpha] != -1 || partner_[p.sigma] != -1) {
      throw std::invalid_argument("simplex matched twice");
    }
    partner_[p.alpha] = p.sigma;
    partner_[p.sigma] = p.alpha;
  }
}

bool GradientVectorField::contains(const GvfPair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

GradientVectorField GradientVectorField::with_pair(const SimplicialComplex& K, GvfPair p) const {
  auto pairs = pairs_;
  pairs.push_back(p);
  return GradientVectorField(K, std::move(pairs));
}

GradientVectorField GradientVectorField::without_pair(const SimplicialComplex& K,
                                                      GvfPair p) const {
  std::vector<GvfPair> pairs;
  for (const auto& q : pairs_) {
    if (!(q == p)) pairs.push_back(q);
  }
  if (pairs.size() == pairs_.size()) throw std::invalid_argument("pair not present");
  return GradientVectorField(K, std::move(pairs));
}

namespace {

// DFS cycle detection in one band of the modified Hasse digraph.
struct BandCycleSearch {
  const SimplicialComplex& K;
  const std::vector<int>& partner;
  int band_p;
  std::map<int, int> color;  // 0 white (absent), 1 gray, 2 black
  std::vector<int> stack;

  std::optional<std::vector<int>> visit(int node) {
    color[node] = 1;
    stack.push_back(node);
    auto out = [&](int next) -> std::optional<std::vector<int>> {
      int c = color.count(next) ? color[next] : 0;
      if (c == 1) {
        auto it = std::find(stack.begin(), stack.end(), next);
        std::vector<int> cyc(it, stack.end());
        cyc.push_back(next);
        return cyc;
      }
      if (c == 0) return visit(next);
      return std::nullopt;
    };

    if (K.dim_of(node) == band_p) {
      int up = partner[node];
      if (up >= 0 && K.dim_of(up) == band_p + 1) {
        if (auto cyc = out(up)) return cyc;
      }
    } else {
      int down_partner = partner[node];
      for (auto [fid, sign] : K.facets_of(node)) {
        (void)sign;
        if (fid == down_partner) continue;
        if (auto cyc = out(fid)) return cyc;
      }
    }
    stack.pop_back();
    color[node] = 2;
    return std::nullopt;
  }
};

std::vector<int> build_partner(const SimplicialComplex& K, const std::vector<GvfPair>& pairs) {
  std::vector<int> partner(K.size(), -1);
  for (const auto& p : pairs) {
    if (p.alpha < 0 || p.sigma < 0 || p.alpha >= K.size() || p.sigma >= K.size()) {
      throw std::invalid_argument("pair references unknown simplex");
    }
    if (K.dim_of(p.sigma) != K.dim_of(p.alpha) + 1) {
      throw std::invalid_argument("pair is not codimension 1");
    }
    if (partner[p.alpha] != -1 || partner[p.sigma] != -1) {
      throw std::invalid_argument("not a matching: simplex in two pairs");
    }
    partner[p.alpha] = p.sigma;
    partner[p.sigma] = p.alpha;
  }
  return partner;
}

}  // namespace

std::optional<CycleWitness> find_vpath_cycle(const SimplicialComplex& K,
                                             const std::vector<GvfPair>& pairs) {
  std::vector<int> partner = build_partner(K, pairs);
  for (int p = 0; p + 1 <= K.dimension(); ++p) {
    BandCycleSearch search{K, partner, p, {}, {}};
    for (int id = K.dim_begin(p); id < K.dim_end(p + 1); ++id) {
      if (search.color.count(id)) continue;
      if (auto cyc = search.visit(id)) return CycleWitness{*cyc};
    }
  }
  return std::nullopt;
}

bool is_acyclic(const SimplicialComplex& K, const std::vector<GvfPair>& pairs) {
  return !find_vpath_cycle(K, pairs).has_value();
}

std::vector<std::vector<int>> critical_set(const SimplicialComplex& K,
                                           const GradientVectorField& V) {
  std::vector<std::vector<int>> crit(K.dimension() + 1);
  for (int id = 0; id < K.size(); ++id) {
    if (!V.matched(id)) crit[K.dim_of(id)].push_back(id);
  }
  return crit;
}

DiscreteMorseFunction::DiscreteMorseFunction(const SimplicialComplex& K,
                                             std::vector<Rational> values)
    : values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != K.size()) {
    throw std::invalid_argument("discrete Morse function must assign a value to every simplex");
  }
}

DmfReport validate_dmf(const SimplicialComplex& K, const DiscreteMorseFunction& f) {
  DmfReport report;
  std::vector<char> exceptional_both(K.size(), 0);
  for (int id = 0; id < K.size(); ++id) {
    std::vector<int> up, down;
    for (auto [cid, sign] : K.cofacets_of(id)) {
      (void)sign;
      if (f.value(cid) <= f.value(id)) up.push_back(cid);
    }
    for (auto [fid, sign] : K.facets_of(id)) {
      (void)sign;
      if (f.value(id) <= f.value(fid)) down.push_back(fid);
    }
    if (up.size() > 1) report.violations.push_back({id, 1, up});
    if (down.size() > 1) report.violations.push_back({id, 2, down});
    if (!up.empty() && !down.empty()) exceptional_both[id] = 1;
  }
  // A function passing both counting conditions cannot give any simplex both
  // a descending cofacet and an ascending facet. Assert, do not assume.
  if (report.ok()) {
    for (int id = 0; id < K.size(); ++id) {
      if (exceptional_both[id]) {
        throw std::logic_error("exclusion violated for a condition-passing DMF");
      }
    }
  }
  return report;
}

GradientVectorField dmf_to_gvf(const SimplicialComplex& K, const DiscreteMorseFunction& f) {
  if (!validate_dmf(K, f).ok()) {
    throw std::invalid_argument("not a discrete Morse function");
  }
  std::vector<GvfPair> pairs;
  for (int id = 0; id < K.size(); ++id) {
    for (auto [cid, sign] : K.cofacets_of(id)) {
      (void)sign;
      if (f.value(cid) <= f.value(id)) pairs.push_back({id, cid});
    }
  }
  GradientVectorField V(K, std::move(pairs));
  if (!is_acyclic(K, V.pairs())) {
    throw std::logic_error("DMF induced a cyclic matching");
  }
  return V;
}

DiscreteMorseFunction gvf_to_dmf(const SimplicialComplex& K, const GradientVectorField& V) {
  if (!is_acyclic(K, V.pairs())) throw std::invalid_argument("gradient vector field is cyclic");

  // Contract each matched pair to one class, keep an arc class(alpha) ->
  // class(sigma) for every unmatched covering relation, then rank classes in
  // a deterministic topological order. Both pair members share the rank, so
  // f(alpha) = f(sigma) inside a pair and f is strictly increasing across
  // every other covering relation.
  std::vector<int> cls(K.size());
  for (int id = 0; id < K.size(); ++id) {
    int p = V.partner(id);
    cls[id] = (p >= 0) ? std::min(id, p) : id;
  }
  std::map<int, std::set<int>> succ;
  std::map<int, int> indeg;
  for (int id = 0; id < K.size(); ++id) indeg[cls[id]];
  for (int id = 0; id < K.size(); ++id) {
    for (auto [fid, sign] : K.facets_of(id)) {
      (void)sign;
      if (V.partner(id) == fid) continue;
      int from = cls[fid], to = cls[id];
      if (from != to && succ[from].insert(to).second) indeg[to]++;
    }
  }
  std::set<int> ready;
  for (auto& [c, d] : indeg) {
    if (d == 0) ready.insert(c);
  }
  std::map<int, long long> rank;
  long long next = 0;
  while (!ready.empty()) {
    int c = *ready.begin();
    ready.erase(ready.begin());
    rank[c] = next++;
    for (int t : succ[c]) {
      if (--indeg[t] == 0) ready.insert(t);
    }
  }
  if (rank.size() != indeg.size()) {
    throw std::logic_error("contracted Hasse digraph of an acyclic matching has a cycle");
  }
  std::vector<Rational> values(K.size());
  for (int id = 0; id < K.size(); ++id) values[id] = rank[cls[id]];
  return DiscreteMorseFunction(K, std::move(values));
}

namespace {

// Shared DFS over one band of the modified Hasse digraph. Every directed path
// in the band alternates up/down automatically, so V-paths of both kinds are
// exactly the directed paths here.
struct PathSearch {
  const SimplicialComplex& K;
  const GradientVectorField& V;
  int band_p;
  int target;
  SignMode mode;
  const Limits& limits;
  std::vector<GradientPath>* collect = nullptr;

  long long paths_found = 0;
  long long weight_sum = 0;
  std::vector<int> stack;

  void run(int from) { dfs(from, 1); }

  void dfs(int node, long long w) {
    stack.push_back(node);
    // an acyclic band never revisits a node, so this bound cannot trip
    if (static_cast<int>(stack.size()) > K.size() + 1) {
      throw std::logic_error("path revisited a node: cyclic matching");
    }
    if (node == target) {
      if (++paths_found > limits.max_paths) {
        throw GuardExceeded("path enumeration guard exceeded");
      }
      weight_sum += w;
      if (collect) collect->push_back({stack, w});
      stack.pop_back();
      return;
    }
    if (K.dim_of(node) == band_p) {
      int up = V.partner(node);
      if (up >= 0 && K.dim_of(up) == band_p + 1) {
        long long s = incidence(K.simplex(up), K.simplex(node));
        dfs(up, w * (mode == SignMode::alternating ? -s : s));
      }
    } else {
      int matched_facet = V.partner(node);
      for (auto [fid, sign] : K.facets_of(node)) {
        if (fid == matched_facet) continue;
        dfs(fid, w * sign);
      }
    }
    stack.pop_back();
  }
};

}  // namespace

long long path_weight_sum(const SimplicialComplex& K, const GradientVectorField& V, int from,
                          int to, int band_p, SignMode mode, const Limits& limits) {
  if (band_p < 0 || band_p >= K.dimension()) {
    throw std::invalid_argument("band out of range");
  }
  PathSearch search{K, V, band_p, to, mode, limits, nullptr, 0, 0, {}};
  search.run(from);
  return search.weight_sum;
}

std::vector<GradientPath> enumerate_paths(const SimplicialComplex& K,
                                          const GradientVectorField& V, int from, int to,
                                          PathKind kind, const Limits& limits) {
  if (K.dim_of(from) != K.dim_of(to)) {
    throw std::invalid_argument("path endpoints must share a dimension");
  }
  if (!is_acyclic(K, V.pairs())) throw std::invalid_argument("gradient vector field is cyclic");
  int q = K.dim_of(from);
  int band = (kind == PathKind::lower) ? q : q - 1;
  std::vector<GradientPath> out;
  if (band < 0 || band >= K.dimension()) {
    if (from == to) out.push_back({{from}, 1});
    return out;
  }
  PathSearch search{K, V, band, to, SignMode::alternating, limits, &out, 0, 0, {}};
  search.run(from);
  return out;
}

long long boundary_coefficient(const SimplicialComplex& K, const GradientVectorField& V,
                               int sigma, int alpha, const Limits& limits, SignMode mode) {
  if (K.dim_of(alpha) != K.dim_of(sigma) - 1) {
    throw std::invalid_argument("boundary coefficient requires consecutive dimensions");
  }
  return path_weight_sum(K, V, sigma, alpha, K.dim_of(alpha), mode, limits);
}

long long samedim_coefficient(const SimplicialComplex& K, const GradientVectorField& V,
                              int from, int to, const Limits& limits, SignMode mode) {
  if (K.dim_of(from) != K.dim_of(to)) {
    throw std::invalid_argument("same-dimension coefficient requires equal dimensions");
  }
  int q = K.dim_of(from);
  long long total = 0;
  bool counted_trivial = false;
  if (q >= 1) {
    total += path_weight_sum(K, V, from, to, q - 1, mode, limits);
    counted_trivial = true;
  }
  if (q < K.dimension()) {
    total += path_weight_sum(K, V, from, to, q, mode, limits);
    if (counted_trivial && from == to) total -= 1;
    counted_trivial = true;
  }
  if (!counted_trivial && from == to) total = 1;
  return total;
}

}  // namespace dmt

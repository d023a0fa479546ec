#pragma once

#include <optional>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/rational.hpp"

namespace dmt {

// A matched facet/cofacet pair, by simplex id. alpha is the lower member.
struct GvfPair {
  int alpha = -1;
  int sigma = -1;
  friend bool operator==(const GvfPair&, const GvfPair&) = default;
  friend auto operator<=>(const GvfPair&, const GvfPair&) = default;
};

// An acyclic matching on the Hasse diagram, the canonical representative of a
// discrete Morse function. Construction validates the facet relation and the
// matching property; acyclicity is checked separately (is_acyclic) because
// candidate matchings are legitimate inputs.
class GradientVectorField {
 public:
  GradientVectorField() = default;
  GradientVectorField(const SimplicialComplex& K, std::vector<GvfPair> pairs);

  const std::vector<GvfPair>& pairs() const { return pairs_; }
  int partner(int id) const {
    return id < static_cast<int>(partner_.size()) ? partner_[id] : -1;
  }
  bool matched(int id) const { return partner(id) >= 0; }
  bool contains(const GvfPair& p) const;
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  GradientVectorField with_pair(const SimplicialComplex& K, GvfPair p) const;
  GradientVectorField without_pair(const SimplicialComplex& K, GvfPair p) const;

  friend bool operator==(const GradientVectorField& a, const GradientVectorField& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  std::vector<GvfPair> pairs_;   // sorted by (alpha, sigma)
  std::vector<int> partner_;     // indexed by simplex id, -1 if unmatched
};

// A closed nontrivial V-path, as the node sequence of the directed cycle
// (first node repeated at the end).
struct CycleWitness {
  std::vector<int> nodes;
};

// Cycle detection on the modified Hasse digraph, band by band: matched pairs
// point upward, every other covering relation downward. Throws
// std::invalid_argument if `pairs` is not a matching.
std::optional<CycleWitness> find_vpath_cycle(const SimplicialComplex& K,
                                             const std::vector<GvfPair>& pairs);
bool is_acyclic(const SimplicialComplex& K, const std::vector<GvfPair>& pairs);

// Unmatched simplices, by dimension (ids, sorted).
std::vector<std::vector<int>> critical_set(const SimplicialComplex& K,
                                           const GradientVectorField& V);

// A discrete Morse function: one rational value per simplex, total on K.
class DiscreteMorseFunction {
 public:
  DiscreteMorseFunction(const SimplicialComplex& K, std::vector<Rational> values);
  const Rational& value(int id) const { return values_[id]; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

struct DmfViolation {
  int simplex_id = -1;
  int condition = 0;            // 1: too many descending cofacets, 2: facets
  std::vector<int> witnesses;   // the offending neighbor ids
};

struct DmfReport {
  std::vector<DmfViolation> violations;
  bool ok() const { return violations.empty(); }
};

DmfReport validate_dmf(const SimplicialComplex& K, const DiscreteMorseFunction& f);

// Gradient pairs (alpha, sigma) with f(alpha) >= f(sigma). Requires a valid
// DMF; asserts (rather than assumes) that no simplex lands in two pairs and
// that the result is acyclic.
GradientVectorField dmf_to_gvf(const SimplicialComplex& K, const DiscreteMorseFunction& f);

// A DMF realizing V exactly: dmf_to_gvf(K, gvf_to_dmf(K, V)) == V. Values are
// topological-order ranks of the pair-contracted modified Hasse digraph, with
// both members of a pair sharing one value.
DiscreteMorseFunction gvf_to_dmf(const SimplicialComplex& K, const GradientVectorField& V);

enum class PathKind { lower, upper };
enum class SignMode { alternating, plain };

// An alternating V-path as a node sequence; weight is the product of step
// factors, -[beta:alpha_in]*[beta:alpha_out] per step, 1 for the trivial path.
struct GradientPath {
  std::vector<int> nodes;
  long long weight = 1;
};

// All V-paths between two simplices of equal dimension. Lower paths run in
// the (dim, dim+1) band starting with a matched up-step; upper paths run in
// the (dim-1, dim) band starting with a down-step. Includes the trivial path
// when from == to. Throws GuardExceeded past limits.max_paths.
std::vector<GradientPath> enumerate_paths(const SimplicialComplex& K,
                                          const GradientVectorField& V, int from, int to,
                                          PathKind kind, const Limits& limits = {});

// Sum of signed path weights over every directed path from `from` to `to` in
// the band (p, p+1) digraph. Under SignMode::alternating an up-arc alpha->sigma
// weighs -[sigma:alpha] and a down-arc weighs +[sigma:alpha]; plain mode drops
// the minus. Precondition: V acyclic.
long long path_weight_sum(const SimplicialComplex& K, const GradientVectorField& V, int from,
                          int to, int band_p, SignMode mode, const Limits& limits = {});

// Boundary-mode coefficient: paths from sigma (dim q) down through the
// (q-1, q) band to alpha (dim q-1); equals [sigma:alpha] plus longer-path
// terms when alpha is a facet.
long long boundary_coefficient(const SimplicialComplex& K, const GradientVectorField& V,
                               int sigma, int alpha, const Limits& limits = {},
                               SignMode mode = SignMode::alternating);

// Same-dimension coefficient: the trivial path (when from == to) plus upper
// paths through the band below plus lower paths through the band above.
long long samedim_coefficient(const SimplicialComplex& K, const GradientVectorField& V,
                              int from, int to, const Limits& limits = {},
                              SignMode mode = SignMode::alternating);

}  // namespace dmt

#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "dmt/morse_complex.hpp"

namespace dmt {

enum class MapTag { identity, birth, death, composite, generic };
enum class Direction { birth, death };

// A detected birth/death transition between two gradient vector fields whose
// critical sets differ by exactly one pair (alpha_tilde, sigma_tilde) in
// consecutive dimensions. k = n(sigma_tilde, alpha_tilde) in the field where
// both are critical; k != 0 by definition. `direction` classifies the map
// from the first field to the second: into the larger critical set is birth.
struct TransitionPair {
  int alpha_tilde = -1;
  int sigma_tilde = -1;
  long long k = 0;
  int dim_i = 0;  // dimension of sigma_tilde
  Direction direction = Direction::birth;
};

// Per-dimension rational matrices between two Morse chain complexes;
// M[q] maps source basis to target basis.
struct ChainMap {
  std::shared_ptr<const MorseChainComplex> src, tgt;
  std::vector<Mat> M;
  MapTag tag = MapTag::generic;
  std::optional<TransitionPair> pair;
};

using ComplexPtr = std::shared_ptr<const MorseChainComplex>;

ComplexPtr make_complex(const SimplicialComplex& K, const GradientVectorField& V,
                        const Limits& limits = {});

// The connectedness homomorphism from src to tgt: entries are same-dimension
// path counts in the source field for q >= 1 and in the target field for
// q = 0. Generally not a chain map; callers must verify.
ChainMap connectedness_map(ComplexPtr src, ComplexPtr tgt, const Limits& limits = {});

// Classifies the pair (V1, V2); nullopt when the critical-count conditions of
// a single birth/death transition do not hold or k = 0.
std::optional<TransitionPair> detect_transition(const SimplicialComplex& K,
                                                const GradientVectorField& V1,
                                                const GradientVectorField& V2,
                                                const Limits& limits = {});

// The transition chain map from src to tgt for a detected pair. Birth maps
// use source-field paths for q >= 1 and target-field paths for q = 0; death
// maps use target-field paths in every dimension (the side holding the extra
// matched pair), which is the reading under which the chain-map and homotopy
// identities hold exactly.
ChainMap transition_map(ComplexPtr src, ComplexPtr tgt, const TransitionPair& pair,
                        const Limits& limits = {});

struct ChainMapFailure {
  int q = -1;
  int col = -1;
};

// Checks D^tgt_q M_q == M_{q-1} D^src_q for all q; nullopt means pass.
std::optional<ChainMapFailure> verify_chain_map(const ChainMap& m);

struct TransitionImageReport {
  bool h_off_dim_identity = false;
  bool h_dim_i_formula = false;
  bool g_identity_rows = false;
  bool g_sigma_zero = false;
  bool g_alpha_formula = false;
  bool pass() const {
    return h_off_dim_identity && h_dim_i_formula && g_identity_rows && g_sigma_zero &&
           g_alpha_formula;
  }
};

// Entrywise verification of the birth/death image formulas against freshly
// computed path counts. h must be the birth map, g the death map.
TransitionImageReport verify_transition_images(const TransitionPair& pair, const ChainMap& h,
                                               const ChainMap& g, const Limits& limits = {});

struct BoundaryRelationReport {
  std::array<bool, 5> relation_pass = {false, false, false, false, false};
  // Big-field readings of relations 4 and 5, reported for reference; the
  // pinned readings live in relation_pass.
  bool relation4_literal_big_field = false;
  bool relation5_literal_big_field = false;
  bool pass() const {
    for (bool b : relation_pass) {
      if (!b) return false;
    }
    return true;
  }
};

// Evaluates the five boundary relations between the two complexes of a
// transition from independently recomputed path counts. `small` is the
// complex with fewer critical simplices (the side whose field carries the
// extra pair for adjacent transitions), `big` the other.
BoundaryRelationReport verify_boundary_relations(const MorseChainComplex& small,
                                                 const MorseChainComplex& big,
                                                 const TransitionPair& pair,
                                                 const Limits& limits = {});

struct ChainHomotopy {
  std::vector<Mat> s;  // s[q]: C_q -> C_{q+1} on the big-critical side
};

struct HomotopyReport {
  ChainHomotopy s;
  bool gh_identity = false;    // g o h == id on the small side
  bool hg_homotopic = false;   // h o g - id == ds + sd on the big side
  bool k_unit = false;         // |k| == 1
  bool integral = false;       // all of h, g, s integral
  bool pass() const { return gh_identity && hg_homotopic && (!k_unit || integral); }
};

// Builds s(alpha_tilde) = -(1/k) sigma_tilde (zero elsewhere) and verifies
// both chain-homotopy identities exactly over Q. h: small -> big must be the
// birth map and g: big -> small the death map.
HomotopyReport chain_homotopy(const TransitionPair& pair, const ChainMap& h, const ChainMap& g);

enum class ConnectPolicy { full, shortcut };

struct TransitionSequence {
  std::vector<GradientVectorField> gvfs;  // W_0 = V1, ..., W_m = V2
  std::vector<ChainMap> steps;            // steps[j]: C^{W_j} -> C^{W_j+1}
  ChainMap composite;
};

// Under the full policy V1's pairs are removed one at a time (births) down
// to the empty field, then V2's pairs are inserted one at a time (deaths);
// the shortcut policy keeps V1 n V2 in place. Identical inputs produce an
// empty sequence with the identity map. Pairs are processed by descending
// dimension of sigma, then lexicographically. Every intermediate matching is
// asserted acyclic.
TransitionSequence connect(const SimplicialComplex& K, const GradientVectorField& V1,
                           const GradientVectorField& V2, ConnectPolicy policy,
                           const Limits& limits = {});

struct CertifyReport {
  std::vector<long long> betti_src, betti_tgt, induced_ranks;
  bool pass = false;
};

// Verifies the composite map induces an isomorphism on homology over Q: the
// Betti vectors agree and the induced map has full rank in every degree.
CertifyReport certify_iso(const TransitionSequence& seq);

}  // namespace dmt

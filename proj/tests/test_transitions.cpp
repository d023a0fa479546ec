#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmt/morse_space.hpp"
#include "dmt/rng.hpp"
#include "dmt/transitions.hpp"
#include "fixtures.hpp"

using namespace dmt;
namespace fx = dmt::fixtures;

namespace {

bool is_identity_map(const ChainMap& m) {
  if (m.src->basis != m.tgt->basis) return false;
  for (const auto& mat : m.M) {
    if (!mat.is_identity()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("connectedness map on the edge: empty field into the matched field") {
  auto K = fx::edge();
  auto c1 = make_complex(K, GradientVectorField{});
  auto c2 = make_complex(K, GradientVectorField(K, {fx::pair_of(K, {0}, {0, 1})}));
  auto h = connectedness_map(c1, c2);
  CHECK(h.tag == MapTag::generic);

  // h0: a -> b via the target-field path a -> e -> b, b -> b; h1: e -> 0.
  REQUIRE(h.M[0].rows() == 1);
  REQUIRE(h.M[0].cols() == 2);
  int col_a = c1->basis_index(0, fx::id(K, {0}));
  int col_b = c1->basis_index(0, fx::id(K, {1}));
  CHECK(h.M[0](0, col_a) == Rational(1));
  CHECK(h.M[0](0, col_b) == Rational(1));
  CHECK(h.M[1].rows() == 0);
  CHECK(h.M[1].cols() == 1);
}

TEST_CASE("identical fields give identity maps both ways") {
  auto T = fx::triangle_graph();
  GradientVectorField V(T, {fx::pair_of(T, {0}, {0, 1})});
  auto c = make_complex(T, V);
  auto m = connectedness_map(c, c);
  CHECK(is_identity_map(m));
  CHECK_FALSE(verify_chain_map(m).has_value());
}

TEST_CASE("h = g = id forces equal fields on one-dimensional complexes") {
  for (const auto& [name, K] :
       {fx::NamedComplex{"edge", fx::edge()},
        fx::NamedComplex{"triangle_graph", fx::triangle_graph()}}) {
    CAPTURE(name);
    auto matchings = enumerate_matchings(K);
    std::vector<ComplexPtr> complexes;
    for (const auto& V : matchings) complexes.push_back(make_complex(K, V));
    for (std::size_t i = 0; i < matchings.size(); ++i) {
      for (std::size_t j = 0; j < matchings.size(); ++j) {
        if (i == j) continue;
        bool h_id = is_identity_map(connectedness_map(complexes[i], complexes[j]));
        bool g_id = is_identity_map(connectedness_map(complexes[j], complexes[i]));
        CHECK_FALSE((h_id && g_id));
      }
    }
  }
}

TEST_CASE("distinct fields can share identity connectedness maps in dimension 2") {
  // Frozen counterexample to the naive converse: both matchings pair the same
  // four simplices, no gradient path joins distinct criticals in either
  // field, so h = g = id although the fields differ.
  auto K = fx::filled_triangle();
  GradientVectorField V1(K, {fx::pair_of(K, {0}, {0, 1}), fx::pair_of(K, {0, 2}, {0, 1, 2})});
  GradientVectorField V2(K, {fx::pair_of(K, {0}, {0, 2}), fx::pair_of(K, {0, 1}, {0, 1, 2})});
  auto c1 = make_complex(K, V1);
  auto c2 = make_complex(K, V2);
  CHECK(is_identity_map(connectedness_map(c1, c2)));
  CHECK(is_identity_map(connectedness_map(c2, c1)));
  CHECK_FALSE(V1 == V2);
  // here the two Morse complexes even coincide
  CHECK(c1->basis == c2->basis);
  CHECK(c1->D == c2->D);
}

TEST_CASE("detect_transition on the edge") {
  auto K = fx::edge();
  GradientVectorField empty;
  GradientVectorField V(K, {fx::pair_of(K, {0}, {0, 1})});

  auto death = detect_transition(K, empty, V);
  REQUIRE(death.has_value());
  CHECK(death->direction == Direction::death);
  CHECK(death->alpha_tilde == fx::id(K, {0}));
  CHECK(death->sigma_tilde == fx::id(K, {0, 1}));
  CHECK(death->k == -1);
  CHECK(death->dim_i == 1);

  auto birth = detect_transition(K, V, empty);
  REQUIRE(birth.has_value());
  CHECK(birth->direction == Direction::birth);
  CHECK(birth->k == -1);

  CHECK_FALSE(detect_transition(K, V, V).has_value());
  CHECK_FALSE(detect_transition(K, empty, empty).has_value());
}

TEST_CASE("detect_transition rejects equal critical counts with different sets") {
  auto K = fx::edge();
  GradientVectorField Va(K, {fx::pair_of(K, {0}, {0, 1})});
  GradientVectorField Vb(K, {fx::pair_of(K, {1}, {0, 1})});
  CHECK_FALSE(detect_transition(K, Va, Vb).has_value());
}

TEST_CASE("hexagon transition: pair, k, and the birth images") {
  auto K = fx::hexagon();
  auto V1 = fx::hexagon_v1(K);
  auto V2 = fx::hexagon_v2(K);

  auto pair = detect_transition(K, V1, V2);
  REQUIRE(pair.has_value());
  CHECK(pair->direction == Direction::birth);
  CHECK(pair->alpha_tilde == fx::id(K, {1}));
  CHECK(pair->sigma_tilde == fx::id(K, {1, 5}));
  CHECK(pair->k == -1);
  CHECK(pair->dim_i == 1);

  auto c1 = make_complex(K, V1);
  auto c2 = make_complex(K, V2);
  auto h = transition_map(c1, c2, *pair);
  CHECK(h.tag == MapTag::birth);
  CHECK_FALSE(verify_chain_map(h).has_value());

  // h(e_i) = e_i + n(e_i, sigma) sigma with n = -1 for both critical edges
  int row_sigma = c2->basis_index(1, pair->sigma_tilde);
  int col_e1 = c1->basis_index(1, fx::id(K, {2, 3}));
  int col_e2 = c1->basis_index(1, fx::id(K, {1, 6}));
  CHECK(h.M[1](row_sigma, col_e1) == Rational(-1));
  CHECK(h.M[1](row_sigma, col_e2) == Rational(-1));
  CHECK(h.M[1](c2->basis_index(1, fx::id(K, {2, 3})), col_e1) == Rational(1));

  auto death_pair = detect_transition(K, V2, V1);
  REQUIRE(death_pair.has_value());
  auto g = transition_map(c2, c1, *death_pair);
  CHECK(g.tag == MapTag::death);
  CHECK_FALSE(verify_chain_map(g).has_value());
  CHECK(verify_transition_images(*pair, h, g).pass());
  CHECK(verify_boundary_relations(*c1, *c2, *pair).pass());

  auto hom = chain_homotopy(*pair, h, g);
  CHECK(hom.pass());
  CHECK(hom.k_unit);
  CHECK(hom.integral);
  // s(alpha) = -(1/k) sigma = +sigma
  CHECK(hom.s.s[0](c2->basis_index(1, pair->sigma_tilde),
                   c2->basis_index(0, pair->alpha_tilde)) == Rational(1));
}

TEST_CASE("filled triangle death map cancels the pair") {
  auto K = fx::filled_triangle();
  GradientVectorField U;  // empty: everything critical
  GradientVectorField W(K, {fx::pair_of(K, {0, 1}, {0, 1, 2})});
  auto cu = make_complex(K, U);
  auto cw = make_complex(K, W);

  auto pair = detect_transition(K, U, W);
  REQUIRE(pair.has_value());
  CHECK(pair->direction == Direction::death);
  CHECK(pair->alpha_tilde == fx::id(K, {0, 1}));
  CHECK(pair->sigma_tilde == fx::id(K, {0, 1, 2}));
  CHECK(pair->k == 1);

  auto g = transition_map(cu, cw, *pair);
  CHECK_FALSE(verify_chain_map(g).has_value());

  // g(t) = 0; g(ab) = ac - bc
  int col_t = cu->basis_index(2, fx::id(K, {0, 1, 2}));
  for (std::size_t r = 0; r < g.M[2].rows(); ++r) CHECK(g.M[2](r, col_t).is_zero());
  int col_ab = cu->basis_index(1, fx::id(K, {0, 1}));
  CHECK(g.M[1](cw->basis_index(1, fx::id(K, {0, 2})), col_ab) == Rational(1));
  CHECK(g.M[1](cw->basis_index(1, fx::id(K, {1, 2})), col_ab) == Rational(-1));

  auto bp = detect_transition(K, W, U);
  REQUIRE(bp.has_value());
  auto h = transition_map(cw, cu, *bp);
  CHECK_FALSE(verify_chain_map(h).has_value());
  CHECK(verify_transition_images(*bp, h, g).pass());
  CHECK(verify_boundary_relations(*cw, *cu, *bp).pass());
  CHECK(chain_homotopy(*bp, h, g).pass());
}

TEST_CASE("generic maps between far-apart fields can fail the chain condition") {
  // Regression fixture: on the filled triangle the source-field map from
  // {(0 | 01)} to {(01 | 012)} breaks at degree 1, column 0.
  auto K = fx::filled_triangle();
  GradientVectorField V1(K, {fx::pair_of(K, {0}, {0, 1})});
  GradientVectorField V2(K, {fx::pair_of(K, {0, 1}, {0, 1, 2})});
  auto m = connectedness_map(make_complex(K, V1), make_complex(K, V2));
  auto fail = verify_chain_map(m);
  REQUIRE(fail.has_value());
  CHECK(fail->q == 1);
  CHECK(fail->col == 0);
}

TEST_CASE("exhaustive covering relations: chain maps, image formulas, homotopy") {
  for (const auto& [name, K] :
       {fx::NamedComplex{"edge", fx::edge()},
        fx::NamedComplex{"triangle_graph", fx::triangle_graph()},
        fx::NamedComplex{"filled_triangle", fx::filled_triangle()}}) {
    CAPTURE(name);
    for (const auto& W : enumerate_matchings(K)) {
      for (const auto& p : W.pairs()) {
        auto U = W.without_pair(K, p);
        auto cu = make_complex(K, U);
        auto cw = make_complex(K, W);
        auto bp = detect_transition(K, W, U);
        auto dp = detect_transition(K, U, W);
        REQUIRE(bp.has_value());
        REQUIRE(dp.has_value());
        CHECK(bp->alpha_tilde == p.alpha);
        CHECK(bp->sigma_tilde == p.sigma);
        CHECK((bp->k == 1 || bp->k == -1));  // covering relations force |k| = 1
        auto h = transition_map(cw, cu, *bp);
        auto g = transition_map(cu, cw, *dp);
        CHECK_FALSE(verify_chain_map(h).has_value());
        CHECK_FALSE(verify_chain_map(g).has_value());
        CHECK(verify_transition_images(*bp, h, g).pass());
        auto l33 = verify_boundary_relations(*cw, *cu, *bp);
        CHECK(l33.pass());
        CHECK(l33.relation5_literal_big_field);
        auto hom = chain_homotopy(*bp, h, g);
        CHECK(hom.pass());
        CHECK(hom.k_unit);
        CHECK(hom.integral);
      }
    }
  }
}

TEST_CASE("connect on the edge goes through the empty field") {
  auto K = fx::edge();
  GradientVectorField Va(K, {fx::pair_of(K, {0}, {0, 1})});
  GradientVectorField Vb(K, {fx::pair_of(K, {1}, {0, 1})});
  auto seq = connect(K, Va, Vb, ConnectPolicy::full);
  REQUIRE(seq.steps.size() == 2);
  REQUIRE(seq.gvfs.size() == 3);
  CHECK(seq.gvfs[1].empty());
  CHECK(seq.steps[0].tag == MapTag::birth);
  CHECK(seq.steps[1].tag == MapTag::death);
  auto cert = certify_iso(seq);
  CHECK(cert.pass);
  CHECK(cert.betti_src == std::vector<long long>{1, 0});
  // composite sends the surviving vertex b to a with coefficient +1
  REQUIRE(seq.composite.M[0].rows() == 1);
  REQUIRE(seq.composite.M[0].cols() == 1);
  CHECK(seq.composite.M[0](0, 0) == Rational(1));
}

TEST_CASE("connect with identical fields is empty") {
  auto K = fx::edge();
  GradientVectorField V(K, {fx::pair_of(K, {0}, {0, 1})});
  auto seq = connect(K, V, V, ConnectPolicy::full);
  CHECK(seq.steps.empty());
  CHECK(seq.composite.tag == MapTag::identity);
  CHECK(certify_iso(seq).pass);
}

TEST_CASE("hexagon: shortcut policy takes the one-step path") {
  auto K = fx::hexagon();
  auto V1 = fx::hexagon_v1(K);
  auto V2 = fx::hexagon_v2(K);

  auto seq = connect(K, V2, V1, ConnectPolicy::shortcut);
  REQUIRE(seq.steps.size() == 1);
  CHECK(seq.steps[0].tag == MapTag::death);
  CHECK(certify_iso(seq).pass);

  // the composite equals the direct transition map
  auto pair = detect_transition(K, V2, V1);
  REQUIRE(pair.has_value());
  auto direct = transition_map(make_complex(K, V2), make_complex(K, V1), *pair);
  for (int q = 0; q <= seq.composite.src->dim(); ++q) {
    CHECK(seq.composite.M[q] == direct.M[q]);
  }

  auto full = connect(K, V2, V1, ConnectPolicy::full);
  CHECK(full.steps.size() == V1.size() + V2.size());
  CHECK(certify_iso(full).pass);
}

TEST_CASE("connect certifies on random pairs") {
  Rng rng(31337);
  for (const auto& [name, K] :
       {fx::NamedComplex{"hexagon", fx::hexagon()},
        fx::NamedComplex{"tetrahedron_boundary", fx::tetrahedron_boundary()}}) {
    CAPTURE(name);
    for (int trial = 0; trial < 10; ++trial) {
      auto V1 = random_matching(K, rng);
      auto V2 = random_matching(K, rng);
      for (auto policy : {ConnectPolicy::full, ConnectPolicy::shortcut}) {
        auto seq = connect(K, V1, V2, policy);
        if (policy == ConnectPolicy::full && !(V1 == V2)) {
          CHECK(seq.steps.size() == V1.size() + V2.size());
        }
        for (const auto& step : seq.steps) {
          CHECK_FALSE(verify_chain_map(step).has_value());
        }
        CHECK(certify_iso(seq).pass);
      }
    }
  }
}

TEST_CASE("transitivity: concatenated sequences still certify") {
  auto K = fx::triangle_graph();
  GradientVectorField Va(K, {fx::pair_of(K, {0}, {0, 1})});
  GradientVectorField Vb(K, {fx::pair_of(K, {1}, {1, 2}), fx::pair_of(K, {0}, {0, 2})});
  GradientVectorField Vc(K, {fx::pair_of(K, {2}, {0, 2})});

  auto s1 = connect(K, Va, Vb, ConnectPolicy::full);
  auto s2 = connect(K, Vb, Vc, ConnectPolicy::full);

  TransitionSequence joined;
  joined.gvfs = s1.gvfs;
  joined.gvfs.insert(joined.gvfs.end(), s2.gvfs.begin() + 1, s2.gvfs.end());
  joined.steps = s1.steps;
  joined.steps.insert(joined.steps.end(), s2.steps.begin(), s2.steps.end());
  joined.composite.src = s1.composite.src;
  joined.composite.tgt = s2.composite.tgt;
  joined.composite.tag = MapTag::composite;
  joined.composite.M.resize(joined.composite.src->dim() + 1);
  for (int q = 0; q <= joined.composite.src->dim(); ++q) {
    joined.composite.M[q] = s2.composite.M[q] * s1.composite.M[q];
  }
  for (std::size_t j = 0; j + 1 < joined.gvfs.size(); ++j) {
    int diff = 0;
    for (const auto& p : joined.gvfs[j].pairs()) {
      if (!joined.gvfs[j + 1].contains(p)) ++diff;
    }
    for (const auto& p : joined.gvfs[j + 1].pairs()) {
      if (!joined.gvfs[j].contains(p)) ++diff;
    }
    CHECK(diff == 1);
  }
  CHECK(certify_iso(joined).pass);
}

TEST_CASE("alternating critical-count sum is constant along sequences") {
  auto K = fx::hexagon();
  Rng rng(7);
  auto V1 = random_matching(K, rng);
  auto V2 = random_matching(K, rng);
  auto seq = connect(K, V1, V2, ConnectPolicy::full);
  long long expected = K.euler_characteristic();
  for (const auto& V : seq.gvfs) {
    long long sum = 0;
    auto crit = critical_set(K, V);
    for (std::size_t q = 0; q < crit.size(); ++q) {
      sum += (q % 2 == 0) ? static_cast<long long>(crit[q].size())
                          : -static_cast<long long>(crit[q].size());
    }
    CHECK(sum == expected);
  }
}

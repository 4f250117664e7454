#include "goldens.hpp"

#include <doctest.h>

using namespace brauer;
namespace gold = testing::goldens;

TEST_CASE("quivers of G1..G4") {
  for (int k = 1; k <= 4; ++k) {
    auto r = gold::quiver(k);
    CHECK_MESSAGE(r.ok, r.detail);
  }
}

TEST_CASE("relations of B1..B4") {
  for (int k = 1; k <= 4; ++k)
    for (bool minimal : {false, true}) {
      auto r = gold::relations(k, minimal);
      CHECK_MESSAGE(r.ok, r.detail);
    }
}

TEST_CASE("projectives of B1..B4") {
  for (int k = 1; k <= 4; ++k) {
    auto r = gold::projectives(k);
    CHECK_MESSAGE(r.ok, r.detail);
    auto o = gold::projectives_vs_oracle(k);
    CHECK_MESSAGE(o.ok, o.detail);
  }
}

TEST_CASE("B1 P2 is uniserial of dimension 10") {
  auto p = projective(testing::graph("g1"), "2");
  CHECK(p.dimension == 10);
  CHECK(p.branches.size() == 1);
}

TEST_CASE("special cycles at a loop") {
  auto cs = special_cycles(testing::graph("g2"));
  int at_one = 0;
  for (const auto& c : cs)
    if (c.vertex == "a" && c.start == "1") ++at_one;
  CHECK(at_one == 2);
  for (const auto& c : cs) CHECK(c.arrows.size() == (c.vertex == "a" ? 4u : 3u));
}

TEST_CASE("single edge with two truncated ends") {
  auto g = testing::graph("single_edge");
  auto q = build_quiver(g);
  REQUIRE(q.degenerate);
  CHECK(q.arrows.size() == 1);
  CHECK(q.arrows[0].source == q.arrows[0].target);
  CHECK(algebra_dimension(g) == 2);
  auto rs = relations(g);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].kind == RelationKind::III);
  CHECK(rs[0].terms[0].size() == 2);
}

TEST_CASE("loop at a leaf of multiplicity > 1 carries no type III relation on itself") {
  auto p = presentation(testing::graph("g1"));
  int eps = p.quiver.arrow_index("a.0");
  REQUIRE(eps >= 0);
  for (const auto& r : p.relations)
    if (r.kind == RelationKind::III) CHECK(r.terms[0] != Path{eps, eps});
}

TEST_CASE("type II relations in a minimal set follow the truncation rule") {
  auto mins = minimal_relations(testing::graph("g1"));
  int two = 0;
  for (const auto& r : mins) two += r.kind == RelationKind::II;
  CHECK(two == 2);
  for (const auto* f : {"g2", "g3", "g4"}) {
    for (const auto& r : minimal_relations(testing::graph(f))) CHECK(r.kind != RelationKind::II);
  }
}

TEST_CASE("path-count oracle on random graphs") {
  auto r = gold::prop_oracle(40, 5);
  CHECK_MESSAGE(r.ok, r.detail);
}

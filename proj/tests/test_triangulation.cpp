#include "goldens.hpp"

#include "brauer/triangulation.hpp"

#include <doctest.h>

using namespace brauer;
namespace gold = testing::goldens;

namespace {

DiscTriangulation tri(int n, const std::string& arcs) { return build_triangulation(n, parse_arcs(arcs, n)); }

} // namespace

TEST_CASE("hexagon ice quiver") {
  auto w = gold::hexagon_potential();
  CHECK_MESSAGE(w.ok, w.detail);
  auto r = gold::hexagon_relations();
  CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("frozen Jacobian relations against the Brauer quiver") {
  auto c = compare_frozen_vs_brauer(tri(6, "2-4,4-6,2-6"));
  CHECK(c.ok());
  CHECK(c.expected.size() == 3); // points 1, 3, 5 meet two arcs
  for (const auto& t : all_triangulations(7)) CHECK(compare_frozen_vs_brauer(t).ok());
}

TEST_CASE("single triangle") {
  auto t = tri(3, "");
  CHECK(triangles(t).size() == 1);
  auto iq = ice_quiver(t);
  CHECK(iq.frozen.size() == 3);
  CHECK(iq.potential.size() == 1);
  CHECK(frozen_relations(iq).empty());
  auto g = triangulation_graph(t);
  CHECK(g.edge_count() == 3);
  CHECK(parameters(t) == Parameters{0, 1, 3, 0});
}

TEST_CASE("9-gon parameters") {
  auto t = tri(9, "2-9,4-9,5-9,6-9,6-8,2-4");
  auto t1 = tri(9, "2-9,2-5,5-9,6-9,6-8,2-4");
  auto t2 = tri(9, "2-9,3-9,4-9,5-9,6-9,7-9");
  CHECK(parameters(t).boundary_triangles == 3);
  CHECK(parameters(t1).boundary_triangles == 3);
  CHECK(parameters(t2).boundary_triangles == 2);
  CHECK(ladkani_equivalent(t, t1));
  CHECK_FALSE(ladkani_equivalent(t, t2));
  CHECK(flip(t, {4, 9}) == t1);
  CHECK(flipped_arc(t, {4, 9}) == Arc{2, 5});
}

TEST_CASE("mirror images have the same parameters") {
  for (const auto& t : all_triangulations(8)) {
    std::vector<Arc> m;
    for (auto [i, j] : t.arcs) {
      int a = 9 - i, b = 9 - j;
      m.push_back({std::min(a, b), std::max(a, b)});
    }
    auto mt = build_triangulation(8, m);
    CHECK(parameters(mt) == parameters(t));
  }
}

TEST_CASE("triangulation counts are Catalan numbers") {
  std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 3; n <= 9; ++n) CHECK(all_triangulations(n).size() == catalan[n - 2]);
}

TEST_CASE("bad arc sets") {
  CHECK_THROWS_AS(tri(6, "1-4,2-5,1-3"), TriangulationError); // crossing
  CHECK_THROWS_AS(tri(6, "1-3"), TriangulationError);         // not maximal
  CHECK_THROWS_AS(tri(6, "1-2,1-3,1-4,1-5"), TriangulationError);
  CHECK_THROWS_AS(tri(6, "1-7,1-3,1-4"), TriangulationError);
  CHECK_THROWS_AS(flip(tri(5, "1-3,1-4"), {1, 2}), TriangulationError);
}

TEST_CASE("graph of a triangulation") {
  auto g = triangulation_graph(tri(6, "2-4,4-6,2-6"));
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 9);
  std::vector<std::string> at2;
  for (int h : g.cycle(g.vertex("2"))) at2.push_back(g.half_id(h));
  CHECK(at2 == std::vector<std::string>{"1-2@2", "2-6@2", "2-4@2", "2-3@2"});
}

TEST_CASE("flips agree with Kauer moves up to n = 9") {
  auto r = gold::prop_flip_kauer(9);
  CHECK_MESSAGE(r.ok, r.detail);
}

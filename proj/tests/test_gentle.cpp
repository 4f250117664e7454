#include "goldens.hpp"

#include "brauer/gentle.hpp"

#include <doctest.h>

using namespace brauer;
namespace gold = testing::goldens;

namespace {

GentlePresentation gentle(const std::string& name) { return load_gentle(testing::data("gentle/" + name + ".ga")); }

} // namespace

TEST_CASE("worked gentle examples") {
  for (auto r : {gold::gentle_example34(), gold::gentle_cuts(), gold::gentle_kalck()}) CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("maximal paths of the 9-gon tiling algebra") {
  auto mp = maximal_paths(gentle("ninegon"));
  std::set<std::string> names;
  for (const auto& m : mp.all()) names.insert(m.name());
  CHECK(names == std::set<std::string>{"a1a2a3", "b", "c", "d", "e_3", "e_5"});
  CHECK(mp.diagnostics.empty());
}

TEST_CASE("linear A2 gives a single edge plus two leaves") {
  auto p = gentle("linear");
  auto mp = maximal_paths(p);
  CHECK(mp.paths.size() == 1);
  CHECK(mp.trivial.size() == 2);
  auto g = gentle_graph(p);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("gentle axioms") {
  auto p = parse_gentle(R"({"vertices": [1, 2, 3, 4],
    "arrows": [{"id": "a", "source": 1, "target": 2}, {"id": "b", "source": 3, "target": 2},
               {"id": "c", "source": 4, "target": 2}], "relations": []})");
  auto d = validate_gentle(p);
  CHECK_FALSE(d.s0.ok);
  CHECK_FALSE(d.gentle());
  CHECK_THROWS_AS(gentle_graph(p), GentleError);

  auto q = parse_gentle(R"({"vertices": ["1", "2", "3"],
    "arrows": [{"id": "a", "source": "1", "target": "2"}, {"id": "b", "source": "2", "target": "3"},
               {"id": "c", "source": "2", "target": "3"}], "relations": []})");
  auto dq = validate_gentle(q);
  CHECK_FALSE(dq.s1.ok); // a has two continuations without relations
  CHECK(dq.s1.offenders == std::vector<std::string>{"a"});

  auto r = parse_gentle(R"({"vertices": ["1", "2", "3"],
    "arrows": [{"id": "a", "source": "1", "target": "2"}, {"id": "b", "source": "2", "target": "3"}],
    "relations": [["a", "b", "a"]]})");
  CHECK_FALSE(validate_gentle(r).s3.ok);

  CHECK_THROWS_AS(parse_gentle(R"({"format": "other", "vertices": [], "arrows": [], "relations": []})"), GentleError);
  auto dangling = parse_gentle(R"({"vertices": ["1"], "arrows": [{"id": "a", "source": "1", "target": "9"}],
    "relations": []})");
  CHECK_FALSE(validate_gentle(dangling).structural.empty());
}

TEST_CASE("trivial extension of a cut algebra recovers the graph") {
  auto g = testing::graph("g3");
  for (const auto& cut : enumerate_admissible_cuts(g)) {
    auto a = cut_algebra(g, cut);
    CHECK(validate_gentle(a).gentle());
    auto t = trivial_extension(a);
    IsoOptions o;
    o.preserve_edge_ids = true;
    CHECK(isomorphic(t.graph, g, o));
    CHECK(t.presentation.quiver.arrows.size() == build_quiver(g).arrows.size());
  }
}

TEST_CASE("admissible cuts") {
  CHECK(enumerate_admissible_cuts(testing::graph("triangle")).size() == 8);
  auto one = enumerate_admissible_cuts(testing::graph("single_edge"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].empty());
  CHECK_THROWS_AS(enumerate_admissible_cuts(testing::graph("g1")), GentleError);
  CHECK_THROWS_AS(cut_algebra(testing::graph("triangle"), {"1.0", "1.1", "2.0", "3.0"}), GentleError);
  CHECK_THROWS_AS(cut_algebra(testing::graph("triangle"), {"1.0", "2.0"}), GentleError);
}

TEST_CASE("serialization round trip") {
  auto p = gentle("kalck_a2");
  auto q = parse_gentle(serialize_gentle(p));
  CHECK(gentle_isomorphic(p, q));
  CHECK(q.relations == p.relations);
}

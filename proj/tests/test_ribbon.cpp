#include "goldens.hpp"

#include <doctest.h>

using namespace brauer;
using testing::graph;

TEST_CASE("G1 keeps its multiplicities through a round trip") {
  auto g = graph("g1");
  auto h = parse_graph(serialize_graph(g));
  CHECK(h == g);
  CHECK(h.multiplicity(h.vertex("a")) == 2);
  CHECK(h.multiplicity(h.vertex("c")) == 3);
  CHECK(valency(h, "d") == 4);
  CHECK(is_truncated(h, "2", "b"));
  CHECK_FALSE(is_truncated(h, "1", "a"));
}

TEST_CASE("faces and genus") {
  CHECK(faces(graph("g3")).genus == 0);
  CHECK(faces(graph("g3")).faces.size() == 3);
  CHECK(faces(graph("g4")).genus == 1);
  CHECK(faces(graph("g4")).faces.size() == 1);
  CHECK(faces(graph("single_loop")).faces.size() == 2);
  CHECK(faces(graph("nonplanar")).genus == 1);
}

TEST_CASE("G3 and G4 differ only in the cyclic order at b") {
  auto g3 = graph("g3"), g4 = graph("g4");
  CHECK_FALSE(isomorphic(g3, g4));
  CHECK(isomorphic(g3, g3));
  IsoOptions ids;
  ids.preserve_edge_ids = true;
  ids.preserve_vertex_ids = true;
  CHECK(isomorphic(g4, parse_graph(serialize_graph(g4)), ids));
}

namespace {

std::string where_of(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const GraphError& e) {
    return e.where();
  }
  return "<accepted>";
}

} // namespace

TEST_CASE("malformed graph files are rejected with a location") {
  const std::string edge = R"({"id": "1", "halves": ["h", "k"]})";
  auto file = [&](const std::string& verts, const std::string& edges) {
    return R"({"format": "brauer-graph/1", "vertices": [)" + verts + R"(], "edges": [)" + edges + "]}";
  };
  std::string u = R"({"id": "u", "multiplicity": 1, "cycle": ["h"]})";
  std::string v = R"({"id": "v", "multiplicity": 1, "cycle": ["k"]})";
  CHECK(where_of(file(u + "," + v, edge)) == "<accepted>");

  CHECK(where_of("{\"format\": ") != "<accepted>");
  CHECK(where_of(file(u, edge)) != "<accepted>");                       // k is never attached
  CHECK(where_of(file(u + "," + u, edge)) != "<accepted>");             // duplicate vertex
  CHECK(where_of(file(R"({"id": "u", "multiplicity": 0, "cycle": ["h"]})" + std::string(",") + v, edge)) !=
        "<accepted>");
  CHECK(where_of(file(u + "," + v, R"({"id": "1", "halves": ["h", "h"]})")) != "<accepted>");
  CHECK_THROWS_AS(load_graph(testing::data("graphs/missing.bg")), GraphError);
}

TEST_CASE("disconnected graphs are rejected") {
  GraphSpec s;
  s.vertices = {{"a", 1, {"x@a"}}, {"b", 1, {"x@b"}}, {"c", 1, {"y@c"}}, {"d", 1, {"y@d"}}};
  s.edges = {{"x", "x@a", "x@b"}, {"y", "y@c", "y@d"}};
  CHECK_THROWS_AS(BrauerGraph::from_spec(s), GraphError);
}

TEST_CASE("ι and σ on 200 random graphs") {
  auto r = testing::goldens::prop_ribbon(200, 11);
  CHECK_MESSAGE(r.ok, r.detail);
}

#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace brauer {

// Thrown for malformed or invalid graph data. where() names the offending
// location, e.g. "line 4, column 12" or "vertices[1].cycle[0]".
class GraphError : public std::runtime_error {
public:
  GraphError(std::string where, const std::string& what);
  const std::string& where() const { return where_; }
  const std::string& message() const { return message_; }

private:
  std::string where_;
  std::string message_;
};

struct VertexSpec {
  std::string id;
  int multiplicity = 1;
  std::vector<std::string> cycle; // clockwise successor order
};

struct EdgeSpec {
  std::string id;
  std::string first;
  std::string second;
};

struct GraphSpec {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
};

// Ribbon graph with multiplicities. Vertices, edges and half-edges are
// indexed in lexicographic order of their ids, and each vertex cycle is
// stored rotated to start at its least half-edge, so two graphs with the
// same data compare equal.
class BrauerGraph {
public:
  static BrauerGraph from_spec(const GraphSpec& spec);

  GraphSpec spec() const;

  int half_count() const { return static_cast<int>(halves_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& half_id(int h) const { return halves_[h].id; }
  const std::string& vertex_id(int v) const { return vertices_[v].id; }
  const std::string& edge_id(int e) const { return edges_[e].id; }

  std::optional<int> find_half(std::string_view id) const;
  std::optional<int> find_vertex(std::string_view id) const;
  std::optional<int> find_edge(std::string_view id) const;
  // Same as find_*, but throw GraphError for unknown ids.
  int half(std::string_view id) const;
  int vertex(std::string_view id) const;
  int edge(std::string_view id) const;

  int vertex_of(int h) const { return halves_[h].vertex; }
  int edge_of(int h) const { return halves_[h].edge; }
  int iota(int h) const { return halves_[h].partner; }
  int sigma(int h) const { return halves_[h].next; }
  int sigma_inv(int h) const { return halves_[h].prev; }

  int multiplicity(int v) const { return vertices_[v].multiplicity; }
  const std::vector<int>& cycle(int v) const { return vertices_[v].cycle; }
  int valency(int v) const { return static_cast<int>(vertices_[v].cycle.size()); }
  // position of h in the cycle of its vertex
  int position(int h) const { return halves_[h].position; }

  const std::array<int, 2>& halves_of(int e) const { return edges_[e].halves; }
  bool is_loop(int e) const;
  // m(v)·val(v) = 1 at the vertex of h
  bool truncated_at_half(int h) const;

  bool operator==(const BrauerGraph& other) const;
  bool operator!=(const BrauerGraph& other) const { return !(*this == other); }

private:
  struct Half {
    std::string id;
    int vertex = -1;
    int edge = -1;
    int partner = -1;
    int next = -1;
    int prev = -1;
    int position = -1;
  };
  struct Vertex {
    std::string id;
    int multiplicity = 1;
    std::vector<int> cycle;
  };
  struct Edge {
    std::string id;
    std::array<int, 2> halves{};
  };

  std::vector<Half> halves_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> half_index_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
};

BrauerGraph parse_graph(std::string_view text);
std::string serialize_graph(const BrauerGraph& g);
BrauerGraph load_graph(const std::string& path);
void save_graph(const BrauerGraph& g, const std::string& path);

int valency(const BrauerGraph& g, std::string_view vertex);
bool is_truncated(const BrauerGraph& g, std::string_view edge, std::string_view vertex);

struct FaceSet {
  std::vector<std::vector<std::string>> faces; // half-edge ids, cycles of σ∘ι
  int genus = 0;
};

FaceSet faces(const BrauerGraph& g);

struct IsoOptions {
  bool preserve_edge_ids = false;
  bool preserve_vertex_ids = false;
};

// Half-edge bijection commuting with σ and ι and preserving multiplicities.
std::optional<std::map<std::string, std::string>>
isomorphic(const BrauerGraph& g, const BrauerGraph& h, IsoOptions opts = {});

} // namespace brauer

#include "brauer/ribbon.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace brauer {

using nlohmann::json;

GraphError::GraphError(std::string where, const std::string& what)
    : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)), message_(what) {}

namespace {

std::string at(std::string_view list, size_t i) {
  return std::string(list) + "[" + std::to_string(i) + "]";
}

template <class Map>
std::optional<int> lookup(const Map& m, std::string_view id) {
  auto it = m.find(std::string(id));
  if (it == m.end()) return std::nullopt;
  return it->second;
}

} // namespace

BrauerGraph BrauerGraph::from_spec(const GraphSpec& spec) {
  if (spec.edges.empty()) throw GraphError("edges", "graph has no edges");
  if (spec.vertices.empty()) throw GraphError("vertices", "graph has no vertices");

  // half-edge -> (vertex spec index, position), edge spec index
  std::map<std::string, std::pair<size_t, size_t>> attach;
  std::map<std::string, size_t> pairing;
  std::map<std::string, size_t> vertex_ids, edge_ids;

  for (size_t i = 0; i < spec.vertices.size(); ++i) {
    const auto& v = spec.vertices[i];
    auto where = at("vertices", i);
    if (v.id.empty()) throw GraphError(where + ".id", "empty vertex id");
    if (!vertex_ids.emplace(v.id, i).second)
      throw GraphError(where + ".id", "duplicate vertex id '" + v.id + "'");
    if (v.multiplicity < 1)
      throw GraphError(where + ".multiplicity",
                       "multiplicity of '" + v.id + "' must be at least 1, got " +
                           std::to_string(v.multiplicity));
    if (v.cycle.empty()) throw GraphError(where + ".cycle", "vertex '" + v.id + "' has no half-edges");
    for (size_t p = 0; p < v.cycle.size(); ++p) {
      const auto& h = v.cycle[p];
      if (h.empty()) throw GraphError(at(where + ".cycle", p), "empty half-edge id");
      if (!attach.emplace(h, std::make_pair(i, p)).second)
        throw GraphError(at(where + ".cycle", p), "half-edge '" + h + "' appears in more than one cycle position");
    }
  }
  for (size_t i = 0; i < spec.edges.size(); ++i) {
    const auto& e = spec.edges[i];
    auto where = at("edges", i);
    if (e.id.empty()) throw GraphError(where + ".id", "empty edge id");
    if (!edge_ids.emplace(e.id, i).second) throw GraphError(where + ".id", "duplicate edge id '" + e.id + "'");
    if (e.first == e.second)
      throw GraphError(where + ".halves", "edge '" + e.id + "' pairs half-edge '" + e.first + "' with itself");
    size_t k = 0;
    for (const auto* h : {&e.first, &e.second}) {
      auto hw = at(where + ".halves", k++);
      if (!attach.count(*h))
        throw GraphError(hw, "half-edge '" + *h + "' is not in any vertex cycle");
      if (!pairing.emplace(*h, i).second)
        throw GraphError(hw, "half-edge '" + *h + "' belongs to more than one edge");
    }
  }
  for (const auto& [h, loc] : attach)
    if (!pairing.count(h))
      throw GraphError(at(at("vertices", loc.first) + ".cycle", loc.second),
                       "half-edge '" + h + "' is not paired by any edge");

  BrauerGraph g;
  // index everything in lexicographic id order
  for (const auto& [id, _] : vertex_ids) {
    g.vertex_index_[id] = static_cast<int>(g.vertices_.size());
    g.vertices_.push_back({id, 1, {}});
  }
  for (const auto& [id, _] : edge_ids) {
    g.edge_index_[id] = static_cast<int>(g.edges_.size());
    g.edges_.push_back({id, {}});
  }
  for (const auto& [id, _] : attach) {
    g.half_index_[id] = static_cast<int>(g.halves_.size());
    g.halves_.push_back({id});
  }
  for (const auto& v : spec.vertices) {
    auto& gv = g.vertices_[g.vertex_index_[v.id]];
    gv.multiplicity = v.multiplicity;
    std::vector<int> cyc;
    for (const auto& h : v.cycle) cyc.push_back(g.half_index_[h]);
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    gv.cycle = cyc;
    const int vi = g.vertex_index_[v.id];
    const int n = static_cast<int>(cyc.size());
    for (int p = 0; p < n; ++p) {
      auto& half = g.halves_[cyc[p]];
      half.vertex = vi;
      half.position = p;
      half.next = cyc[(p + 1) % n];
      half.prev = cyc[(p + n - 1) % n];
    }
  }
  for (const auto& e : spec.edges) {
    const int ei = g.edge_index_[e.id];
    int a = g.half_index_[e.first], b = g.half_index_[e.second];
    if (a > b) std::swap(a, b);
    g.edges_[ei].halves = {a, b};
    g.halves_[a].edge = g.halves_[b].edge = ei;
    g.halves_[a].partner = b;
    g.halves_[b].partner = a;
  }

  // connectivity over vertices
  std::vector<int> seen(g.vertices_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int h : g.vertices_[v].cycle) {
      int w = g.halves_[g.halves_[h].partner].vertex;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (size_t v = 0; v < seen.size(); ++v)
    if (!seen[v])
      throw GraphError(at("vertices", vertex_ids[g.vertices_[v].id]),
                       "graph is disconnected: vertex '" + g.vertices_[v].id + "' is unreachable");
  return g;
}

GraphSpec BrauerGraph::spec() const {
  GraphSpec s;
  for (const auto& v : vertices_) {
    VertexSpec vs{v.id, v.multiplicity, {}};
    for (int h : v.cycle) vs.cycle.push_back(halves_[h].id);
    s.vertices.push_back(std::move(vs));
  }
  for (const auto& e : edges_) s.edges.push_back({e.id, halves_[e.halves[0]].id, halves_[e.halves[1]].id});
  return s;
}

std::optional<int> BrauerGraph::find_half(std::string_view id) const { return lookup(half_index_, id); }
std::optional<int> BrauerGraph::find_vertex(std::string_view id) const { return lookup(vertex_index_, id); }
std::optional<int> BrauerGraph::find_edge(std::string_view id) const { return lookup(edge_index_, id); }

int BrauerGraph::half(std::string_view id) const {
  if (auto h = find_half(id)) return *h;
  throw GraphError("", "unknown half-edge '" + std::string(id) + "'");
}
int BrauerGraph::vertex(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw GraphError("", "unknown vertex '" + std::string(id) + "'");
}
int BrauerGraph::edge(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw GraphError("", "unknown edge '" + std::string(id) + "'");
}

bool BrauerGraph::is_loop(int e) const {
  return halves_[edges_[e].halves[0]].vertex == halves_[edges_[e].halves[1]].vertex;
}

bool BrauerGraph::truncated_at_half(int h) const {
  int v = halves_[h].vertex;
  return vertices_[v].multiplicity * valency(v) == 1;
}

bool BrauerGraph::operator==(const BrauerGraph& o) const {
  if (halves_.size() != o.halves_.size() || vertices_.size() != o.vertices_.size() ||
      edges_.size() != o.edges_.size())
    return false;
  for (size_t i = 0; i < halves_.size(); ++i)
    if (halves_[i].id != o.halves_[i].id) return false;
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id != o.vertices_[i].id || vertices_[i].multiplicity != o.vertices_[i].multiplicity ||
        vertices_[i].cycle != o.vertices_[i].cycle)
      return false;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id != o.edges_[i].id || edges_[i].halves != o.edges_[i].halves) return false;
  return true;
}

// ---- text format ----

namespace {

std::string line_col(std::string_view text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw GraphError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw GraphError(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string id_of(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw GraphError(where, "expected a string id");
}

} // namespace

BrauerGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw GraphError(line_col(text, e.byte), "malformed graph file");
  }
  if (!doc.is_object()) throw GraphError("", "top level must be an object");
  const auto& fmt = field(doc, "format", "");
  if (!fmt.is_string() || fmt.get<std::string>() != "brauer-graph/1")
    throw GraphError("format", "expected format tag \"brauer-graph/1\"");

  GraphSpec spec;
  const auto& vs = field(doc, "vertices", "");
  if (!vs.is_array()) throw GraphError("vertices", "expected an array");
  for (size_t i = 0; i < vs.size(); ++i) {
    auto where = at("vertices", i);
    const auto& v = vs[i];
    VertexSpec s;
    s.id = id_of(field(v, "id", where), where + ".id");
    if (auto it = v.find("multiplicity"); it != v.end()) {
      if (!it->is_number_integer()) throw GraphError(where + ".multiplicity", "expected an integer");
      auto m = it->get<long long>();
      if (m < 1 || m > 1'000'000)
        throw GraphError(where + ".multiplicity", "multiplicity must be a positive integer, got " + std::to_string(m));
      s.multiplicity = static_cast<int>(m);
    }
    const auto& cyc = field(v, "cycle", where);
    if (!cyc.is_array()) throw GraphError(where + ".cycle", "expected an array");
    for (size_t p = 0; p < cyc.size(); ++p) s.cycle.push_back(id_of(cyc[p], at(where + ".cycle", p)));
    spec.vertices.push_back(std::move(s));
  }
  const auto& es = field(doc, "edges", "");
  if (!es.is_array()) throw GraphError("edges", "expected an array");
  for (size_t i = 0; i < es.size(); ++i) {
    auto where = at("edges", i);
    const auto& e = es[i];
    EdgeSpec s;
    s.id = id_of(field(e, "id", where), where + ".id");
    const auto& hs = field(e, "halves", where);
    if (!hs.is_array() || hs.size() != 2) throw GraphError(where + ".halves", "expected exactly 2 half-edge ids");
    s.first = id_of(hs[0], at(where + ".halves", 0));
    s.second = id_of(hs[1], at(where + ".halves", 1));
    spec.edges.push_back(std::move(s));
  }
  return BrauerGraph::from_spec(spec);
}

std::string serialize_graph(const BrauerGraph& g) {
  nlohmann::ordered_json doc;
  doc["format"] = "brauer-graph/1";
  auto vs = nlohmann::ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    nlohmann::ordered_json jv;
    jv["id"] = g.vertex_id(v);
    jv["multiplicity"] = g.multiplicity(v);
    auto cyc = nlohmann::ordered_json::array();
    for (int h : g.cycle(v)) cyc.push_back(g.half_id(h));
    jv["cycle"] = cyc;
    vs.push_back(jv);
  }
  doc["vertices"] = vs;
  auto es = nlohmann::ordered_json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    nlohmann::ordered_json je;
    je["id"] = g.edge_id(e);
    je["halves"] = {g.half_id(g.halves_of(e)[0]), g.half_id(g.halves_of(e)[1])};
    es.push_back(je);
  }
  doc["edges"] = es;
  return doc.dump(2) + "\n";
}

BrauerGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_graph(ss.str());
  } catch (const GraphError& e) {
    throw GraphError(path + (e.where().empty() ? "" : ": " + e.where()), e.message());
  }
}

void save_graph(const BrauerGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GraphError(path, "cannot write file");
  out << serialize_graph(g);
}

int valency(const BrauerGraph& g, std::string_view vertex) { return g.valency(g.vertex(vertex)); }

bool is_truncated(const BrauerGraph& g, std::string_view edge, std::string_view vertex) {
  int e = g.edge(edge), v = g.vertex(vertex);
  for (int h : g.halves_of(e))
    if (g.vertex_of(h) == v) return g.truncated_at_half(h);
  throw GraphError("", "vertex '" + std::string(vertex) + "' is not an endpoint of edge '" + std::string(edge) + "'");
}

FaceSet faces(const BrauerGraph& g) {
  FaceSet fs;
  std::vector<char> seen(g.half_count(), 0);
  for (int h = 0; h < g.half_count(); ++h) {
    if (seen[h]) continue;
    std::vector<std::string> face;
    for (int x = h; !seen[x]; x = g.sigma(g.iota(x))) {
      seen[x] = 1;
      face.push_back(g.half_id(x));
    }
    fs.faces.push_back(std::move(face));
  }
  int chi = g.vertex_count() - g.edge_count() + static_cast<int>(fs.faces.size());
  fs.genus = (2 - chi) / 2;
  return fs;
}

std::optional<std::map<std::string, std::string>>
isomorphic(const BrauerGraph& g, const BrauerGraph& h, IsoOptions opts) {
  if (g.half_count() != h.half_count() || g.vertex_count() != h.vertex_count() ||
      g.edge_count() != h.edge_count())
    return std::nullopt;
  const int n = g.half_count();
  // The group generated by σ and ι acts transitively on a connected ribbon
  // graph, so the image of one anchor determines the whole map.
  const int anchor = 0;
  for (int img = 0; img < n; ++img) {
    std::vector<int> f(n, -1), finv(n, -1);
    std::vector<int> stack{anchor};
    f[anchor] = img;
    finv[img] = anchor;
    bool ok = true;
    while (ok && !stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      int y = f[x];
      int vx = g.vertex_of(x), vy = h.vertex_of(y);
      if (g.multiplicity(vx) != h.multiplicity(vy) || g.valency(vx) != h.valency(vy)) {
        ok = false;
        break;
      }
      if (opts.preserve_edge_ids && g.edge_id(g.edge_of(x)) != h.edge_id(h.edge_of(y))) {
        ok = false;
        break;
      }
      if (opts.preserve_vertex_ids && g.vertex_id(vx) != h.vertex_id(vy)) {
        ok = false;
        break;
      }
      for (auto [gx, hy] : {std::pair{g.sigma(x), h.sigma(y)}, std::pair{g.iota(x), h.iota(y)}}) {
        if (f[gx] == -1 && finv[hy] == -1) {
          f[gx] = hy;
          finv[hy] = gx;
          stack.push_back(gx);
        } else if (f[gx] != hy || finv[hy] != gx) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    if (std::find(f.begin(), f.end(), -1) != f.end()) continue;
    std::map<std::string, std::string> out;
    for (int x = 0; x < n; ++x) out[g.half_id(x)] = h.half_id(f[x]);
    return out;
  }
  return std::nullopt;
}

} // namespace brauer

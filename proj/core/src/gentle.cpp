#include "brauer/gentle.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace brauer {

using nlohmann::json;

const GentleArrow& GentlePresentation::arrow(std::string_view id) const {
  for (const auto& a : arrows)
    if (a.id == id) return a;
  throw GentleError("unknown arrow '" + std::string(id) + "'");
}

bool GentlePresentation::is_relation(std::string_view a, std::string_view b) const {
  for (const auto& [x, y] : relations)
    if (x == a && y == b) return true;
  return false;
}

namespace {

std::string id_string(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw GentleError(where + ": expected a string or integer id");
}

} // namespace

GentlePresentation parse_gentle(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GentleError("malformed gentle-algebra file at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw GentleError("top level must be an object");
  if (doc.contains("format") && doc["format"] != "gentle-algebra/1")
    throw GentleError("format: expected \"gentle-algebra/1\"");
  GentlePresentation p;
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw GentleError("vertices: missing array");
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i)
    p.vertices.push_back(id_string(doc["vertices"][i], "vertices[" + std::to_string(i) + "]"));
  if (doc.contains("arrows")) {
    if (!doc["arrows"].is_array()) throw GentleError("arrows: expected an array");
    for (std::size_t i = 0; i < doc["arrows"].size(); ++i) {
      const auto& a = doc["arrows"][i];
      std::string w = "arrows[" + std::to_string(i) + "]";
      if (!a.is_object() || !a.contains("id") || !a.contains("source") || !a.contains("target"))
        throw GentleError(w + ": expected {id, source, target}");
      p.arrows.push_back({id_string(a["id"], w + ".id"), id_string(a["source"], w + ".source"),
                          id_string(a["target"], w + ".target")});
    }
  }
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) throw GentleError("relations: expected an array");
    for (std::size_t i = 0; i < doc["relations"].size(); ++i) {
      const auto& r = doc["relations"][i];
      std::string w = "relations[" + std::to_string(i) + "]";
      if (!r.is_array()) throw GentleError(w + ": expected an array of arrow ids");
      std::vector<std::string> ids;
      for (std::size_t k = 0; k < r.size(); ++k) ids.push_back(id_string(r[k], w + "[" + std::to_string(k) + "]"));
      if (ids.size() == 2)
        p.relations.emplace_back(ids[0], ids[1]);
      else
        p.long_relations.push_back(ids);
    }
  }
  return p;
}

std::string serialize_gentle(const GentlePresentation& p) {
  nlohmann::ordered_json doc;
  doc["format"] = "gentle-algebra/1";
  doc["vertices"] = p.vertices;
  doc["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : p.arrows)
    doc["arrows"].push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
  doc["relations"] = nlohmann::ordered_json::array();
  for (const auto& [x, y] : p.relations) doc["relations"].push_back({x, y});
  for (const auto& r : p.long_relations) doc["relations"].push_back(r);
  return doc.dump(2) + "\n";
}

GentlePresentation load_gentle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GentleError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_gentle(ss.str());
  } catch (const GentleError& e) {
    throw GentleError(path + ": " + e.what());
  }
}

GentleDiagnostics validate_gentle(const GentlePresentation& p) {
  GentleDiagnostics d;
  std::set<std::string> verts, ids;
  for (const auto& v : p.vertices)
    if (!verts.insert(v).second) d.structural.push_back("duplicate vertex '" + v + "'");
  std::map<std::string, const GentleArrow*> by_id;
  for (const auto& a : p.arrows) {
    if (!ids.insert(a.id).second) d.structural.push_back("duplicate arrow '" + a.id + "'");
    by_id[a.id] = &a;
    for (const auto& end : {a.source, a.target})
      if (!verts.count(end)) d.structural.push_back("arrow '" + a.id + "' uses unknown vertex '" + end + "'");
  }
  std::set<std::pair<std::string, std::string>> rels;
  for (const auto& [x, y] : p.relations) {
    if (!by_id.count(x) || !by_id.count(y)) {
      d.structural.push_back("relation " + x + " " + y + " uses an unknown arrow");
      continue;
    }
    if (by_id[x]->target != by_id[y]->source)
      d.structural.push_back("relation " + x + " " + y + " is not a composable pair");
    if (!rels.insert({x, y}).second) d.structural.push_back("duplicate relation " + x + " " + y);
  }

  for (const auto& v : p.vertices) {
    int in = 0, out = 0;
    for (const auto& a : p.arrows) {
      in += a.target == v;
      out += a.source == v;
    }
    if (in > 2 || out > 2) {
      d.s0.ok = false;
      d.s0.offenders.push_back(v);
    }
  }
  for (const auto& a : p.arrows) {
    int fwd = 0, back = 0, rfwd = 0, rback = 0;
    for (const auto& b : p.arrows) {
      if (b.source == a.target) (rels.count({a.id, b.id}) ? rfwd : fwd)++;
      if (b.target == a.source) (rels.count({b.id, a.id}) ? rback : back)++;
    }
    if (fwd > 1 || back > 1) {
      d.s1.ok = false;
      d.s1.offenders.push_back(a.id);
    }
    if (rfwd > 1 || rback > 1) {
      d.s2.ok = false;
      d.s2.offenders.push_back(a.id);
    }
  }
  for (const auto& r : p.long_relations) {
    d.s3.ok = false;
    std::string s;
    for (const auto& x : r) s += (s.empty() ? "" : " ") + x;
    d.s3.offenders.push_back(s);
  }
  return d;
}

std::string MaximalPath::name() const {
  if (arrows.empty()) return "e_" + vertex;
  std::string s;
  for (const auto& a : arrows) s += a;
  return s;
}

std::vector<MaximalPath> MaximalPathSet::all() const {
  auto out = paths;
  out.insert(out.end(), trivial.begin(), trivial.end());
  return out;
}

MaximalPathSet maximal_paths(const GentlePresentation& p) {
  MaximalPathSet out;
  std::set<std::pair<std::string, std::string>> rels(p.relations.begin(), p.relations.end());
  const int n = static_cast<int>(p.arrows.size());
  auto next = [&](int i) {
    for (int j = 0; j < n; ++j)
      if (p.arrows[j].source == p.arrows[i].target && !rels.count({p.arrows[i].id, p.arrows[j].id})) return j;
    return -1;
  };
  auto prev = [&](int i) {
    for (int j = 0; j < n; ++j)
      if (p.arrows[j].target == p.arrows[i].source && !rels.count({p.arrows[j].id, p.arrows[i].id})) return j;
    return -1;
  };

  std::vector<char> covered(n, 0);
  for (int i = 0; i < n; ++i) {
    if (prev(i) != -1) continue;
    MaximalPath m;
    m.vertex_sequence.push_back(p.arrows[i].source);
    std::vector<char> seen(n, 0);
    int j = i;
    while (j != -1 && !seen[j]) {
      seen[j] = covered[j] = 1;
      m.arrows.push_back(p.arrows[j].id);
      m.vertex_sequence.push_back(p.arrows[j].target);
      j = next(j);
    }
    if (j != -1) {
      out.diagnostics.push_back("path starting with '" + p.arrows[i].id + "' never leaves a cycle of non-relations");
      continue;
    }
    out.paths.push_back(std::move(m));
  }
  std::vector<std::string> loose;
  for (int i = 0; i < n; ++i)
    if (!covered[i]) loose.push_back(p.arrows[i].id);
  if (!loose.empty()) {
    std::string s;
    for (const auto& a : loose) s += (s.empty() ? "" : ", ") + a;
    out.diagnostics.push_back("algebra is infinite-dimensional: arrows " + s + " lie on an oriented cycle with no relation");
  }

  for (const auto& v : p.vertices) {
    std::vector<int> in, outs;
    for (int i = 0; i < n; ++i) {
      if (p.arrows[i].target == v) in.push_back(i);
      if (p.arrows[i].source == v) outs.push_back(i);
    }
    bool keep = false;
    if (in.size() == 1 && outs.size() == 1 && !rels.count({p.arrows[in[0]].id, p.arrows[outs[0]].id}))
      keep = true;
    if (in.empty() && outs.size() == 1) keep = true;
    if (outs.empty() && in.size() == 1) keep = true;
    if (keep) out.trivial.push_back({{}, v, {v}});
    // a vertex with no arrows at all: A = K, whose graph is one edge
    if (in.empty() && outs.empty()) {
      out.trivial.push_back({{}, v, {v}});
      out.trivial.push_back({{}, v, {v}});
    }
  }

  std::map<std::string, int> count;
  for (const auto& m : out.all())
    for (const auto& v : m.vertex_sequence) ++count[v];
  for (const auto& v : p.vertices)
    if (count[v] != 2)
      out.diagnostics.push_back("vertex '" + v + "' lies on " + std::to_string(count[v]) +
                                " members of the maximal path set instead of 2");
  return out;
}

BrauerGraph gentle_graph(const GentlePresentation& p) {
  auto d = validate_gentle(p);
  if (!d.gentle()) {
    std::string s = "presentation is not gentle";
    for (const auto& x : d.structural) s += "; " + x;
    for (auto [name, c] : {std::pair{"S0", &d.s0}, {"S1", &d.s1}, {"S2", &d.s2}, {"S3", &d.s3}})
      if (!c->ok) {
        s += std::string("; ") + name + " fails at";
        for (const auto& o : c->offenders) s += " " + o;
      }
    throw GentleError(s);
  }
  auto mp = maximal_paths(p);
  if (!mp.diagnostics.empty()) {
    std::string s = "cannot build the ribbon graph";
    for (const auto& x : mp.diagnostics) s += "; " + x;
    throw GentleError(s);
  }

  GraphSpec spec;
  std::map<std::string, std::vector<std::string>> halves_at; // quiver vertex -> halves
  std::set<std::string> names;
  for (const auto& m : mp.all()) {
    std::string name = m.name();
    for (int k = 2; !names.insert(name).second; ++k) name = m.name() + "#" + std::to_string(k);
    VertexSpec v;
    v.id = name;
    for (std::size_t pos = 0; pos < m.vertex_sequence.size(); ++pos) {
      std::string h = name + "/" + std::to_string(pos);
      v.cycle.push_back(h);
      halves_at[m.vertex_sequence[pos]].push_back(h);
    }
    spec.vertices.push_back(std::move(v));
  }
  for (const auto& q : p.vertices) {
    const auto& hs = halves_at[q];
    spec.edges.push_back({q, hs.at(0), hs.at(1)});
  }
  return BrauerGraph::from_spec(spec);
}

TrivialExtension trivial_extension(const GentlePresentation& p) {
  auto g = gentle_graph(p);
  auto pres = presentation(g);
  return {std::move(g), std::move(pres)};
}

namespace {

void require_multiplicity_one(const BrauerGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.multiplicity(v) != 1)
      throw GentleError("admissible cuts need multiplicity 1 everywhere, but vertex '" + g.vertex_id(v) +
                        "' has multiplicity " + std::to_string(g.multiplicity(v)));
}

} // namespace

std::vector<AdmissibleCut> enumerate_admissible_cuts(const BrauerGraph& g) {
  require_multiplicity_one(g);
  auto q = build_quiver(g);
  if (q.degenerate) return {AdmissibleCut{}}; // no special cycles
  std::vector<std::vector<std::string>> choices;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.valency(v) < 2) continue;
    std::vector<std::string> at;
    for (const auto& a : q.arrows)
      if (a.vertex == g.vertex_id(v)) at.push_back(a.id);
    choices.push_back(std::move(at));
  }
  std::set<AdmissibleCut> cuts;
  AdmissibleCut cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      cuts.insert(cur);
      return;
    }
    for (const auto& a : choices[i]) {
      cur.insert(a);
      rec(i + 1);
      cur.erase(a);
    }
  };
  rec(0);
  return {cuts.begin(), cuts.end()};
}

GentlePresentation cut_algebra(const BrauerGraph& g, const AdmissibleCut& cut) {
  require_multiplicity_one(g);
  auto q = build_quiver(g);
  for (const auto& a : cut)
    if (q.arrow_index(a) < 0) throw GentleError("cut names unknown arrow '" + a + "'");
  GentlePresentation p;
  p.vertices = q.vertices;
  if (q.degenerate) {
    if (!cut.empty()) throw GentleError("the only admissible cut of this graph is the empty cut");
    return p;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    int hits = 0;
    for (const auto& a : q.arrows)
      if (a.vertex == g.vertex_id(v) && cut.count(a.id)) ++hits;
    if (g.valency(v) >= 2 && hits != 1)
      throw GentleError("cut is not admissible: it contains " + std::to_string(hits) +
                        " arrows of the special cycle at vertex '" + g.vertex_id(v) + "'");
  }
  for (const auto& a : q.arrows)
    if (!cut.count(a.id)) p.arrows.push_back({a.id, a.source, a.target});
  for (const auto& r : relations(g)) {
    if (r.kind != RelationKind::III) continue;
    const auto& x = q.arrows[r.terms[0][0]].id;
    const auto& y = q.arrows[r.terms[0][1]].id;
    if (!cut.count(x) && !cut.count(y)) p.relations.emplace_back(x, y);
  }
  return p;
}

std::optional<GentleIsomorphism> gentle_isomorphic(const GentlePresentation& a, const GentlePresentation& b) {
  if (a.vertices.size() != b.vertices.size() || a.arrows.size() != b.arrows.size() ||
      a.relations.size() != b.relations.size() || a.long_relations.size() != b.long_relations.size())
    return std::nullopt;
  std::set<std::pair<std::string, std::string>> ra(a.relations.begin(), a.relations.end());
  std::set<std::pair<std::string, std::string>> rb(b.relations.begin(), b.relations.end());
  const std::size_t n = a.arrows.size();
  std::map<std::string, std::string> vmap, vinv, amap;
  std::vector<char> used(n, 0);

  auto bind = [&](const std::string& x, const std::string& y, std::vector<std::string>& added) {
    auto it = vmap.find(x);
    if (it != vmap.end()) return it->second == y;
    if (vinv.count(y)) return false;
    vmap[x] = y;
    vinv[y] = x;
    added.push_back(x);
    return true;
  };
  auto unbind = [&](const std::vector<std::string>& added) {
    for (const auto& x : added) {
      vinv.erase(vmap[x]);
      vmap.erase(x);
    }
  };
  // relation status must agree on every pair of already mapped arrows involving i
  auto consistent = [&](std::size_t i) {
    const auto& x = a.arrows[i].id;
    for (std::size_t k = 0; k <= i; ++k) {
      const auto& y = a.arrows[k].id;
      if (ra.count({x, y}) != rb.count({amap[x], amap[y]})) return false;
      if (ra.count({y, x}) != rb.count({amap[y], amap[x]})) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) return true;
    const auto& x = a.arrows[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const auto& y = b.arrows[j];
      std::vector<std::string> added;
      if (bind(x.source, y.source, added) && bind(x.target, y.target, added)) {
        used[j] = 1;
        amap[x.id] = y.id;
        if (consistent(i) && rec(i + 1)) return true;
        amap.erase(x.id);
        used[j] = 0;
      }
      unbind(added);
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;

  // vertices without arrows pair up arbitrarily
  std::vector<std::string> fa, fb;
  for (const auto& v : a.vertices)
    if (!vmap.count(v)) fa.push_back(v);
  for (const auto& v : b.vertices)
    if (!vinv.count(v)) fb.push_back(v);
  if (fa.size() != fb.size()) return std::nullopt;
  for (std::size_t i = 0; i < fa.size(); ++i) vmap[fa[i]] = fb[i];
  return GentleIsomorphism{vmap, amap};
}

} // namespace brauer

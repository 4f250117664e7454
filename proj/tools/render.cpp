#include "render.hpp"

#include <sstream>

namespace brauer::render {

Json graph(const BrauerGraph& g) { return Json::parse(serialize_graph(g)); }

namespace {

Json path_json(const Quiver& q, const Path& p) {
  Json a = Json::array();
  for (int i : p) a.push_back(q.arrows[i].id);
  return a;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

} // namespace

Json presentation(const Presentation& p, bool minimal_only) {
  const auto& q = p.quiver;
  Json j;
  j["vertices"] = q.vertices;
  j["degenerate"] = q.degenerate;
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows)
    j["arrows"].push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}, {"vertex", a.vertex},
                           {"half", a.half}});
  j["special_cycles"] = Json::array();
  for (const auto& c : p.cycles)
    j["special_cycles"].push_back({{"vertex", c.vertex}, {"start", c.start}, {"arrows", path_json(q, c.arrows)}});
  j["relations"] = Json::array();
  for (const auto& r : p.relations) {
    if (minimal_only && !r.minimal) continue;
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back(path_json(q, t));
    j["relations"].push_back({{"kind", relation_kind_name(r.kind)}, {"terms", terms}, {"minimal", r.minimal}});
  }
  return j;
}

Json walks(const std::vector<GreenWalk>& ws) {
  Json j = Json::array();
  for (const auto& w : ws) j.push_back({{"period", w.period()}, {"edges", w.edges}, {"halves", w.halves}});
  return {{"walks", j}};
}

Json projectives(const std::vector<ProjectiveStructure>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) {
    Json br = Json::array();
    for (std::size_t i = 0; i < p.branches.size(); ++i)
      br.push_back({{"vertex", p.branch_vertices[i]}, {"factors", p.branches[i]}});
    j.push_back({{"edge", p.edge}, {"top", p.top}, {"branches", br}, {"socle", p.socle}, {"dimension", p.dimension}});
  }
  return {{"projectives", j}};
}

Json classification(const BrauerGraph& g) {
  auto s = ar_components(g);
  Json j;
  j["type"] = s.type.name();
  if (s.type.domestic) {
    const auto& d = *s.type.domestic;
    j["parameters"] = {{"m", d.m}, {"p", d.p}, {"q", d.q}, {"cycle_length", d.cycle}, {"n1", d.n1}, {"n2", d.n2}};
  }
  j["tubes"] = Json::array();
  for (const auto& t : s.exceptional_tubes) j["tubes"].push_back({{"rank", t.rank}, {"walk", t.walk.edges}});
  j["components"] = Json::array();
  for (const auto& f : s.families) {
    Json c{{"form", f.form}};
    if (f.infinite)
      c["count"] = "infinite";
    else
      c["count"] = f.count;
    j["components"].push_back(c);
  }
  if (s.type.kind != RepKind::Finite) {
    auto dec = exceptional_edges(g);
    Json subs = Json::array();
    for (const auto& t : dec.subtrees) subs.push_back({{"connecting_vertex", t.connecting_vertex}, {"edges", t.edges}});
    j["exceptional_subtrees"] = subs;
    j["non_exceptional_edges"] = dec.non_exceptional;
  }
  return j;
}

Json move(const KauerMove& m) {
  Json rel = Json::array();
  for (const auto& r : m.relocations)
    rel.push_back({{"half", r.half},
                   {"old_vertex", r.old_vertex},
                   {"slide_edge", r.slide_edge},
                   {"new_vertex", r.new_vertex},
                   {"anchor", r.anchor}});
  return {{"edge", m.edge}, {"direction", direction_name(m.direction)}, {"case", m.kind}, {"relocations", rel}};
}

Json faces(const BrauerGraph& g) {
  auto f = brauer::faces(g);
  Json fs = Json::array();
  for (const auto& x : f.faces) fs.push_back(x);
  return {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"faces", fs}, {"genus", f.genus}};
}

Json gentle_check(const GentleDiagnostics& d, const MaximalPathSet& mp) {
  Json j;
  j["gentle"] = d.gentle();
  j["structural"] = d.structural;
  for (auto [name, c] : {std::pair{"S0", &d.s0}, {"S1", &d.s1}, {"S2", &d.s2}, {"S3", &d.s3}})
    j[name] = {{"ok", c->ok}, {"offenders", c->offenders}};
  Json paths = Json::array();
  for (const auto& m : mp.all())
    paths.push_back({{"name", m.name()}, {"arrows", m.arrows}, {"vertices", m.vertex_sequence}});
  j["maximal_paths"] = paths;
  j["diagnostics"] = mp.diagnostics;
  return j;
}

Json gentle(const GentlePresentation& p) { return Json::parse(serialize_gentle(p)); }

Json triangulation(const DiscTriangulation& t) {
  Json arcs = Json::array();
  for (const auto& a : t.arcs) arcs.push_back(arc_id(a));
  return {{"n", t.n}, {"arcs", arcs}};
}

Json parameters(const Parameters& p) {
  return {{"genus", p.genus},
          {"boundary_components", p.boundary_components},
          {"marked_points", p.marked_points},
          {"boundary_triangles", p.boundary_triangles}};
}

Json ice(const IceQuiver& iq, const std::vector<FrozenRelation>& rels) {
  Json j;
  j["vertices"] = iq.vertices;
  j["frozen"] = Json(std::vector<std::string>(iq.frozen.begin(), iq.frozen.end()));
  j["arrows"] = Json::array();
  for (const auto& a : iq.arrows)
    j["arrows"].push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}, {"vertex", a.vertex},
                           {"boundary", a.boundary}});
  j["potential"] = Json::array();
  for (const auto& t : iq.potential) j["potential"].push_back({{"sign", t.sign > 0 ? "+" : "-"}, {"cycle", t.cycle}});
  j["relations"] = Json::array();
  for (const auto& r : rels) j["relations"].push_back({{"arrow", r.arrow}, {"lhs", r.lhs}, {"rhs", r.rhs}});
  return j;
}

Json comparison(const FrozenComparison& c) {
  return {{"only_brauer", c.only_brauer}, {"only_ice", c.only_ice}, {"expected", c.expected}, {"ok", c.ok()}};
}

Json flip_report(const FlipKauerReport& r) {
  Json e = Json::array();
  for (const auto& x : r.entries)
    e.push_back({{"arc", x.arc}, {"flipped_to", x.flipped_to}, {"plus", x.plus_agrees}, {"minus", x.minus_agrees}});
  return {{"entries", e}, {"all_agree", r.all_agree()}};
}

Json error(const std::string& kind, const std::string& message, const std::string& where) {
  Json e{{"kind", kind}, {"message", message}};
  if (!where.empty()) e["where"] = where;
  return {{"error", e}};
}

std::string dot(const Quiver& q) {
  std::ostringstream o;
  o << "digraph Q {\n";
  for (const auto& v : q.vertices) o << "  \"" << v << "\";\n";
  for (const auto& a : q.arrows)
    o << "  \"" << a.source << "\" -> \"" << a.target << "\" [label=\"" << a.id << "\"];\n";
  o << "}\n";
  return o.str();
}

std::string path_text(const Quiver& q, const Path& p) { return path_string(q, p); }

std::string relation_text(const Quiver& q, const Relation& r) {
  if (r.kind == RelationKind::I) return path_text(q, r.terms[0]) + " - " + path_text(q, r.terms[1]);
  return path_text(q, r.terms[0]);
}

std::string walks_text(const std::vector<GreenWalk>& ws) {
  std::ostringstream o;
  o << "period  edges\n";
  for (const auto& w : ws) {
    std::string p = std::to_string(w.period());
    o << p << std::string(p.size() < 8 ? 8 - p.size() : 1, ' ') << join(w.edges, " ") << "\n";
  }
  return o.str();
}

std::string projectives_text(const std::vector<ProjectiveStructure>& ps) {
  std::ostringstream o;
  for (const auto& p : ps) {
    o << "P_" << p.edge << "  dim " << p.dimension << "\n  top " << p.top << "\n";
    for (std::size_t i = 0; i < p.branches.size(); ++i)
      o << "  at " << p.branch_vertices[i] << ": " << join(p.branches[i], " ") << "\n";
    o << "  socle " << p.socle << "\n";
  }
  return o.str();
}

std::string classification_text(const BrauerGraph& g) {
  auto s = ar_components(g);
  std::ostringstream o;
  o << "type: " << s.type.name() << "\n";
  if (s.type.domestic) {
    const auto& d = *s.type.domestic;
    o << "parameters: m=" << d.m << " p=" << d.p << " q=" << d.q << "\n";
  }
  if (!s.exceptional_tubes.empty()) {
    o << "exceptional tube ranks:";
    for (const auto& t : s.exceptional_tubes) o << " " << t.rank;
    o << "\n";
  }
  o << "components:\n";
  for (const auto& f : s.families)
    o << "  " << (f.infinite ? std::string("infinitely many") : std::to_string(f.count)) << " x " << f.form << "\n";
  if (s.type.kind != RepKind::Finite) {
    auto dec = exceptional_edges(g);
    for (const auto& t : dec.subtrees)
      o << "exceptional subtree at " << t.connecting_vertex << ": " << join(t.edges, " ") << "\n";
    o << "non-exceptional edges: " << join(dec.non_exceptional, " ") << "\n";
  }
  return o.str();
}

std::string presentation_text(const Presentation& p, bool minimal_only) {
  const auto& q = p.quiver;
  std::ostringstream o;
  o << "vertices: " << join(q.vertices, " ") << "\n";
  o << "arrows (" << q.arrows.size() << "):\n";
  for (const auto& a : q.arrows) o << "  " << a.id << ": " << a.source << " -> " << a.target << "\n";
  o << (minimal_only ? "minimal relations:\n" : "relations:\n");
  for (const auto& r : p.relations) {
    if (minimal_only && !r.minimal) continue;
    o << "  " << relation_kind_name(r.kind) << "  " << relation_text(q, r) << "\n";
  }
  return o.str();
}

std::string ice_text(const IceQuiver& iq, const std::vector<FrozenRelation>& rels) {
  std::ostringstream o;
  o << "frozen: " << join(std::vector<std::string>(iq.frozen.begin(), iq.frozen.end()), " ") << "\n";
  o << "arrows (" << iq.arrows.size() << "):\n";
  for (const auto& a : iq.arrows)
    o << "  " << a.id << ": " << a.source << " -> " << a.target << (a.boundary ? "  boundary" : "") << "\n";
  o << "W =";
  for (const auto& t : iq.potential) o << " " << (t.sign > 0 ? "+" : "-") << " " << join(t.cycle, " ");
  o << "\nrelations:\n";
  for (const auto& r : rels) o << "  " << join(r.lhs, " ") << " - " << join(r.rhs, " ") << "\n";
  return o.str();
}

} // namespace brauer::render

#include "brauer/algebra.hpp"

#include <algorithm>

namespace brauer {

int Quiver::arrow_index(std::string_view id) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_of_half(std::string_view half) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].half == half) return static_cast<int>(i);
  return -1;
}

namespace {

bool is_degenerate(const BrauerGraph& g) {
  if (g.edge_count() != 1) return false;
  auto [a, b] = g.halves_of(0);
  return g.truncated_at_half(a) && g.truncated_at_half(b);
}

// arrow index per half-edge (-1 at truncated vertices)
struct ArrowTable {
  Quiver quiver;
  std::vector<int> of_half;
};

ArrowTable arrow_table(const BrauerGraph& g) {
  ArrowTable t;
  auto& q = t.quiver;
  t.of_half.assign(g.half_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) q.vertices.push_back(g.edge_id(e));
  if (is_degenerate(g)) {
    q.degenerate = true;
    auto h = g.halves_of(0)[0];
    q.arrows.push_back({"x", g.edge_id(0), g.edge_id(0), g.vertex_id(g.vertex_of(h)), g.half_id(h), g.half_id(h)});
    return t;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.multiplicity(v) * g.valency(v) < 2) continue;
    const auto& cyc = g.cycle(v);
    for (size_t p = 0; p < cyc.size(); ++p) {
      int h = cyc[p], nh = g.sigma(h);
      t.of_half[h] = static_cast<int>(q.arrows.size());
      q.arrows.push_back({g.vertex_id(v) + "." + std::to_string(p), g.edge_id(g.edge_of(h)),
                          g.edge_id(g.edge_of(nh)), g.vertex_id(v), g.half_id(h), g.half_id(nh)});
    }
  }
  return t;
}

Path cycle_from(const BrauerGraph& g, const std::vector<int>& of_half, int h) {
  Path p;
  int x = h;
  do {
    p.push_back(of_half[x]);
    x = g.sigma(x);
  } while (x != h);
  return p;
}

Path power(const Path& c, int m) {
  Path p;
  for (int i = 0; i < m; ++i) p.insert(p.end(), c.begin(), c.end());
  return p;
}

std::vector<Relation> all_relations(const BrauerGraph& g, const ArrowTable& t) {
  std::vector<Relation> out;
  const auto& q = t.quiver;
  if (q.degenerate) {
    out.push_back({RelationKind::III, {{0, 0}}, g.edge_id(0), true});
    return out;
  }
  // type I
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.halves_of(e);
    if (g.truncated_at_half(a) || g.truncated_at_half(b)) continue;
    Relation r{RelationKind::I, {}, g.edge_id(e), true};
    for (int h : {a, b}) r.terms.push_back(power(cycle_from(g, t.of_half, h), g.multiplicity(g.vertex_of(h))));
    out.push_back(std::move(r));
  }
  // type II
  for (int h = 0; h < g.half_count(); ++h) {
    if (g.truncated_at_half(h)) continue;
    Path c = cycle_from(g, t.of_half, h);
    Path p = power(c, g.multiplicity(g.vertex_of(h)));
    p.push_back(c.front());
    Relation r{RelationKind::II, {p}, g.edge_id(g.edge_of(h)), false};
    int other = g.iota(h);
    if (g.truncated_at_half(other)) {
      // successor j of i at this endpoint, truncated at its far end
      int far = g.iota(g.sigma(h));
      r.minimal = g.truncated_at_half(far);
    }
    out.push_back(std::move(r));
  }
  // type III
  for (int h = 0; h < g.half_count(); ++h) {
    int a = t.of_half[h];
    if (a < 0) continue;
    int in_cycle = t.of_half[g.sigma(h)];
    for (size_t b = 0; b < q.arrows.size(); ++b) {
      if (q.arrows[b].source != q.arrows[a].target) continue;
      if (static_cast<int>(b) == in_cycle) continue;
      out.push_back({RelationKind::III, {{a, static_cast<int>(b)}}, q.arrows[a].source, true});
    }
  }
  return out;
}

} // namespace

Quiver build_quiver(const BrauerGraph& g) { return arrow_table(g).quiver; }

std::vector<SpecialCycle> special_cycles(const BrauerGraph& g) {
  auto t = arrow_table(g);
  std::vector<SpecialCycle> out;
  if (t.quiver.degenerate) return out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.multiplicity(v) * g.valency(v) < 2) continue;
    for (int h : g.cycle(v))
      out.push_back({g.vertex_id(v), g.edge_id(g.edge_of(h)), g.half_id(h), cycle_from(g, t.of_half, h)});
  }
  return out;
}

std::vector<Relation> relations(const BrauerGraph& g) { return all_relations(g, arrow_table(g)); }

std::vector<Relation> minimal_relations(const BrauerGraph& g) {
  auto all = relations(g);
  std::vector<Relation> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Relation& r) { return r.minimal; });
  return out;
}

Presentation presentation(const BrauerGraph& g) {
  auto t = arrow_table(g);
  Presentation p;
  p.relations = all_relations(g, t);
  p.cycles = special_cycles(g);
  p.quiver = std::move(t.quiver);
  return p;
}

ProjectiveStructure projective(const BrauerGraph& g, std::string_view edge) {
  int e = g.edge(edge);
  ProjectiveStructure ps;
  ps.edge = ps.top = ps.socle = g.edge_id(e);
  for (int h : g.halves_of(e)) {
    int v = g.vertex_of(h);
    int len = g.multiplicity(v) * g.valency(v);
    ps.dimension += len;
    if (len == 1) continue;
    std::vector<std::string> branch;
    int x = h;
    for (int k = 0; k < len - 1; ++k) {
      x = g.sigma(x);
      branch.push_back(g.edge_id(g.edge_of(x)));
    }
    ps.branches.push_back(std::move(branch));
    ps.branch_vertices.push_back(g.vertex_id(v));
  }
  return ps;
}

std::vector<ProjectiveStructure> projectives(const BrauerGraph& g) {
  std::vector<ProjectiveStructure> out;
  for (int e = 0; e < g.edge_count(); ++e) out.push_back(projective(g, g.edge_id(e)));
  return out;
}

long algebra_dimension(const BrauerGraph& g) {
  long d = 0;
  for (int e = 0; e < g.edge_count(); ++e) d += projective(g, g.edge_id(e)).dimension;
  return d;
}

std::string relation_kind_name(RelationKind k) {
  switch (k) {
  case RelationKind::I: return "I";
  case RelationKind::II: return "II";
  case RelationKind::III: return "III";
  }
  return "?";
}

std::string path_string(const Quiver& q, const Path& p) {
  std::string s;
  for (int a : p) {
    if (!s.empty()) s += ' ';
    s += q.arrows[a].id;
  }
  return s;
}

} // namespace brauer

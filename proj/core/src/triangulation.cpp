#include "brauer/triangulation.hpp"

#include "brauer/mutation.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

namespace brauer {

std::string arc_id(const Arc& a) { return std::to_string(a.first) + "-" + std::to_string(a.second); }

Arc parse_arc(std::string_view s, int n) {
  auto dash = s.find('-');
  int i = 0, j = 0;
  auto bad = [&] { return TriangulationError("arc '" + std::string(s) + "' is not of the form i-j"); };
  if (dash == std::string_view::npos) throw bad();
  auto a = s.substr(0, dash), b = s.substr(dash + 1);
  if (std::from_chars(a.data(), a.data() + a.size(), i).ptr != a.data() + a.size() || a.empty()) throw bad();
  if (std::from_chars(b.data(), b.data() + b.size(), j).ptr != b.data() + b.size() || b.empty()) throw bad();
  if (i < 1 || i > n || j < 1 || j > n)
    throw TriangulationError("arc '" + std::string(s) + "' has an endpoint outside 1.." + std::to_string(n));
  if (i == j) throw TriangulationError("arc '" + std::string(s) + "' joins a point to itself");
  return {std::min(i, j), std::max(i, j)};
}

std::vector<Arc> parse_arcs(std::string_view s, int n) {
  std::vector<Arc> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    auto tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) out.push_back(parse_arc(tok, n));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool is_boundary(int n, const Arc& a) { return a.second - a.first == 1 || (a.first == 1 && a.second == n); }

bool crosses(const Arc& a, const Arc& b) {
  auto [i, j] = a;
  auto [k, l] = b;
  return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

DiscTriangulation build_triangulation(int n, std::vector<Arc> arcs) {
  if (n < 3) throw TriangulationError("a polygon needs at least 3 marked points, got " + std::to_string(n));
  for (auto& a : arcs) {
    if (a.first > a.second) std::swap(a.first, a.second);
    if (a.first < 1 || a.second > n || a.first == a.second)
      throw TriangulationError("arc " + arc_id(a) + " is not a chord of the " + std::to_string(n) + "-gon");
    if (is_boundary(n, a)) throw TriangulationError("arc " + arc_id(a) + " is a boundary arc");
  }
  std::sort(arcs.begin(), arcs.end());
  if (auto it = std::adjacent_find(arcs.begin(), arcs.end()); it != arcs.end())
    throw TriangulationError("arc " + arc_id(*it) + " is listed twice");
  for (std::size_t x = 0; x < arcs.size(); ++x)
    for (std::size_t y = x + 1; y < arcs.size(); ++y)
      if (crosses(arcs[x], arcs[y]))
        throw TriangulationError("arcs " + arc_id(arcs[x]) + " and " + arc_id(arcs[y]) + " cross");
  if (static_cast<int>(arcs.size()) != n - 3)
    throw TriangulationError("a triangulation of the " + std::to_string(n) + "-gon has " + std::to_string(n - 3) +
                             " internal arcs, got " + std::to_string(arcs.size()));
  return {n, std::move(arcs)};
}

namespace {

struct Geometry {
  int n;
  std::set<Arc> edges; // boundary and internal
  std::vector<std::vector<int>> cycle; // clockwise neighbours at each point, rotated as in BrauerGraph

  explicit Geometry(const DiscTriangulation& t) : n(t.n), cycle(t.n + 1) {
    for (int i = 1; i < n; ++i) edges.insert({i, i + 1});
    edges.insert({1, n});
    edges.insert(t.arcs.begin(), t.arcs.end());
    for (int v = 1; v <= n; ++v) {
      auto& c = cycle[v];
      for (const auto& e : edges)
        if (e.first == v || e.second == v) c.push_back(e.first == v ? e.second : e.first);
      std::sort(c.begin(), c.end(), [&](int a, int b) { return offset(v, a) > offset(v, b); });
      auto least = std::min_element(c.begin(), c.end(), [&](int a, int b) { return half(v, a) < half(v, b); });
      std::rotate(c.begin(), least, c.end());
    }
  }
  int offset(int v, int j) const { return ((j - v) % n + n) % n; }
  bool has(int a, int b) const { return edges.count({std::min(a, b), std::max(a, b)}) > 0; }
  static std::string edge(int a, int b) { return arc_id({std::min(a, b), std::max(a, b)}); }
  static std::string half(int v, int j) { return edge(v, j) + "@" + std::to_string(v); }
  int position(int v, int j) const {
    const auto& c = cycle[v];
    return static_cast<int>(std::find(c.begin(), c.end(), j) - c.begin());
  }
  std::string arrow(int v, int from) const { return std::to_string(v) + "." + std::to_string(position(v, from)); }
};

} // namespace

BrauerGraph triangulation_graph(const DiscTriangulation& t) {
  Geometry geo(t);
  GraphSpec spec;
  for (int v = 1; v <= t.n; ++v) {
    VertexSpec vs;
    vs.id = std::to_string(v);
    for (int j : geo.cycle[v]) vs.cycle.push_back(Geometry::half(v, j));
    spec.vertices.push_back(std::move(vs));
  }
  for (const auto& [a, b] : geo.edges)
    spec.edges.push_back({Geometry::edge(a, b), Geometry::half(a, b), Geometry::half(b, a)});
  return BrauerGraph::from_spec(spec);
}

std::vector<std::array<int, 3>> triangles(const DiscTriangulation& t) {
  Geometry geo(t);
  std::vector<std::array<int, 3>> out;
  for (const auto& [a, b] : geo.edges)
    for (int c = b + 1; c <= t.n; ++c)
      if (geo.has(a, c) && geo.has(b, c)) out.push_back({a, b, c});
  return out;
}

Arc flipped_arc(const DiscTriangulation& t, const Arc& arc) {
  Arc s{std::min(arc.first, arc.second), std::max(arc.first, arc.second)};
  if (!std::binary_search(t.arcs.begin(), t.arcs.end(), s)) {
    if (s.first >= 1 && s.second <= t.n && is_boundary(t.n, s))
      throw TriangulationError("arc " + arc_id(s) + " is a boundary arc and cannot be flipped");
    throw TriangulationError("arc " + arc_id(s) + " is not an internal arc of the triangulation");
  }
  Geometry geo(t);
  std::vector<int> apex;
  for (int c = 1; c <= t.n; ++c)
    if (c != s.first && c != s.second && geo.has(s.first, c) && geo.has(s.second, c)) apex.push_back(c);
  if (apex.size() != 2) throw TriangulationError("internal: arc " + arc_id(s) + " does not bound two triangles");
  return {apex[0], apex[1]};
}

DiscTriangulation flip(const DiscTriangulation& t, const Arc& arc) {
  Arc s{std::min(arc.first, arc.second), std::max(arc.first, arc.second)};
  Arc r = flipped_arc(t, s);
  auto arcs = t.arcs;
  *std::find(arcs.begin(), arcs.end(), s) = r;
  std::sort(arcs.begin(), arcs.end());
  return {t.n, std::move(arcs)};
}

bool FlipKauerReport::all_agree() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.plus_agrees && e.minus_agrees; });
}

FlipKauerReport flip_is_kauer(const DiscTriangulation& t) {
  FlipKauerReport rep;
  auto g = triangulation_graph(t);
  IsoOptions opts;
  opts.preserve_vertex_ids = true;
  for (const auto& s : t.arcs) {
    auto flipped = triangulation_graph(flip(t, s));
    FlipKauerEntry e;
    e.arc = arc_id(s);
    e.flipped_to = arc_id(flipped_arc(t, s));
    e.plus_agrees = isomorphic(kauer_move(g, e.arc, Direction::Plus), flipped, opts).has_value();
    e.minus_agrees = isomorphic(kauer_move(g, e.arc, Direction::Minus), flipped, opts).has_value();
    rep.entries.push_back(e);
  }
  return rep;
}

Parameters parameters(const DiscTriangulation& t) {
  Parameters p;
  p.marked_points = t.n;
  for (const auto& tri : triangles(t)) {
    int b = 0;
    for (auto [x, y] : {Arc{tri[0], tri[1]}, Arc{tri[1], tri[2]}, Arc{tri[0], tri[2]}}) b += is_boundary(t.n, {x, y});
    if (b == 2) ++p.boundary_triangles;
  }
  return p;
}

bool ladkani_equivalent(const DiscTriangulation& a, const DiscTriangulation& b) {
  if (a.n != b.n)
    throw TriangulationError("triangulations of different polygons (" + std::to_string(a.n) + " and " +
                             std::to_string(b.n) + " marked points)");
  return parameters(a) == parameters(b);
}

int IceQuiver::arrow_index(std::string_view id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> canonical_cycle(std::vector<std::string> c) {
  if (c.empty()) return c;
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

IceQuiver ice_quiver(const DiscTriangulation& t) {
  Geometry geo(t);
  IceQuiver iq;
  for (const auto& [a, b] : geo.edges) {
    iq.vertices.push_back(Geometry::edge(a, b));
    if (is_boundary(t.n, {a, b})) iq.frozen.insert(Geometry::edge(a, b));
  }
  std::sort(iq.vertices.begin(), iq.vertices.end());
  std::map<std::pair<int, int>, std::string> corner; // (point, first neighbour) -> arrow id

  auto add = [&](int v, int from, int to, bool boundary) {
    IceArrow a{geo.arrow(v, from), Geometry::edge(v, from), Geometry::edge(v, to), std::to_string(v), boundary};
    corner[{v, from}] = a.id;
    iq.arrows.push_back(a);
  };
  auto tris = triangles(t);
  for (const auto& tri : tris)
    for (int k = 0; k < 3; ++k) {
      int v = tri[k], a = tri[(k + 1) % 3], b = tri[(k + 2) % 3];
      if (geo.offset(v, a) < geo.offset(v, b)) std::swap(a, b);
      add(v, a, b, false);
    }
  for (int v = 1; v <= t.n; ++v)
    if (geo.cycle[v].size() > 2) add(v, v % t.n + 1, (v + t.n - 2) % t.n + 1, true);
  std::sort(iq.arrows.begin(), iq.arrows.end(), [](const auto& x, const auto& y) { return x.id < y.id; });

  for (const auto& tri : tris) {
    // chain the three corner arrows head to tail
    std::vector<std::string> cyc;
    int v = tri[0], from = -1;
    for (int j : {tri[1], tri[2]})
      if (from == -1 || geo.offset(v, j) > geo.offset(v, from)) from = j;
    for (int k = 0; k < 3; ++k) {
      cyc.push_back(corner.at({v, from}));
      int to = -1;
      for (int j : tri)
        if (j != v && j != from) to = j;
      // next corner is the far end of the target side, entering from v
      from = v;
      v = to;
    }
    iq.potential.push_back({+1, canonical_cycle(cyc)});
  }
  for (int v = 1; v <= t.n; ++v) {
    const auto& c = geo.cycle[v];
    if (c.size() <= 2) continue;
    std::vector<std::string> cyc;
    for (std::size_t p = 0; p < c.size(); ++p) cyc.push_back(std::to_string(v) + "." + std::to_string(p));
    iq.potential.push_back({-1, canonical_cycle(cyc)});
  }
  return iq;
}

std::vector<FrozenRelation> frozen_relations(const IceQuiver& iq) {
  std::vector<FrozenRelation> out;
  for (const auto& a : iq.arrows) {
    if (iq.frozen.count(a.source) && iq.frozen.count(a.target)) continue;
    FrozenRelation r;
    r.arrow = a.id;
    int pos = 0, neg = 0;
    for (const auto& term : iq.potential) {
      auto it = std::find(term.cycle.begin(), term.cycle.end(), a.id);
      if (it == term.cycle.end()) continue;
      std::vector<std::string> rest(it + 1, term.cycle.end());
      rest.insert(rest.end(), term.cycle.begin(), it);
      if (term.sign > 0) {
        r.lhs = rest;
        ++pos;
      } else {
        r.rhs = rest;
        ++neg;
      }
    }
    if (pos > 1 || neg > 1)
      throw TriangulationError("arrow " + a.id + " occurs in more than two cycles of the potential");
    out.push_back(std::move(r));
  }
  return out;
}

FrozenComparison compare_frozen_vs_brauer(const DiscTriangulation& t) {
  auto q = build_quiver(triangulation_graph(t));
  auto iq = ice_quiver(t);
  Geometry geo(t);
  using Key = std::tuple<std::string, std::string, std::string>;
  std::map<Key, std::string> brauer, ice;
  for (const auto& a : q.arrows) brauer[{a.vertex, a.source, a.target}] = a.id;
  for (const auto& a : iq.arrows) ice[{a.vertex, a.source, a.target}] = a.id;
  FrozenComparison c;
  for (const auto& [k, id] : brauer)
    if (!ice.count(k)) c.only_brauer.push_back(id);
  for (const auto& [k, id] : ice)
    if (!brauer.count(k)) c.only_ice.push_back(id);
  for (int v = 1; v <= t.n; ++v)
    if (geo.cycle[v].size() == 2) c.expected.push_back(geo.arrow(v, v % t.n + 1));
  std::sort(c.only_brauer.begin(), c.only_brauer.end());
  std::sort(c.only_ice.begin(), c.only_ice.end());
  std::sort(c.expected.begin(), c.expected.end());
  return c;
}

std::vector<DiscTriangulation> all_triangulations(int n) {
  if (n < 3) throw TriangulationError("a polygon needs at least 3 marked points");
  std::map<std::pair<int, int>, std::vector<std::vector<Arc>>> memo;
  std::function<const std::vector<std::vector<Arc>>&(int, int)> sub = [&](int i, int j)
      -> const std::vector<std::vector<Arc>>& {
    auto key = std::pair{i, j};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::vector<Arc>> res;
    if (j - i < 2) {
      res.push_back({});
    } else {
      for (int k = i + 1; k < j; ++k)
        for (const auto& l : sub(i, k))
          for (const auto& r : sub(k, j)) {
            auto arcs = l;
            arcs.insert(arcs.end(), r.begin(), r.end());
            if (k - i >= 2) arcs.push_back({i, k});
            if (j - k >= 2) arcs.push_back({k, j});
            res.push_back(std::move(arcs));
          }
    }
    return memo[key] = std::move(res);
  };
  std::vector<DiscTriangulation> out;
  for (const auto& arcs : sub(1, n)) out.push_back(build_triangulation(n, arcs));
  return out;
}

} // namespace brauer

#include "brauer/mutation.hpp"

#include <algorithm>
#include <map>

namespace brauer {

Direction parse_direction(std::string_view s) {
  if (s == "plus" || s == "+") return Direction::Plus;
  if (s == "minus" || s == "-") return Direction::Minus;
  throw MutationError("direction must be 'plus' or 'minus', got '" + std::string(s) + "'");
}

std::string direction_name(Direction d) { return d == Direction::Plus ? "plus" : "minus"; }

void check_movable(const BrauerGraph& g, std::string_view s) {
  int e = g.edge(s);
  auto [a, b] = g.halves_of(e);
  if (g.is_loop(e) && (g.sigma(a) == b || g.sigma(b) == a))
    throw MutationError("edge '" + std::string(s) +
                        "' is excluded: it is a loop whose two half-edges are direct successors of each other");
  for (int h : {a, b}) {
    int v = g.vertex_of(h);
    if (g.valency(v) == 1 && g.multiplicity(v) > 1)
      throw MutationError("edge '" + std::string(s) + "' is excluded: its endpoint '" + g.vertex_id(v) +
                          "' has valency one and multiplicity " + std::to_string(g.multiplicity(v)) +
                          ", so the quiver has a loop at '" + std::string(s) + "'");
  }
}

KauerMove kauer_move_report(const BrauerGraph& g, std::string_view s, Direction d) {
  check_movable(g, s);
  int e = g.edge(s);
  KauerMove mv;
  mv.edge = g.edge_id(e);
  mv.direction = d;
  auto [a, b] = g.halves_of(e);
  if (g.is_loop(e))
    mv.kind = "iii";
  else if (g.valency(g.vertex_of(a)) == 1 || g.valency(g.vertex_of(b)) == 1)
    mv.kind = "ii";
  else
    mv.kind = "i";

  struct Move {
    int half, anchor, target;
  };
  std::vector<Move> moves;
  for (int h : {a, b}) {
    if (g.valency(g.vertex_of(h)) < 2) continue; // leaf end stays put
    int slide = d == Direction::Plus ? g.sigma(h) : g.sigma_inv(h);
    int anchor = g.iota(slide);
    moves.push_back({h, anchor, g.vertex_of(anchor)});
    mv.relocations.push_back({g.half_id(h), g.vertex_id(g.vertex_of(h)), g.edge_id(g.edge_of(slide)),
                              g.vertex_id(g.vertex_of(anchor)), g.half_id(anchor)});
  }

  auto spec = g.spec();
  auto index_of = [&](const std::string& vid) -> VertexSpec& {
    for (auto& v : spec.vertices)
      if (v.id == vid) return v;
    throw MutationError("internal: vertex vanished");
  };
  for (const auto& m : moves) {
    auto& cyc = index_of(g.vertex_id(g.vertex_of(m.half))).cycle;
    cyc.erase(std::find(cyc.begin(), cyc.end(), g.half_id(m.half)));
  }
  for (const auto& m : moves) {
    auto& cyc = index_of(g.vertex_id(m.target)).cycle;
    auto it = std::find(cyc.begin(), cyc.end(), g.half_id(m.anchor));
    if (d == Direction::Plus) ++it;
    cyc.insert(it, g.half_id(m.half));
  }
  mv.result = BrauerGraph::from_spec(spec);
  return mv;
}

BrauerGraph kauer_move(const BrauerGraph& g, std::string_view s, Direction d) {
  return kauer_move_report(g, s, d).result;
}

TwoTermComplex okuyama_complex(const BrauerGraph& g, std::string_view s) {
  check_movable(g, s);
  int e = g.edge(s);
  TwoTermComplex c;
  c.degree_zero = g.edge_id(e);
  for (int h : g.halves_of(e)) {
    if (g.truncated_at_half(h)) continue;
    c.degree_one.push_back(g.edge_id(g.edge_of(g.sigma(h))));
  }
  return c;
}

MutableQuiver MutableQuiver::from(const Quiver& q) {
  MutableQuiver m;
  m.vertices = q.vertices;
  for (const auto& a : q.arrows) m.arrows.emplace_back(a.source, a.target);
  m.normalize();
  return m;
}

void MutableQuiver::normalize() {
  std::sort(vertices.begin(), vertices.end());
  std::sort(arrows.begin(), arrows.end());
}

MutableQuiver fz_mutate(const MutableQuiver& q, std::string_view k) {
  const std::string key(k);
  if (std::find(q.vertices.begin(), q.vertices.end(), key) == q.vertices.end())
    throw MutationError("unknown quiver vertex '" + key + "'");
  std::map<std::pair<std::string, std::string>, int> old;
  std::vector<std::string> in, out;
  for (const auto& [s, t] : q.arrows) {
    if (s == key && t == key) throw MutationError("quiver has a loop at '" + key + "'");
    if (t == key)
      in.push_back(s);
    else if (s == key)
      out.push_back(t);
    else
      ++old[{s, t}];
  }
  for (const auto& i : in)
    if (std::find(out.begin(), out.end(), i) != out.end())
      throw MutationError("quiver has a 2-cycle through '" + key + "' and '" + i + "'");

  std::map<std::pair<std::string, std::string>, int> fresh;
  for (const auto& i : in)
    for (const auto& j : out) ++fresh[{i, j}];
  // cancel 2-cycles formed by a new arrow and an opposite old one
  for (auto& [ij, n] : fresh) {
    auto it = old.find({ij.second, ij.first});
    if (it == old.end()) continue;
    int c = std::min(n, it->second);
    n -= c;
    it->second -= c;
  }

  MutableQuiver r;
  r.vertices = q.vertices;
  for (const auto& src : {old, fresh})
    for (const auto& [ij, n] : src)
      for (int c = 0; c < n; ++c) r.arrows.push_back(ij);
  for (const auto& i : in) r.arrows.emplace_back(key, i);
  for (const auto& j : out) r.arrows.emplace_back(j, key);
  r.normalize();
  return r;
}

FlipCheck flip_check(const BrauerGraph& g, std::string_view s) {
  FlipCheck fc;
  try {
    auto q = MutableQuiver::from(build_quiver(g));
    fc.mutated = fz_mutate(q, s);
    fc.kauer_side = MutableQuiver::from(build_quiver(kauer_move(g, s, Direction::Plus)));
  } catch (const MutationError& e) {
    fc.message = e.what();
    return fc;
  }
  fc.precondition_ok = true;
  fc.agree = fc.kauer_side == fc.mutated;
  fc.message = fc.agree ? "quivers agree" : "quivers differ";
  return fc;
}

} // namespace brauer

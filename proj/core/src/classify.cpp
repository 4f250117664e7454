#include "brauer/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <tuple>

namespace brauer {

std::string RepType::name() const {
  switch (kind) {
  case RepKind::Finite: return "finite";
  case RepKind::Domestic: return std::to_string(domestic ? domestic->m : 0) + "-domestic";
  case RepKind::NonDomestic: return "non-domestic";
  }
  return "";
}

int cycle_rank(const BrauerGraph& g) { return g.edge_count() - g.vertex_count() + 1; }

namespace {

struct Ends {
  int a, b; // vertex indices
};

std::vector<Ends> edge_ends(const BrauerGraph& g) {
  std::vector<Ends> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.halves_of(e);
    out.push_back({g.vertex_of(x), g.vertex_of(y)});
  }
  return out;
}

// Strip degree-one vertices until only the cycle is left.
std::vector<int> core_edges(const BrauerGraph& g) {
  auto ends = edge_ends(g);
  std::vector<char> alive(g.edge_count(), 1);
  std::vector<int> deg(g.vertex_count(), 0);
  for (const auto& [a, b] : ends) {
    ++deg[a];
    ++deg[b];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!alive[e]) continue;
      auto [a, b] = ends[e];
      if (a != b && (deg[a] == 1 || deg[b] == 1)) {
        alive[e] = 0;
        --deg[a];
        --deg[b];
        changed = true;
      }
    }
  }
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (alive[e]) out.push_back(e);
  return out;
}

int vertices_above_one(const BrauerGraph& g, int& twos) {
  int above = 0;
  twos = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.multiplicity(v) > 1) ++above;
    if (g.multiplicity(v) == 2) ++twos;
  }
  return above;
}

} // namespace

std::vector<std::string> unique_cycle(const BrauerGraph& g) {
  if (cycle_rank(g) != 1) return {};
  std::vector<std::string> out;
  for (int e : core_edges(g)) out.push_back(g.edge_id(e));
  return out;
}

RepType rep_type(const BrauerGraph& g) {
  RepType t;
  int twos = 0;
  int above = vertices_above_one(g, twos);
  int rank = cycle_rank(g);
  if (rank == 0 && above <= 1) {
    t.kind = RepKind::Finite;
    return t;
  }
  bool domestic = (rank == 0 && above == 2 && twos == 2) || (rank == 1 && above == 0);
  if (!domestic) {
    t.kind = RepKind::NonDomestic;
    return t;
  }
  t.kind = RepKind::Domestic;
  t.domestic = domestic_parameters(g);
  return t;
}

DomesticParameters domestic_parameters(const BrauerGraph& g) {
  int twos = 0;
  int above = vertices_above_one(g, twos);
  int rank = cycle_rank(g);
  const int n = g.edge_count();
  DomesticParameters d;
  if (rank == 0 && above == 2 && twos == 2) {
    d.m = 1;
  } else if (rank == 1 && above == 0) {
    d.cycle = static_cast<int>(core_edges(g).size());
    d.m = d.cycle % 2 == 1 ? 1 : 2;
  } else {
    throw ClassifyError("the Brauer graph algebra is not domestic");
  }
  auto walks = double_stepped_walks(g);
  if (static_cast<int>(walks.size()) != 2 * d.m)
    throw ClassifyError("expected " + std::to_string(2 * d.m) + " double-stepped walks for a " +
                        std::to_string(d.m) + "-domestic algebra, found " + std::to_string(walks.size()));
  std::vector<int> periods;
  for (const auto& w : walks) periods.push_back(w.period());
  std::sort(periods.rbegin(), periods.rend());
  d.p = periods.front();
  d.q = periods.back();
  if (d.m == 2 && (periods[0] != periods[1] || periods[2] != periods[3]))
    throw ClassifyError("double-stepped walk periods of a 2-domestic algebra do not come in pairs");
  int expected = d.m == 1 ? 2 * n : n;
  if (d.p + d.q != expected)
    throw ClassifyError("p + q = " + std::to_string(d.p + d.q) + " but should be " + std::to_string(expected));
  if (d.cycle > 0) {
    if (d.m == 1) {
      d.n1 = (d.p - d.cycle) / 2;
      d.n2 = (d.q - d.cycle) / 2;
    } else {
      d.n1 = d.p - d.cycle / 2;
      d.n2 = d.q - d.cycle / 2;
    }
  }
  return d;
}

namespace {

std::string tube_form(int r) { return "ℤA_∞/⟨τ^" + std::to_string(r) + "⟩"; }

} // namespace

ARSummary ar_components(const BrauerGraph& g) {
  ARSummary s;
  s.type = rep_type(g);
  if (s.type.kind == RepKind::Finite) {
    s.families.push_back({"finite", 1, false});
    return s;
  }
  for (auto& w : double_stepped_walks(g)) s.exceptional_tubes.push_back({w.period(), std::move(w)});
  std::stable_sort(s.exceptional_tubes.begin(), s.exceptional_tubes.end(),
                   [](const Tube& a, const Tube& b) { return a.rank > b.rank; });
  if (s.type.kind == RepKind::Domestic) {
    const auto& d = *s.type.domestic;
    s.families.push_back({"ℤÃ_{" + std::to_string(d.p) + "," + std::to_string(d.q) + "}", d.m, false});
    if (d.p == d.q) {
      s.families.push_back({tube_form(d.p), 2 * d.m, false});
    } else {
      s.families.push_back({tube_form(d.p), d.m, false});
      s.families.push_back({tube_form(d.q), d.m, false});
    }
    s.families.push_back({tube_form(1), 0, true});
  } else {
    std::map<int, int, std::greater<>> ranks;
    for (const auto& t : s.exceptional_tubes) ++ranks[t.rank];
    for (auto [r, c] : ranks) s.families.push_back({tube_form(r), c, false});
    s.families.push_back({tube_form(1), 0, true});
    s.families.push_back({"ℤA_∞^∞", 0, true});
  }
  return s;
}

bool ExceptionalDecomposition::is_exceptional(std::string_view edge) const {
  for (const auto& t : subtrees)
    if (std::find(t.edges.begin(), t.edges.end(), edge) != t.edges.end()) return true;
  return false;
}

namespace {

ExceptionalDecomposition prune(const BrauerGraph& g, std::mt19937_64* rng) {
  if (rep_type(g).kind == RepKind::Finite)
    throw ClassifyError("a Brauer tree algebra has finite representation type; exceptional edges are undefined");
  auto ends = edge_ends(g);
  std::vector<char> alive(g.edge_count(), 1);
  std::vector<int> deg(g.vertex_count(), 0);
  for (const auto& [a, b] : ends) {
    ++deg[a];
    ++deg[b];
  }
  auto leaf_of = [&](int e) {
    auto [a, b] = ends[e];
    if (a == b) return -1;
    if (deg[a] == 1 && g.multiplicity(a) == 1) return a;
    if (deg[b] == 1 && g.multiplicity(b) == 1) return b;
    return -1;
  };
  for (;;) {
    std::vector<int> cand;
    for (int e = 0; e < g.edge_count(); ++e)
      if (alive[e] && leaf_of(e) != -1) cand.push_back(e);
    if (cand.empty()) break;
    int e = rng ? cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(*rng)] : cand.front();
    alive[e] = 0;
    --deg[ends[e].a];
    --deg[ends[e].b];
  }

  ExceptionalDecomposition d;
  std::vector<char> touches_core(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e)
    if (alive[e]) {
      d.non_exceptional.push_back(g.edge_id(e));
      touches_core[ends[e].a] = touches_core[ends[e].b] = 1;
    }
  // pruned edges grouped by connected component
  std::vector<int> comp(g.edge_count(), -1);
  int ncomp = 0;
  for (int s = 0; s < g.edge_count(); ++s) {
    if (alive[s] || comp[s] != -1) continue;
    std::deque<int> queue{s};
    comp[s] = ncomp;
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      for (int f = 0; f < g.edge_count(); ++f) {
        if (alive[f] || comp[f] != -1) continue;
        auto [a, b] = ends[e];
        auto [c, dd] = ends[f];
        if (a == c || a == dd || b == c || b == dd) {
          comp[f] = ncomp;
          queue.push_back(f);
        }
      }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    ExceptionalSubtree t;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (comp[e] != c) continue;
      t.edges.push_back(g.edge_id(e));
      for (int v : {ends[e].a, ends[e].b})
        if (touches_core[v]) t.connecting_vertex = g.vertex_id(v);
    }
    std::sort(t.edges.begin(), t.edges.end());
    d.subtrees.push_back(std::move(t));
  }
  std::sort(d.subtrees.begin(), d.subtrees.end(),
            [](const auto& x, const auto& y) { return x.connecting_vertex < y.connecting_vertex; });
  std::sort(d.non_exceptional.begin(), d.non_exceptional.end());
  return d;
}

} // namespace

ExceptionalDecomposition exceptional_edges(const BrauerGraph& g) { return prune(g, nullptr); }

ExceptionalDecomposition exceptional_edges(const BrauerGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return prune(g, &rng);
}

ComponentDescriptor module_position(const BrauerGraph& g, ModuleKind kind, std::string_view edge) {
  int e = g.edge(edge);
  auto dec = exceptional_edges(g);
  ComponentDescriptor c;
  if (!dec.is_exceptional(edge)) {
    auto t = rep_type(g);
    if (t.kind == RepKind::Domestic)
      c.form = "ℤÃ_{" + std::to_string(t.domestic->p) + "," + std::to_string(t.domestic->q) + "}";
    else
      c.form = "ℤA_∞^∞";
    return c;
  }
  // distance from the connecting vertex inside the subtree decides which end is inner
  const ExceptionalSubtree* sub = nullptr;
  for (const auto& t : dec.subtrees)
    if (std::find(t.edges.begin(), t.edges.end(), edge) != t.edges.end()) sub = &t;
  std::map<int, int> dist;
  std::deque<int> queue{g.vertex(sub->connecting_vertex)};
  dist[queue.front()] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& id : sub->edges) {
      auto [x, y] = g.halves_of(g.edge(id));
      int a = g.vertex_of(x), b = g.vertex_of(y);
      for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}})
        if (from == v && !dist.count(to)) {
          dist[to] = dist[v] + 1;
          queue.push_back(to);
        }
    }
  }
  auto [x, y] = g.halves_of(e);
  int inner = dist.at(g.vertex_of(x)) < dist.at(g.vertex_of(y)) ? x : y;
  int half = kind == ModuleKind::Simple ? inner : g.iota(inner);

  auto summary = ar_components(g);
  for (std::size_t i = 0; i < summary.exceptional_tubes.size(); ++i) {
    const auto& hs = summary.exceptional_tubes[i].walk.halves;
    if (std::find(hs.begin(), hs.end(), g.half_id(half)) != hs.end()) {
      c.exceptional_tube = true;
      c.tube = static_cast<int>(i);
      c.rank = summary.exceptional_tubes[i].rank;
      c.form = tube_form(c.rank);
    }
  }
  return c;
}

bool same_component(const BrauerGraph& g, std::string_view e, std::string_view f) {
  int ei = g.edge(e), fi = g.edge(f);
  auto dec = exceptional_edges(g);
  for (auto s : {e, f})
    if (dec.is_exceptional(s))
      throw ClassifyError("edge '" + std::string(s) + "' is exceptional; the criterion needs non-exceptional edges");
  auto t = rep_type(g);
  if (t.kind == RepKind::Domestic && t.domestic->m == 1) return true;

  std::set<int> core;
  for (const auto& id : dec.non_exceptional) core.insert(g.edge(id));
  auto ends = edge_ends(g);
  auto loop = [&](int x) { return ends[x].a == ends[x].b; };
  auto other = [&](int x, int v) { return ends[x].a == v ? ends[x].b : ends[x].a; };
  std::vector<std::vector<int>> at(g.vertex_count());
  for (int x : core) {
    at[ends[x].a].push_back(x);
    if (!loop(x)) at[ends[x].b].push_back(x);
  }
  if (loop(ei)) return false;

  // state: (v_k, e_k, k mod 2) with k >= 1
  std::set<std::tuple<int, int, int>> seen;
  std::deque<std::tuple<int, int, int>> queue;
  for (int v0 : {ends[ei].a, ends[ei].b}) {
    auto s = std::tuple{other(ei, v0), ei, 1};
    if (seen.insert(s).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    auto [v, x, parity] = queue.front();
    queue.pop_front();
    for (int y : at[v]) {
      if (loop(y)) continue;
      bool only_these = std::all_of(at[v].begin(), at[v].end(), [&](int z) { return z == x || z == y; });
      if (!only_these) continue;
      int need = x == y ? 2 : 1;
      if (g.multiplicity(v) != need) continue;
      int np = 1 - parity;
      if (np == 0 && y == fi) return true;
      auto s = std::tuple{other(y, v), y, np};
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  return false;
}

} // namespace brauer

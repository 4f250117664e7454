#include "brauer/walks.hpp"

namespace brauer {

int step(const BrauerGraph& g, int h) { return g.iota(g.sigma(h)); }

namespace {

GreenWalk trace(const BrauerGraph& g, int start, int stride) {
  GreenWalk w;
  int x = start;
  do {
    w.halves.push_back(g.half_id(x));
    w.edges.push_back(g.edge_id(g.edge_of(x)));
    for (int k = 0; k < stride; ++k) x = step(g, x);
  } while (x != start);
  return w;
}

std::vector<GreenWalk> decompose(const BrauerGraph& g, int stride) {
  std::vector<GreenWalk> out;
  std::vector<char> seen(g.half_count(), 0);
  for (int h = 0; h < g.half_count(); ++h) {
    if (seen[h]) continue;
    out.push_back(trace(g, h, stride));
    for (const auto& id : out.back().halves) seen[g.half(id)] = 1;
  }
  return out;
}

} // namespace

GreenWalk green_walk(const BrauerGraph& g, std::string_view start_half) { return trace(g, g.half(start_half), 1); }

std::vector<GreenWalk> all_green_walks(const BrauerGraph& g) { return decompose(g, 1); }

std::vector<DoubleSteppedWalk> double_stepped_walks(const BrauerGraph& g) { return decompose(g, 2); }

std::vector<std::string> projective_resolution_from(const BrauerGraph& g, std::string_view start_half, int n) {
  if (n < 0) throw std::invalid_argument("number of terms must be non-negative");
  std::vector<std::string> out;
  int x = g.half(start_half);
  for (int k = 0; k <= n; ++k) {
    out.push_back(g.edge_id(g.edge_of(x)));
    x = step(g, x);
  }
  return out;
}

std::vector<std::string> projective_resolution(const BrauerGraph& g, std::string_view edge, int n) {
  int e = g.edge(edge);
  auto [a, b] = g.halves_of(e);
  bool ta = g.truncated_at_half(a), tb = g.truncated_at_half(b);
  if (!ta && !tb)
    throw GraphError("", "edge '" + std::string(edge) +
                             "' is not truncated at any endpoint, so its simple module is not uniserial");
  // start at the half-edge of the non-truncated endpoint
  int start = ta ? b : a;
  return projective_resolution_from(g, g.half_id(start), n);
}

} // namespace brauer

#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#ifndef BRAUER_DATA_DIR
#define BRAUER_DATA_DIR "data"
#endif

namespace testing {

using namespace brauer;

std::string data(const std::string& rel) { return std::string(BRAUER_DATA_DIR) + "/" + rel; }

BrauerGraph graph(const std::string& name) { return load_graph(data("graphs/" + name + ".bg")); }

BrauerGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& o) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int nv = uniform(o.min_vertices, o.max_vertices);
  std::vector<std::pair<int, int>> ends;
  for (int v = 1; v < nv; ++v) ends.push_back({uniform(0, v - 1), v});
  int extra = uniform(nv == 1 ? 1 : 0, o.max_extra_edges);
  std::bernoulli_distribution loop(o.loop_chance);
  for (int k = 0; k < extra; ++k) {
    int a = uniform(0, nv - 1);
    int b = (nv == 1 || loop(rng)) ? a : uniform(0, nv - 1);
    ends.push_back({a, b});
  }
  GraphSpec spec;
  std::vector<std::vector<std::string>> at(nv);
  for (std::size_t k = 0; k < ends.size(); ++k) {
    auto [a, b] = ends[k];
    std::string e = "e" + std::to_string(k);
    std::string h1 = e + "@v" + std::to_string(a);
    std::string h2 = e + "@v" + std::to_string(b) + (a == b ? "'" : "");
    spec.edges.push_back({e, h1, h2});
    at[a].push_back(h1);
    at[b].push_back(h2);
  }
  for (int v = 0; v < nv; ++v) {
    std::shuffle(at[v].begin(), at[v].end(), rng);
    spec.vertices.push_back({"v" + std::to_string(v), uniform(1, o.max_multiplicity), at[v]});
  }
  return BrauerGraph::from_spec(spec);
}

PathCount path_count(const Quiver& q, const std::vector<Relation>& rels) {
  std::map<std::string, int> vid;
  for (std::size_t i = 0; i < q.vertices.size(); ++i) vid[q.vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> out(q.vertices.size());
  for (std::size_t a = 0; a < q.arrows.size(); ++a) out[vid[q.arrows[a].source]].push_back(static_cast<int>(a));

  std::set<Path> monomials;
  std::multimap<Path, Path> swaps;
  std::size_t longest = 1;
  for (const auto& r : rels) {
    for (const auto& t : r.terms) longest = std::max(longest, t.size());
    if (r.kind == RelationKind::I) {
      swaps.insert({r.terms[0], r.terms[1]});
      swaps.insert({r.terms[1], r.terms[0]});
    } else {
      monomials.insert(r.terms[0]);
    }
  }
  std::size_t bound = longest + 2;

  std::vector<Path> paths;
  std::vector<int> start;
  std::map<Path, int> index;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    std::vector<Path> frontier;
    for (int a : out[v]) frontier.push_back({a});
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (auto& p : frontier) {
        index[p] = static_cast<int>(paths.size());
        paths.push_back(p);
        start.push_back(static_cast<int>(v));
        if (p.size() < bound)
          for (int a : out[vid[q.arrows[p.back()].target]]) {
            Path x = p;
            x.push_back(a);
            next.push_back(std::move(x));
          }
      }
      frontier = std::move(next);
    }
  }

  std::vector<int> parent(paths.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> zero(paths.size(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    for (std::size_t at = 0; at < p.size(); ++at)
      for (std::size_t len = 1; at + len <= p.size() && len <= longest; ++len) {
        Path sub(p.begin() + at, p.begin() + at + len);
        if (monomials.count(sub)) zero[i] = 1;
        auto [lo, hi] = swaps.equal_range(sub);
        for (auto it = lo; it != hi; ++it) {
          Path r(p.begin(), p.begin() + at);
          r.insert(r.end(), it->second.begin(), it->second.end());
          r.insert(r.end(), p.begin() + at + len, p.end());
          auto j = index.find(r);
          if (j != index.end()) parent[find(static_cast<int>(i))] = find(j->second);
        }
      }
  }

  // a path vanishes once any subpath's class does
  std::vector<char> class_zero(paths.size(), 0);
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (zero[i]) class_zero[find(static_cast<int>(i))] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (class_zero[find(static_cast<int>(i))]) continue;
      const auto& p = paths[i];
      bool z = false;
      for (std::size_t at = 0; at < p.size() && !z; ++at)
        for (std::size_t len = 1; at + len <= p.size() && len < p.size() && !z; ++len) {
          auto j = index.find(Path(p.begin() + at, p.begin() + at + len));
          z = j != index.end() && class_zero[find(j->second)];
        }
      if (z) {
        class_zero[find(static_cast<int>(i))] = 1;
        changed = true;
      }
    }
  }

  PathCount pc;
  pc.per_vertex.assign(q.vertices.size(), 1);
  std::set<int> seen;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    int c = find(static_cast<int>(i));
    if (class_zero[c]) continue;
    if (paths[i].size() == bound) pc.bounded = false;
    if (seen.insert(c).second) ++pc.per_vertex[start[i]];
  }
  for (long d : pc.per_vertex) pc.total += d;
  return pc;
}

long closed_form_dimension(const BrauerGraph& g) {
  long d = 2L * g.edge_count();
  for (int v = 0; v < g.vertex_count(); ++v) {
    long k = static_cast<long>(g.multiplicity(v)) * g.valency(v);
    d += g.valency(v) * (k - 1);
  }
  return d;
}

namespace {

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> w;
  for (std::string x; in >> x;) w.push_back(x);
  return w;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(' ');
  auto b = s.find_last_not_of(' ');
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

// "(a b)^3 c^2 d" -> a b a b a b c c d
std::vector<std::string> expand(const std::string& term) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto power = [&](std::size_t& j) {
    if (j < term.size() && term[j] == '^') {
      std::size_t k = j + 1;
      while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
      int n = std::stoi(term.substr(j + 1, k - j - 1));
      j = k;
      return n;
    }
    return 1;
  };
  while (i < term.size()) {
    if (term[i] == ' ') {
      ++i;
    } else if (term[i] == '(') {
      auto close = term.find(')', i);
      auto inner = words(term.substr(i + 1, close - i - 1));
      std::size_t j = close + 1;
      int n = power(j);
      for (int k = 0; k < n; ++k) out.insert(out.end(), inner.begin(), inner.end());
      i = j;
    } else {
      std::size_t j = i;
      while (j < term.size() && term[j] != ' ' && term[j] != '^') ++j;
      std::string name = term.substr(i, j - i);
      int n = power(j);
      for (int k = 0; k < n; ++k) out.push_back(name);
      i = j;
    }
  }
  return out;
}

std::string key(const NamedRelation& r) {
  std::vector<std::string> ts;
  for (const auto& t : r.terms) {
    std::string s;
    for (const auto& a : t) s += a + " ";
    ts.push_back(s);
  }
  std::sort(ts.begin(), ts.end());
  std::string k = r.kind + ":";
  for (const auto& t : ts) k += "[" + t + "]";
  return k;
}

// All arrow bijections expected -> actual respecting endpoints.
void bijections(const Quiver& q, const std::vector<NamedArrow>& ex, std::size_t i, std::vector<int>& cur,
                std::vector<char>& used, const std::function<bool(const std::vector<int>&)>& visit, bool& stop) {
  if (stop) return;
  if (i == ex.size()) {
    stop = visit(cur);
    return;
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    if (used[a] || q.arrows[a].source != ex[i].source || q.arrows[a].target != ex[i].target) continue;
    used[a] = 1;
    cur.push_back(static_cast<int>(a));
    bijections(q, ex, i + 1, cur, used, visit, stop);
    cur.pop_back();
    used[a] = 0;
  }
}

} // namespace

NamedRelation rel(const std::string& text) {
  auto colon = text.find(':');
  NamedRelation r;
  r.kind = trim(text.substr(0, colon));
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (true) {
    auto dash = rest.find(" - ", pos);
    r.terms.push_back(expand(trim(rest.substr(pos, dash == std::string::npos ? std::string::npos : dash - pos))));
    if (dash == std::string::npos) break;
    pos = dash + 3;
  }
  return r;
}

std::vector<NamedRelation> type_two(const std::vector<std::string>& cycle, int m) {
  std::vector<NamedRelation> out;
  std::size_t n = cycle.size();
  for (std::size_t s = 0; s < n; ++s) {
    NamedRelation r{"II", {{}}};
    for (std::size_t k = 0; k < n * m + 1; ++k) r.terms[0].push_back(cycle[(s + k) % n]);
    out.push_back(r);
  }
  return out;
}

MatchResult match_quiver(const Quiver& q, const std::vector<NamedArrow>& expected) {
  return match_presentation(Presentation{q, {}, {}}, expected, {}, false);
}

MatchResult match_presentation(const Presentation& p, const std::vector<NamedArrow>& arrows,
                               const std::vector<NamedRelation>& rels, bool minimal_only) {
  const auto& q = p.quiver;
  std::set<std::string> qv(q.vertices.begin(), q.vertices.end()), ev;
  for (const auto& a : arrows) ev.insert({a.source, a.target});
  if (q.arrows.size() != arrows.size())
    return {false, "expected " + std::to_string(arrows.size()) + " arrows, got " + std::to_string(q.arrows.size())};
  for (const auto& v : ev)
    if (!qv.count(v)) return {false, "vertex " + v + " missing"};

  std::multiset<std::string> want;
  for (const auto& r : rels) want.insert(key(r));

  std::vector<int> cur;
  std::vector<char> used(q.arrows.size(), 0);
  bool stop = false, any = false;
  std::string last;
  bijections(q, arrows, 0, cur, used,
             [&](const std::vector<int>& bij) {
               any = true;
               std::map<int, std::string> name;
               for (std::size_t i = 0; i < bij.size(); ++i) name[bij[i]] = arrows[i].name;
               std::multiset<std::string> got;
               for (const auto& r : p.relations) {
                 if (minimal_only && !r.minimal) continue;
                 NamedRelation nr{relation_kind_name(r.kind), {}};
                 for (const auto& t : r.terms) {
                   nr.terms.emplace_back();
                   for (int a : t) nr.terms.back().push_back(name[a]);
                 }
                 got.insert(key(nr));
               }
               if (rels.empty() || got == want) return true;
               std::vector<std::string> diff;
               std::set_symmetric_difference(got.begin(), got.end(), want.begin(), want.end(),
                                             std::back_inserter(diff));
               last = "relations differ, e.g. " + diff.front();
               return false;
             },
             stop);
  if (!any) return {false, "no arrow bijection respecting endpoints"};
  if (!stop) return {false, last};
  return {true, ""};
}

MatchResult match_projective(const ProjectiveStructure& p, const Loewy& ex) {
  if (p.top != ex.edge || p.socle != ex.edge) return {false, "P_" + p.edge + " top/socle mismatch"};
  auto a = p.branches, b = ex.branches;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return {false, "P_" + p.edge + " branches differ"};
  if (p.dimension != ex.dimension)
    return {false, "P_" + p.edge + " dimension " + std::to_string(p.dimension) + " != " + std::to_string(ex.dimension)};
  return {true, ""};
}

} // namespace testing

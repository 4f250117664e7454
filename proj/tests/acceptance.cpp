#include "goldens.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

namespace gold = testing::goldens;
using testing::MatchResult;

namespace {

struct Criterion {
  const char* name;
  double budget; // seconds
  std::function<MatchResult()> run;
};

MatchResult all(std::initializer_list<std::function<MatchResult()>> parts) {
  for (const auto& p : parts) {
    auto r = p();
    if (!r.ok) return r;
  }
  return {true, ""};
}

} // namespace

int main() {
  std::vector<Criterion> cs = {
      {"quiver goldens G1-G4", 1.0,
       [] { return all({[] { return gold::quiver(1); }, [] { return gold::quiver(2); },
                        [] { return gold::quiver(3); }, [] { return gold::quiver(4); }}); }},
      {"relation goldens B1-B4", 1.0,
       [] {
         return all({[] { return gold::relations(1, false); }, [] { return gold::relations(1, true); },
                     [] { return gold::relations(2, false); }, [] { return gold::relations(2, true); },
                     [] { return gold::relations(3, false); }, [] { return gold::relations(3, true); },
                     [] { return gold::relations(4, false); }, [] { return gold::relations(4, true); }});
       }},
      {"projective goldens B1-B4 with path-count oracle", 5.0,
       [] {
         return all({[] { return gold::projectives(1); }, [] { return gold::projectives(2); },
                     [] { return gold::projectives(3); }, [] { return gold::projectives(4); },
                     [] { return gold::projectives_vs_oracle(1); }, [] { return gold::projectives_vs_oracle(2); },
                     [] { return gold::projectives_vs_oracle(3); }, [] { return gold::projectives_vs_oracle(4); }});
       }},
      {"walk goldens", 1.0, [] { return all({gold::walks_tubes, gold::walks_nonplanar, gold::walks_single_loop}); }},
      {"domestic goldens and census", 1.0, [] { return all({gold::domestic_one, gold::domestic_two}); }},
      {"Kauer move and two-term complex on the square", 1.0,
       [] { return all({gold::square_move, gold::square_okuyama}); }},
      {"hexagon potential and frozen relations", 1.0,
       [] { return all({gold::hexagon_potential, gold::hexagon_relations}); }},
      {"gentle goldens", 1.0, [] { return all({gold::gentle_example34, gold::gentle_cuts, gold::gentle_kalck}); }},
      {"property suites", 60.0,
       [] {
         return all({[] { return gold::prop_ribbon(200, 101); }, [] { return gold::prop_walks(200, 102); },
                     [] { return gold::prop_kauer_roundtrip(100, 103); },
                     [] { return gold::prop_fz_involution(100, 104); },
                     [] { return gold::prop_pruning_confluence(40, 10, 105); },
                     [] { return gold::prop_flip_kauer(9); }});
       }},
      {"AR placement on the exceptional-subtree example", 5.0, gold::placement},
  };

  int failed = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    MatchResult r;
    try {
      r = cs[i].run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.ok && secs > cs[i].budget) r = {false, "over time budget"};
    failed += !r.ok;
    std::printf("%s [%zu] %s (%.3f s)%s%s\n", r.ok ? "PASS" : "FAIL", i + 1, cs[i].name, secs,
                r.detail.empty() ? "" : ": ", r.detail.c_str());
  }
  return failed ? 1 : 0;
}

#pragma once

#include "support.hpp"

#include <cstdint>

// Worked-example checks shared by the unit tests and the acceptance runner.
namespace testing::goldens {

MatchResult quiver(int k);                    // G1..G4
MatchResult relations(int k, bool minimal);   // B1..B4
MatchResult projectives(int k);               // B1..B4, Loewy structure
MatchResult projectives_vs_oracle(int k);     // dimensions against path_count
MatchResult walks_tubes();
MatchResult walks_nonplanar();
MatchResult walks_single_loop();
MatchResult domestic_one();
MatchResult domestic_two();
MatchResult square_move();
MatchResult square_okuyama();
MatchResult hexagon_potential();
MatchResult hexagon_relations();
MatchResult gentle_example34();
MatchResult gentle_cuts();
MatchResult gentle_kalck();
MatchResult placement();

// Property suites; each runs `count` random instances from `seed`.
MatchResult prop_ribbon(int count, std::uint64_t seed);
MatchResult prop_walks(int count, std::uint64_t seed);
MatchResult prop_kauer_roundtrip(int count, std::uint64_t seed);
MatchResult prop_fz_involution(int count, std::uint64_t seed);
MatchResult prop_pruning_confluence(int graphs, int orders, std::uint64_t seed);
MatchResult prop_flip_kauer(int max_n);
MatchResult prop_oracle(int count, std::uint64_t seed);

} // namespace testing::goldens

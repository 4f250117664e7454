#pragma once

#include "brauer/ribbon.hpp"

#include <string>
#include <vector>

namespace brauer {

// One period of a cycle of φ = ι∘σ (or of φ² for double-stepped walks).
// The state is the half-edge at the vertex where the next successor is taken.
struct GreenWalk {
  std::vector<std::string> halves;
  std::vector<std::string> edges;
  int period() const { return static_cast<int>(halves.size()); }
};

using DoubleSteppedWalk = GreenWalk;

// φ(h) = ι(σ(h))
int step(const BrauerGraph& g, int h);

GreenWalk green_walk(const BrauerGraph& g, std::string_view start_half);
std::vector<GreenWalk> all_green_walks(const BrauerGraph& g);
std::vector<DoubleSteppedWalk> double_stepped_walks(const BrauerGraph& g);

// Terms P_{i_0}, ..., P_{i_n} of the minimal projective resolution of the
// uniserial simple at a truncated edge, as edge ids.
std::vector<std::string> projective_resolution(const BrauerGraph& g, std::string_view edge, int n);
// Same, starting the walk at an explicit half-edge.
std::vector<std::string> projective_resolution_from(const BrauerGraph& g, std::string_view start_half, int n);

} // namespace brauer

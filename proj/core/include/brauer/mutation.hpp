#pragma once

#include "brauer/algebra.hpp"
#include "brauer/ribbon.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

class MutationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Direction { Plus, Minus };

Direction parse_direction(std::string_view s);
std::string direction_name(Direction d);

struct Relocation {
  std::string half;
  std::string old_vertex;
  std::string slide_edge;
  std::string new_vertex;
  std::string anchor; // inserted after (plus) or before (minus) this half-edge
};

struct KauerMove {
  std::string edge;
  Direction direction = Direction::Plus;
  std::string kind; // "i", "ii" (pendant) or "iii" (loop)
  std::vector<Relocation> relocations;
  BrauerGraph result;
};

// Throws MutationError if s is a loop with σ-adjacent halves, or if s has an
// endpoint of valency one and multiplicity > 1; both give a loop arrow at s.
void check_movable(const BrauerGraph& g, std::string_view s);

KauerMove kauer_move_report(const BrauerGraph& g, std::string_view s, Direction d);
BrauerGraph kauer_move(const BrauerGraph& g, std::string_view s, Direction d = Direction::Plus);

struct TwoTermComplex {
  std::vector<std::string> degree_one; // P(rad P_s)
  std::string degree_zero;
};

TwoTermComplex okuyama_complex(const BrauerGraph& g, std::string_view s);

struct MutableQuiver {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> arrows; // kept sorted

  static MutableQuiver from(const Quiver& q);
  void normalize();
  bool operator==(const MutableQuiver& o) const { return vertices == o.vertices && arrows == o.arrows; }
};

MutableQuiver fz_mutate(const MutableQuiver& q, std::string_view k);

struct FlipCheck {
  bool precondition_ok = false;
  std::string message;
  bool agree = false;
  MutableQuiver kauer_side;  // Q of μ⁺_s(G)
  MutableQuiver mutated;     // μ_s(Q_G)
};

FlipCheck flip_check(const BrauerGraph& g, std::string_view s);

} // namespace brauer

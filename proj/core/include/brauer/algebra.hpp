#pragma once

#include "brauer/ribbon.hpp"

#include <string>
#include <vector>

namespace brauer {

struct Arrow {
  std::string id; // "<graph vertex>.<position in its cycle>"
  std::string source;
  std::string target;
  std::string vertex; // graph vertex inducing the arrow
  std::string half;   // h, with target edge of σ(h)
  std::string next_half;
};

// Vertices are the edge ids of the graph. For the single edge truncated at
// both ends the quiver is the one-loop presentation of K[x]/(x²) and
// degenerate is set.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  bool degenerate = false;

  int arrow_index(std::string_view id) const;
  // arrow induced by the half-edge h, or -1
  int arrow_of_half(std::string_view half) const;
};

using Path = std::vector<int>; // arrow indices, composed left to right

struct SpecialCycle {
  std::string vertex; // graph vertex v
  std::string start;  // quiver vertex i
  std::string half;   // half-edge of i at v the cycle starts from
  Path arrows;        // length val(v)
};

enum class RelationKind { I, II, III };

// I: terms = {C_v^m(v), C_v'^m(v')} read as terms[0] - terms[1].
// II: terms = {C_v^m(v)·α₁}. III: terms = {αβ}.
struct Relation {
  RelationKind kind = RelationKind::III;
  std::vector<Path> terms;
  std::string edge; // quiver vertex the relation starts at
  bool minimal = false;
};

struct Presentation {
  Quiver quiver;
  std::vector<SpecialCycle> cycles;
  std::vector<Relation> relations;
};

struct ProjectiveStructure {
  std::string edge;
  std::string top;
  std::vector<std::vector<std::string>> branches; // one per non-truncated endpoint
  std::vector<std::string> branch_vertices;       // graph vertex of each branch
  std::string socle;
  long dimension = 0;
};

Quiver build_quiver(const BrauerGraph& g);
std::vector<SpecialCycle> special_cycles(const BrauerGraph& g);
std::vector<Relation> relations(const BrauerGraph& g);
std::vector<Relation> minimal_relations(const BrauerGraph& g);
Presentation presentation(const BrauerGraph& g);

ProjectiveStructure projective(const BrauerGraph& g, std::string_view edge);
std::vector<ProjectiveStructure> projectives(const BrauerGraph& g);
long algebra_dimension(const BrauerGraph& g);

std::string relation_kind_name(RelationKind k);
std::string path_string(const Quiver& q, const Path& p);

} // namespace brauer

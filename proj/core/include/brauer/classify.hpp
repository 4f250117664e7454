#pragma once

#include "brauer/ribbon.hpp"
#include "brauer/walks.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

class ClassifyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class RepKind { Finite, Domestic, NonDomestic };

struct DomesticParameters {
  int m = 0;      // 1 or 2
  int p = 0;      // p >= q
  int q = 0;
  int cycle = 0;  // length l of the unique cycle, 0 for a tree
  int n1 = 0;     // additional edges on the p side of the cycle
  int n2 = 0;
};

struct RepType {
  RepKind kind = RepKind::Finite;
  std::optional<DomesticParameters> domestic;
  std::string name() const; // "finite", "1-domestic", "2-domestic", "non-domestic"
};

// Rank of the cycle space, |E| - |V| + 1.
int cycle_rank(const BrauerGraph& g);
// Edges of the unique cycle when cycle_rank(g) == 1, otherwise empty.
std::vector<std::string> unique_cycle(const BrauerGraph& g);

RepType rep_type(const BrauerGraph& g);
// p and q from the double-stepped walks, checked against p + q.
DomesticParameters domestic_parameters(const BrauerGraph& g);

struct ComponentFamily {
  std::string form;   // e.g. "ℤÃ_{9,5}", "ℤA_∞/⟨τ^3⟩", "ℤA_∞^∞"
  int count = 0;      // ignored when infinite
  bool infinite = false;
};

struct Tube {
  int rank = 0;
  DoubleSteppedWalk walk;
};

struct ARSummary {
  RepType type;
  std::vector<Tube> exceptional_tubes; // empty for finite type
  std::vector<ComponentFamily> families;
};

ARSummary ar_components(const BrauerGraph& g);

struct ExceptionalSubtree {
  std::string connecting_vertex;
  std::vector<std::string> edges; // sorted
};

struct ExceptionalDecomposition {
  std::vector<ExceptionalSubtree> subtrees;
  std::vector<std::string> non_exceptional; // sorted
  bool is_exceptional(std::string_view edge) const;
};

// Iterated pruning of leaf edges at multiplicity-one leaves. Throws
// ClassifyError for Brauer trees.
ExceptionalDecomposition exceptional_edges(const BrauerGraph& g);
// Same, choosing the next leaf pseudo-randomly from seed.
ExceptionalDecomposition exceptional_edges(const BrauerGraph& g, std::uint64_t seed);

enum class ModuleKind { Simple, Radical };

struct ComponentDescriptor {
  bool exceptional_tube = false;
  int tube = -1; // index into ar_components(g).exceptional_tubes
  int rank = 0;
  std::string form;
};

ComponentDescriptor module_position(const BrauerGraph& g, ModuleKind kind, std::string_view edge);

// Whether S_e and rad P_f lie in one component, for non-exceptional e, f.
bool same_component(const BrauerGraph& g, std::string_view e, std::string_view f);

} // namespace brauer

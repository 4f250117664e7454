#pragma once

#include "brauer/algebra.hpp"
#include "brauer/ribbon.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

class GentleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GentleArrow {
  std::string id;
  std::string source;
  std::string target;
};

// KQ/I with I generated by paths of length two.
struct GentlePresentation {
  std::vector<std::string> vertices;
  std::vector<GentleArrow> arrows;
  std::vector<std::pair<std::string, std::string>> relations;
  std::vector<std::vector<std::string>> long_relations; // parsed, not of length two

  const GentleArrow& arrow(std::string_view id) const;
  bool is_relation(std::string_view a, std::string_view b) const;
};

GentlePresentation parse_gentle(std::string_view text);
std::string serialize_gentle(const GentlePresentation& p);
GentlePresentation load_gentle(const std::string& path);

struct AxiomCheck {
  bool ok = true;
  std::vector<std::string> offenders;
};

struct GentleDiagnostics {
  std::vector<std::string> structural; // dangling ids, non-composable relations
  AxiomCheck s0, s1, s2, s3;
  bool gentle() const { return structural.empty() && s0.ok && s1.ok && s2.ok && s3.ok; }
};

GentleDiagnostics validate_gentle(const GentlePresentation& p);

// A maximal path, or the trivial path at `vertex` when arrows is empty.
struct MaximalPath {
  std::vector<std::string> arrows;
  std::string vertex;
  std::vector<std::string> vertex_sequence; // quiver vertices along the path
  std::string name() const;
};

struct MaximalPathSet {
  std::vector<MaximalPath> paths;   // M
  std::vector<MaximalPath> trivial; // M0
  std::vector<std::string> diagnostics;
  std::vector<MaximalPath> all() const; // M̄
};

MaximalPathSet maximal_paths(const GentlePresentation& p);

BrauerGraph gentle_graph(const GentlePresentation& p);

struct TrivialExtension {
  BrauerGraph graph;
  Presentation presentation;
};

TrivialExtension trivial_extension(const GentlePresentation& p);

using AdmissibleCut = std::set<std::string>; // arrow ids of build_quiver(g)

std::vector<AdmissibleCut> enumerate_admissible_cuts(const BrauerGraph& g);
GentlePresentation cut_algebra(const BrauerGraph& g, const AdmissibleCut& cut);

// Vertex and arrow bijection carrying relations onto relations.
struct GentleIsomorphism {
  std::map<std::string, std::string> vertices;
  std::map<std::string, std::string> arrows;
};

std::optional<GentleIsomorphism> gentle_isomorphic(const GentlePresentation& a, const GentlePresentation& b);

} // namespace brauer

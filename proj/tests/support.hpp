#pragma once

#include "brauer/algebra.hpp"
#include "brauer/ribbon.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

std::string data(const std::string& rel); // path under the data directory
brauer::BrauerGraph graph(const std::string& name); // data/graphs/<name>.bg

// Random connected ribbon graph. Half ids "<edge>@<vertex>", primed for
// the second half of a loop.
struct RandomGraphOptions {
  int min_vertices = 1;
  int max_vertices = 6;
  int max_extra_edges = 3; // beyond a spanning tree
  int max_multiplicity = 3;
  double loop_chance = 0.2;
};
brauer::BrauerGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& o = {});

// Brute-force dimension of e_i A from a set of relations: paths up to a
// length bound, monomials zero, binomials merged by union-find.
struct PathCount {
  std::vector<long> per_vertex; // indexed like q.vertices
  long total = 0;
  bool bounded = true; // every path at the length bound was zero
};
PathCount path_count(const brauer::Quiver& q, const std::vector<brauer::Relation>& rels);

// dim A = 2|E| + sum over v of m(v)val(v)(m(v)val(v) - 1), with the single
// edge truncated at both ends giving 2.
long closed_form_dimension(const brauer::BrauerGraph& g);

// Expected quiver and relations under their usual names; matched up to a
// bijection of arrows respecting source and target.
struct NamedArrow {
  std::string name, source, target;
};
struct NamedRelation {
  std::string kind;                            // "I", "II", "III"
  std::vector<std::vector<std::string>> terms; // arrow names
};
// "I: (a1 a2 a3)^3 - e^2", "III: e a1"
NamedRelation rel(const std::string& text);
// C^m a1 for every rotation of the cycle.
std::vector<NamedRelation> type_two(const std::vector<std::string>& cycle, int m);

struct MatchResult {
  bool ok = false;
  std::string detail;
};
MatchResult match_quiver(const brauer::Quiver& q, const std::vector<NamedArrow>& expected);
MatchResult match_presentation(const brauer::Presentation& p, const std::vector<NamedArrow>& arrows,
                               const std::vector<NamedRelation>& rels, bool minimal_only);

// Uniserial parts of a projective as (top, sorted branches, socle).
struct Loewy {
  std::string edge;
  std::vector<std::vector<std::string>> branches;
  long dimension;
};
MatchResult match_projective(const brauer::ProjectiveStructure& p, const Loewy& expected);

} // namespace testing

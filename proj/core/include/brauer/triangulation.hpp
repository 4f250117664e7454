#pragma once

#include "brauer/algebra.hpp"
#include "brauer/ribbon.hpp"

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

class TriangulationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Arc = std::pair<int, int>; // i < j, marked points numbered 1..n counterclockwise

// Triangulation of a disc with n marked points on the boundary.
struct DiscTriangulation {
  int n = 3;
  std::vector<Arc> arcs; // internal arcs, sorted

  bool operator==(const DiscTriangulation& o) const { return n == o.n && arcs == o.arcs; }
};

std::string arc_id(const Arc& a);           // "i-j"
Arc parse_arc(std::string_view s, int n);   // accepts "j-i" too
std::vector<Arc> parse_arcs(std::string_view s, int n); // comma separated

bool is_boundary(int n, const Arc& a);
bool crosses(const Arc& a, const Arc& b);

// Throws TriangulationError for bad endpoints, boundary or repeated arcs,
// crossings, or a non-maximal arc set.
DiscTriangulation build_triangulation(int n, std::vector<Arc> arcs);

// Vertices "1".."n", edges "i-j" for boundary and internal arcs, half-edge
// "i-j@i" at i; cyclic order at i is clockwise, m ≡ 1.
BrauerGraph triangulation_graph(const DiscTriangulation& t);

std::vector<std::array<int, 3>> triangles(const DiscTriangulation& t);

DiscTriangulation flip(const DiscTriangulation& t, const Arc& arc);
Arc flipped_arc(const DiscTriangulation& t, const Arc& arc);

struct FlipKauerEntry {
  std::string arc;
  std::string flipped_to;
  bool plus_agrees = false;
  bool minus_agrees = false;
};

struct FlipKauerReport {
  std::vector<FlipKauerEntry> entries;
  bool all_agree() const;
};

FlipKauerReport flip_is_kauer(const DiscTriangulation& t);

struct Parameters {
  int genus = 0;
  int boundary_components = 1;
  int marked_points = 0;      // n
  int boundary_triangles = 0; // d
  bool operator==(const Parameters& o) const = default;
};

Parameters parameters(const DiscTriangulation& t);
bool ladkani_equivalent(const DiscTriangulation& a, const DiscTriangulation& b);

struct IceArrow {
  std::string id; // same naming as build_quiver: "<marked point>.<position>"
  std::string source;
  std::string target;
  std::string vertex;
  bool boundary = false;
};

struct PotentialTerm {
  int sign = 1;
  std::vector<std::string> cycle; // arrow ids, rotated to start at the least id
};

struct IceQuiver {
  std::vector<std::string> vertices;
  std::set<std::string> frozen;
  std::vector<IceArrow> arrows;
  std::vector<PotentialTerm> potential;

  int arrow_index(std::string_view id) const;
};

// Built from triangle corners and boundary arrows, independently of the
// Brauer quiver.
IceQuiver ice_quiver(const DiscTriangulation& t);

// ∂_a W = lhs - rhs, lhs from the triangle through a.
struct FrozenRelation {
  std::string arrow;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
};

std::vector<FrozenRelation> frozen_relations(const IceQuiver& iq);

struct FrozenComparison {
  std::vector<std::string> only_brauer; // arrow ids present in Q_T only
  std::vector<std::string> only_ice;
  std::vector<std::string> expected;    // boundary arrows at marked points with two arcs
  bool ok() const { return only_ice.empty() && only_brauer == expected; }
};

FrozenComparison compare_frozen_vs_brauer(const DiscTriangulation& t);

std::vector<DiscTriangulation> all_triangulations(int n);

std::vector<std::string> canonical_cycle(std::vector<std::string> c);

} // namespace brauer

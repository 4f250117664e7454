#pragma once

#include "brauer/algebra.hpp"
#include "brauer/classify.hpp"
#include "brauer/gentle.hpp"
#include "brauer/mutation.hpp"
#include "brauer/ribbon.hpp"
#include "brauer/triangulation.hpp"
#include "brauer/walks.hpp"

#include <json.hpp>

#include <string>

namespace brauer::render {

using Json = nlohmann::ordered_json;

Json graph(const BrauerGraph& g);
Json presentation(const Presentation& p, bool minimal_only = false);
Json walks(const std::vector<GreenWalk>& ws);
Json projectives(const std::vector<ProjectiveStructure>& ps);
Json classification(const BrauerGraph& g);
Json move(const KauerMove& m);
Json faces(const BrauerGraph& g);
Json gentle_check(const GentleDiagnostics& d, const MaximalPathSet& mp);
Json gentle(const GentlePresentation& p);
Json triangulation(const DiscTriangulation& t);
Json parameters(const Parameters& p);
Json ice(const IceQuiver& iq, const std::vector<FrozenRelation>& rels);
Json comparison(const FrozenComparison& c);
Json flip_report(const FlipKauerReport& r);

// {"error": {"kind", "message", "where"?}}
Json error(const std::string& kind, const std::string& message, const std::string& where = "");

std::string dot(const Quiver& q);
std::string path_text(const Quiver& q, const Path& p);
std::string relation_text(const Quiver& q, const Relation& r);

std::string walks_text(const std::vector<GreenWalk>& ws);
std::string projectives_text(const std::vector<ProjectiveStructure>& ps);
std::string classification_text(const BrauerGraph& g);
std::string presentation_text(const Presentation& p, bool minimal_only = false);
std::string ice_text(const IceQuiver& iq, const std::vector<FrozenRelation>& rels);

} // namespace brauer::render

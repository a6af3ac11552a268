#pragma once

#include <span>
#include <string>
#include <vector>

#include "epigraph/analysis.hpp"
#include "epigraph/dialogue.hpp"
#include "epigraph/distribution.hpp"
#include "epigraph/graph.hpp"
#include "epigraph/semantics.hpp"
#include "epigraph/translations.hpp"
#include "json.hpp"

namespace epigraph {

// Insertion-ordered so output follows argument order.
using Json = nlohmann::ordered_json;
using Names = std::span<const std::string>;

Json rational_json(const Rational& r);
// Accepts "p/q", decimal strings and JSON numbers (through their decimal text).
Rational rational_from_json(const Json& j);

Json world_json(World w, Names names);
Json distribution_json(const BeliefDistribution& p, Names names);
Json distributions_json(const DistributionSet& s, Names names);
Json combination_json(const Combination& c, Names names);
Json set_json(const std::set<int>& s, Names names);
Json regime_json(const Regime& r);
Json verdict_json(const AnalysisVerdict& v, Names names);
Json relation_json(const RelationType& rt, Names names);
Json monotonicity_json(const Monotonicity& m);
Json coherence_json(const CoherenceReport& c);
Json arc_checks_json(const std::vector<ArcCheck>& cs, const std::vector<std::vector<Formula>>& zs, Names names);
Json patterns_json(const std::vector<Pattern>& ps, Names names);
Json labelings_json(const std::vector<Labeling>& ls);
Json graph_json(const EpistemicGraph& g);
Json issues_json(const std::vector<GraphIssue>& issues);

Json belief_json(const Belief& b, Names names);
// {"arg": "F", "cmp": ">", "x": "0.5"}; the comparator defaults to "=".
Belief belief_from_json(const Json& j, const EpistemicGraph& g);
Json session_state_json(const SessionState& st, const Belief& goal, Names names);
Json moves_json(const std::vector<Move>& moves, Names names);

}  // namespace epigraph

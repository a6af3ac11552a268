#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "epigraph/json_io.hpp"

namespace epigraph {

// One entry point per engine capability, shared by the CLI and the service.
// Bodies are JSON objects; argument sets are name arrays, formulas are strings.
//
// Common fields: "pi" (value set, default: the smallest grid holding every
// number involved), "cap", "allow_large".
//
//   validate       {}
//   sat            {"assume"?, "filters"?, "patterns"?}
//   entail         {"assume"?, "query"}
//   ddnf           {"formula"?}               default: the conjoined constraints
//   closure-check  {"formula"}
//   coverage       {"arg", "set"?, "mode"?, "arbitrary"?}
//   effectiveness  {"from", "to", "set", "strength"?, "Z"?}
//   relation-type  {"from", "to", "set", "Z"?}
//   monotonicity   {"from", "to", "set", "Z"?}
//   coherence      {"Z"?}                      Z here is a list of formula lists
//   label-check    {"mode"?, "Z"?}
//   semantics      {"order", "direction"?, "filters"?, "assume"?}
//   dialogue       {"goal", "asserted"?, "played"?}
Json run_query(std::string_view kind, const Json& body, const EpistemicGraph& g);
bool known_query(std::string_view kind);

// The regime a query body selects for g, given the extra formulas it mentions.
Regime query_regime(const Json& body, const EpistemicGraph& g, const std::vector<std::vector<Formula>>& extra = {});

// "p(A) > 0.5" style belief, or a JSON belief object.
Belief parse_belief(const Json& j, const EpistemicGraph& g);

Json translate_adf_json(const Adf& adf);
Json translate_caf_json(const EpistemicGraph& caf);
// Reference labelings against the ternary satisfying distributions of the translation.
Json verify_adf(const Adf& adf);
Json verify_caf(const EpistemicGraph& caf);

// Whether a result counts as a positive answer (for --strict).
bool query_positive(std::string_view kind, const Json& result);

}  // namespace epigraph

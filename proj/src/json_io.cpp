#include "epigraph/json_io.hpp"

namespace epigraph {

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number()) return parse_rational(j.dump());
  throw ParseError("expected a rational, got " + j.dump(), 0);
}

Json world_json(World w, Names names) {
  Json out = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i)
    if ((w >> i) & 1) out.push_back(names[i]);
  return out;
}

Json distribution_json(const BeliefDistribution& p, Names names) {
  Json masses = Json::array();
  for (World w = 0; w < p.world_count(); ++w)
    if (p.numerators()[w] != 0) masses.push_back({{"world", world_json(w, names)}, {"mass", rational_json(p.mass(w))}});
  Json marg = Json::object();
  auto ms = p.marginals();
  for (std::size_t i = 0; i < ms.size(); ++i) marg[names[i]] = rational_json(ms[i]);
  return {{"masses", masses}, {"marginals", marg}};
}

Json distributions_json(const DistributionSet& s, Names names) {
  Json out = Json::array();
  for (const auto& p : s) out.push_back(distribution_json(p, names));
  return out;
}

Json combination_json(const Combination& c, Names names) {
  Json entries = Json::array();
  for (const auto& e : c.entries)
    entries.push_back({{"arg", names[e.arg]}, {"cmp", std::string(symbol(e.cmp))}, {"x", rational_json(e.value)}});
  return {{"text", c.to_string(names)}, {"entries", entries}};
}

Json set_json(const std::set<int>& s, Names names) {
  Json out = Json::array();
  for (int i : s) out.push_back(names[i]);
  return out;
}

Json regime_json(const Regime& r) { return {{"pi", r.pi.to_string()}, {"cap", r.cap}}; }

Json verdict_json(const AnalysisVerdict& v, Names names) {
  Json j = {{"holds", v.holds}};
  if (v.witness) j["witness"] = combination_json(*v.witness, names);
  if (v.x) j["x"] = rational_json(*v.x);
  if (v.y) j["y"] = rational_json(*v.y);
  if (v.counterexample) j["counterexample"] = combination_json(*v.counterexample, names);
  if (v.set) j["set"] = set_json(*v.set, names);
  if (v.z_index) j["z_index"] = *v.z_index;
  j["exhaustive"] = v.exhaustive;
  j["regime"] = regime_json(v.regime);
  return j;
}

Json relation_json(const RelationType& rt, Names names) {
  Json j = {{"type", rt.name()},
            {"semi_effective", rt.semi_effective},
            {"attacking", rt.attacking},
            {"supporting", rt.supporting},
            {"dependent", rt.dependent()},
            {"subtle", rt.subtle()},
            {"strongly_attacking", rt.strong_attacking()},
            {"strongly_supporting", rt.strong_supporting()},
            {"strongly_dependent", rt.strong_dependent()},
            {"strongly_subtle", rt.strong_subtle()}};
  if (rt.attack_counterexample) j["attack_counterexample"] = combination_json(*rt.attack_counterexample, names);
  if (rt.support_counterexample) j["support_counterexample"] = combination_json(*rt.support_counterexample, names);
  j["regime"] = regime_json(rt.regime);
  return j;
}

Json monotonicity_json(const Monotonicity& m) {
  return {{"type", m.name()}, {"positive", m.positive}, {"negative", m.negative}, {"vacuous", m.vacuous},
          {"regime", regime_json(m.regime)}};
}

Json coherence_json(const CoherenceReport& c) {
  return {{"bounded", c.bounded},
          {"entry_bounded", c.entry_bounded},
          {"directly_connected", c.directly_connected},
          {"indirectly_connected", c.indirectly_connected},
          {"hidden_connected", c.hidden_connected},
          {"locally_connected", c.locally_connected},
          {"exhaustive", c.exhaustive},
          {"notes", c.notes},
          {"regime", regime_json(c.regime)}};
}

Json arc_checks_json(const std::vector<ArcCheck>& cs, const std::vector<std::vector<Formula>>& zs, Names names) {
  Json out = Json::array();
  for (const auto& c : cs) {
    Json found = Json::array();
    for (const auto& f : c.found) {
      Json z = Json::array();
      if (f.z_index < zs.size())
        for (const auto& phi : zs[f.z_index]) z.push_back(to_string(phi, names));
      std::string lbl = f.label ? label_string(f.label) : "none";
      found.push_back({{"label", lbl}, {"z_index", f.z_index}, {"Z", z}, {"F", set_json(f.F, names)}});
    }
    Json j = {{"from", names[c.from]}, {"to", names[c.to]}, {"labels", label_string(c.labels)}, {"pass", c.pass},
              {"found", found}};
    if (!c.note.empty()) j["note"] = c.note;
    out.push_back(j);
  }
  return out;
}

Json patterns_json(const std::vector<Pattern>& ps, Names names) {
  Json out = Json::array();
  for (const auto& p : ps) {
    Json marg = Json::object();
    for (std::size_t i = 0; i < p.marginals.size(); ++i) marg[names[i]] = rational_json(p.marginals[i]);
    out.push_back({{"marginals", marg},
                   {"labeling", to_string(labeling_from_distribution(p.representative))},
                   {"members", p.members},
                   {"representative", distribution_json(p.representative, names)}});
  }
  return out;
}

Json labelings_json(const std::vector<Labeling>& ls) {
  Json out = Json::array();
  for (const auto& l : ls) out.push_back(to_string(l));
  return out;
}

Json graph_json(const EpistemicGraph& g) { return Json::parse(write_graph_json(g, -1)); }

Json issues_json(const std::vector<GraphIssue>& issues) {
  Json out = Json::array();
  for (const auto& i : issues)
    out.push_back({{"severity", i.severity == GraphIssue::Severity::Error ? "error" : "warning"},
                   {"code", i.code},
                   {"message", i.message}});
  return out;
}

Json belief_json(const Belief& b, Names names) {
  return {{"arg", names[b.arg]}, {"cmp", std::string(symbol(b.cmp))}, {"x", rational_json(b.x)}};
}

Belief belief_from_json(const Json& j, const EpistemicGraph& g) {
  if (!j.is_object() || !j.contains("arg") || !j.contains("x")) throw ParseError("belief needs \"arg\" and \"x\"", 0);
  if (!j["arg"].is_string()) throw ParseError("\"arg\" must be a string", 0);
  Belief b;
  b.arg = g.require(j["arg"].get<std::string>());
  b.cmp = j.contains("cmp") ? parse_comparator(j["cmp"].get<std::string>()) : Comparator::Eq;
  b.x = rational_from_json(j["x"]);
  return b;
}

Json session_state_json(const SessionState& st, const Belief& goal, Names names) {
  Json asserted = Json::array();
  for (const auto& b : st.asserted) asserted.push_back(belief_json(b, names));
  Json played = Json::array();
  for (int a : st.played) played.push_back(names[a]);
  Json j = {{"consistent", st.consistent}, {"goal", belief_json(goal, names)}, {"asserted", asserted}, {"played", played}};
  if (st.consistent) {
    Json ranges = Json::object();
    for (const auto& r : st.ranges) {
      Json vals = Json::array();
      for (const auto& v : r.values) vals.push_back(rational_json(v));
      ranges[names[r.arg]] = {{"min", rational_json(r.lo)}, {"max", rational_json(r.hi)}, {"values", vals}};
    }
    j["ranges"] = ranges;
    j["goal_entailed"] = st.goal_entailed;
    j["goal_possible"] = st.goal_possible;
  } else {
    Json conflict = Json::array();
    for (const auto& b : st.conflict) conflict.push_back(belief_json(b, names));
    j["conflict"] = conflict;
  }
  return j;
}

Json moves_json(const std::vector<Move>& moves, Names names) {
  Json out = Json::array();
  for (const auto& m : moves) {
    Json j = {{"arg", names[m.arg]}, {"feasible", m.feasible}};
    if (m.feasible) {
      j["optimistic"] = rational_json(m.optimistic);
      j["pessimistic"] = rational_json(m.pessimistic);
      j["goal_guaranteed"] = m.goal_guaranteed;
      if (m.optimistic_witness) j["optimistic_witness"] = distribution_json(*m.optimistic_witness, names);
      if (m.pessimistic_witness) j["pessimistic_witness"] = distribution_json(*m.pessimistic_witness, names);
    }
    j["warnings"] = m.warnings;
    out.push_back(j);
  }
  return out;
}

}  // namespace epigraph

#include "epigraph/queries.hpp"

#include <algorithm>
#include <map>

#include "epigraph/entailment.hpp"
#include "epigraph/parser.hpp"

namespace epigraph {

namespace {

std::vector<std::string> strings(const Json& body, const char* key) {
  std::vector<std::string> out;
  if (!body.contains(key)) return out;
  const Json& v = body[key];
  if (v.is_string()) return {v.get<std::string>()};
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be a string or an array of strings", 0);
  for (const auto& x : v) {
    if (!x.is_string()) throw ParseError(std::string("\"") + key + "\" must hold strings", 0);
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<Formula> formulas(const Json& body, const char* key, const EpistemicGraph& g) {
  std::vector<Formula> out;
  for (const auto& s : strings(body, key)) out.push_back(parse_formula(s, g.names));
  return out;
}

std::string text(const Json& body, const char* key) {
  if (!body.contains(key) || !body[key].is_string()) throw ParseError(std::string("missing string field \"") + key + "\"", 0);
  return body[key].get<std::string>();
}

int argument(const Json& body, const char* key, const EpistemicGraph& g) { return g.require(text(body, key)); }

std::set<int> argset(const Json& body, const char* key, const EpistemicGraph& g) {
  std::set<int> out;
  for (const auto& s : strings(body, key)) out.insert(g.require(s));
  return out;
}

// "Z" as a list of formula lists; a flat list of strings is one candidate.
std::vector<std::vector<Formula>> z_lists(const Json& body, const EpistemicGraph& g) {
  std::vector<std::vector<Formula>> out;
  if (!body.contains("Z")) return out;
  const Json& z = body["Z"];
  if (!z.is_array()) throw ParseError("\"Z\" must be an array", 0);
  bool flat = std::all_of(z.begin(), z.end(), [](const Json& x) { return x.is_string(); });
  if (flat) {
    std::vector<Formula> one;
    for (const auto& s : z) one.push_back(parse_formula(s.get<std::string>(), g.names));
    out.push_back(std::move(one));
    return out;
  }
  for (const auto& cand : z) {
    if (!cand.is_array()) throw ParseError("\"Z\" entries must be arrays of formulas", 0);
    std::vector<Formula> one;
    for (const auto& s : cand) one.push_back(parse_formula(s.get<std::string>(), g.names));
    out.push_back(std::move(one));
  }
  return out;
}

Json with_regime(Json j, const Regime& r) {
  j["regime"] = regime_json(r);
  return j;
}

CoverageMode coverage_mode(const Json& body) {
  std::string m = body.value("mode", std::string("partial"));
  if (m == "partial") return CoverageMode::Partial;
  if (m == "full") return CoverageMode::Full;
  throw ParseError("mode must be partial or full", 0);
}

Strength strength(const Json& body) {
  std::string s = body.value("strength", std::string("plain"));
  if (s == "plain") return Strength::Plain;
  if (s == "strong") return Strength::Strong;
  throw ParseError("strength must be plain or strong", 0);
}

LabelMode label_mode(const Json& body) {
  std::string s = body.value("mode", std::string("consistent"));
  if (s == "consistent") return LabelMode::Consistent;
  if (s == "strong") return LabelMode::Strong;
  if (s == "monotonic") return LabelMode::Monotonic;
  throw ParseError("mode must be consistent, strong or monotonic", 0);
}

DistributionSet filtered(DistributionSet R, const Json& body) {
  for (const auto& f : strings(body, "filters")) R = apply_filter(R, parse_filter(f));
  return R;
}

std::vector<Labeling> labelings_of(const DistributionSet& R) {
  std::set<Labeling> s;
  for (const auto& p : R) s.insert(labeling_from_distribution(p));
  return {s.begin(), s.end()};
}

std::vector<Formula> z_or_c(const std::vector<std::vector<Formula>>& zs, const EpistemicGraph& g) {
  if (zs.empty()) return g.constraints;
  if (zs.size() != 1) throw ParseError("expected a single Z set", 0);
  return zs.front();
}

}  // namespace

Regime query_regime(const Json& body, const EpistemicGraph& g, const std::vector<std::vector<Formula>>& extra) {
  Regime r = default_regime(g, extra);
  if (body.contains("pi")) {
    if (!body["pi"].is_string()) throw ParseError("\"pi\" must be a string such as \"0,0.5,1\"", 0);
    r.pi = ValueSet::parse(body["pi"].get<std::string>());
  }
  if (body.contains("cap")) r.cap = body["cap"].get<int>();
  if (body.value("allow_large", false)) r.engine.allow_large = true;
  return r;
}

Belief parse_belief(const Json& j, const EpistemicGraph& g) {
  if (!j.is_string()) return belief_from_json(j, g);
  Formula f = parse_formula(j.get<std::string>(), g.names);
  auto s = as_simple(f);
  if (!s) throw ParseError("expected p(X) # x, got " + j.get<std::string>(), 0);
  return {s->arg, s->cmp, s->x};
}

bool known_query(std::string_view kind) {
  static const std::set<std::string_view> kinds = {"validate",      "sat",           "entail",       "ddnf",
                                                   "closure-check", "coverage",      "effectiveness", "relation-type",
                                                   "monotonicity",  "coherence",     "label-check",  "semantics",
                                                   "dialogue"};
  return kinds.count(kind) > 0;
}

Json run_query(std::string_view kind, const Json& body_in, const EpistemicGraph& g) {
  const Json body = body_in.is_null() ? Json::object() : body_in;
  if (!body.is_object()) throw ParseError("request body must be a JSON object", 0);
  const auto& names = g.names;
  const int n = g.arity();

  if (kind == "validate") {
    Regime r = query_regime(body, g);
    auto issues = validate_graph(g);
    Json j = {{"issues", issues_json(issues)}};
    bool errors = std::any_of(issues.begin(), issues.end(), [](const GraphIssue& i) { return i.severity == GraphIssue::Severity::Error; });
    j["valid"] = !errors;
    if (!errors) j["consistent"] = graph_consistent(g, r.pi);
    return with_regime(j, r);
  }
  if (kind == "sat") {
    auto assume = formulas(body, "assume", g);
    Regime r = query_regime(body, g, {assume});
    auto phi = g.constraints;
    phi.insert(phi.end(), assume.begin(), assume.end());
    DistributionSet R = filtered(sat_restricted(phi, n, r.pi, r.engine), body);
    Json j = {{"count", R.size()}};
    if (body.value("patterns", false)) j["patterns"] = patterns_json(marginal_patterns(R), names);
    else j["distributions"] = distributions_json(R, names);
    return with_regime(j, r);
  }
  if (kind == "entail") {
    auto assume = formulas(body, "assume", g);
    Formula q = parse_formula(text(body, "query"), names);
    Regime r = query_regime(body, g, {assume, {q}});
    auto phi = g.constraints;
    phi.insert(phi.end(), assume.begin(), assume.end());
    Verdict v = entails(phi, q, n, r.pi, r.engine);
    Json j = {{"holds", v.holds}};
    if (v.witness) j["counterexample"] = distribution_json(*v.witness, names);
    return with_regime(j, r);
  }
  if (kind == "ddnf") {
    Formula f = body.contains("formula") ? parse_formula(text(body, "formula"), names) : conjoin(g.constraints);
    Regime r = query_regime(body, g, {{f}});
    Formula d = ddnf(f, n, r.pi, r.engine);
    std::size_t k = d.kind == Formula::Kind::Bottom ? 0 : sat_restricted({f}, n, r.pi, r.engine).size();
    return with_regime({{"ddnf", to_string(d, names)}, {"disjuncts", k}}, r);
  }
  if (kind == "closure-check") {
    Formula f = parse_formula(text(body, "formula"), names);
    Regime r = query_regime(body, g, {{f}});
    return with_regime({{"holds", in_closure(g.constraints, f, n, r.pi, r.engine)}}, r);
  }
  if (kind == "coverage") {
    Regime r = query_regime(body, g);
    int a = argument(body, "arg", g);
    AnalysisVerdict v;
    if (body.value("arbitrary", false)) v = arbitrary_covered(g, a, coverage_mode(body), r);
    else if (!body.contains("set")) v = default_covered(g, a, r);
    else v = covered(g, a, argset(body, "set", g), coverage_mode(body), r);
    return verdict_json(v, names);
  }
  if (kind == "effectiveness") {
    auto zs = z_lists(body, g);
    Regime r = query_regime(body, g, zs);
    int a = argument(body, "from", g), b = argument(body, "to", g);
    auto F = argset(body, "set", g);
    AnalysisVerdict v = zs.empty() ? effective(g, a, b, F, strength(body), r)
                                   : semi_effective(g, z_or_c(zs, g), a, b, F, strength(body), r);
    return verdict_json(v, names);
  }
  if (kind == "relation-type" || kind == "monotonicity") {
    auto zs = z_lists(body, g);
    Regime r = query_regime(body, g, zs);
    int a = argument(body, "from", g), b = argument(body, "to", g);
    auto F = argset(body, "set", g);
    if (kind == "monotonicity") return monotonicity_json(monotonicity(g, z_or_c(zs, g), a, b, F, r));
    return relation_json(relation_type(g, z_or_c(zs, g), a, b, F, r), names);
  }
  if (kind == "coherence") {
    auto zs = z_lists(body, g);
    Regime r = query_regime(body, g, zs);
    return coherence_json(coherence_report(g, r, zs));
  }
  if (kind == "label-check") {
    auto zs = z_lists(body, g);
    Regime r = query_regime(body, g, zs);
    auto used = zs.empty() ? default_z_candidates(g) : zs;
    auto checks = labeling_consistency(g, label_mode(body), r, used);
    bool all = std::all_of(checks.begin(), checks.end(), [](const ArcCheck& c) { return c.pass; });
    return with_regime({{"pass", all}, {"arcs", arc_checks_json(checks, used, names)}}, r);
  }
  if (kind == "semantics") {
    auto assume = formulas(body, "assume", g);
    Regime r = query_regime(body, g, {assume});
    Ordering ord = parse_ordering(text(body, "order"));
    std::string dir = body.value("direction", std::string("max"));
    if (dir != "max" && dir != "min") throw ParseError("direction must be max or min", 0);
    auto phi = g.constraints;
    phi.insert(phi.end(), assume.begin(), assume.end());
    DistributionSet R = filtered(sat_restricted(phi, n, r.pi, r.engine), body);
    DistributionSet sel = select_extreme(R, ord, dir == "max" ? Direction::Max : Direction::Min);
    return with_regime({{"order", ordering_name(ord)},
                        {"direction", dir},
                        {"candidates", R.size()},
                        {"count", sel.size()},
                        {"patterns", patterns_json(marginal_patterns(sel), names)},
                        {"distributions", distributions_json(sel, names)}},
                       r);
  }
  if (kind == "dialogue") {
    if (!body.contains("goal")) throw ParseError("missing \"goal\"", 0);
    Belief goal = parse_belief(body["goal"], g);
    std::vector<Belief> asserted;
    if (body.contains("asserted"))
      for (const auto& b : body["asserted"]) asserted.push_back(parse_belief(b, g));
    std::vector<Formula> extra{goal.formula()};
    for (const auto& b : asserted) extra.push_back(b.formula());
    Regime r = query_regime(body, g, {extra});
    auto engine = std::make_shared<DialogueEngine>(g, r);
    DialogueSession s(engine, goal);
    for (const auto& b : asserted) s.assert_belief(b);
    for (const auto& p : strings(body, "played")) s.play(g.require(p));
    SessionState st = s.state();
    Json j = session_state_json(st, goal, names);
    if (st.consistent) j["moves"] = moves_json(s.suggest_moves(), names);
    return with_regime(j, r);
  }
  throw ParseError("unknown query '" + std::string(kind) + "'", 0);
}

Json translate_adf_json(const Adf& adf) {
  validate_adf(adf);
  EpistemicGraph g = adf_to_eg(adf);
  return {{"graph", graph_json(g)}, {"text", write_eg(g)}};
}

Json translate_caf_json(const EpistemicGraph& caf) {
  EpistemicGraph g = caf_to_eg(caf);
  return {{"graph", graph_json(g)}, {"text", write_eg(g)}};
}

Json verify_adf(const Adf& adf) {
  validate_adf(adf);
  EpistemicGraph g = adf_to_eg(adf);
  const ValueSet pi = ValueSet::grid(2);
  DistributionSet R = apply_filter(sat_restricted(g.constraints, g.arity(), pi), Filter::Ternary);
  auto complete = adf_labelings(adf, AdfSemantics::Complete);
  auto preferred = adf_labelings(adf, AdfSemantics::Preferred);
  auto grounded = adf_labelings(adf, AdfSemantics::Grounded);
  auto sat = labelings_of(R);
  auto imax = labelings_of(select_extreme(R, Ordering::Information, Direction::Max));
  auto imin = labelings_of(select_extreme(R, Ordering::Information, Direction::Min));
  bool ok = sat == complete && imax == preferred && imin == grounded;
  return {{"match", ok},
          {"complete", labelings_json(complete)},
          {"sat_ternary", labelings_json(sat)},
          {"preferred", labelings_json(preferred)},
          {"information_max", labelings_json(imax)},
          {"grounded", labelings_json(grounded)},
          {"information_min", labelings_json(imin)}};
}

Json verify_caf(const EpistemicGraph& caf) {
  EpistemicGraph g = caf_to_eg(caf);
  const ValueSet pi = ValueSet::grid(2);
  DistributionSet R = apply_filter(sat_restricted(g.constraints, g.arity(), pi), Filter::Ternary);
  auto adm = caf_labelings(caf, CafSemantics::Admissible);
  auto pref = caf_labelings(caf, CafSemantics::Preferred);
  auto sat = labelings_of(R);
  auto imax = labelings_of(select_extreme(R, Ordering::Information, Direction::Max));
  // believed sets against the extension-level reference
  std::set<std::set<int>> believed;
  for (const auto& l : sat) {
    std::set<int> s;
    for (std::size_t i = 0; i < l.size(); ++i)
      if (l[i] == Truth::T) s.insert(static_cast<int>(i));
    believed.insert(s);
  }
  auto ext = caf_reference(caf, CafSemantics::Admissible);
  bool sets_ok = believed == std::set<std::set<int>>(ext.begin(), ext.end());
  Json exts = Json::array();
  for (const auto& e : ext) exts.push_back(set_json(e, caf.names));
  return {{"match", sat == adm && imax == pref && sets_ok},
          {"admissible", labelings_json(adm)},
          {"sat_ternary", labelings_json(sat)},
          {"preferred", labelings_json(pref)},
          {"information_max", labelings_json(imax)},
          {"admissible_extensions", exts}};
}

bool query_positive(std::string_view kind, const Json& j) {
  if (kind == "entail" || kind == "closure-check" || kind == "coverage" || kind == "effectiveness") return j.value("holds", false);
  if (kind == "relation-type") return j.value("type", std::string()) != "unspecified";
  if (kind == "monotonicity") return j.value("positive", false) || j.value("negative", false);
  if (kind == "coherence")
    return j.value("bounded", false) && j.value("entry_bounded", false) && j.value("directly_connected", false) &&
           j.value("indirectly_connected", false) && j.value("hidden_connected", false) && j.value("locally_connected", false);
  if (kind == "label-check") return j.value("pass", false);
  if (kind == "validate") return j.value("valid", false) && j.value("consistent", false);
  if (kind == "sat" || kind == "semantics") return j.value("count", 0) > 0;
  if (kind == "ddnf") return j.value("ddnf", std::string()) != "#f";
  if (kind == "dialogue") return j.value("consistent", false);
  if (kind == "verify-correspondence") return j.value("match", false);
  return true;
}

}  // namespace epigraph

#include "epigraph/translations.hpp"

#include <algorithm>
#include <sstream>

#include "epigraph/parser.hpp"

namespace epigraph {

std::string to_string(const Labeling& v) {
  std::string s;
  for (Truth t : v) s += t == Truth::T ? 't' : t == Truth::F ? 'f' : 'u';
  return s;
}

bool info_leq(const Labeling& a, const Labeling& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != Truth::U && a[i] != b[i]) return false;
  return true;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

}  // namespace

Adf parse_adf(std::string_view text) {
  struct Raw {
    std::string name, condition;
    std::optional<std::string> parents;
    std::size_t line;
  };
  std::vector<Raw> raws;
  std::vector<std::pair<std::string, std::size_t>> links;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  auto field = [](const std::string& line, const char* key) -> std::optional<std::string> {
    std::string k(key);
    if (line.rfind(k, 0) != 0) return std::nullopt;
    return trim(line.substr(k.size()));
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto err = [&](const std::string& m) { return ParseError("line " + std::to_string(lineno) + ": " + m, 0); };
    if (auto v = field(line, "statement:")) {
      if (!valid_argument_name(*v)) throw err("invalid statement name '" + *v + "'");
      raws.push_back({*v, "", std::nullopt, lineno});
    } else if (auto c = field(line, "condition:")) {
      if (raws.empty() || !raws.back().condition.empty()) throw err("condition without a preceding statement");
      if (c->empty()) throw err("empty condition");
      raws.back().condition = *c;
    } else if (auto p = field(line, "parents:")) {
      if (raws.empty()) throw err("parents without a preceding statement");
      raws.back().parents = *p;
    } else if (auto l = field(line, "link:")) {
      links.emplace_back(*l, lineno);
    } else {
      throw err("expected statement:, condition:, parents: or link:");
    }
  }
  Adf adf;
  for (const auto& r : raws) {
    if (std::find(adf.names.begin(), adf.names.end(), r.name) != adf.names.end())
      throw ParseError("statement " + r.name + " declared twice", 0);
    adf.names.push_back(r.name);
  }
  for (const auto& r : raws) {
    if (r.condition.empty()) throw ParseError("statement " + r.name + " has no condition", 0);
    Term t;
    try {
      t = parse_term(r.condition, adf.names);
    } catch (const ParseError& e) {
      throw ParseError("condition on line " + std::to_string(r.line) + ": " + e.what(), 0);
    }
    std::set<int> par;
    if (r.parents) {
      for (const auto& n : split_names(*r.parents)) {
        auto it = std::find(adf.names.begin(), adf.names.end(), n);
        if (it == adf.names.end()) throw ParseError("unknown parent '" + n + "' of " + r.name, 0);
        par.insert(static_cast<int>(it - adf.names.begin()));
      }
    } else {
      par = term_args(t);
    }
    adf.parents.push_back(std::move(par));
    adf.conditions.push_back(std::move(t));
  }
  for (const auto& [l, line] : links) {
    auto arrow = l.find("->");
    if (arrow == std::string::npos) throw ParseError("line " + std::to_string(line) + ": expected X -> Y [labels]", 0);
    std::string from = trim(l.substr(0, arrow)), rest = trim(l.substr(arrow + 2)), lab;
    if (auto lb = rest.find('['); lb != std::string::npos) {
      auto rb = rest.find(']', lb);
      if (rb == std::string::npos) throw ParseError("line " + std::to_string(line) + ": unterminated label list", 0);
      lab = rest.substr(lb + 1, rb - lb - 1);
      rest = trim(rest.substr(0, lb));
    }
    auto f = std::find(adf.names.begin(), adf.names.end(), from), t = std::find(adf.names.begin(), adf.names.end(), rest);
    if (f == adf.names.end() || t == adf.names.end())
      throw ParseError("line " + std::to_string(line) + ": link names an unknown statement", 0);
    LabelSet ls = 0;
    for (const auto& x : split_names(lab)) {
      if (x == "+") ls |= kPositive;
      else if (x == "-") ls |= kNegative;
      else if (x == "*") ls |= kStar;
      else throw ParseError("line " + std::to_string(line) + ": unknown label '" + x + "'", 0);
    }
    adf.labels[{static_cast<int>(f - adf.names.begin()), static_cast<int>(t - adf.names.begin())}] |= ls;
  }
  validate_adf(adf);
  return adf;
}

void validate_adf(const Adf& adf) {
  const std::size_t n = adf.names.size();
  if (adf.parents.size() != n || adf.conditions.size() != n) throw PreconditionError("ADF tables have inconsistent sizes");
  for (std::size_t i = 0; i < n; ++i)
    for (int x : term_args(adf.conditions[i]))
      if (!adf.parents[i].count(x))
        throw PreconditionError("condition of " + adf.names[i] + " mentions non-parent " + adf.names[x]);
  for (const auto& [arc, l] : adf.labels)
    if (!adf.parents[arc.second].count(arc.first))
      throw PreconditionError("link " + adf.names[arc.first] + " -> " + adf.names[arc.second] + " is not a parent link");
}

Labeling gamma(const Adf& adf, const Labeling& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> open;
  World base = 0;
  for (int i = 0; i < n; ++i) {
    if (v[i] == Truth::U) open.push_back(i);
    else if (v[i] == Truth::T) base |= World{1} << i;
  }
  Labeling out(n);
  for (int a = 0; a < n; ++a) {
    // only undecided parents matter for this condition
    std::vector<int> rel;
    for (int x : open)
      if (adf.parents[a].count(x)) rel.push_back(x);
    bool seen_t = false, seen_f = false;
    for (std::uint32_t m = 0; m < (1u << rel.size()) && !(seen_t && seen_f); ++m) {
      World w = base;
      for (std::size_t i = 0; i < rel.size(); ++i)
        if ((m >> i) & 1) w |= World{1} << rel[i];
      (evaluate(adf.conditions[a], w) ? seen_t : seen_f) = true;
    }
    out[a] = seen_t && seen_f ? Truth::U : seen_t ? Truth::T : Truth::F;
  }
  return out;
}

std::vector<Labeling> adf_labelings(const Adf& adf, AdfSemantics s, bool allow_large) {
  const int n = static_cast<int>(adf.names.size());
  if (n > 6 && !allow_large) throw LimitError("ADF reference solver is capped at 6 statements");
  if (s == AdfSemantics::Grounded) {
    Labeling v(n, Truth::U);
    while (true) {
      Labeling next = gamma(adf, v);
      if (next == v) return {v};
      v = std::move(next);
    }
  }
  std::vector<Labeling> complete;
  Labeling v(n, Truth::F);
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = 0; i < n; ++i, c /= 3) v[i] = static_cast<Truth>(c % 3);
    if (gamma(adf, v) == v) complete.push_back(v);
  }
  if (s == AdfSemantics::Preferred) {
    std::vector<Labeling> pref;
    for (const auto& a : complete) {
      bool below = std::any_of(complete.begin(), complete.end(), [&](const Labeling& b) { return b != a && info_leq(a, b); });
      if (!below) pref.push_back(a);
    }
    complete = std::move(pref);
  }
  std::sort(complete.begin(), complete.end());
  return complete;
}

namespace {

Formula believed(int a) { return Formula::simple(Term::argument(a), Comparator::Gt, ratio(1, 2)); }
Formula disbelieved(int a) { return Formula::simple(Term::argument(a), Comparator::Lt, ratio(1, 2)); }

// literal Z -> p(Z)>0.5 and !Z -> p(Z) `neg` 0.5 over an NNF term
Formula epistemic(const Term& t, Comparator neg) {
  using K = Term::Kind;
  switch (t.kind) {
    case K::Top: return Formula::top();
    case K::Bottom: return Formula::bottom();
    case K::Arg: return believed(t.arg);
    case K::Not:
      if (t.children[0].kind != K::Arg) throw PreconditionError("term is not in negation normal form");
      return Formula::simple(t.children[0], neg, ratio(1, 2));
    case K::And: return Formula::conjunction(epistemic(t.children[0], neg), epistemic(t.children[1], neg));
    case K::Or: return Formula::disjunction(epistemic(t.children[0], neg), epistemic(t.children[1], neg));
    case K::Implies: break;
  }
  throw PreconditionError("term is not in negation normal form");
}

}  // namespace

EpistemicGraph adf_to_eg(const Adf& adf) {
  validate_adf(adf);
  EpistemicGraph g;
  g.names = adf.names;
  const int n = static_cast<int>(adf.names.size());
  for (int b = 0; b < n; ++b)
    for (int a : adf.parents[b]) {
      auto it = adf.labels.find({a, b});
      g.arcs.push_back({a, b, it != adf.labels.end() && it->second ? it->second : kStar});
    }
  for (int x = 0; x < n; ++x) {
    const Term& ac = adf.conditions[x];
    Term pos, neg;
    if (read_once(ac)) {
      pos = to_nnf(ac);
      neg = negated_nnf(ac);
    } else {
      pos = blake_canonical_form(ac, n);
      neg = blake_canonical_form(Term::negation(ac), n);
    }
    g.constraints.push_back(Formula::conjunction(Formula::biconditional(believed(x), epistemic(pos, Comparator::Lt)),
                                                 Formula::biconditional(disbelieved(x), epistemic(neg, Comparator::Lt))));
  }
  return g;
}

Labeling labeling_from_distribution(const BeliefDistribution& p) {
  Labeling v;
  const std::int64_t d = p.denominator();
  for (auto m : p.marginal_numerators()) v.push_back(2 * m > d ? Truth::T : 2 * m < d ? Truth::F : Truth::U);
  return v;
}

Formula pc_constraint(const Term& pc) { return epistemic(to_nnf(pc), Comparator::Leq); }

EpistemicGraph caf_to_eg(const EpistemicGraph& caf) {
  for (const auto& a : caf.arcs)
    if (a.labels != kNegative) throw PreconditionError("constrained frameworks carry only negative labels");
  EpistemicGraph g;
  g.names = caf.names;
  g.arcs = caf.arcs;
  const int n = caf.arity();
  std::vector<std::set<int>> att(n);
  for (const auto& a : caf.arcs) att[a.to].insert(a.from);
  auto conj_dis = [&](const std::set<int>& s) {
    std::vector<Formula> fs;
    for (int a : s) fs.push_back(disbelieved(a));
    return conjoin(fs);
  };
  auto disj_bel = [&](const std::set<int>& s) {
    std::vector<Formula> fs;
    for (int a : s) fs.push_back(believed(a));
    return disjoin(fs);
  };
  std::vector<bool> done(n, false);
  for (int b = 0; b < n; ++b) {
    if (done[b]) continue;
    done[b] = true;
    if (att[b].empty()) {
      g.constraints.push_back(Formula::simple(Term::argument(b), Comparator::Geq, ratio(1, 2)));
      continue;
    }
    // a lone mutual attack pair gets a single biconditional constraint
    if (att[b].size() == 1) {
      int x = *att[b].begin();
      if (x != b && att[x] == std::set<int>{b}) {
        done[x] = true;
        g.constraints.push_back(Formula::conjunction(Formula::biconditional(believed(b), disbelieved(x)),
                                                     Formula::biconditional(disbelieved(b), believed(x))));
        continue;
      }
    }
    g.constraints.push_back(Formula::conjunction(Formula::implication(believed(b), conj_dis(att[b])),
                                                 Formula::implication(disbelieved(b), disj_bel(att[b]))));
  }
  if (caf.pc) {
    g.constraints.push_back(pc_constraint(*caf.pc));
    g.pc = caf.pc;
  }
  return g;
}

std::vector<std::set<int>> caf_reference(const EpistemicGraph& caf, CafSemantics s) {
  const int n = caf.arity();
  if (n > 8) throw LimitError("CAF reference solver is capped at 8 arguments");
  std::vector<World> attackers(n, 0);
  for (const auto& a : caf.arcs) attackers[a.to] |= World{1} << a.from;
  auto attacks = [&](World set, int target) { return (attackers[target] & set) != 0; };
  std::vector<World> adm;
  for (World S = 0; S < (World{1} << n); ++S) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if ((S >> a) & 1) {
        if (attacks(S, a)) ok = false;  // conflict
        for (int x = 0; x < n && ok; ++x)
          if (((attackers[a] >> x) & 1) && !attacks(S, x)) ok = false;  // undefended
      }
    if (ok && caf.pc && !evaluate(*caf.pc, S)) ok = false;
    if (ok) adm.push_back(S);
  }
  if (s == CafSemantics::Preferred) {
    std::vector<World> pref;
    for (World S : adm)
      if (std::none_of(adm.begin(), adm.end(), [&](World T) { return T != S && (S & T) == S; })) pref.push_back(S);
    adm = std::move(pref);
  }
  std::vector<std::set<int>> out;
  for (World S : adm) {
    std::set<int> e;
    for (int a = 0; a < n; ++a)
      if ((S >> a) & 1) e.insert(a);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Labeling> caf_labelings(const EpistemicGraph& caf, CafSemantics s) {
  const int n = caf.arity();
  if (n > 8) throw LimitError("CAF reference solver is capped at 8 arguments");
  std::vector<std::vector<int>> attackers(n);
  for (const auto& a : caf.arcs) attackers[a.to].push_back(a.from);
  std::vector<Labeling> adm;
  Labeling v(n, Truth::F);
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    World in = 0;
    for (int i = n - 1; i >= 0; --i) {
      v[i] = static_cast<Truth>(c % 3);
      c /= 3;
      if (v[i] == Truth::T) in |= World{1} << i;
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (v[a] == Truth::T)
        ok = std::all_of(attackers[a].begin(), attackers[a].end(), [&](int x) { return v[x] == Truth::F; });
      else if (v[a] == Truth::F)
        ok = std::any_of(attackers[a].begin(), attackers[a].end(), [&](int x) { return v[x] == Truth::T; });
    }
    if (ok && caf.pc && !evaluate(*caf.pc, in)) ok = false;
    if (ok) adm.push_back(v);
  }
  if (s == CafSemantics::Preferred) {
    std::vector<Labeling> pref;
    for (const auto& x : adm)
      if (std::none_of(adm.begin(), adm.end(), [&](const Labeling& y) { return y != x && info_leq(x, y); })) pref.push_back(x);
    adm = std::move(pref);
  }
  std::sort(adm.begin(), adm.end());
  return adm;
}

}  // namespace epigraph

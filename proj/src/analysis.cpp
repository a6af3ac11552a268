#include "epigraph/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "epigraph/entailment.hpp"

namespace epigraph {

int Regime::effective_cap(int n) const { return cap >= 0 ? cap : std::max(0, std::min(n - 1, 4)); }

ValueSet analysis_grid(std::span<const Formula> fs) {
  mpz_class d = 2;
  for (const auto& x : formula_numbers(fs)) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return ValueSet::grid(to_int64(d));
}

Regime default_regime(const EpistemicGraph& g, std::span<const std::vector<Formula>> extra) {
  std::vector<Formula> all = g.constraints;
  for (const auto& z : extra) all.insert(all.end(), z.begin(), z.end());
  Regime r;
  r.pi = analysis_grid(all);
  return r;
}

Combination::Kind Combination::kind() const {
  for (const auto& e : entries)
    if (e.cmp != Comparator::Eq) return Kind::Soft;
  return Kind::Exact;
}

Combination Combination::restricted(const std::set<int>& keep) const {
  Combination c;
  for (const auto& e : entries)
    if (keep.count(e.arg)) c.entries.push_back(e);
  return c;
}

std::vector<Formula> Combination::formulas() const {
  std::vector<Formula> out;
  for (const auto& e : entries) out.push_back(Formula::simple(Term::argument(e.arg), e.cmp, e.value));
  return out;
}

std::string Combination::to_string(std::span<const std::string> names) const {
  std::string s = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ", ";
    s += "p(" + names[entries[i].arg] + ")" + std::string(symbol(entries[i].cmp)) + epigraph::to_string(entries[i].value);
  }
  return s + "}";
}

bool Combination::operator==(const Combination& o) const {
  if (entries.size() != o.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].arg != o.entries[i].arg || entries[i].cmp != o.entries[i].cmp || entries[i].value != o.entries[i].value)
      return false;
  return true;
}

std::vector<Combination> combinations(const std::set<int>& F, const ValueSet& pi) {
  std::vector<int> args(F.begin(), F.end());
  std::vector<Combination> out;
  std::vector<std::size_t> idx(args.size(), 0);
  while (true) {
    Combination c;
    for (std::size_t i = 0; i < args.size(); ++i) c.entries.push_back({args[i], Comparator::Eq, pi.values()[idx[i]]});
    out.push_back(std::move(c));
    std::size_t i = args.size();
    while (i > 0 && ++idx[i - 1] == pi.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<std::set<int>> subsets_up_to(const std::vector<int>& pool, int cap) {
  std::vector<std::set<int>> out;
  std::vector<int> p(pool);
  std::sort(p.begin(), p.end());
  const int m = static_cast<int>(p.size());
  std::vector<int> pick;
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (static_cast<int>(pick.size()) == k) {
      out.emplace_back(pick.begin(), pick.end());
      return;
    }
    for (int i = start; i < m; ++i) {
      pick.push_back(p[i]);
      rec(i + 1, k);
      pick.pop_back();
    }
  };
  for (int k = 0; k <= std::min(cap, m); ++k) rec(0, k);
  return out;
}

std::vector<std::vector<Formula>> default_z_candidates(const EpistemicGraph& g) {
  std::vector<std::vector<Formula>> out{g.constraints};
  if (g.constraints.size() > 1)
    for (const auto& c : g.constraints) out.push_back({c});
  return out;
}

namespace {

using Mask = std::vector<bool>;

Mask operator|(Mask a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
  return a;
}

bool full(const Mask& m) { return std::find(m.begin(), m.end(), false) == m.end(); }

// Rows of a projection table grouped by their first k cells.
template <class Fn>
void for_groups(const MarginalTable& t, std::size_t k, Fn&& fn) {
  const std::size_t rows = t.rows();
  std::size_t i = 0;
  while (i < rows) {
    std::size_t j = i + 1;
    while (j < rows && std::equal(t.row(i), t.row(i) + k, t.row(j))) ++j;
    fn(i, j);
    i = j;
  }
}

Combination make_comb(const std::vector<int>& args, const std::int32_t* units, std::int64_t D) {
  Combination c;
  for (std::size_t i = 0; i < args.size(); ++i) c.entries.push_back({args[i], Comparator::Eq, ratio(units[i], D)});
  std::sort(c.entries.begin(), c.entries.end(), [](auto& x, auto& y) { return x.arg < y.arg; });
  return c;
}

// units back in argument order, for canonical comparisons
std::vector<std::int32_t> comb_key(const Combination& c, std::int64_t D) {
  std::vector<std::int32_t> k;
  for (const auto& e : c.entries) k.push_back(static_cast<std::int32_t>(scaled_units(e.value, D)));
  return k;
}

void require_consistent(const Model& m, const char* what) {
  if (!m.consistent()) throw PreconditionError(std::string(what) + " is inconsistent under the regime");
}

AnalysisVerdict coverage_in(const Model& m, int a, const std::set<int>& F, CoverageMode mode, const Regime& r) {
  if (F.count(a)) throw PreconditionError("the covered argument may not be in F");
  require_consistent(m, "constraint set");
  std::vector<int> cols(F.begin(), F.end());
  const std::size_t k = cols.size();
  cols.push_back(a);
  MarginalTable t = m.project(cols);
  std::vector<int> fargs(F.begin(), F.end());
  const std::int64_t D = m.denominator();
  AnalysisVerdict v;
  v.regime = r;
  v.holds = mode == CoverageMode::Full;
  bool decided = false;
  for_groups(t, k, [&](std::size_t i, std::size_t j) {
    if (decided) return;
    Mask mask(D + 1, false);
    for (std::size_t x = i; x < j; ++x) mask[t.row(x)[k]] = true;
    bool restricted = !full(mask);
    if (mode == CoverageMode::Partial && restricted) {
      v.holds = true;
      v.witness = make_comb(fargs, t.row(i), D);
      v.x = ratio(std::find(mask.begin(), mask.end(), false) - mask.begin(), D);
      decided = true;
    } else if (mode == CoverageMode::Full && !restricted) {
      v.holds = false;
      v.counterexample = make_comb(fargs, t.row(i), D);
      decided = true;
    }
  });
  return v;
}

struct Layout {
  std::vector<int> G;
  bool a_in;
  std::vector<int> fargs;
};

Layout layout(int a, int b, const std::set<int>& F) {
  if (a == b) throw PreconditionError("a relation needs two distinct arguments");
  if (F.count(b)) throw PreconditionError("the target of the relation may not be in F");
  Layout l;
  for (int x : F)
    if (x != a) l.G.push_back(x);
  l.a_in = F.count(a) > 0;
  l.fargs.assign(F.begin(), F.end());
  return l;
}

// One group of rows sharing an assignment to G: masks over B per value of A.
struct Group {
  const std::int32_t* g;
  std::vector<std::pair<std::int32_t, Mask>> by_a;
};

template <class Fn>
void for_relation_groups(const Model& m, int a, int b, const Layout& l, Fn&& fn) {
  std::vector<int> cols = l.G;
  cols.push_back(a);
  cols.push_back(b);
  MarginalTable t = m.project(cols);
  const std::size_t k = l.G.size();
  const std::int64_t D = m.denominator();
  for_groups(t, k, [&](std::size_t i, std::size_t j) {
    Group grp{t.row(i), {}};
    for (std::size_t x = i; x < j; ++x) {
      std::int32_t av = t.row(x)[k];
      if (grp.by_a.empty() || grp.by_a.back().first != av) grp.by_a.emplace_back(av, Mask(D + 1, false));
      grp.by_a.back().second[t.row(x)[k + 1]] = true;
    }
    fn(grp);
  });
}

Combination cc_of(const Layout& l, const Group& grp, int a, std::int32_t aval, std::int64_t D) {
  std::vector<int> args = l.G;
  std::vector<std::int32_t> units(grp.g, grp.g + l.G.size());
  if (l.a_in) {
    args.push_back(a);
    units.push_back(aval);
  }
  return make_comb(args, units.data(), D);
}

// Arguments linked through shared formulas; unrelated arguments have independent marginals.
bool linked(const std::vector<Formula>& phi, int n, int a, int b) {
  std::vector<int> up(n);
  std::iota(up.begin(), up.end(), 0);
  std::function<int(int)> find = [&](int x) { return up[x] == x ? x : up[x] = find(up[x]); };
  for (const auto& f : phi) {
    auto args = formula_args(f);
    if (args.empty()) continue;
    int root = find(*args.begin());
    for (int x : args) up[find(x)] = root;
  }
  return find(a) == find(b);
}

AnalysisVerdict effective_in(const Model& m, int a, int b, const std::set<int>& F, Strength s, const Regime& r) {
  Layout l = layout(a, b, F);
  const std::int64_t D = m.denominator();
  AnalysisVerdict v;
  v.regime = r;
  if (!linked(m.formulas(), m.arity(), a, b)) {
    // B's range never depends on A; only the strong form needs a counterexample
    if (s == Strength::Strong) {
      std::optional<Combination> first;
      if (l.a_in || !l.G.empty()) {
        std::vector<int> cols(F.begin(), F.end());
        MarginalTable t = m.project(cols);
        if (!t.empty()) first = make_comb(cols, t.row(0), D);
      } else {
        first = Combination{};
      }
      v.counterexample = first;
    }
    return v;
  }
  std::optional<std::tuple<std::vector<std::int32_t>, std::int32_t, std::int32_t>> best;  // (cc, x, y)
  std::optional<std::vector<std::int32_t>> worst;
  std::optional<Combination> best_cc, worst_cc;
  auto consider = [&](const Combination& cc, const Mask& r1, const Group& grp) {
    std::optional<std::pair<std::int32_t, std::int32_t>> xy;
    for (const auto& [y, r2] : grp.by_a) {
      if (r2 == r1) continue;
      for (std::int32_t x = 0; x <= D; ++x)
        if (r1[x] != r2[x]) {
          if (!xy || std::make_pair(x, y) < *xy) xy = std::make_pair(x, y);
          break;
        }
    }
    auto key = comb_key(cc, D);
    if (xy) {
      auto cand = std::make_tuple(key, xy->first, xy->second);
      if (!best || cand < *best) {
        best = cand;
        best_cc = cc;
      }
    } else if (!worst || key < *worst) {
      worst = key;
      worst_cc = cc;
    }
  };
  for_relation_groups(m, a, b, l, [&](const Group& grp) {
    if (l.a_in) {
      for (const auto& [av, mask] : grp.by_a) consider(cc_of(l, grp, a, av, D), mask, grp);
    } else {
      Mask r1(D + 1, false);
      for (const auto& [av, mask] : grp.by_a) r1 = r1 | mask;
      consider(cc_of(l, grp, a, 0, D), r1, grp);
    }
  });
  if (s == Strength::Plain) {
    v.holds = best.has_value();
    if (best) {
      v.witness = best_cc;
      v.x = ratio(std::get<1>(*best), D);
      v.y = ratio(std::get<2>(*best), D);
    }
  } else {
    v.holds = !worst.has_value() && best.has_value();
    if (worst) v.counterexample = worst_cc;
  }
  return v;
}

RelationType relation_in(const Model& m, int a, int b, const std::set<int>& F, const Regime& r) {
  Layout l = layout(a, b, F);
  const std::int64_t D = m.denominator();
  RelationType rt;
  rt.regime = r;
  rt.semi_effective = effective_in(m, a, b, F, Strength::Plain, r).holds;
  bool attack = true, support = true, all_ok = true;
  std::size_t count = 0;
  auto leq = [&](const Mask& mk) {
    for (std::int64_t u = 0; u <= D; ++u)
      if (mk[u] && 2 * u > D) return false;
    return true;
  };
  auto geq = [&](const Mask& mk) {
    for (std::int64_t u = 0; u <= D; ++u)
      if (mk[u] && 2 * u < D) return false;
    return true;
  };
  std::optional<std::vector<std::int32_t>> att_key, sup_key;
  for_relation_groups(m, a, b, l, [&](const Group& grp) {
    Mask r2(D + 1, false);
    bool consistent_high = false;
    for (const auto& [av, mask] : grp.by_a)
      if (2 * static_cast<std::int64_t>(av) > D) {
        r2 = r2 | mask;
        consistent_high = true;
      }
    if (!consistent_high) all_ok = false;
    auto check = [&](const Combination& cc, const Mask& r1) {
      ++count;
      if (leq(r1)) rt.some_leq = true;
      if (geq(r1)) rt.some_geq = true;
      if (!consistent_high) return;
      auto key = comb_key(cc, D);
      if (leq(r1) && !leq(r2) && (!att_key || key < *att_key)) {
        attack = false;
        att_key = key;
        rt.attack_counterexample = cc;
      }
      if (geq(r1) && !geq(r2) && (!sup_key || key < *sup_key)) {
        support = false;
        sup_key = key;
        rt.support_counterexample = cc;
      }
    };
    if (l.a_in) {
      for (const auto& [av, mask] : grp.by_a) check(cc_of(l, grp, a, av, D), mask);
    } else {
      Mask r1(D + 1, false);
      for (const auto& [av, mask] : grp.by_a) r1 = r1 | mask;
      check(cc_of(l, grp, a, 0, D), r1);
    }
  });
  double total = std::pow(static_cast<double>(D + 1), static_cast<double>(F.size()));
  rt.all_consistent = all_ok && static_cast<double>(count) == total;
  rt.attacking = rt.semi_effective && attack;
  rt.supporting = rt.semi_effective && support;
  return rt;
}

Monotonicity monotonicity_in(const Model& m, int a, int b, const std::set<int>& F, const Regime& r) {
  if (a == b) throw PreconditionError("a relation needs two distinct arguments");
  if (F.count(b)) throw PreconditionError("the target of the relation may not be in F");
  std::vector<int> cols;
  for (int x : F)
    if (x != a && x != b) cols.push_back(x);
  const std::size_t k = cols.size();
  cols.push_back(a);
  cols.push_back(b);
  MarginalTable t = m.project(cols);
  Monotonicity mo;
  mo.regime = r;
  bool pos = true, neg = true, comparable = false;
  for_groups(t, k, [&](std::size_t i, std::size_t j) {
    // rows come sorted by A then B, so each A block starts at its min B and ends at its max B
    std::vector<std::tuple<std::int32_t, std::int32_t, std::int32_t>> blocks;  // (a, minB, maxB)
    for (std::size_t x = i; x < j; ++x) {
      std::int32_t av = t.row(x)[k], bv = t.row(x)[k + 1];
      if (blocks.empty() || std::get<0>(blocks.back()) != av) blocks.emplace_back(av, bv, bv);
      else std::get<2>(blocks.back()) = bv;
    }
    if (blocks.size() > 1) comparable = true;
    for (std::size_t q = 1; q < blocks.size(); ++q) {
      if (!(std::get<1>(blocks[q]) > std::get<2>(blocks[q - 1]))) pos = false;
      if (!(std::get<2>(blocks[q]) < std::get<1>(blocks[q - 1]))) neg = false;
    }
  });
  mo.positive = pos;
  mo.negative = neg;
  mo.vacuous = !comparable;
  return mo;
}

void validate_z(const EpistemicGraph& g, const std::vector<Formula>& Z, const Model& mz, const Regime& r) {
  for (const auto& z : Z)
    if (!in_closure(g.constraints, z, g.arity(), r.pi, r.engine))
      throw PreconditionError("Z member " + to_string(z, g.names) + " is not in the closure of the constraints");
  require_consistent(mz, "Z");
}

Model graph_model(const EpistemicGraph& g, const Regime& r) {
  Model m(g.constraints, g.arity(), r.pi, r.engine);
  require_consistent(m, "graph");
  return m;
}

Model z_model(const EpistemicGraph& g, const std::vector<Formula>& Z, const Regime& r) {
  Model m(Z, g.arity(), r.pi, r.engine);
  if (Z != g.constraints) validate_z(g, Z, m, r);
  else require_consistent(m, "graph");
  return m;
}

std::vector<int> all_but(int n, std::initializer_list<int> skip) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (std::find(skip.begin(), skip.end(), i) == skip.end()) out.push_back(i);
  return out;
}

}  // namespace

AnalysisVerdict default_covered(const EpistemicGraph& g, int a, const Regime& r) {
  return coverage_in(graph_model(g, r), a, {}, CoverageMode::Partial, r);
}

AnalysisVerdict covered(const EpistemicGraph& g, int a, const std::set<int>& F, CoverageMode mode, const Regime& r) {
  return coverage_in(graph_model(g, r), a, F, mode, r);
}

AnalysisVerdict arbitrary_covered(const EpistemicGraph& g, int a, CoverageMode mode, const Regime& r) {
  Model m = graph_model(g, r);
  auto pool = all_but(g.arity(), {a});
  const int cap = r.effective_cap(g.arity());
  AnalysisVerdict out;
  out.regime = r;
  out.exhaustive = cap >= static_cast<int>(pool.size());
  for (const auto& F : subsets_up_to(pool, cap)) {
    AnalysisVerdict v = coverage_in(m, a, F, mode, r);
    if (v.holds) {
      v.set = F;
      v.exhaustive = out.exhaustive;
      return v;
    }
  }
  return out;
}

AnalysisVerdict effective(const EpistemicGraph& g, int a, int b, const std::set<int>& F, Strength s, const Regime& r) {
  return effective_in(graph_model(g, r), a, b, F, s, r);
}

AnalysisVerdict semi_effective(const EpistemicGraph& g, const std::vector<Formula>& Z, int a, int b,
                               const std::set<int>& F, Strength s, const Regime& r) {
  return effective_in(z_model(g, Z, r), a, b, F, s, r);
}

RelationType relation_type(const EpistemicGraph& g, const std::vector<Formula>& Z, int a, int b,
                           const std::set<int>& F, const Regime& r) {
  return relation_in(z_model(g, Z, r), a, b, F, r);
}

Monotonicity monotonicity(const EpistemicGraph& g, const std::vector<Formula>& Z, int a, int b,
                          const std::set<int>& F, const Regime& r) {
  return monotonicity_in(z_model(g, Z, r), a, b, F, r);
}

std::string RelationType::name() const {
  if (!semi_effective) return "unspecified";
  if (subtle()) return "subtle";
  if (attacking) return "attacking";
  if (supporting) return "supporting";
  return "dependent";
}

std::string Monotonicity::name() const {
  if (positive && negative) return "positive,negative";
  if (positive) return "positive";
  if (negative) return "negative";
  return "nonmonotonic";
}

namespace {

// Models for each Z candidate, built once per report.
struct ZModels {
  std::vector<Model> models;
  std::vector<bool> usable;

  ZModels(const EpistemicGraph& g, const std::vector<std::vector<Formula>>& zs, const Regime& r) {
    for (const auto& z : zs) {
      Model m(z, g.arity(), r.pi, r.engine);
      bool ok;
      try {
        if (z != g.constraints) validate_z(g, z, m, r);
        else require_consistent(m, "graph");
        ok = true;
      } catch (const PreconditionError&) {
        ok = false;
      }
      models.push_back(std::move(m));
      usable.push_back(ok);
    }
  }
};

}  // namespace

CoherenceReport coherence_report(const EpistemicGraph& g, const Regime& r,
                                 const std::vector<std::vector<Formula>>& z_candidates) {
  const int n = g.arity();
  const int cap = r.effective_cap(n);
  auto zs = z_candidates.empty() ? default_z_candidates(g) : z_candidates;
  Model mc = graph_model(g, r);
  ZModels zm(g, zs, r);
  CoherenceReport rep;
  rep.regime = r;
  if (cap < n - 1) rep.exhaustive = false;

  auto fully = [&](int a) {
    if (coverage_in(mc, a, {}, CoverageMode::Partial, r).holds) return true;
    for (const auto& F : subsets_up_to(all_but(n, {a}), cap))
      if (coverage_in(mc, a, F, CoverageMode::Full, r).holds) return true;
    return false;
  };
  rep.bounded = rep.entry_bounded = true;
  for (int a = 0; a < n; ++a) {
    if (fully(a)) continue;
    if (rep.bounded) rep.notes.push_back("bounded: " + g.names[a] + " is not covered");
    rep.bounded = false;
    if (!g.parents(a).empty()) {
      if (rep.entry_bounded) rep.notes.push_back("entry-bounded: " + g.names[a] + " is not covered");
      rep.entry_bounded = false;
    }
  }

  std::map<std::pair<int, int>, bool> memo;
  auto arbitrary_semi = [&](int a, int b) {
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool found = false;
    for (std::size_t z = 0; z < zs.size() && !found; ++z) {
      if (!zm.usable[z]) continue;
      for (const auto& F : subsets_up_to(all_but(n, {b}), cap))
        if (effective_in(zm.models[z], a, b, F, Strength::Plain, r).holds) {
          found = true;
          break;
        }
    }
    return memo[key] = found;
  };

  rep.directly_connected = true;
  for (const auto& arc : g.arcs) {
    bool ok = arc.from != arc.to && arbitrary_semi(arc.from, arc.to);
    if (!ok && rep.directly_connected)
      rep.notes.push_back("directly connected: " + g.names[arc.from] + " -> " + g.names[arc.to] + " is not semi-effective");
    rep.directly_connected = rep.directly_connected && ok;
  }
  auto star = g.connected_pairs();
  rep.indirectly_connected = true;
  for (const auto& [a, b] : star)
    if (!arbitrary_semi(a, b)) {
      rep.notes.push_back("indirectly connected: (" + g.names[a] + "," + g.names[b] + ") is not semi-effective");
      rep.indirectly_connected = false;
      break;
    }
  rep.hidden_connected = false;
  for (int a = 0; a < n && !rep.hidden_connected; ++a)
    for (int b = 0; b < n && !rep.hidden_connected; ++b)
      if (a != b && !star.count({a, b}) && arbitrary_semi(a, b)) {
        rep.hidden_connected = true;
        rep.notes.push_back("hidden connected: (" + g.names[a] + "," + g.names[b] + ") is semi-effective outside the arcs");
      }

  rep.locally_connected = true;
  for (int a = 0; a < n && rep.locally_connected; ++a) {
    std::set<int> dr = g.direct_rels(a);
    dr.erase(a);
    bool ok = false;
    for (std::size_t z = 0; z < zs.size() && !ok; ++z) {
      if (!zm.usable[z]) continue;
      const Model& m = zm.models[z];
      if (!coverage_in(m, a, dr, CoverageMode::Full, r).holds) continue;
      ok = std::all_of(dr.begin(), dr.end(), [&](int b) {
        std::set<int> without_b = dr;
        without_b.erase(b);
        return effective_in(m, b, a, dr, Strength::Plain, r).holds ||
               effective_in(m, a, b, without_b, Strength::Plain, r).holds;
      });
    }
    if (!ok) {
      rep.notes.push_back("locally connected: fails at " + g.names[a]);
      rep.locally_connected = false;
    }
  }
  return rep;
}

std::vector<ArcCheck> labeling_consistency(const EpistemicGraph& g, LabelMode mode, const Regime& r,
                                           const std::vector<std::vector<Formula>>& z_candidates) {
  const int n = g.arity();
  const int cap = r.effective_cap(n);
  auto zs = z_candidates.empty() ? default_z_candidates(g) : z_candidates;
  graph_model(g, r);
  ZModels zm(g, zs, r);
  const bool exhaustive = cap >= n - 1;
  std::vector<ArcCheck> out;
  for (const auto& arc : g.arcs) {
    ArcCheck chk{arc.from, arc.to, arc.labels, false, {}, {}};
    if (arc.from == arc.to) {
      chk.note = "self-loop, not analysed";
      out.push_back(chk);
      continue;
    }
    auto search = [&](LabelSet label) -> bool {
      for (std::size_t z = 0; z < zs.size(); ++z) {
        if (!zm.usable[z]) continue;
        for (const auto& F : subsets_up_to(all_but(n, {arc.to}), cap)) {
          bool ok;
          if (mode == LabelMode::Monotonic) {
            Monotonicity mo = monotonicity_in(zm.models[z], arc.from, arc.to, F, r);
            ok = label == kPositive ? mo.positive : label == kNegative ? mo.negative : (!mo.positive && !mo.negative);
          } else if (!linked(zm.models[z].formulas(), n, arc.from, arc.to)) {
            ok = label == 0;
          } else {
            RelationType rt = relation_in(zm.models[z], arc.from, arc.to, F, r);
            const bool strong = mode == LabelMode::Strong;
            if (label == kPositive) ok = strong ? rt.strong_supporting() : rt.supporting;
            else if (label == kNegative) ok = strong ? rt.strong_attacking() : rt.attacking;
            else if (label == kStar) ok = strong ? rt.strong_dependent() : rt.dependent();
            else ok = !rt.semi_effective;
          }
          if (ok) {
            chk.found.push_back({label, z, F});
            return true;
          }
        }
      }
      return false;
    };
    chk.pass = true;
    std::vector<LabelSet> wanted;
    for (LabelSet l : {kPositive, kNegative, kStar})
      if (arc.labels & l) wanted.push_back(l);
    if (wanted.empty() && mode != LabelMode::Monotonic) wanted.push_back(0);
    for (LabelSet l : wanted)
      if (!search(l)) {
        chk.pass = false;
        std::string what = l == kPositive   ? (mode == LabelMode::Monotonic ? "positive monotonic" : "supporting")
                           : l == kNegative ? (mode == LabelMode::Monotonic ? "negative monotonic" : "attacking")
                           : l == kStar     ? (mode == LabelMode::Monotonic ? "non-monotonic dependent" : "dependent")
                                            : "unspecified";
        if (!chk.note.empty()) chk.note += "; ";
        chk.note += "no (Z,F) makes it " + what + (exhaustive ? "" : " within the cap");
      }
    out.push_back(std::move(chk));
  }
  return out;
}

}  // namespace epigraph

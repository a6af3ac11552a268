#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epigraph/graph.hpp"
#include "epigraph/solver.hpp"
#include "epigraph/value_set.hpp"

namespace epigraph {

// Value grid plus the size cap for "arbitrary" searches. cap < 0 means
// min(n - 1, 4) for the graph at hand.
struct Regime {
  ValueSet pi = ValueSet::grid(2);
  int cap = -1;
  EngineOptions engine;

  int effective_cap(int n) const;
};

// Smallest grid {0, 1/D, ..., 1} with 2 | D that contains every number in the formulas.
ValueSet analysis_grid(std::span<const Formula> fs);
Regime default_regime(const EpistemicGraph& g, std::span<const std::vector<Formula>> extra = {});

struct Combination {
  enum class Kind { Exact, Soft };
  struct Entry {
    int arg;
    Comparator cmp;
    Rational value;
  };
  std::vector<Entry> entries;  // sorted by argument

  Kind kind() const;
  Combination restricted(const std::set<int>& keep) const;
  std::vector<Formula> formulas() const;
  std::string to_string(std::span<const std::string> names) const;
  bool operator==(const Combination& o) const;
};

// Every exact combination over F, lexicographic in argument order.
std::vector<Combination> combinations(const std::set<int>& F, const ValueSet& pi);

struct AnalysisVerdict {
  bool holds = false;
  std::optional<Combination> witness;
  std::optional<Rational> x, y;
  std::optional<Combination> counterexample;
  std::optional<std::set<int>> set;     // F chosen by an arbitrary search
  std::optional<std::size_t> z_index;   // which Z candidate, for searches over Z
  bool exhaustive = true;               // false if the cap cut the search short
  Regime regime;
};

enum class CoverageMode { Partial, Full };
enum class Strength { Plain, Strong };

AnalysisVerdict default_covered(const EpistemicGraph& g, int a, const Regime& r);
AnalysisVerdict covered(const EpistemicGraph& g, int a, const std::set<int>& F, CoverageMode mode, const Regime& r);
AnalysisVerdict arbitrary_covered(const EpistemicGraph& g, int a, CoverageMode mode, const Regime& r);

AnalysisVerdict effective(const EpistemicGraph& g, int a, int b, const std::set<int>& F, Strength s, const Regime& r);
// Z must lie in the closure of the graph's constraints and be consistent.
AnalysisVerdict semi_effective(const EpistemicGraph& g, const std::vector<Formula>& Z, int a, int b,
                               const std::set<int>& F, Strength s, const Regime& r);

struct RelationType {
  bool semi_effective = false;
  bool attacking = false, supporting = false;
  // every combination over F is consistent with Z, also after p(A) > 0.5
  bool all_consistent = false;
  bool some_leq = false, some_geq = false;  // some combination entails p(B) <= 0.5 / >= 0.5
  std::optional<Combination> attack_counterexample, support_counterexample;
  Regime regime;

  bool dependent() const { return semi_effective && !attacking && !supporting; }
  bool subtle() const { return attacking && supporting; }
  bool strong_attacking() const { return attacking && all_consistent && some_leq; }
  bool strong_supporting() const { return supporting && all_consistent && some_geq; }
  bool strong_subtle() const { return strong_attacking() && strong_supporting(); }
  bool strong_dependent() const { return dependent() && all_consistent && (some_leq || some_geq); }
  // unspecified, dependent, attacking, supporting or subtle
  std::string name() const;
};

RelationType relation_type(const EpistemicGraph& g, const std::vector<Formula>& Z, int a, int b,
                           const std::set<int>& F, const Regime& r);

struct Monotonicity {
  bool positive = false, negative = false;
  bool vacuous = false;  // no pair of distributions was comparable
  Regime regime;
  // positive, negative or nonmonotonic; a vacuous relation is both and prints "positive,negative"
  std::string name() const;
};

Monotonicity monotonicity(const EpistemicGraph& g, const std::vector<Formula>& Z, int a, int b,
                          const std::set<int>& F, const Regime& r);

// C followed by each of its members as a singleton set.
std::vector<std::vector<Formula>> default_z_candidates(const EpistemicGraph& g);

struct CoherenceReport {
  bool bounded = false, entry_bounded = false;
  bool directly_connected = false, indirectly_connected = false;
  bool hidden_connected = false, locally_connected = false;
  bool exhaustive = true;
  std::vector<std::string> notes;  // the first failing argument or pair per predicate
  Regime regime;
};

CoherenceReport coherence_report(const EpistemicGraph& g, const Regime& r,
                                 const std::vector<std::vector<Formula>>& z_candidates = {});

enum class LabelMode { Consistent, Strong, Monotonic };

struct ArcCheck {
  int from, to;
  LabelSet labels;
  bool pass = false;
  struct Found {
    LabelSet label;
    std::size_t z_index;
    std::set<int> F;
  };
  std::vector<Found> found;
  std::string note;
};

std::vector<ArcCheck> labeling_consistency(const EpistemicGraph& g, LabelMode mode, const Regime& r,
                                           const std::vector<std::vector<Formula>>& z_candidates = {});

// Subsets of pool with at most cap members, smallest first, then lexicographic.
std::vector<std::set<int>> subsets_up_to(const std::vector<int>& pool, int cap);

}  // namespace epigraph

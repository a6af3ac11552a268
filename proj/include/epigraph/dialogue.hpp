#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "epigraph/analysis.hpp"
#include "epigraph/graph.hpp"

namespace epigraph {

// p(arg) # x
struct Belief {
  int arg;
  Comparator cmp;
  Rational x;

  Formula formula() const { return Formula::simple(Term::argument(arg), cmp, x); }
};

struct ArgumentRange {
  int arg;
  Rational lo, hi;
  std::vector<Rational> values;  // every achievable marginal
};

struct SessionState {
  bool consistent = false;
  std::vector<Belief> asserted;
  std::vector<int> played;
  std::vector<ArgumentRange> ranges;  // empty when inconsistent
  std::vector<Belief> conflict;       // minimal conflicting asserted subset, when inconsistent
  bool goal_entailed = false;         // every satisfying distribution meets the goal
  bool goal_possible = false;
};

struct Move {
  int arg;
  bool feasible = false;   // C, the assertions and p(arg) > 0.5 are jointly satisfiable
  Rational optimistic, pessimistic;
  // distributions attaining the bounds, marginals over the session denominator
  std::optional<BeliefDistribution> optimistic_witness, pessimistic_witness;
  bool goal_guaranteed = false;  // pessimistic value already meets the goal
  std::vector<std::string> warnings;
};

// Label-check results for the graph, computed once and shared by sessions.
class DialogueEngine {
 public:
  DialogueEngine(EpistemicGraph g, Regime r);

  const EpistemicGraph& graph() const { return g_; }
  const Regime& regime() const { return r_; }
  const std::vector<ArcCheck>& arc_checks() const;

 private:
  EpistemicGraph g_;
  Regime r_;
  mutable std::once_flag once_;
  mutable std::vector<ArcCheck> checks_;
};

class DialogueSession {
 public:
  DialogueSession(std::shared_ptr<const DialogueEngine> engine, Belief goal);

  const Belief& goal() const { return goal_; }
  const std::vector<Belief>& asserted() const { return asserted_; }
  const std::vector<int>& played() const { return played_; }

  // Replaces any earlier assertion on the same argument.
  void assert_belief(const Belief& b);
  bool retract(int arg);  // false if nothing was asserted on arg
  void play(int arg);

  SessionState state() const;
  // Candidates exclude the goal argument, asserted and played ones. Ranked by
  // optimistic value, then pessimistic value (both descending), then name.
  // Throws PreconditionError when the session is inconsistent.
  std::vector<Move> suggest_moves() const;

 private:
  std::shared_ptr<const DialogueEngine> engine_;
  Belief goal_;
  std::vector<Belief> asserted_;
  std::vector<int> played_;
};

std::vector<Belief> minimal_conflict(const EpistemicGraph& g, const std::vector<Belief>& asserted, const Regime& r);

std::string to_string(const Belief& b, std::span<const std::string> names);

}  // namespace epigraph

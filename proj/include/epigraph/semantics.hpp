#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epigraph/distribution.hpp"
#include "epigraph/graph.hpp"
#include "epigraph/solver.hpp"

namespace epigraph {

enum class Ordering { Acceptance, Rejection, Undecided, Information, Belief };
Ordering parse_ordering(std::string_view s);  // A, R, U, I, B or the full names
std::string ordering_name(Ordering o);

enum class Comparison { Equivalent, Less, Greater, Incomparable };
std::string comparison_name(Comparison c);

// Entropies closer than this compare as equal.
inline constexpr double kEntropyTolerance = 1e-9;

double entropy(const BeliefDistribution& p);  // bits

// p <=_ord q and q <=_ord p resolved into one answer.
Comparison compare(const BeliefDistribution& p, const BeliefDistribution& q, Ordering ord);
bool leq(const BeliefDistribution& p, const BeliefDistribution& q, Ordering ord);

enum class Direction { Max, Min };
// Members with no strictly greater (max) or strictly smaller (min) member of R.
DistributionSet select_extreme(const DistributionSet& R, Ordering ord, Direction dir);

struct DistributionProperties {
  bool minimal = false, maximal = false, neutral = false, ternary = false, non_neutral = false;
  std::size_t values = 0;  // n in "n-valued"
};
DistributionProperties distribution_properties(const BeliefDistribution& p);

enum class Filter { Minimal, Maximal, Neutral, Ternary, NonNeutral };
Filter parse_filter(std::string_view s);
DistributionSet apply_filter(const DistributionSet& R, Filter f);

// Sat(C) over the regime's value set.
DistributionSet satisfaction_semantics(const EpistemicGraph& g, const ValueSet& pi, const EngineOptions& opts = {});

// Distinct marginal vectors of R, each paired with its nested-set representative
// (mass on the chain of upper level sets). Patterns are sorted by marginals.
struct Pattern {
  std::vector<Rational> marginals;
  BeliefDistribution representative;
  std::size_t members = 0;  // how many distributions of R share the marginals
};
std::vector<Pattern> marginal_patterns(const DistributionSet& R);

}  // namespace epigraph

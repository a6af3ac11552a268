#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "epigraph/distribution.hpp"
#include "epigraph/graph.hpp"
#include "epigraph/term.hpp"

namespace epigraph {

enum class Truth : std::uint8_t { F, T, U };
using Labeling = std::vector<Truth>;
std::string to_string(const Labeling& v);  // one letter per argument, e.g. "ttffu"
// u <=_i t, u <=_i f, pointwise
bool info_leq(const Labeling& a, const Labeling& b);

struct Adf {
  std::vector<std::string> names;
  std::vector<std::set<int>> parents;
  std::vector<Term> conditions;
  std::map<std::pair<int, int>, LabelSet> labels;  // optional link labels
};

// statement: / condition: pairs; optional "parents: X, Y" after a statement and
// "link: X -> Y [labels]" lines anywhere.
Adf parse_adf(std::string_view text);
void validate_adf(const Adf& adf);  // throws PreconditionError

Labeling gamma(const Adf& adf, const Labeling& v);
enum class AdfSemantics { Complete, Preferred, Grounded };
// Brute force over 3^n interpretations; n <= 6 unless allow_large.
std::vector<Labeling> adf_labelings(const Adf& adf, AdfSemantics s, bool allow_large = false);

// One constraint per argument: (p(X)>0.5 <-> e(AC)) & (p(X)<0.5 <-> e(not AC)).
// Read-once conditions go through NNF, others through their Blake canonical form.
EpistemicGraph adf_to_eg(const Adf& adf);

Labeling labeling_from_distribution(const BeliefDistribution& p);

// Constraints for an attack graph (all labels negative) plus its pc term.
EpistemicGraph caf_to_eg(const EpistemicGraph& caf);
// A -> p(A)>0.5 and !A -> p(A)<=0.5 over the NNF of the term.
Formula pc_constraint(const Term& pc);
enum class CafSemantics { Admissible, Preferred };
// Extensions as argument sets, sorted; the pc filter applies when the graph has one.
std::vector<std::set<int>> caf_reference(const EpistemicGraph& caf, CafSemantics s);
// Admissible labelings (in: every attacker out; out: some attacker in) whose in-set
// satisfies pc; Preferred keeps the <=_i-maximal ones. Sorted.
std::vector<Labeling> caf_labelings(const EpistemicGraph& caf, CafSemantics s);

}  // namespace epigraph

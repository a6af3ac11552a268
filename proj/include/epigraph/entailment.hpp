#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epigraph/distribution.hpp"
#include "epigraph/formula.hpp"
#include "epigraph/solver.hpp"
#include "epigraph/value_set.hpp"

namespace epigraph {

struct Verdict {
  bool holds = false;
  std::optional<BeliefDistribution> witness;  // counterexample when an entailment fails
};

// Phi |= psi over Pi-restricted distributions.
Verdict entails(const std::vector<Formula>& phi, const Formula& psi, int n, const ValueSet& pi,
                const EngineOptions& opts = {});
bool consistent(const std::vector<Formula>& phi, int n, const ValueSet& pi, const EngineOptions& opts = {});
bool in_closure(const std::vector<Formula>& phi, const Formula& psi, int n, const ValueSet& pi,
                const EngineOptions& opts = {});
// Phi together with the negated query: unsatisfiable exactly when Phi |= psi.
std::vector<Formula> refutation(const std::vector<Formula>& phi, const Formula& psi);

// Disjunction of associated formulae of Sat(psi), or #f.
Formula ddnf(const Formula& psi, int n, const ValueSet& pi, const EngineOptions& opts = {});
DistributionSet sat_restricted(const std::vector<Formula>& phi, int n, const ValueSet& pi,
                               const EngineOptions& opts = {});
// All Pi-restricted distributions over n arguments.
DistributionSet enumerate_restricted(int n, const ValueSet& pi, const EngineOptions& opts = {});

enum class SubjectRelation { None, Plus, Minus };
// Requires equal comparators and thresholds; identical atoms relate by Plus.
SubjectRelation subject_relation(const Atom& f1, const Atom& f2, int n);

enum class Rule { B1, B2, B3, B4, PR1, S1, S2, S3, S4, S5, S6, S7, S8, E1, E2, E3, E4, E5, P1, P2 };
std::string rule_name(Rule r);
Rule parse_rule(const std::string& name);
inline constexpr Rule kAllRules[] = {Rule::B1, Rule::B2, Rule::B3, Rule::B4, Rule::PR1, Rule::S1, Rule::S2,
                                     Rule::S3, Rule::S4, Rule::S5, Rule::S6, Rule::S7, Rule::S8, Rule::E1,
                                     Rule::E2, Rule::E3, Rule::E4, Rule::E5, Rule::P1, Rule::P2};

struct RuleInstance {
  std::vector<Formula> context;   // Phi
  std::vector<Formula> premises;  // what the rule consumes (an atom for S/E, formulas for P1)
  Formula conclusion;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

// Throws SchemaError unless the instance has the rule's syntactic shape, then
// reports whether the semantic containment the rule asserts holds.
bool verify_rule_instance(Rule rule, const RuleInstance& inst, int n, const ValueSet& pi);

// Propositional consequence treating structurally equal atoms as one letter.
bool propositional_entails(const std::vector<Formula>& premises, const Formula& conclusion);

// The formula E1 asks for: the enumerated equality disjunction for f # x, or #f.
Formula combination_disjunction(const OperationalFormula& f, Comparator c, const Rational& x, const ValueSet& pi);

}  // namespace epigraph

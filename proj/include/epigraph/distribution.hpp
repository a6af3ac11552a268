#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "epigraph/formula.hpp"
#include "epigraph/rational.hpp"
#include "epigraph/term.hpp"
#include "epigraph/value_set.hpp"

namespace epigraph {

// Exact mass function over the 2^n worlds, stored as numerators over one
// shared denominator in lowest terms.
class BeliefDistribution {
 public:
  BeliefDistribution() = default;
  // Throws PreconditionError unless masses are non-negative and sum to den.
  BeliefDistribution(int n, std::vector<std::int32_t> numerators, std::int32_t denominator);
  static BeliefDistribution from_masses(int n, const std::vector<Rational>& masses);
  static BeliefDistribution point(int n, World w);
  // Nested-set distribution with the given marginals (all multiples of 1/den).
  static BeliefDistribution comonotone(const std::vector<std::int32_t>& marginal_units, std::int32_t den);

  int arity() const { return n_; }
  std::size_t world_count() const { return num_.size(); }
  const std::vector<std::int32_t>& numerators() const { return num_; }
  std::int32_t denominator() const { return den_; }
  Rational mass(World w) const;
  Rational marginal(int arg) const;
  std::vector<Rational> marginals() const;
  // marginal numerators over denominator()
  std::vector<std::int64_t> marginal_numerators() const;

  bool operator==(const BeliefDistribution& o) const { return n_ == o.n_ && den_ == o.den_ && num_ == o.num_; }
  // lexicographic on the mass vector (world 0 first)
  std::strong_ordering operator<=>(const BeliefDistribution& o) const;

 private:
  int n_ = 0;
  std::vector<std::int32_t> num_;
  std::int32_t den_ = 1;
};

using DistributionSet = std::vector<BeliefDistribution>;
void canonicalize(DistributionSet& s);  // sort and dedupe

Rational prob_of_term(const BeliefDistribution& p, const Term& t);
Rational eval_opformula(const BeliefDistribution& p, const OperationalFormula& f);
bool eval_formula(const BeliefDistribution& p, const Formula& f);
bool is_restricted(const BeliefDistribution& p, const ValueSet& pi);

// Conjunction of p(c_w) = P(w) over all complete terms c_w.
Formula associated_formula(const BeliefDistribution& p);

}  // namespace epigraph

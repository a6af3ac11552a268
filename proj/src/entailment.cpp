#include "epigraph/entailment.hpp"

namespace epigraph {

std::vector<Formula> refutation(const std::vector<Formula>& phi, const Formula& psi) {
  std::vector<Formula> out = phi;
  out.push_back(Formula::negation(psi));
  return out;
}

Verdict entails(const std::vector<Formula>& phi, const Formula& psi, int n, const ValueSet& pi,
                const EngineOptions& opts) {
  Model m(refutation(phi, psi), n, pi, opts);
  Verdict v;
  v.witness = m.witness();
  v.holds = !v.witness.has_value();
  return v;
}

bool consistent(const std::vector<Formula>& phi, int n, const ValueSet& pi, const EngineOptions& opts) {
  return Model(phi, n, pi, opts).consistent();
}

bool in_closure(const std::vector<Formula>& phi, const Formula& psi, int n, const ValueSet& pi,
                const EngineOptions& opts) {
  return entails(phi, psi, n, pi, opts).holds;
}

DistributionSet sat_restricted(const std::vector<Formula>& phi, int n, const ValueSet& pi, const EngineOptions& opts) {
  return Model(phi, n, pi, opts).distributions();
}

DistributionSet enumerate_restricted(int n, const ValueSet& pi, const EngineOptions& opts) {
  if (!pi.reasonable()) return {};
  return Model({}, n, pi, opts).distributions();
}

Formula ddnf(const Formula& psi, int n, const ValueSet& pi, const EngineOptions& opts) {
  std::vector<Formula> parts;
  for (const auto& p : sat_restricted({psi}, n, pi, opts)) parts.push_back(associated_formula(p));
  return disjoin(parts);
}

SubjectRelation subject_relation(const Atom& f1, const Atom& f2, int n) {
  if (f1.cmp != f2.cmp || f1.rhs != f2.rhs) throw PreconditionError("subject relation needs a shared comparator and threshold");
  const auto& a = f1.lhs;
  const auto& b = f2.lhs;
  if (a.terms.size() != b.terms.size() || a.ops != b.ops) return SubjectRelation::None;
  int diff = -1;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i] == b.terms[i]) continue;
    if (diff >= 0) return SubjectRelation::None;
    diff = static_cast<int>(i);
  }
  if (diff < 0) return SubjectRelation::Plus;
  if (!prop_entails(a.terms[diff], b.terms[diff], n)) return SubjectRelation::None;
  if (diff == 0 || a.ops[diff - 1] == ArithOp::Plus) return SubjectRelation::Plus;
  return SubjectRelation::Minus;
}

}  // namespace epigraph

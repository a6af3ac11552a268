#include <algorithm>
#include <map>

#include "epigraph/entailment.hpp"

namespace epigraph {

namespace {

const std::pair<Rule, const char*> kNames[] = {
    {Rule::B1, "B1"}, {Rule::B2, "B2"}, {Rule::B3, "B3"}, {Rule::B4, "B4"}, {Rule::PR1, "PR1"},
    {Rule::S1, "S1"}, {Rule::S2, "S2"}, {Rule::S3, "S3"}, {Rule::S4, "S4"}, {Rule::S5, "S5"},
    {Rule::S6, "S6"}, {Rule::S7, "S7"}, {Rule::S8, "S8"}, {Rule::E1, "E1"}, {Rule::E2, "E2"},
    {Rule::E3, "E3"}, {Rule::E4, "E4"}, {Rule::E5, "E5"}, {Rule::P1, "P1"}, {Rule::P2, "P2"},
};

const Atom& single_atom(const Formula& f, const char* what) {
  if (f.kind != Formula::Kind::Atom) throw SchemaError(std::string(what) + " must be an epistemic atom");
  return *f.atom;
}

const Atom& only_premise(const RuleInstance& inst) {
  if (inst.premises.size() != 1) throw SchemaError("rule takes exactly one premise");
  return single_atom(inst.premises[0], "premise");
}

// context plus premises entail the conclusion
bool sound(const RuleInstance& inst, int n, const ValueSet& pi) {
  std::vector<Formula> all = inst.context;
  all.insert(all.end(), inst.premises.begin(), inst.premises.end());
  return entails(all, inst.conclusion, n, pi).holds;
}

// premise and conclusion have the same models (under the context)
bool equivalent(const RuleInstance& inst, const Formula& premise, int n, const ValueSet& pi) {
  std::vector<Formula> a = inst.context, b = inst.context;
  a.push_back(premise);
  b.push_back(inst.conclusion);
  return entails(a, inst.conclusion, n, pi).holds && entails(b, premise, n, pi).holds;
}

void flatten(const Formula& f, Formula::Kind k, std::vector<const Formula*>& out) {
  if (f.kind == k) {
    flatten(f.children[0], k, out);
    flatten(f.children[1], k, out);
  } else {
    out.push_back(&f);
  }
}

using Tuple = std::vector<Rational>;

// Reads p(a1) = v1 & ... & p(ak) = vk against the terms of f; Bottom gives no tuples.
std::vector<Tuple> read_disjunction(const Formula& d, const OperationalFormula& f) {
  std::vector<Tuple> out;
  if (d.kind == Formula::Kind::Bottom) return out;
  std::vector<const Formula*> disjuncts;
  flatten(d, Formula::Kind::Or, disjuncts);
  for (const Formula* c : disjuncts) {
    std::vector<const Formula*> conj;
    flatten(*c, Formula::Kind::And, conj);
    if (conj.size() != f.terms.size()) throw SchemaError("disjunct does not fix every term");
    Tuple t;
    for (std::size_t i = 0; i < conj.size(); ++i) {
      const Atom& a = single_atom(*conj[i], "conjunct");
      if (a.cmp != Comparator::Eq || a.lhs.terms.size() != 1 || a.lhs.terms[0] != f.terms[i])
        throw SchemaError("conjunct must read p(term_i) = value");
      t.push_back(a.rhs);
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void expect_combination(const Formula& d, const OperationalFormula& f, Comparator c, const Rational& x,
                        const ValueSet& pi) {
  auto expected = combination_set(pi, x, c, f.ops);
  std::sort(expected.begin(), expected.end());
  if (read_disjunction(d, f) != expected) throw SchemaError("disjunction does not enumerate the combination set");
}

template <class F>
void visit_letters(const Formula& f, F&& fn) {
  if (f.kind == Formula::Kind::Atom) fn(*f.atom);
  for (const auto& c : f.children) visit_letters(c, fn);
}

bool eval_letters(const Formula& f, const std::vector<Atom>& letters, std::uint64_t m) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Top: return true;
    case K::Bottom: return false;
    case K::Atom: {
      auto i = std::find(letters.begin(), letters.end(), *f.atom) - letters.begin();
      return (m >> i) & 1;
    }
    case K::Not: return !eval_letters(f.children[0], letters, m);
    case K::And: return eval_letters(f.children[0], letters, m) && eval_letters(f.children[1], letters, m);
    case K::Or: return eval_letters(f.children[0], letters, m) || eval_letters(f.children[1], letters, m);
    case K::Implies: return !eval_letters(f.children[0], letters, m) || eval_letters(f.children[1], letters, m);
    case K::Iff: return eval_letters(f.children[0], letters, m) == eval_letters(f.children[1], letters, m);
  }
  return false;
}

}  // namespace

std::string rule_name(Rule r) {
  for (auto [k, s] : kNames)
    if (k == r) return s;
  return "?";
}

Rule parse_rule(const std::string& name) {
  for (auto [k, s] : kNames)
    if (name == s) return k;
  throw ParseError("unknown rule '" + name + "'", 0);
}

bool propositional_entails(const std::vector<Formula>& premises, const Formula& conclusion) {
  std::vector<Atom> letters;
  auto add = [&](const Atom& a) {
    if (std::find(letters.begin(), letters.end(), a) == letters.end()) letters.push_back(a);
  };
  for (const auto& p : premises) visit_letters(p, add);
  visit_letters(conclusion, add);
  if (letters.size() > 22) throw LimitError("too many distinct atoms for a truth table");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << letters.size()); ++m) {
    bool all = std::all_of(premises.begin(), premises.end(), [&](const Formula& p) { return eval_letters(p, letters, m); });
    if (all && !eval_letters(conclusion, letters, m)) return false;
  }
  return true;
}

Formula combination_disjunction(const OperationalFormula& f, Comparator c, const Rational& x, const ValueSet& pi) {
  std::vector<Formula> disjuncts;
  for (const auto& tuple : combination_set(pi, x, c, f.ops)) {
    std::vector<Formula> eqs;
    for (std::size_t i = 0; i < tuple.size(); ++i) eqs.push_back(Formula::simple(f.terms[i], Comparator::Eq, tuple[i]));
    disjuncts.push_back(conjoin(eqs));
  }
  return disjoin(disjuncts);
}

bool verify_rule_instance(Rule rule, const RuleInstance& inst, int n, const ValueSet& pi) {
  auto one_term = [](const Atom& a, Comparator c, const Rational& x) {
    return a.lhs.terms.size() == 1 && a.cmp == c && a.rhs == x;
  };
  switch (rule) {
    case Rule::B1:
    case Rule::B2:
    case Rule::B3:
    case Rule::B4: {
      const Atom& a = single_atom(inst.conclusion, "conclusion");
      bool shape = rule == Rule::B1   ? one_term(a, Comparator::Geq, Rational(0))
                   : rule == Rule::B2 ? one_term(a, Comparator::Leq, Rational(1))
                   : rule == Rule::B3 ? one_term(a, Comparator::Eq, Rational(1)) && a.lhs.terms[0].kind == Term::Kind::Top
                                      : one_term(a, Comparator::Eq, Rational(0)) && a.lhs.terms[0].kind == Term::Kind::Bottom;
      if (!shape) throw SchemaError(rule_name(rule) + ": conclusion has the wrong form");
      if (!inst.premises.empty()) throw SchemaError(rule_name(rule) + ": takes no premises");
      return sound(inst, n, pi);
    }
    case Rule::PR1: {
      const Atom& a = single_atom(inst.conclusion, "conclusion");
      const auto& t = a.lhs.terms;
      const std::vector<ArithOp> ops{ArithOp::Minus, ArithOp::Minus, ArithOp::Plus};
      bool shape = t.size() == 4 && a.lhs.ops == ops && a.cmp == Comparator::Eq && a.rhs == 0 &&
                   t[0].kind == Term::Kind::Or && t[3].kind == Term::Kind::And && t[0].children[0] == t[1] &&
                   t[0].children[1] == t[2] && t[3].children[0] == t[1] && t[3].children[1] == t[2];
      if (!shape) throw SchemaError("PR1: conclusion must read p(a|b) - p(a) - p(b) + p(a&b) = 0");
      if (!inst.premises.empty()) throw SchemaError("PR1: takes no premises");
      return sound(inst, n, pi);
    }
    case Rule::S1:
    case Rule::S2:
    case Rule::S3:
    case Rule::S4:
    case Rule::S5:
    case Rule::S6:
    case Rule::S7:
    case Rule::S8: {
      static const std::map<Rule, std::tuple<Comparator, bool, SubjectRelation>> shape{
          // comparator, premise is the stronger side f1, required relation f1 vs f2
          {Rule::S1, {Comparator::Gt, true, SubjectRelation::Plus}},
          {Rule::S2, {Comparator::Geq, true, SubjectRelation::Plus}},
          {Rule::S3, {Comparator::Lt, true, SubjectRelation::Minus}},
          {Rule::S4, {Comparator::Leq, true, SubjectRelation::Minus}},
          {Rule::S5, {Comparator::Lt, false, SubjectRelation::Plus}},
          {Rule::S6, {Comparator::Leq, false, SubjectRelation::Plus}},
          {Rule::S7, {Comparator::Gt, false, SubjectRelation::Minus}},
          {Rule::S8, {Comparator::Geq, false, SubjectRelation::Minus}},
      };
      auto [cmp, forward, rel] = shape.at(rule);
      const Atom& prem = only_premise(inst);
      const Atom& concl = single_atom(inst.conclusion, "conclusion");
      if (prem.cmp != cmp || concl.cmp != cmp || prem.rhs != concl.rhs)
        throw SchemaError(rule_name(rule) + ": premise and conclusion need comparator " + std::string(symbol(cmp)) +
                          " and a common threshold");
      const Atom& f1 = forward ? prem : concl;
      const Atom& f2 = forward ? concl : prem;
      if (subject_relation(f1, f2, n) != rel) throw SchemaError(rule_name(rule) + ": subject relation does not hold");
      return sound(inst, n, pi);
    }
    case Rule::E1:
    case Rule::E2:
    case Rule::E3:
    case Rule::E4:
    case Rule::E5: {
      const Atom& prem = only_premise(inst);
      if (rule == Rule::E1) {
        expect_combination(inst.conclusion, prem.lhs, prem.cmp, prem.rhs, pi);
      } else {
        static const std::map<Rule, std::pair<Comparator, Comparator>> shape{
            {Rule::E2, {Comparator::Gt, Comparator::Leq}},
            {Rule::E3, {Comparator::Geq, Comparator::Lt}},
            {Rule::E4, {Comparator::Lt, Comparator::Geq}},
            {Rule::E5, {Comparator::Leq, Comparator::Gt}},
        };
        auto [cmp, inner] = shape.at(rule);
        if (prem.cmp != cmp) throw SchemaError(rule_name(rule) + ": premise needs comparator " + std::string(symbol(cmp)));
        if (inst.conclusion.kind != Formula::Kind::Not) throw SchemaError(rule_name(rule) + ": conclusion must be a negation");
        expect_combination(inst.conclusion.children[0], prem.lhs, inner, prem.rhs, pi);
      }
      return equivalent(inst, inst.premises[0], n, pi);
    }
    case Rule::P1: {
      if (inst.premises.empty()) throw SchemaError("P1: needs at least one premise");
      if (!propositional_entails(inst.premises, inst.conclusion))
        throw SchemaError("P1: conclusion is not a propositional consequence of the premises");
      return sound(inst, n, pi);
    }
    case Rule::P2: {
      std::vector<Formula> all = inst.context;
      all.insert(all.end(), inst.premises.begin(), inst.premises.end());
      if (!propositional_entails(all, inst.conclusion))
        throw SchemaError("P2: conclusion is not a propositional consequence of the formula set");
      return sound(inst, n, pi);
    }
  }
  return false;
}

}  // namespace epigraph

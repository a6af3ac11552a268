#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "epigraph/rational.hpp"
#include "epigraph/term.hpp"
#include "epigraph/value_set.hpp"

namespace epigraph {

// p(t1) o1 p(t2) ... ok p(tk+1)
struct OperationalFormula {
  std::vector<Term> terms;
  std::vector<ArithOp> ops;  // terms.size() - 1 entries

  bool operator==(const OperationalFormula& o) const = default;
};

struct Atom {
  OperationalFormula lhs;
  Comparator cmp = Comparator::Eq;
  Rational rhs;

  bool operator==(const Atom& o) const { return lhs == o.lhs && cmp == o.cmp && rhs == o.rhs; }
};

struct Formula {
  enum class Kind : std::uint8_t { Top, Bottom, Atom, Not, And, Or, Implies, Iff };

  Kind kind = Kind::Top;
  std::optional<epigraph::Atom> atom;
  std::vector<Formula> children;

  static Formula top() { return Formula{Kind::Top, std::nullopt, {}}; }
  static Formula bottom() { return Formula{Kind::Bottom, std::nullopt, {}}; }
  static Formula make_atom(epigraph::Atom a) { return Formula{Kind::Atom, std::move(a), {}}; }
  // p(t) # x
  static Formula simple(Term t, Comparator c, Rational x);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula biconditional(Formula a, Formula b);

  bool operator==(const Formula& o) const { return kind == o.kind && atom == o.atom && children == o.children; }
};

// Left nested; empty input gives #t / #f respectively.
Formula conjoin(std::span<const Formula> fs);
Formula disjoin(std::span<const Formula> fs);

std::set<int> formula_args(const Formula& f);
std::set<int> formula_args(std::span<const Formula> fs);
std::vector<Term> formula_terms(const Formula& f);  // distinct, first occurrence order
std::set<Rational> formula_numbers(const Formula& f);
std::set<Rational> formula_numbers(std::span<const Formula> fs);
std::vector<const Atom*> formula_atoms(const Formula& f);
int max_arg(const Formula& f);

// p(A) # x with A a bare argument
struct SimpleAtom {
  int arg;
  Comparator cmp;
  Rational x;
};
std::optional<SimpleAtom> as_simple(const Formula& f);

std::string to_string(const Atom& a, std::span<const std::string> names);
std::string to_string(const Formula& f, std::span<const std::string> names);

}  // namespace epigraph

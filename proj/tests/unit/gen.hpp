#pragma once

// Random formulas for property tests.

#include <random>

#include "epigraph/formula.hpp"

namespace gen {

using namespace epigraph;

struct Gen {
  std::mt19937 rng;
  int n;
  int den;
  bool literals_only = false;

  Gen(unsigned seed, int n_, int den_) : rng(seed), n(n_), den(den_) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Term term(int depth) {
    if (literals_only || depth == 0 || pick(0, 2) == 0) {
      Term a = Term::argument(pick(0, n - 1));
      return pick(0, 1) ? a : Term::negation(a);
    }
    Term a = term(depth - 1), b = term(depth - 1);
    switch (pick(0, 2)) {
      case 0: return Term::conjunction(a, b);
      case 1: return Term::disjunction(a, b);
      default: return Term::implication(a, b);
    }
  }

  Comparator cmp() { return static_cast<Comparator>(pick(0, 5)); }
  Rational value() { return ratio(pick(0, den), den); }

  Formula atom() {
    Atom a;
    int k = pick(0, 3) == 0 ? 2 : 1;
    a.lhs.terms.push_back(term(1));
    for (int i = 1; i < k; ++i) {
      a.lhs.ops.push_back(pick(0, 1) ? ArithOp::Plus : ArithOp::Minus);
      a.lhs.terms.push_back(term(1));
    }
    a.cmp = cmp();
    a.rhs = value();
    return Formula::make_atom(a);
  }

  Formula formula(int depth) {
    if (depth == 0 || pick(0, 2) == 0) return atom();
    switch (pick(0, 4)) {
      case 0: return Formula::negation(formula(depth - 1));
      case 1: return Formula::conjunction(formula(depth - 1), formula(depth - 1));
      case 2: return Formula::disjunction(formula(depth - 1), formula(depth - 1));
      case 3: return Formula::implication(formula(depth - 1), formula(depth - 1));
      default: return Formula::biconditional(formula(depth - 1), formula(depth - 1));
    }
  }

  std::vector<Formula> formulas(int count, int depth) {
    std::vector<Formula> out;
    for (int i = 0; i < count; ++i) out.push_back(formula(depth));
    return out;
  }
};

// Simple atom p(arg) # x with x on the grid.
inline Formula simple(int arg, Comparator c, int num, int den) {
  return Formula::simple(Term::argument(arg), c, ratio(num, den));
}

}  // namespace gen

#pragma once

// Brute-force reference semantics for the tests. Nothing in here calls the
// engine: distributions are enumerated as compositions of D into 2^n parts and
// formulas are evaluated by walking the syntax tree directly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "epigraph/formula.hpp"
#include "epigraph/graph.hpp"
#include "epigraph/parser.hpp"

namespace oracle {

using epigraph::Formula;
using epigraph::Rational;
using epigraph::Term;

// mass numerators over a fixed denominator, world w = bitmask of arguments
using Masses = std::vector<int>;

inline bool eval_term(const Term& t, unsigned w) {
  switch (t.kind) {
    case Term::Kind::Top: return true;
    case Term::Kind::Bottom: return false;
    case Term::Kind::Arg: return (w >> t.arg) & 1u;
    case Term::Kind::Not: return !eval_term(t.children[0], w);
    case Term::Kind::And:
      return std::all_of(t.children.begin(), t.children.end(), [&](const Term& c) { return eval_term(c, w); });
    case Term::Kind::Or:
      return std::any_of(t.children.begin(), t.children.end(), [&](const Term& c) { return eval_term(c, w); });
    case Term::Kind::Implies: return !eval_term(t.children[0], w) || eval_term(t.children[1], w);
  }
  return false;
}

inline Rational prob(const Masses& m, int den, const Term& t) {
  long s = 0;
  for (unsigned w = 0; w < m.size(); ++w)
    if (eval_term(t, w)) s += m[w];
  return epigraph::ratio(s, den);
}

inline bool compare(const Rational& a, epigraph::Comparator c, const Rational& b) {
  using epigraph::Comparator;
  switch (c) {
    case Comparator::Eq: return a == b;
    case Comparator::Neq: return a != b;
    case Comparator::Geq: return a >= b;
    case Comparator::Leq: return a <= b;
    case Comparator::Gt: return a > b;
    case Comparator::Lt: return a < b;
  }
  return false;
}

inline bool eval(const Masses& m, int den, const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bottom: return false;
    case Formula::Kind::Atom: {
      const auto& a = *f.atom;
      Rational v = prob(m, den, a.lhs.terms[0]);
      for (std::size_t i = 0; i < a.lhs.ops.size(); ++i) {
        Rational p = prob(m, den, a.lhs.terms[i + 1]);
        v = a.lhs.ops[i] == epigraph::ArithOp::Plus ? Rational(v + p) : Rational(v - p);
      }
      return compare(v, a.cmp, a.rhs);
    }
    case Formula::Kind::Not: return !eval(m, den, f.children[0]);
    case Formula::Kind::And:
      return std::all_of(f.children.begin(), f.children.end(), [&](const Formula& c) { return eval(m, den, c); });
    case Formula::Kind::Or:
      return std::any_of(f.children.begin(), f.children.end(), [&](const Formula& c) { return eval(m, den, c); });
    case Formula::Kind::Implies: return !eval(m, den, f.children[0]) || eval(m, den, f.children[1]);
    case Formula::Kind::Iff: return eval(m, den, f.children[0]) == eval(m, den, f.children[1]);
  }
  return false;
}

inline bool eval_all(const Masses& m, int den, const std::vector<Formula>& phi) {
  return std::all_of(phi.begin(), phi.end(), [&](const Formula& f) { return eval(m, den, f); });
}

// Every mass vector over 2^n worlds with entries in {0..den} summing to den.
inline std::vector<Masses> all_distributions(int n, int den) {
  std::vector<Masses> out;
  const int k = 1 << n;
  Masses cur(k, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == k - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, den);
  return out;
}

struct Universe {
  int n, den;
  std::vector<Masses> dists;
  Universe(int n_, int den_) : n(n_), den(den_), dists(all_distributions(n_, den_)) {}
  Universe(int n_, int den_, std::vector<Masses> d) : n(n_), den(den_), dists(std::move(d)) {}

  // One nested-set distribution per grid marginal vector. Complete for
  // formulas whose terms are literals, where only marginals matter.
  static Universe marginal(int n, int den) {
    std::vector<Masses> out;
    std::vector<int> u(n, 0);
    while (true) {
      Masses m(std::size_t{1} << n, 0);
      for (int t = 1; t <= den; ++t) {
        unsigned w = 0;
        for (int i = 0; i < n; ++i)
          if (u[i] >= t) w |= 1u << i;
        ++m[w];
      }
      out.push_back(m);
      int i = n - 1;
      while (i >= 0 && u[i] == den) u[i--] = 0;
      if (i < 0) break;
      ++u[i];
    }
    return Universe(n, den, std::move(out));
  }

  std::vector<Masses> sat(const std::vector<Formula>& phi) const {
    std::vector<Masses> out;
    for (const auto& m : dists)
      if (eval_all(m, den, phi)) out.push_back(m);
    return out;
  }
  bool consistent(const std::vector<Formula>& phi) const {
    return std::any_of(dists.begin(), dists.end(), [&](const Masses& m) { return eval_all(m, den, phi); });
  }
  bool entails(const std::vector<Formula>& phi, const Formula& psi) const {
    for (const auto& m : dists)
      if (eval_all(m, den, phi) && !eval(m, den, psi)) return false;
    return true;
  }
  // achievable marginal numerators of one argument
  std::set<int> range(const std::vector<Formula>& phi, int arg) const {
    std::set<int> out;
    for (const auto& m : dists)
      if (eval_all(m, den, phi)) out.insert(marginal(m, arg));
    return out;
  }
  static int marginal(const Masses& m, int arg) {
    int s = 0;
    for (unsigned w = 0; w < m.size(); ++w)
      if ((w >> arg) & 1u) s += m[w];
    return s;
  }
};

inline Formula eq(int arg, int num, int den) {
  return Formula::simple(Term::argument(arg), epigraph::Comparator::Eq, epigraph::ratio(num, den));
}

// exact combinations over F as (arg, numerator) lists, lexicographic
inline std::vector<std::vector<std::pair<int, int>>> combos(const std::vector<int>& F, int den) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == F.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= den; ++v) {
      cur.emplace_back(F[i], v);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::vector<Formula> with(std::vector<Formula> base, const std::vector<std::pair<int, int>>& cc, int den,
                                 int skip = -1) {
  for (auto [a, v] : cc)
    if (a != skip) base.push_back(eq(a, v, den));
  return base;
}

// Partial / full coverage of a by F over the 1/den grid.
inline bool covered(const Universe& u, const std::vector<Formula>& C, int a, const std::vector<int>& F, bool full) {
  bool any = false;
  for (const auto& cc : combos(F, u.den)) {
    auto phi = with(C, cc, u.den);
    auto r = u.range(phi, a);
    if (r.empty()) continue;
    bool restricted = static_cast<int>(r.size()) < u.den + 1;
    if (full && !restricted) return false;
    any = any || restricted;
  }
  return any;
}

// Plain or strong effectiveness of (a,b) w.r.t. F against the formula set C.
inline bool effective(const Universe& u, const std::vector<Formula>& C, int a, int b, const std::vector<int>& F,
                      bool strong) {
  bool any = false;
  for (const auto& cc : combos(F, u.den)) {
    auto phi = with(C, cc, u.den);
    auto r1 = u.range(phi, b);
    if (r1.empty()) continue;
    bool flip = false;
    for (int y = 0; y <= u.den && !flip; ++y) {
      auto psi = with(C, cc, u.den, a);
      psi.push_back(eq(a, y, u.den));
      auto r2 = u.range(psi, b);
      if (r2.empty()) continue;
      flip = r1 != r2;
    }
    if (strong && !flip) return false;
    any = any || flip;
  }
  return any;
}

struct Relation {
  bool semi = false, attacking = false, supporting = false;
  bool all_consistent = true, some_leq = false, some_geq = false;
};

// Relation type of (a,b) w.r.t. (Z,F), straight from the definitions.
inline Relation relation(const Universe& u, const std::vector<Formula>& Z, int a, int b, const std::vector<int>& F) {
  Relation r;
  r.semi = effective(u, Z, a, b, F, false);
  const int half = u.den / 2;  // den is even here
  bool att = true, sup = true;
  Formula believed = Formula::simple(Term::argument(a), epigraph::Comparator::Gt, epigraph::ratio(1, 2));
  for (const auto& cc : combos(F, u.den)) {
    auto phi = with(Z, cc, u.den);
    auto psi = with(Z, cc, u.den, a);
    psi.push_back(believed);
    auto r1 = u.range(phi, b), r2 = u.range(psi, b);
    if (r1.empty() || r2.empty()) {
      r.all_consistent = false;
      continue;
    }
    bool leq1 = *r1.rbegin() <= half, geq1 = *r1.begin() >= half;
    bool leq2 = *r2.rbegin() <= half, geq2 = *r2.begin() >= half;
    r.some_leq = r.some_leq || leq1;
    r.some_geq = r.some_geq || geq1;
    if (leq1 && !leq2) att = false;
    if (geq1 && !geq2) sup = false;
  }
  r.attacking = r.semi && att;
  r.supporting = r.semi && sup;
  return r;
}

}  // namespace oracle

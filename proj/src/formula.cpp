#include "epigraph/formula.hpp"

#include <algorithm>

namespace epigraph {

Formula Formula::simple(Term t, Comparator c, Rational x) {
  epigraph::Atom a;
  a.lhs.terms.push_back(std::move(t));
  a.cmp = c;
  a.rhs = std::move(x);
  return make_atom(std::move(a));
}

Formula Formula::negation(Formula f) { return Formula{Kind::Not, std::nullopt, {std::move(f)}}; }
Formula Formula::conjunction(Formula a, Formula b) { return Formula{Kind::And, std::nullopt, {std::move(a), std::move(b)}}; }
Formula Formula::disjunction(Formula a, Formula b) { return Formula{Kind::Or, std::nullopt, {std::move(a), std::move(b)}}; }
Formula Formula::implication(Formula a, Formula b) {
  return Formula{Kind::Implies, std::nullopt, {std::move(a), std::move(b)}};
}
Formula Formula::biconditional(Formula a, Formula b) { return Formula{Kind::Iff, std::nullopt, {std::move(a), std::move(b)}}; }

Formula conjoin(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::top();
  Formula f = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) f = Formula::conjunction(std::move(f), fs[i]);
  return f;
}

Formula disjoin(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::bottom();
  Formula f = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) f = Formula::disjunction(std::move(f), fs[i]);
  return f;
}

namespace {

template <class F>
void visit_atoms(const Formula& f, F&& fn) {
  if (f.kind == Formula::Kind::Atom) fn(*f.atom);
  for (const auto& c : f.children) visit_atoms(c, fn);
}

}  // namespace

std::set<int> formula_args(const Formula& f) {
  std::set<int> out;
  visit_atoms(f, [&](const Atom& a) {
    for (const auto& t : a.lhs.terms) {
      auto s = term_args(t);
      out.insert(s.begin(), s.end());
    }
  });
  return out;
}

std::set<int> formula_args(std::span<const Formula> fs) {
  std::set<int> out;
  for (const auto& f : fs) {
    auto s = formula_args(f);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::vector<Term> formula_terms(const Formula& f) {
  std::vector<Term> out;
  visit_atoms(f, [&](const Atom& a) {
    for (const auto& t : a.lhs.terms)
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  });
  return out;
}

std::set<Rational> formula_numbers(const Formula& f) {
  std::set<Rational> out;
  visit_atoms(f, [&](const Atom& a) { out.insert(a.rhs); });
  return out;
}

std::set<Rational> formula_numbers(std::span<const Formula> fs) {
  std::set<Rational> out;
  for (const auto& f : fs) {
    auto s = formula_numbers(f);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::vector<const Atom*> formula_atoms(const Formula& f) {
  std::vector<const Atom*> out;
  visit_atoms(f, [&](const Atom& a) { out.push_back(&a); });
  return out;
}

int max_arg(const Formula& f) {
  auto s = formula_args(f);
  return s.empty() ? -1 : *s.rbegin();
}

std::optional<SimpleAtom> as_simple(const Formula& f) {
  if (f.kind != Formula::Kind::Atom || f.atom->lhs.terms.size() != 1) return std::nullopt;
  const Term& t = f.atom->lhs.terms[0];
  if (t.kind != Term::Kind::Arg) return std::nullopt;
  return SimpleAtom{t.arg, f.atom->cmp, f.atom->rhs};
}

std::string to_string(const Atom& a, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < a.lhs.terms.size(); ++i) {
    if (i) {
      out += ' ';
      out += symbol(a.lhs.ops[i - 1]);
      out += ' ';
    }
    out += "p(" + to_string(a.lhs.terms[i], names) + ")";
  }
  out += ' ';
  out += symbol(a.cmp);
  out += ' ';
  out += to_string(a.rhs);
  return out;
}

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    default: return 6;
  }
}

void print(const Formula& f, std::span<const std::string> names, std::string& out) {
  using K = Formula::Kind;
  auto child = [&](const Formula& c, bool paren) {
    if (paren) out += '(';
    print(c, names, out);
    if (paren) out += ')';
  };
  switch (f.kind) {
    case K::Top: out += "#t"; return;
    case K::Bottom: out += "#f"; return;
    case K::Atom: out += to_string(*f.atom, names); return;
    case K::Not:
      out += '!';
      child(f.children[0], precedence(f.children[0].kind) < precedence(K::Not) || f.children[0].kind == K::Atom);
      return;
    default: {
      int p = precedence(f.kind);
      child(f.children[0], precedence(f.children[0].kind) < p);
      switch (f.kind) {
        case K::And: out += " & "; break;
        case K::Or: out += " | "; break;
        case K::Implies: out += " -> "; break;
        default: out += " <-> "; break;
      }
      child(f.children[1], precedence(f.children[1].kind) <= p);
    }
  }
}

}  // namespace

std::string to_string(const Formula& f, std::span<const std::string> names) {
  std::string out;
  print(f, names, out);
  return out;
}

}  // namespace epigraph

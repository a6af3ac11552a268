#include "epigraph/term.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "epigraph/rational.hpp"

namespace epigraph {

WorldSet::WorldSet(int n) : n_(n), words_(((std::size_t{1} << n) + 63) / 64, 0) {
  if (n < 0 || n > 24) throw PreconditionError("world set arity out of range: " + std::to_string(n));
}

std::size_t WorldSet::size() const {
  std::size_t s = 0;
  for (auto w : words_) s += std::popcount(w);
  return s;
}

bool WorldSet::subset_of(const WorldSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::vector<World> WorldSet::to_vector() const {
  std::vector<World> out;
  for (World w = 0; w < universe(); ++w)
    if (contains(w)) out.push_back(w);
  return out;
}

WorldSet WorldSet::operator&(const WorldSet& o) const {
  WorldSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

WorldSet WorldSet::operator|(const WorldSet& o) const {
  WorldSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

WorldSet WorldSet::operator~() const {
  WorldSet r = *this;
  for (auto& w : r.words_) w = ~w;
  if (universe() < 64) r.words_[0] &= (std::uint64_t{1} << universe()) - 1;
  return r;
}

Term Term::negation(Term t) { return Term{Kind::Not, -1, {std::move(t)}}; }
Term Term::conjunction(Term a, Term b) { return Term{Kind::And, -1, {std::move(a), std::move(b)}}; }
Term Term::disjunction(Term a, Term b) { return Term{Kind::Or, -1, {std::move(a), std::move(b)}}; }
Term Term::implication(Term a, Term b) { return Term{Kind::Implies, -1, {std::move(a), std::move(b)}}; }

bool Term::operator<(const Term& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (arg != o.arg) return arg < o.arg;
  return std::lexicographical_compare(children.begin(), children.end(), o.children.begin(), o.children.end());
}

bool evaluate(const Term& t, World w) {
  switch (t.kind) {
    case Term::Kind::Top: return true;
    case Term::Kind::Bottom: return false;
    case Term::Kind::Arg: return (w >> t.arg) & 1;
    case Term::Kind::Not: return !evaluate(t.children[0], w);
    case Term::Kind::And: return evaluate(t.children[0], w) && evaluate(t.children[1], w);
    case Term::Kind::Or: return evaluate(t.children[0], w) || evaluate(t.children[1], w);
    case Term::Kind::Implies: return !evaluate(t.children[0], w) || evaluate(t.children[1], w);
  }
  return false;
}

WorldSet term_models(const Term& t, int n) {
  if (max_arg(t) >= n) throw PreconditionError("term mentions argument outside the universe");
  WorldSet s(n);
  for (World w = 0; w < s.universe(); ++w)
    if (evaluate(t, w)) s.insert(w);
  return s;
}

namespace {

// Truth table over the arguments the two terms mention, independent of n.
template <class F>
bool for_all_local_worlds(const Term& a, const Term& b, F&& f) {
  auto args = term_args(a);
  for (int x : term_args(b)) args.insert(x);
  std::vector<int> v(args.begin(), args.end());
  if (v.size() > 24) throw LimitError("too many arguments for a truth table");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << v.size()); ++m) {
    World w = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if ((m >> i) & 1) w |= World{1} << v[i];
    if (!f(w)) return false;
  }
  return true;
}

void collect_args(const Term& t, std::set<int>& out) {
  if (t.kind == Term::Kind::Arg) out.insert(t.arg);
  for (const auto& c : t.children) collect_args(c, out);
}

void count_args(const Term& t, std::map<int, int>& out) {
  if (t.kind == Term::Kind::Arg) ++out[t.arg];
  for (const auto& c : t.children) count_args(c, out);
}

}  // namespace

bool prop_entails(const Term& a, const Term& b, int n) {
  if (std::max(max_arg(a), max_arg(b)) >= n) throw PreconditionError("term mentions argument outside the universe");
  return for_all_local_worlds(a, b, [&](World w) { return !evaluate(a, w) || evaluate(b, w); });
}

bool prop_equivalent(const Term& a, const Term& b, int n) { return prop_entails(a, b, n) && prop_entails(b, a, n); }

std::set<int> term_args(const Term& t) {
  std::set<int> out;
  collect_args(t, out);
  return out;
}

int max_arg(const Term& t) {
  auto s = term_args(t);
  return s.empty() ? -1 : *s.rbegin();
}

Term complete_term(World w, int n) {
  if (n == 0) return Term::top();
  auto lit = [&](int i) { return (w >> i) & 1 ? Term::argument(i) : Term::negation(Term::argument(i)); };
  Term t = lit(0);
  for (int i = 1; i < n; ++i) t = Term::conjunction(std::move(t), lit(i));
  return t;
}

std::vector<Term> argument_complete_terms(int n) {
  std::vector<Term> out;
  for (World w = 0; w < (World{1} << n); ++w) out.push_back(complete_term(w, n));
  return out;
}

namespace {

Term nnf(const Term& t, bool neg) {
  using K = Term::Kind;
  switch (t.kind) {
    case K::Top: return neg ? Term::bottom() : Term::top();
    case K::Bottom: return neg ? Term::top() : Term::bottom();
    case K::Arg: return neg ? Term::negation(t) : t;
    case K::Not: return nnf(t.children[0], !neg);
    case K::And:
      return neg ? Term::disjunction(nnf(t.children[0], true), nnf(t.children[1], true))
                 : Term::conjunction(nnf(t.children[0], false), nnf(t.children[1], false));
    case K::Or:
      return neg ? Term::conjunction(nnf(t.children[0], true), nnf(t.children[1], true))
                 : Term::disjunction(nnf(t.children[0], false), nnf(t.children[1], false));
    case K::Implies:
      return neg ? Term::conjunction(nnf(t.children[0], false), nnf(t.children[1], true))
                 : Term::disjunction(nnf(t.children[0], true), nnf(t.children[1], false));
  }
  return t;
}

}  // namespace

Term to_nnf(const Term& t) { return nnf(t, false); }
Term negated_nnf(const Term& t) { return nnf(t, true); }

bool is_literal(const Term& t) {
  return t.kind == Term::Kind::Arg || (t.kind == Term::Kind::Not && t.children[0].kind == Term::Kind::Arg);
}

bool read_once(const Term& t) {
  std::map<int, int> counts;
  count_args(t, counts);
  return std::all_of(counts.begin(), counts.end(), [](auto& kv) { return kv.second == 1; });
}

Term blake_canonical_form(const Term& t, int n) {
  if (max_arg(t) >= n) throw PreconditionError("term mentions argument outside the universe");
  auto argset = term_args(t);
  std::vector<int> vars(argset.begin(), argset.end());
  const std::size_t k = vars.size();
  if (k > 16) throw LimitError("too many arguments for prime implicant expansion");
  auto world_of = [&](std::uint32_t m) {
    World w = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((m >> i) & 1) w |= World{1} << vars[i];
    return w;
  };
  // cube: (care mask, value bits) over the local variables
  using Cube = std::pair<std::uint32_t, std::uint32_t>;
  std::set<Cube> current;
  const std::uint32_t full = k == 32 ? ~0u : ((1u << k) - 1);
  for (std::uint32_t m = 0; m < (1u << k); ++m)
    if (evaluate(t, world_of(m))) current.insert({full, m});
  if (current.empty()) return Term::bottom();
  if (current.size() == (std::size_t{1} << k)) return Term::top();
  std::set<Cube> primes;
  while (!current.empty()) {
    std::set<Cube> next, merged;
    for (auto it = current.begin(); it != current.end(); ++it)
      for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t bit = 1u << i;
        if (!(it->first & bit)) continue;
        Cube other{it->first, it->second ^ bit};
        if (current.count(other)) {
          next.insert({it->first & ~bit, it->second & ~bit});
          merged.insert(*it);
          merged.insert(other);
        }
      }
    for (const auto& c : current)
      if (!merged.count(c)) primes.insert(c);
    current = std::move(next);
  }
  std::vector<Term> disjuncts;
  for (const auto& [care, val] : primes) {
    std::vector<Term> lits;
    for (std::size_t i = 0; i < k; ++i)
      if (care & (1u << i))
        lits.push_back(val & (1u << i) ? Term::argument(vars[i]) : Term::negation(Term::argument(vars[i])));
    Term c = lits[0];
    for (std::size_t i = 1; i < lits.size(); ++i) c = Term::conjunction(std::move(c), lits[i]);
    disjuncts.push_back(std::move(c));
  }
  std::sort(disjuncts.begin(), disjuncts.end());
  Term d = disjuncts[0];
  for (std::size_t i = 1; i < disjuncts.size(); ++i) d = Term::disjunction(std::move(d), disjuncts[i]);
  return d;
}

namespace {

int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::Implies: return 1;
    case Term::Kind::Or: return 2;
    case Term::Kind::And: return 3;
    case Term::Kind::Not: return 4;
    default: return 5;
  }
}

void print(const Term& t, std::span<const std::string> names, std::string& out) {
  using K = Term::Kind;
  auto child = [&](const Term& c, bool paren) {
    if (paren) out += '(';
    print(c, names, out);
    if (paren) out += ')';
  };
  switch (t.kind) {
    case K::Top: out += "#t"; return;
    case K::Bottom: out += "#f"; return;
    case K::Arg:
      if (t.arg < 0 || static_cast<std::size_t>(t.arg) >= names.size()) throw PreconditionError("argument index without a name");
      out += names[t.arg];
      return;
    case K::Not:
      out += '!';
      child(t.children[0], precedence(t.children[0].kind) < precedence(K::Not));
      return;
    default: {
      int p = precedence(t.kind);
      child(t.children[0], precedence(t.children[0].kind) < p);
      out += t.kind == K::And ? " & " : t.kind == K::Or ? " | " : " -> ";
      child(t.children[1], precedence(t.children[1].kind) <= p);
    }
  }
}

}  // namespace

std::string to_string(const Term& t, std::span<const std::string> names) {
  std::string out;
  print(t, names, out);
  return out;
}

}  // namespace epigraph

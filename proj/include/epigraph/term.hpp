#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace epigraph {

// Worlds are subsets of arguments; argument i is bit i of the index.
using World = std::uint32_t;

// Dense bitset over the 2^n worlds of an argument universe.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(int n);

  int arity() const { return n_; }
  std::size_t universe() const { return std::size_t{1} << n_; }
  bool contains(World w) const { return (words_[w >> 6] >> (w & 63)) & 1; }
  void insert(World w) { words_[w >> 6] |= std::uint64_t{1} << (w & 63); }
  std::size_t size() const;
  bool subset_of(const WorldSet& o) const;
  std::vector<World> to_vector() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  WorldSet operator&(const WorldSet& o) const;
  WorldSet operator|(const WorldSet& o) const;
  WorldSet operator~() const;
  bool operator==(const WorldSet& o) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Term {
  enum class Kind : std::uint8_t { Top, Bottom, Arg, Not, And, Or, Implies };

  Kind kind = Kind::Top;
  int arg = -1;
  std::vector<Term> children;

  static Term top() { return Term{Kind::Top, -1, {}}; }
  static Term bottom() { return Term{Kind::Bottom, -1, {}}; }
  static Term argument(int i) { return Term{Kind::Arg, i, {}}; }
  static Term negation(Term t);
  static Term conjunction(Term a, Term b);
  static Term disjunction(Term a, Term b);
  static Term implication(Term a, Term b);

  bool operator==(const Term& o) const = default;
  bool operator<(const Term& o) const;  // structural order
};

bool evaluate(const Term& t, World w);
WorldSet term_models(const Term& t, int n);
// classical consequence over n arguments
bool prop_entails(const Term& a, const Term& b, int n);
bool prop_equivalent(const Term& a, const Term& b, int n);

std::set<int> term_args(const Term& t);
int max_arg(const Term& t);  // -1 when the term mentions no argument

// Conjunction of the literals described by world w over n arguments, left nested.
Term complete_term(World w, int n);
std::vector<Term> argument_complete_terms(int n);

Term to_nnf(const Term& t);
Term negated_nnf(const Term& t);  // nnf of !t
bool is_literal(const Term& t);
bool read_once(const Term& t);  // every argument occurs at most once
// Disjunction of all prime implicants over the mentioned arguments (Blake form).
Term blake_canonical_form(const Term& t, int n);

std::string to_string(const Term& t, std::span<const std::string> names);

}  // namespace epigraph

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epigraph/rational.hpp"

namespace epigraph {

enum class Comparator { Eq, Neq, Geq, Leq, Gt, Lt };
enum class ArithOp { Plus, Minus };

std::string_view symbol(Comparator c);
std::string_view symbol(ArithOp op);
Comparator parse_comparator(std::string_view s);  // "=", "!=", ">=", "<=", ">", "<"

template <class T>
bool holds(const T& lhs, Comparator c, const T& rhs) {
  switch (c) {
    case Comparator::Eq: return lhs == rhs;
    case Comparator::Neq: return lhs != rhs;
    case Comparator::Geq: return lhs >= rhs;
    case Comparator::Leq: return lhs <= rhs;
    case Comparator::Gt: return lhs > rhs;
    case Comparator::Lt: return lhs < rhs;
  }
  return false;
}

// Comparator whose truth set is the complement of c.
Comparator complement(Comparator c);

enum class ValueSetStatus { Invalid, Restricted, Reasonable };

struct ValueSetReport {
  ValueSetStatus status = ValueSetStatus::Invalid;
  // set when status is Invalid: x op y lands outside the set
  std::optional<Rational> x, y;
  std::optional<ArithOp> op;
};

// Checks closure under bounded addition and non-negative subtraction.
// Throws PreconditionError for an empty list or a value outside [0,1].
ValueSetReport validate_value_set(std::vector<Rational> values);

// A validated restricted value set, kept sorted.
class ValueSet {
 public:
  static ValueSet make(std::vector<Rational> values);  // throws if not restricted
  static ValueSet grid(std::int64_t denominator);      // {0, 1/D, ..., 1}
  // Comma separated values with an optional "..." continuing an arithmetic
  // progression, e.g. "0,0.1,...,1".
  static ValueSet parse(std::string_view spec);

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool reasonable() const { return values_.back() == 1; }
  bool contains(const Rational& x) const;
  std::optional<std::size_t> index_of(const Rational& x) const;
  const Rational& max() const { return values_.back(); }
  const Rational& step() const { return step_; }  // smallest positive member, 0 for {0}

  // Reasonable sets are exactly the uniform grids; this is the grid size D.
  std::int64_t denominator() const;

  std::string to_string() const;
  bool operator==(const ValueSet& o) const { return values_ == o.values_; }

 private:
  std::vector<Rational> values_;
  Rational step_;
};

std::vector<Rational> value_subset(const ValueSet& pi, const Rational& x, Comparator c);

// All tuples (v1..vk+1) over pi with v1 o1 v2 ... ok vk+1 # x, in lexicographic order.
std::vector<std::vector<Rational>> combination_set(const ValueSet& pi, const Rational& x, Comparator c,
                                                   std::span<const ArithOp> ops);

// Closed-form emptiness test for combination_set; requires x in pi.
bool combination_set_empty(const ValueSet& pi, const Rational& x, Comparator c, std::span<const ArithOp> ops);

}  // namespace epigraph

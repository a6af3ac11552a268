#include "epigraph/value_set.hpp"

#include <algorithm>
#include <functional>

namespace epigraph {

std::string_view symbol(Comparator c) {
  switch (c) {
    case Comparator::Eq: return "=";
    case Comparator::Neq: return "!=";
    case Comparator::Geq: return ">=";
    case Comparator::Leq: return "<=";
    case Comparator::Gt: return ">";
    case Comparator::Lt: return "<";
  }
  return "?";
}

std::string_view symbol(ArithOp op) { return op == ArithOp::Plus ? "+" : "-"; }

Comparator parse_comparator(std::string_view s) {
  if (s == "=" || s == "==") return Comparator::Eq;
  if (s == "!=" || s == "≠") return Comparator::Neq;
  if (s == ">=" || s == "≥") return Comparator::Geq;
  if (s == "<=" || s == "≤") return Comparator::Leq;
  if (s == ">") return Comparator::Gt;
  if (s == "<") return Comparator::Lt;
  throw ParseError("unknown comparator '" + std::string(s) + "'", 0);
}

Comparator complement(Comparator c) {
  switch (c) {
    case Comparator::Eq: return Comparator::Neq;
    case Comparator::Neq: return Comparator::Eq;
    case Comparator::Geq: return Comparator::Lt;
    case Comparator::Leq: return Comparator::Gt;
    case Comparator::Gt: return Comparator::Leq;
    case Comparator::Lt: return Comparator::Geq;
  }
  return c;
}

namespace {

void normalize(std::vector<Rational>& values) {
  if (values.empty()) throw PreconditionError("value set is empty");
  for (auto& v : values) {
    v.canonicalize();
    if (v < 0 || v > 1) throw PreconditionError("value " + epigraph::to_string(v) + " outside [0,1]");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

ValueSetReport validate_value_set(std::vector<Rational> values) {
  normalize(values);
  auto in = [&](const Rational& v) { return std::binary_search(values.begin(), values.end(), v); };
  ValueSetReport rep;
  for (const auto& x : values)
    for (const auto& y : values) {
      Rational s = x + y;
      if (s <= 1 && !in(s)) {
        rep.x = x, rep.y = y, rep.op = ArithOp::Plus;
        return rep;
      }
      Rational d = x - y;
      if (d >= 0 && !in(d)) {
        rep.x = x, rep.y = y, rep.op = ArithOp::Minus;
        return rep;
      }
    }
  rep.status = values.back() == 1 ? ValueSetStatus::Reasonable : ValueSetStatus::Restricted;
  return rep;
}

ValueSet ValueSet::make(std::vector<Rational> values) {
  normalize(values);
  auto rep = validate_value_set(values);
  if (rep.status == ValueSetStatus::Invalid)
    throw PreconditionError("not a restricted value set: " + epigraph::to_string(*rep.x) + " " +
                            std::string(symbol(*rep.op)) + " " + epigraph::to_string(*rep.y) + " is missing");
  ValueSet vs;
  vs.values_ = std::move(values);
  vs.step_ = vs.values_.size() > 1 ? vs.values_[1] : Rational(0);
  return vs;
}

ValueSet ValueSet::grid(std::int64_t denominator) {
  if (denominator < 1) throw PreconditionError("grid denominator must be positive");
  ValueSet vs;
  for (std::int64_t k = 0; k <= denominator; ++k) {
    vs.values_.push_back(ratio(k, denominator));
  }
  vs.step_ = vs.values_[1];
  return vs;
}

ValueSet ValueSet::parse(std::string_view spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '{' && ch != '}') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == "..." || parts[i] == "…") {
      if (values.size() < 2 || i + 1 >= parts.size()) throw ParseError("'...' needs two values before and one after", 0);
      Rational step = values.back() - values[values.size() - 2];
      Rational last = parse_rational(parts[i + 1]);
      if (step <= 0) throw ParseError("'...' needs an increasing progression", 0);
      for (Rational v = values.back() + step; v < last; v += step) values.push_back(v);
      continue;
    }
    values.push_back(parse_rational(parts[i]));
  }
  return make(std::move(values));
}

bool ValueSet::contains(const Rational& x) const { return std::binary_search(values_.begin(), values_.end(), x); }

std::optional<std::size_t> ValueSet::index_of(const Rational& x) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), x);
  if (it == values_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

std::int64_t ValueSet::denominator() const {
  if (!reasonable()) throw PreconditionError("value set " + to_string() + " is not reasonable");
  if (values_.size() == 1) return 1;  // unreachable: {0} is not reasonable
  return to_int64(step_.get_den());
}

std::string ValueSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += epigraph::to_string(values_[i]);
  }
  return s + "}";
}

std::vector<Rational> value_subset(const ValueSet& pi, const Rational& x, Comparator c) {
  std::vector<Rational> out;
  for (const auto& v : pi.values())
    if (holds(v, c, x)) out.push_back(v);
  return out;
}

std::vector<std::vector<Rational>> combination_set(const ValueSet& pi, const Rational& x, Comparator c,
                                                   std::span<const ArithOp> ops) {
  const auto& vals = pi.values();
  const std::size_t k = ops.size() + 1;
  const Rational& mx = pi.max();
  // lo/hi[i]: range of the partial sum contributed by positions i..k-1
  std::vector<Rational> lo(k + 1, Rational(0)), hi(k + 1, Rational(0));
  for (std::size_t i = k; i-- > 0;) {
    bool plus = i == 0 || ops[i - 1] == ArithOp::Plus;
    lo[i] = lo[i + 1] + (plus ? Rational(0) : Rational(-mx));
    hi[i] = hi[i + 1] + (plus ? mx : Rational(0));
  }
  auto may_hold = [&](const Rational& a, const Rational& b) {
    // interval test, only used for pruning
    switch (c) {
      case Comparator::Eq: return a <= x && x <= b;
      case Comparator::Neq: return !(a == b && a == x);
      case Comparator::Geq: return b >= x;
      case Comparator::Leq: return a <= x;
      case Comparator::Gt: return b > x;
      case Comparator::Lt: return a < x;
    }
    return true;
  };
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> tuple(k);
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& acc) {
    if (i == k) {
      if (holds(acc, c, x)) out.push_back(tuple);
      return;
    }
    if (!may_hold(acc + lo[i], acc + hi[i])) return;
    bool plus = i == 0 || ops[i - 1] == ArithOp::Plus;
    for (const auto& v : vals) {
      tuple[i] = v;
      rec(i + 1, plus ? Rational(acc + v) : Rational(acc - v));
    }
  };
  rec(0, Rational(0));
  return out;
}

bool combination_set_empty(const ValueSet& pi, const Rational& x, Comparator c, std::span<const ArithOp> ops) {
  if (!pi.contains(x)) throw PreconditionError("threshold " + to_string(x) + " not in " + pi.to_string());
  const bool zero_only = pi.size() == 1;
  const bool at_max = x == pi.max();
  const bool at_zero = x == 0;
  if (ops.empty()) {
    return (zero_only && c == Comparator::Neq) || (c == Comparator::Gt && at_max) || (c == Comparator::Lt && at_zero);
  }
  const bool has_plus = std::find(ops.begin(), ops.end(), ArithOp::Plus) != ops.end();
  const bool has_minus = std::find(ops.begin(), ops.end(), ArithOp::Minus) != ops.end();
  return (c == Comparator::Gt && at_max && !has_plus) || (c == Comparator::Gt && zero_only) ||
         (c == Comparator::Lt && at_zero && !has_minus) || (c == Comparator::Lt && zero_only) ||
         (c == Comparator::Neq && zero_only);
}

}  // namespace epigraph

#include "epigraph/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "epigraph/entailment.hpp"

namespace epigraph {

Ordering parse_ordering(std::string_view s) {
  if (s == "A" || s == "acceptance") return Ordering::Acceptance;
  if (s == "R" || s == "rejection") return Ordering::Rejection;
  if (s == "U" || s == "undecided") return Ordering::Undecided;
  if (s == "I" || s == "information") return Ordering::Information;
  if (s == "B" || s == "belief") return Ordering::Belief;
  throw ParseError("unknown ordering '" + std::string(s) + "'", 0);
}

std::string ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Acceptance: return "A";
    case Ordering::Rejection: return "R";
    case Ordering::Undecided: return "U";
    case Ordering::Information: return "I";
    case Ordering::Belief: return "B";
  }
  return "?";
}

std::string comparison_name(Comparison c) {
  switch (c) {
    case Comparison::Equivalent: return "equivalent";
    case Comparison::Less: return "less-or-equal";
    case Comparison::Greater: return "greater-or-equal";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

double entropy(const BeliefDistribution& p) {
  double h = 0, den = p.denominator();
  for (auto m : p.numerators())
    if (m > 0) {
      double x = m / den;
      h -= x * std::log2(x);
    }
  return h;
}

namespace {

// bit sets of believed / disbelieved / undecided arguments
struct Status {
  std::vector<bool> acc, rej, und;
};

Status status(const BeliefDistribution& p) {
  Status s;
  auto m = p.marginal_numerators();
  const std::int64_t d = p.denominator();
  for (auto x : m) {
    s.acc.push_back(2 * x > d);
    s.rej.push_back(2 * x < d);
    s.und.push_back(2 * x == d);
  }
  return s;
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

bool leq_status(const Status& p, const Status& q, Ordering ord) {
  switch (ord) {
    case Ordering::Acceptance: return subset(p.acc, q.acc);
    case Ordering::Rejection: return subset(p.rej, q.rej);
    case Ordering::Undecided: return subset(p.und, q.und);
    case Ordering::Information: return subset(p.acc, q.acc) && subset(p.rej, q.rej);
    case Ordering::Belief: break;
  }
  return false;
}

}  // namespace

bool leq(const BeliefDistribution& p, const BeliefDistribution& q, Ordering ord) {
  if (p.arity() != q.arity()) throw PreconditionError("distributions over different argument universes");
  // higher belief means lower entropy
  if (ord == Ordering::Belief) return entropy(q) <= entropy(p) + kEntropyTolerance;
  return leq_status(status(p), status(q), ord);
}

Comparison compare(const BeliefDistribution& p, const BeliefDistribution& q, Ordering ord) {
  bool a = leq(p, q, ord), b = leq(q, p, ord);
  if (a && b) return Comparison::Equivalent;
  if (a) return Comparison::Less;
  if (b) return Comparison::Greater;
  return Comparison::Incomparable;
}

DistributionSet select_extreme(const DistributionSet& R, Ordering ord, Direction dir) {
  const std::size_t n = R.size();
  std::vector<Status> st;
  std::vector<double> h;
  for (const auto& p : R) {
    if (p.arity() != R.front().arity()) throw PreconditionError("distributions over different argument universes");
    if (ord == Ordering::Belief) h.push_back(entropy(p));
    else st.push_back(status(p));
  }
  auto le = [&](std::size_t i, std::size_t j) {
    if (ord == Ordering::Belief) return h[j] <= h[i] + kEntropyTolerance;
    return leq_status(st[i], st[j], ord);
  };
  DistributionSet out;
  for (std::size_t i = 0; i < n; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < n && !dominated; ++j) {
      if (i == j) continue;
      // strictly above (max) or strictly below (min)
      dominated = dir == Direction::Max ? (le(i, j) && !le(j, i)) : (le(j, i) && !le(i, j));
    }
    if (!dominated) out.push_back(R[i]);
  }
  return out;
}

DistributionProperties distribution_properties(const BeliefDistribution& p) {
  DistributionProperties d;
  auto m = p.marginal_numerators();
  const std::int64_t den = p.denominator();
  d.minimal = d.maximal = d.neutral = d.ternary = d.non_neutral = true;
  std::set<std::int64_t> vals;
  for (auto x : m) {
    vals.insert(x);
    if (x != 0) d.minimal = false;
    if (x != den) d.maximal = false;
    if (2 * x != den) d.neutral = false;
    else d.non_neutral = false;
    if (x != 0 && x != den && 2 * x != den) d.ternary = false;
  }
  d.values = vals.size();
  return d;
}

Filter parse_filter(std::string_view s) {
  if (s == "minimal") return Filter::Minimal;
  if (s == "maximal") return Filter::Maximal;
  if (s == "neutral") return Filter::Neutral;
  if (s == "ternary") return Filter::Ternary;
  if (s == "non-neutral") return Filter::NonNeutral;
  throw ParseError("unknown filter '" + std::string(s) + "'", 0);
}

DistributionSet apply_filter(const DistributionSet& R, Filter f) {
  DistributionSet out;
  for (const auto& p : R) {
    auto d = distribution_properties(p);
    bool keep = f == Filter::Minimal   ? d.minimal
                : f == Filter::Maximal ? d.maximal
                : f == Filter::Neutral ? d.neutral
                : f == Filter::Ternary ? d.ternary
                                       : d.non_neutral;
    if (keep) out.push_back(p);
  }
  return out;
}

DistributionSet satisfaction_semantics(const EpistemicGraph& g, const ValueSet& pi, const EngineOptions& opts) {
  return sat_restricted(g.constraints, g.arity(), pi, opts);
}

std::vector<Pattern> marginal_patterns(const DistributionSet& R) {
  std::map<std::vector<Rational>, std::size_t> counts;
  for (const auto& p : R) ++counts[p.marginals()];
  std::vector<Pattern> out;
  for (const auto& [m, c] : counts) {
    mpz_class l = 1;
    for (const auto& x : m) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    const std::int64_t den = to_int64(l);
    std::vector<std::int32_t> units;
    for (const auto& x : m) units.push_back(static_cast<std::int32_t>(scaled_units(x, den)));
    out.push_back({m, BeliefDistribution::comonotone(units, static_cast<std::int32_t>(den)), c});
  }
  return out;
}

}  // namespace epigraph

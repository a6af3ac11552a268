#include "epigraph/distribution.hpp"

#include <algorithm>
#include <numeric>

#include "epigraph/kernels.hpp"

namespace epigraph {

BeliefDistribution::BeliefDistribution(int n, std::vector<std::int32_t> numerators, std::int32_t denominator)
    : n_(n), num_(std::move(numerators)), den_(denominator) {
  if (n < 0 || n > 24) throw PreconditionError("distribution arity out of range");
  if (num_.size() != (std::size_t{1} << n)) throw PreconditionError("distribution needs 2^n masses");
  if (den_ <= 0) throw PreconditionError("distribution denominator must be positive");
  std::int64_t total = 0;
  std::int32_t g = den_;
  for (auto m : num_) {
    if (m < 0) throw PreconditionError("negative mass");
    total += m;
    g = std::gcd(g, m);
  }
  if (total != den_) throw PreconditionError("masses do not sum to 1");
  if (g > 1) {
    for (auto& m : num_) m /= g;
    den_ /= g;
  }
}

BeliefDistribution BeliefDistribution::from_masses(int n, const std::vector<Rational>& masses) {
  mpz_class l = 1;
  for (const auto& m : masses) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.get_den_mpz_t());
  if (!l.fits_sint_p()) throw PreconditionError("mass denominators too large");
  std::vector<std::int32_t> num;
  for (const auto& m : masses) {
    mpz_class v = m.get_num() * (l / m.get_den());
    if (!v.fits_sint_p()) throw PreconditionError("mass numerator too large");
    num.push_back(static_cast<std::int32_t>(v.get_si()));
  }
  return BeliefDistribution(n, std::move(num), static_cast<std::int32_t>(l.get_si()));
}

BeliefDistribution BeliefDistribution::point(int n, World w) {
  std::vector<std::int32_t> num(std::size_t{1} << n, 0);
  num.at(w) = 1;
  return BeliefDistribution(n, std::move(num), 1);
}

BeliefDistribution BeliefDistribution::comonotone(const std::vector<std::int32_t>& m, std::int32_t den) {
  const int n = static_cast<int>(m.size());
  std::vector<std::int32_t> levels(m.begin(), m.end());
  levels.push_back(0);
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<std::int32_t> num(std::size_t{1} << n, 0);
  std::int32_t above = den;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    World w = 0;
    for (int i = 0; i < n; ++i)
      if (m[i] > levels[j]) w |= World{1} << i;
    // arguments strictly above level j take the gap between this level and the previous one
    num[w] += above - levels[j];
    above = levels[j];
  }
  return BeliefDistribution(n, std::move(num), den);
}

Rational BeliefDistribution::mass(World w) const { return ratio(num_.at(w), den_); }

std::vector<std::int64_t> BeliefDistribution::marginal_numerators() const {
  std::vector<std::int64_t> out(n_);
  kernels::marginals(num_.data(), n_, out.data());
  return out;
}

Rational BeliefDistribution::marginal(int arg) const {
  if (arg < 0 || arg >= n_) throw PreconditionError("argument out of range");
  return ratio(marginal_numerators()[arg], den_);
}

std::vector<Rational> BeliefDistribution::marginals() const {
  std::vector<Rational> out;
  for (auto v : marginal_numerators()) out.push_back(ratio(v, den_));
  return out;
}

std::strong_ordering BeliefDistribution::operator<=>(const BeliefDistribution& o) const {
  if (n_ != o.n_) return n_ <=> o.n_;
  for (std::size_t w = 0; w < num_.size(); ++w) {
    std::int64_t a = std::int64_t{num_[w]} * o.den_, b = std::int64_t{o.num_[w]} * den_;
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

void canonicalize(DistributionSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

namespace {

std::int64_t term_numerator(const BeliefDistribution& p, const Term& t) {
  WorldSet models = term_models(t, p.arity());
  return kernels::masked_sum(p.numerators().data(), p.world_count(), models.words().data());
}

std::int64_t opformula_numerator(const BeliefDistribution& p, const OperationalFormula& f) {
  std::int64_t v = term_numerator(p, f.terms[0]);
  for (std::size_t i = 1; i < f.terms.size(); ++i) {
    std::int64_t t = term_numerator(p, f.terms[i]);
    v += f.ops[i - 1] == ArithOp::Plus ? t : -t;
  }
  return v;
}

}  // namespace

Rational prob_of_term(const BeliefDistribution& p, const Term& t) {
  return ratio(term_numerator(p, t), p.denominator());
}

Rational eval_opformula(const BeliefDistribution& p, const OperationalFormula& f) {
  return ratio(opformula_numerator(p, f), p.denominator());
}

bool eval_formula(const BeliefDistribution& p, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Top: return true;
    case K::Bottom: return false;
    case K::Atom: return holds(eval_opformula(p, f.atom->lhs), f.atom->cmp, f.atom->rhs);
    case K::Not: return !eval_formula(p, f.children[0]);
    case K::And: return eval_formula(p, f.children[0]) && eval_formula(p, f.children[1]);
    case K::Or: return eval_formula(p, f.children[0]) || eval_formula(p, f.children[1]);
    case K::Implies: return !eval_formula(p, f.children[0]) || eval_formula(p, f.children[1]);
    case K::Iff: return eval_formula(p, f.children[0]) == eval_formula(p, f.children[1]);
  }
  return false;
}

bool is_restricted(const BeliefDistribution& p, const ValueSet& pi) {
  for (World w = 0; w < p.world_count(); ++w)
    if (!pi.contains(p.mass(w))) return false;
  return true;
}

Formula associated_formula(const BeliefDistribution& p) {
  std::vector<Formula> parts;
  for (World w = 0; w < p.world_count(); ++w) {
    parts.push_back(Formula::simple(complete_term(w, p.arity()), Comparator::Eq, p.mass(w)));
  }
  return conjoin(parts);
}

}  // namespace epigraph

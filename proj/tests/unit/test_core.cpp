#include <doctest.h>

#include <random>

#include "epigraph/graph.hpp"
#include "epigraph/parser.hpp"
#include "epigraph/value_set.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace epigraph;
using testutil::q;
using testutil::qs;

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("0.25") == ratio(1, 4));
  CHECK(parse_rational(".5") == ratio(1, 2));
  CHECK(parse_rational("3/4") == ratio(3, 4));
  CHECK(parse_rational("1") == 1);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK(to_string(ratio(1, 4)) == "0.25");
  CHECK(to_string(ratio(1, 3)) == "1/3");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(scaled_units(ratio(3, 4), 8) == 6);
}

TEST_CASE("value sets") {
  SUBCASE("grid and parse") {
    CHECK(ValueSet::grid(4).values() == qs({"0", "0.25", "0.5", "0.75", "1"}));
    CHECK(ValueSet::parse("0,0.1,...,1") == ValueSet::grid(10));
    CHECK(ValueSet::parse("0,0.5,1") == ValueSet::grid(2));
    CHECK(ValueSet::grid(10).denominator() == 10);
    CHECK(ValueSet::grid(4).to_string() == "{0,0.25,0.5,0.75,1}");
  }
  SUBCASE("validation") {
    CHECK(validate_value_set(qs({"0", "0.5", "1"})).status == ValueSetStatus::Reasonable);
    CHECK(validate_value_set(qs({"0"})).status == ValueSetStatus::Restricted);
    CHECK(validate_value_set(qs({"0", "0.9"})).status == ValueSetStatus::Restricted);  // 0.9 + 0.9 overshoots 1
    CHECK(validate_value_set(qs({"0", "0.25", "0.5"})).status == ValueSetStatus::Invalid);  // 0.25 + 0.5 missing
    auto bad = validate_value_set(qs({"0", "0.3", "1"}));
    CHECK(bad.status == ValueSetStatus::Invalid);
    CHECK(bad.x.has_value());
    CHECK(validate_value_set(qs({"0.5", "1"})).status == ValueSetStatus::Invalid);  // 0.5 - 0.5 = 0 missing
    CHECK_THROWS_AS(validate_value_set({}), PreconditionError);
    CHECK_THROWS_AS(validate_value_set(qs({"2"})), PreconditionError);
    CHECK_THROWS(ValueSet::make(qs({"0", "0.3", "1"})));
  }
}

TEST_CASE("value_subset on quarters at 0.25") {
  ValueSet pi = ValueSet::grid(4);
  Rational x(1, 4);
  CHECK(value_subset(pi, x, Comparator::Gt) == qs({"0.5", "0.75", "1"}));
  CHECK(value_subset(pi, x, Comparator::Lt) == qs({"0"}));
  CHECK(value_subset(pi, x, Comparator::Geq) == qs({"0.25", "0.5", "0.75", "1"}));
  CHECK(value_subset(pi, x, Comparator::Leq) == qs({"0", "0.25"}));
  CHECK(value_subset(pi, x, Comparator::Neq) == qs({"0", "0.5", "0.75", "1"}));
  CHECK(value_subset(pi, x, Comparator::Eq) == qs({"0.25"}));
}

TEST_CASE("combination_set for halves with (+,-) = 1") {
  ValueSet pi = ValueSet::grid(2);
  std::vector<ArithOp> ops{ArithOp::Plus, ArithOp::Minus};
  auto got = combination_set(pi, Rational(1), Comparator::Eq, ops);
  std::vector<std::vector<Rational>> want{qs({"0", "1", "0"}),     qs({"0.5", "0.5", "0"}), qs({"0.5", "1", "0.5"}),
                                          qs({"1", "0", "0"}),     qs({"1", "0.5", "0.5"}), qs({"1", "1", "1"})};
  CHECK(got == want);
}

namespace {

// brute-force: does some tuple over pi satisfy v1 o1 ... vk+1 # x
bool brute_nonempty(const std::vector<Rational>& pi, const Rational& x, Comparator c, const std::vector<ArithOp>& ops) {
  std::vector<std::size_t> idx(ops.size() + 1, 0);
  while (true) {
    Rational v = pi[idx[0]];
    for (std::size_t i = 0; i < ops.size(); ++i)
      v = ops[i] == ArithOp::Plus ? Rational(v + pi[idx[i + 1]]) : Rational(v - pi[idx[i + 1]]);
    if (oracle::compare(v, c, x)) return true;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == pi.size()) idx[i++] = 0;
    if (i == idx.size()) return false;
  }
}

}  // namespace

TEST_CASE("emptiness classifier agrees with brute force on small value sets") {
  std::vector<Rational> pool;
  for (int d = 1; d <= 6; ++d)
    for (int k = 0; k <= d; ++k) pool.push_back(ratio(k, d));
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  REQUIRE(pool.size() == 13);

  std::vector<std::vector<Rational>> sets;
  for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
    if (std::popcount(mask) > 5) continue;
    std::vector<Rational> s;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((mask >> i) & 1u) s.push_back(pool[i]);
    if (validate_value_set(s).status != ValueSetStatus::Invalid) sets.push_back(s);
  }
  CHECK(sets.size() > 10);

  std::vector<std::vector<ArithOp>> op_lists{{}};
  for (int k = 1; k <= 3; ++k)
    for (unsigned m = 0; m < (1u << k); ++m) {
      std::vector<ArithOp> ops;
      for (int i = 0; i < k; ++i) ops.push_back((m >> i) & 1u ? ArithOp::Minus : ArithOp::Plus);
      op_lists.push_back(ops);
    }
  const Comparator cmps[] = {Comparator::Eq, Comparator::Neq, Comparator::Geq,
                             Comparator::Leq, Comparator::Gt,  Comparator::Lt};
  std::size_t cases = 0, mismatches = 0;
  for (const auto& s : sets) {
    ValueSet pi = ValueSet::make(s);
    for (const auto& x : s)
      for (Comparator c : cmps)
        for (const auto& ops : op_lists) {
          bool empty = combination_set_empty(pi, x, c, ops);
          bool brute = !brute_nonempty(s, x, c, ops);
          ++cases;
          if (empty != brute) ++mismatches;
          // the enumeration agrees too
          if (ops.size() <= 2) CHECK(combination_set(pi, x, c, ops).empty() == brute);
        }
  }
  CHECK(cases > 1000);
  CHECK(mismatches == 0);
}

TEST_CASE("parser") {
  auto names = testutil::letters(3);
  SUBCASE("round trip") {
    for (const char* text : {"p(A) > 0.5", "p(A & !B) + p(C) - p(A | B) <= 0.75", "!(p(A) > 0.9) & p(B) = 1",
                             "(p(A) > 0.5 -> p(B) < 0.5) <-> p(C) != 0.5", "p(A -> B) >= 0.25"}) {
      Formula a = parse_formula(text, names);
      Formula b = parse_formula(to_string(a, names), names);
      CHECK(a == b);
    }
  }
  SUBCASE("structure") {
    Formula a = parse_formula("p(A) + p(!B) <= 0.75", names);
    REQUIRE(a.kind == Formula::Kind::Atom);
    CHECK(a.atom->lhs.terms.size() == 2);
    CHECK(a.atom->lhs.ops == std::vector<ArithOp>{ArithOp::Plus});
    CHECK(a.atom->rhs == ratio(3, 4));
    CHECK(formula_args(a) == std::set<int>{0, 1});
    auto s = as_simple(parse_formula("p(C) != 0.5", names));
    REQUIRE(s.has_value());
    CHECK(s->arg == 2);
    CHECK(s->cmp == Comparator::Neq);
  }
  SUBCASE("errors carry offsets") {
    CHECK_THROWS_AS(parse_formula("p(Z) > 0.5", names), ParseError);
    CHECK_THROWS_AS(parse_formula("p(A) >", names), ParseError);
    CHECK_THROWS_AS(parse_formula("p(A) > 2", names), Error);
    try {
      parse_formula("p(A) > 0.5 & & p(B) < 1", names);
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.offset() > 5);
    }
  }
  SUBCASE("unicode connectives") {
    CHECK(parse_formula("p(A ∧ ¬B) ≥ 0.5", names) == parse_formula("p(A & !B) >= 0.5", names));
  }
}

TEST_CASE("term transformations preserve models") {
  std::mt19937 rng(7);
  std::function<Term(int)> gen = [&](int depth) -> Term {
    int r = std::uniform_int_distribution<int>(0, depth > 0 ? 5 : 1)(rng);
    switch (r) {
      case 0:
      case 1: return Term::argument(std::uniform_int_distribution<int>(0, 3)(rng));
      case 2: return Term::negation(gen(depth - 1));
      case 3: return Term::conjunction(gen(depth - 1), gen(depth - 1));
      case 4: return Term::disjunction(gen(depth - 1), gen(depth - 1));
      default: return Term::implication(gen(depth - 1), gen(depth - 1));
    }
  };
  for (int i = 0; i < 200; ++i) {
    Term t = gen(3);
    Term nnf = to_nnf(t), neg = negated_nnf(t), bcf = blake_canonical_form(t, 4);
    for (unsigned w = 0; w < 16; ++w) {
      CHECK(oracle::eval_term(nnf, w) == oracle::eval_term(t, w));
      CHECK(oracle::eval_term(neg, w) == !oracle::eval_term(t, w));
      CHECK(oracle::eval_term(bcf, w) == oracle::eval_term(t, w));
    }
  }
}

TEST_CASE("graph text format") {
  auto g = testutil::load("locglob.eg");
  CHECK(g.arity() == 4);
  CHECK(g.arcs.size() == 4);
  CHECK(g.constraints.size() == 4);
  auto again = parse_eg(write_eg(g));
  CHECK(again.names == g.names);
  CHECK(again.constraints == g.constraints);
  auto json = parse_graph_json(write_graph_json(g));
  CHECK(json.constraints == g.constraints);
  CHECK(json.arcs.size() == g.arcs.size());
  CHECK(strip_comment("p(A) > 0.5 # note") == "p(A) > 0.5 ");
  CHECK(strip_comment("#t -> #f") == "#t -> #f");
  CHECK(g.parents(0) == std::set<int>{1, 2, 3});
  CHECK(g.parents(0, kNegative) == std::set<int>{3});
}

TEST_CASE("graph validation issues") {
  auto g = parse_eg("arguments: A, B\nedges:\n  A -> B\nconstraints:\n  p(A) > 0.5\n");
  auto issues = validate_graph(g);
  bool unlabelled = false;
  for (const auto& i : issues) unlabelled = unlabelled || i.code == "unlabelled-arc";
  CHECK(unlabelled);
  auto dup = parse_eg("arguments: A, A\n");
  bool seen = false;
  for (const auto& i : dup.load_issues) seen = seen || i.code == "duplicate-argument";
  CHECK(seen);
}

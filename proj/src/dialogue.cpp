#include "epigraph/dialogue.hpp"

#include <algorithm>

#include "epigraph/solver.hpp"

namespace epigraph {

namespace {

// Lower goals (p(G) < x, p(G) <= x) prefer small values.
bool downward(Comparator c) { return c == Comparator::Lt || c == Comparator::Leq; }

Model model_of(const EpistemicGraph& g, const Regime& r, std::vector<Formula> phi) {
  return Model(std::move(phi), g.arity(), r.pi, r.engine);
}

std::vector<Formula> with_beliefs(const EpistemicGraph& g, const std::vector<Belief>& bs) {
  std::vector<Formula> phi = g.constraints;
  for (const auto& b : bs) phi.push_back(b.formula());
  return phi;
}

}  // namespace

std::string to_string(const Belief& b, std::span<const std::string> names) {
  return "p(" + names[b.arg] + ")" + std::string(symbol(b.cmp)) + to_string(b.x);
}

DialogueEngine::DialogueEngine(EpistemicGraph g, Regime r) : g_(std::move(g)), r_(std::move(r)) {}

const std::vector<ArcCheck>& DialogueEngine::arc_checks() const {
  std::call_once(once_, [this] {
    // the move panel only needs a hint, so keep the search shallow
    Regime shallow = r_;
    shallow.cap = std::min(r_.effective_cap(g_.arity()), 2);
    try {
      checks_ = labeling_consistency(g_, LabelMode::Consistent, shallow);
    } catch (const Error&) {
      checks_.clear();
    }
  });
  return checks_;
}

DialogueSession::DialogueSession(std::shared_ptr<const DialogueEngine> engine, Belief goal)
    : engine_(std::move(engine)), goal_(std::move(goal)) {
  const auto& g = engine_->graph();
  if (goal_.arg < 0 || goal_.arg >= g.arity()) throw PreconditionError("goal names an unknown argument");
  if (!engine_->regime().pi.contains(goal_.x)) throw PreconditionError("goal threshold " + to_string(goal_.x) + " is not in the value set");
}

void DialogueSession::assert_belief(const Belief& b) {
  const auto& g = engine_->graph();
  if (b.arg < 0 || b.arg >= g.arity()) throw PreconditionError("unknown argument");
  if (!engine_->regime().pi.contains(b.x))
    throw PreconditionError("value " + to_string(b.x) + " is not in the value set " + engine_->regime().pi.to_string());
  auto it = std::find_if(asserted_.begin(), asserted_.end(), [&](const Belief& x) { return x.arg == b.arg; });
  if (it != asserted_.end()) *it = b;
  else asserted_.push_back(b);
}

bool DialogueSession::retract(int arg) {
  auto it = std::find_if(asserted_.begin(), asserted_.end(), [&](const Belief& x) { return x.arg == arg; });
  if (it == asserted_.end()) return false;
  asserted_.erase(it);
  return true;
}

void DialogueSession::play(int arg) {
  if (arg < 0 || arg >= engine_->graph().arity()) throw PreconditionError("unknown argument");
  if (std::find(played_.begin(), played_.end(), arg) == played_.end()) played_.push_back(arg);
}

std::vector<Belief> minimal_conflict(const EpistemicGraph& g, const std::vector<Belief>& asserted, const Regime& r) {
  std::vector<Belief> keep = asserted;
  for (std::size_t i = 0; i < keep.size();) {
    std::vector<Belief> trial = keep;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!model_of(g, r, with_beliefs(g, trial)).consistent()) keep = std::move(trial);
    else ++i;
  }
  return keep;
}

SessionState DialogueSession::state() const {
  const auto& g = engine_->graph();
  const auto& r = engine_->regime();
  SessionState st;
  st.asserted = asserted_;
  st.played = played_;
  Model m = model_of(g, r, with_beliefs(g, asserted_));
  st.consistent = m.consistent();
  if (!st.consistent) {
    st.conflict = minimal_conflict(g, asserted_, r);
    return st;
  }
  const std::int64_t D = m.denominator();
  for (int a = 0; a < g.arity(); ++a) {
    auto units = m.range(a);
    ArgumentRange ar{a, ratio(units.front(), D), ratio(units.back(), D), {}};
    for (auto u : units) ar.values.push_back(ratio(u, D));
    if (a == goal_.arg) {
      st.goal_entailed = std::all_of(ar.values.begin(), ar.values.end(), [&](const Rational& v) { return holds(v, goal_.cmp, goal_.x); });
      st.goal_possible = std::any_of(ar.values.begin(), ar.values.end(), [&](const Rational& v) { return holds(v, goal_.cmp, goal_.x); });
    }
    st.ranges.push_back(std::move(ar));
  }
  return st;
}

std::vector<Move> DialogueSession::suggest_moves() const {
  const auto& g = engine_->graph();
  const auto& r = engine_->regime();
  std::vector<Formula> phi = with_beliefs(g, asserted_);
  if (!model_of(g, r, phi).consistent()) {
    std::string msg = "session is inconsistent; minimal conflict:";
    for (const auto& b : minimal_conflict(g, asserted_, r)) msg += " " + to_string(b, g.names);
    throw PreconditionError(msg);
  }
  auto taken = [&](int a) {
    return a == goal_.arg || std::any_of(asserted_.begin(), asserted_.end(), [&](const Belief& b) { return b.arg == a; }) ||
           std::find(played_.begin(), played_.end(), a) != played_.end();
  };
  const bool down = downward(goal_.cmp);
  const Rational half(1, 2);
  std::vector<Move> out;
  for (int a = 0; a < g.arity(); ++a) {
    if (taken(a)) continue;
    Move mv;
    mv.arg = a;
    std::vector<Formula> with_move = phi;
    with_move.push_back(Formula::simple(Term::argument(a), Comparator::Gt, half));
    Model m = model_of(g, r, with_move);
    mv.feasible = m.consistent();
    if (mv.feasible) {
      auto units = m.range(goal_.arg);
      const std::int64_t D = m.denominator();
      Rational lo = ratio(units.front(), D), hi = ratio(units.back(), D);
      mv.optimistic = down ? lo : hi;
      mv.pessimistic = down ? hi : lo;
      auto attain = [&](const Rational& v) {
        auto pinned = with_move;
        pinned.push_back(Formula::simple(Term::argument(goal_.arg), Comparator::Eq, v));
        return model_of(g, r, std::move(pinned)).witness();
      };
      mv.optimistic_witness = attain(mv.optimistic);
      mv.pessimistic_witness = attain(mv.pessimistic);
      mv.goal_guaranteed = std::all_of(units.begin(), units.end(), [&](std::int32_t u) { return holds(ratio(u, D), goal_.cmp, goal_.x); });
    }
    for (const auto& chk : engine_->arc_checks()) {
      if (chk.pass || (chk.from != a && chk.to != a)) continue;
      mv.warnings.push_back(g.names[chk.from] + " -> " + g.names[chk.to] + " [" + label_string(chk.labels) + "]: " + chk.note);
    }
    out.push_back(std::move(mv));
  }
  std::stable_sort(out.begin(), out.end(), [&](const Move& x, const Move& y) {
    if (x.feasible != y.feasible) return x.feasible;
    if (x.feasible) {
      if (x.optimistic != y.optimistic) return down ? x.optimistic < y.optimistic : x.optimistic > y.optimistic;
      if (x.pessimistic != y.pessimistic) return down ? x.pessimistic < y.pessimistic : x.pessimistic > y.pessimistic;
    }
    return g.names[x.arg] < g.names[y.arg];
  });
  return out;
}

}  // namespace epigraph

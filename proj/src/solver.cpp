#include "epigraph/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "epigraph/kernels.hpp"

namespace epigraph {

namespace {

enum Tri : std::uint8_t { F = 0, U = 1, T = 2 };

// L rel t over the integer L = sum coef*units + constant
struct LinAtom {
  enum Rel : std::uint8_t { Geq, Leq, Eq, Neq, Always, Never };
  std::vector<std::pair<int, std::int32_t>> coef;  // (var, c), c != 0
  std::int64_t constant = 0;
  Rel rel = Always;
  std::int64_t t = 0;
};

struct Node {
  enum Op : std::uint8_t { True, False, AtomRef, Not, And, Or, Implies, Iff };
  Op op;
  int a = -1, b = -1;  // atom index for AtomRef, child node indices otherwise
};

// A conjunction of formula trees over `vars` variables in `[0, D]` units.
struct Problem {
  int vars = 0;
  bool simplex = false;  // world masses: all variables sum to D
  std::int64_t D = 1;
  std::vector<std::vector<std::int32_t>> dom;
  std::vector<LinAtom> atoms;
  std::vector<Node> nodes;  // children precede parents
  std::vector<int> roots;
  bool unsat = false;
};

Tri atom_tri(const LinAtom& a, std::int64_t lo, std::int64_t hi) {
  switch (a.rel) {
    case LinAtom::Geq: return lo >= a.t ? T : hi < a.t ? F : U;
    case LinAtom::Leq: return hi <= a.t ? T : lo > a.t ? F : U;
    case LinAtom::Eq: return (lo == a.t && hi == a.t) ? T : (a.t < lo || a.t > hi) ? F : U;
    case LinAtom::Neq: return (a.t < lo || a.t > hi) ? T : (lo == a.t && hi == a.t) ? F : U;
    case LinAtom::Always: return T;
    case LinAtom::Never: return F;
  }
  return U;
}

// units threshold for L/D # x
void set_threshold(LinAtom& la, Comparator c, const Rational& x, std::int64_t D) {
  Rational xd = x * Rational(mpz_class(static_cast<long>(D)));
  xd.canonicalize();
  mpz_class fl, ce;
  mpz_fdiv_q(fl.get_mpz_t(), xd.get_num_mpz_t(), xd.get_den_mpz_t());
  mpz_cdiv_q(ce.get_mpz_t(), xd.get_num_mpz_t(), xd.get_den_mpz_t());
  const bool integral = xd.get_den() == 1;
  std::int64_t f = to_int64(fl), cl = to_int64(ce);
  switch (c) {
    case Comparator::Gt: la.rel = LinAtom::Geq, la.t = f + 1; break;
    case Comparator::Geq: la.rel = LinAtom::Geq, la.t = cl; break;
    case Comparator::Lt: la.rel = LinAtom::Leq, la.t = cl - 1; break;
    case Comparator::Leq: la.rel = LinAtom::Leq, la.t = f; break;
    case Comparator::Eq:
      la.rel = integral ? LinAtom::Eq : LinAtom::Never;
      la.t = f;
      break;
    case Comparator::Neq:
      la.rel = integral ? LinAtom::Neq : LinAtom::Always;
      la.t = f;
      break;
  }
}

// Probability of a term as an affine function of one marginal: const + sign * m_arg.
struct MarginalForm {
  int arg = -1;  // -1: constant
  int sign = 0;
  bool constant_one = false;
};

std::optional<MarginalForm> marginal_form(const Term& t) {
  auto argset = term_args(t);
  std::vector<int> vars(argset.begin(), argset.end());
  if (vars.size() > 16) return std::nullopt;
  std::vector<bool> table(std::size_t{1} << vars.size());
  auto world_of = [&](std::uint32_t m) {
    World w = 0;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if ((m >> i) & 1) w |= World{1} << vars[i];
    return w;
  };
  for (std::uint32_t m = 0; m < table.size(); ++m) table[m] = evaluate(t, world_of(m));
  std::vector<int> essential;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::uint32_t m = 0; m < table.size(); ++m)
      if (table[m] != table[m ^ (1u << i)]) {
        essential.push_back(static_cast<int>(i));
        break;
      }
  }
  MarginalForm mf;
  if (essential.empty()) {
    mf.constant_one = table[0];
    return mf;
  }
  if (essential.size() > 1) return std::nullopt;
  std::uint32_t bit = 1u << essential[0];
  mf.arg = vars[essential[0]];
  // with the essential argument true the term is true: positive literal
  mf.sign = table[bit] ? 1 : -1;
  mf.constant_one = !table[bit];
  return mf;
}

class Compiler {
 public:
  Compiler(int n, std::int64_t D, bool marginal) : n_(n), D_(D), marginal_(marginal) {}

  // Top-level conjunctions are split into separate roots.
  void add_root(const Formula& f, Problem& p) {
    if (f.kind == Formula::Kind::And) {
      add_root(f.children[0], p);
      add_root(f.children[1], p);
      return;
    }
    if (f.kind == Formula::Kind::Top) return;
    p.roots.push_back(compile(f, p));
  }

 private:
  int compile(const Formula& f, Problem& p) {
    using K = Formula::Kind;
    Node nd{Node::True};
    switch (f.kind) {
      case K::Top: nd.op = Node::True; break;
      case K::Bottom: nd.op = Node::False; break;
      case K::Atom:
        nd.op = Node::AtomRef;
        nd.a = static_cast<int>(p.atoms.size());
        p.atoms.push_back(compile_atom(*f.atom));
        break;
      case K::Not: nd.op = Node::Not, nd.a = compile(f.children[0], p); break;
      default:
        nd.a = compile(f.children[0], p);
        nd.b = compile(f.children[1], p);
        nd.op = f.kind == K::And ? Node::And : f.kind == K::Or ? Node::Or : f.kind == K::Implies ? Node::Implies : Node::Iff;
    }
    p.nodes.push_back(nd);
    return static_cast<int>(p.nodes.size()) - 1;
  }

  LinAtom compile_atom(const Atom& a) {
    LinAtom la;
    std::map<int, std::int64_t> coef;
    for (std::size_t i = 0; i < a.lhs.terms.size(); ++i) {
      const int s = (i == 0 || a.lhs.ops[i - 1] == ArithOp::Plus) ? 1 : -1;
      const Term& t = a.lhs.terms[i];
      if (max_arg(t) >= n_) throw PreconditionError("formula mentions an argument outside the universe");
      if (marginal_) {
        auto mf = marginal_form(t);
        if (!mf) throw PreconditionError("term is not determined by a single marginal");
        if (mf->constant_one) la.constant += s * D_;
        if (mf->arg >= 0) coef[mf->arg] += s * mf->sign;
      } else {
        WorldSet models = term_models(t, n_);
        for (World w = 0; w < models.universe(); ++w)
          if (models.contains(w)) coef[static_cast<int>(w)] += s;
      }
    }
    for (auto [v, c] : coef)
      if (c) la.coef.emplace_back(v, static_cast<std::int32_t>(c));
    set_threshold(la, a.cmp, a.rhs, D_);
    return la;
  }

  int n_;
  std::int64_t D_;
  bool marginal_;
};

std::vector<int> node_atoms(const Problem& p, int root) {
  std::vector<int> out, stack{root};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    const Node& nd = p.nodes[i];
    if (nd.op == Node::AtomRef) out.push_back(nd.a);
    else if (nd.op != Node::True && nd.op != Node::False) {
      stack.push_back(nd.a);
      if (nd.b >= 0) stack.push_back(nd.b);
    }
  }
  return out;
}

// Copies the given roots into a fresh problem over the listed variables
// (global ids, local index = position).
Problem extract(const Problem& p, const std::vector<int>& roots, const std::vector<int>& vars) {
  Problem q;
  q.vars = static_cast<int>(vars.size());
  q.simplex = p.simplex;
  q.D = p.D;
  std::map<int, int> local;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    local[vars[i]] = static_cast<int>(i);
    q.dom.push_back(p.dom[vars[i]]);
  }
  std::map<int, int> node_map, atom_map;
  std::function<int(int)> copy = [&](int i) -> int {
    if (auto it = node_map.find(i); it != node_map.end()) return it->second;
    Node nd = p.nodes[i];
    if (nd.op == Node::AtomRef) {
      auto it = atom_map.find(nd.a);
      if (it == atom_map.end()) {
        LinAtom la = p.atoms[nd.a];
        for (auto& [v, c] : la.coef) v = local.at(v);
        q.atoms.push_back(std::move(la));
        it = atom_map.emplace(nd.a, static_cast<int>(q.atoms.size()) - 1).first;
      }
      nd.a = it->second;
    } else if (nd.op != Node::True && nd.op != Node::False) {
      nd.a = copy(nd.a);
      if (nd.b >= 0) nd.b = copy(nd.b);
    }
    q.nodes.push_back(nd);
    return node_map[i] = static_cast<int>(q.nodes.size()) - 1;
  };
  for (int r : roots) q.roots.push_back(copy(r));
  return q;
}

class Searcher {
 public:
  Searcher(const Problem& p, std::vector<int> order) : p_(p), ord_(std::move(order)) {
    const int V = p.vars, A = static_cast<int>(p.atoms.size());
    touch_.assign(V, {});
    for (int a = 0; a < A; ++a)
      for (auto [v, c] : p.atoms[a].coef) touch_[v].emplace_back(a, c);
    const int depth = static_cast<int>(ord_.size());
    lo_.assign((depth + 1) * A, 0);
    hi_.assign((depth + 1) * A, 0);
    std::vector<std::int32_t> coef_of(V);
    for (int a = 0; a < A; ++a) {
      std::fill(coef_of.begin(), coef_of.end(), 0);
      for (auto [v, c] : p.atoms[a].coef) coef_of[v] = c;
      std::int64_t slo = 0, shi = 0;
      std::int64_t cmin = 0, cmax = 0;
      bool any = false;
      for (int d = depth; d-- > 0;) {
        const int v = ord_[d];
        const std::int64_t c = coef_of[v];
        if (p.simplex) {
          cmin = any ? std::min(cmin, c) : c;
          cmax = any ? std::max(cmax, c) : c;
          any = true;
          lo_[d * A + a] = cmin;
          hi_[d * A + a] = cmax;
        } else {
          const std::int64_t x = c * p.dom[v].front(), y = c * p.dom[v].back();
          slo += std::min(x, y);
          shi += std::max(x, y);
          lo_[d * A + a] = slo;
          hi_[d * A + a] = shi;
        }
      }
    }
    S_.assign(A, 0);
    val_.assign(V, 0);
    atom_val_.assign(A, U);
    node_val_.assign(p.nodes.size(), U);
    R_ = p.D;
  }

  const std::vector<std::int32_t>& values() const { return val_; }

  // Calls leaf(values) for every solution in order; leaf returns false to stop.
  template <class Leaf>
  bool run(Leaf&& leaf) {
    if (p_.unsat) return true;
    return dfs(0, false, leaf);
  }

  bool exists() {
    bool found = false;
    run([&](const std::vector<std::int32_t>&) {
      found = true;
      return false;
    });
    return found;
  }

  // Distinct values of the first k variables of the order that extend to a solution.
  void project(int k, std::vector<std::int32_t>& out) {
    if (p_.unsat) return;
    proj_k_ = k;
    proj_out_ = &out;
    dfs_project(0, false);
  }

 private:
  Tri eval(int d) {
    const int A = static_cast<int>(p_.atoms.size());
    const bool full = d == static_cast<int>(ord_.size());
    for (int a = 0; a < A; ++a) {
      const LinAtom& la = p_.atoms[a];
      std::int64_t base = S_[a] + la.constant, lo = base, hi = base;
      if (!full) {
        if (p_.simplex) {
          lo += R_ * lo_[d * A + a];
          hi += R_ * hi_[d * A + a];
        } else {
          lo += lo_[d * A + a];
          hi += hi_[d * A + a];
        }
      }
      atom_val_[a] = atom_tri(la, lo, hi);
    }
    for (std::size_t i = 0; i < p_.nodes.size(); ++i) {
      const Node& nd = p_.nodes[i];
      Tri v = U;
      switch (nd.op) {
        case Node::True: v = T; break;
        case Node::False: v = F; break;
        case Node::AtomRef: v = static_cast<Tri>(atom_val_[nd.a]); break;
        case Node::Not: v = static_cast<Tri>(2 - node_val_[nd.a]); break;
        case Node::And: v = static_cast<Tri>(std::min(node_val_[nd.a], node_val_[nd.b])); break;
        case Node::Or: v = static_cast<Tri>(std::max(node_val_[nd.a], node_val_[nd.b])); break;
        case Node::Implies: v = static_cast<Tri>(std::max<int>(2 - node_val_[nd.a], node_val_[nd.b])); break;
        case Node::Iff: {
          int x = node_val_[nd.a], y = node_val_[nd.b];
          v = (x == U || y == U) ? U : (x == y ? T : F);
          break;
        }
      }
      node_val_[i] = v;
    }
    Tri all = T;
    for (int r : p_.roots) {
      Tri v = static_cast<Tri>(node_val_[r]);
      if (v == F) return F;
      if (v == U) all = U;
    }
    return all;
  }

  void assign(int v, std::int32_t k) {
    val_[v] = k;
    for (auto [a, c] : touch_[v]) S_[a] += std::int64_t{c} * k;
    if (p_.simplex) R_ -= k;
  }
  void unassign(int v) {
    const std::int32_t k = val_[v];
    for (auto [a, c] : touch_[v]) S_[a] -= std::int64_t{c} * k;
    if (p_.simplex) R_ += k;
    val_[v] = 0;
  }

  template <class Body>
  bool for_values(int d, Body&& body) {
    const int v = ord_[d];
    if (p_.simplex) {
      if (d + 1 == static_cast<int>(ord_.size())) {
        const std::int32_t k = static_cast<std::int32_t>(R_);
        assign(v, k);
        bool go = body();
        unassign(v);
        return go;
      }
      const std::int64_t r = R_;
      for (std::int64_t k = 0; k <= r; ++k) {
        assign(v, static_cast<std::int32_t>(k));
        bool go = body();
        unassign(v);
        if (!go) return false;
      }
      return true;
    }
    for (std::int32_t k : p_.dom[v]) {
      assign(v, k);
      bool go = body();
      unassign(v);
      if (!go) return false;
    }
    return true;
  }

  template <class Leaf>
  bool dfs(int d, bool alltrue, Leaf& leaf) {
    if (!alltrue) {
      Tri t = eval(d);
      if (t == F) return true;
      alltrue = t == T;
    }
    if (d == static_cast<int>(ord_.size())) return leaf(val_);
    return for_values(d, [&] { return dfs(d + 1, alltrue, leaf); });
  }

  void dfs_project(int d, bool alltrue) {
    if (!alltrue) {
      Tri t = eval(d);
      if (t == F) return;
      alltrue = t == T;
    }
    if (d == proj_k_) {
      bool found = alltrue && !p_.simplex;
      if (!found) {
        auto leaf = [&](const std::vector<std::int32_t>&) {
          found = true;
          return false;
        };
        // keep the projected prefix intact while probing the rest
        std::vector<std::int32_t> saved(val_.begin(), val_.end());
        dfs(d, alltrue, leaf);
        val_ = std::move(saved);
      }
      if (found)
        for (int i = 0; i < proj_k_; ++i) proj_out_->push_back(val_[ord_[i]]);
      return;
    }
    for_values(d, [&] {
      dfs_project(d + 1, alltrue);
      return true;
    });
  }

  const Problem& p_;
  std::vector<int> ord_;
  std::vector<std::vector<std::pair<int, std::int32_t>>> touch_;
  std::vector<std::int64_t> lo_, hi_;
  std::vector<std::int64_t> S_;
  std::vector<std::int32_t> val_;
  std::vector<std::uint8_t> atom_val_, node_val_;
  std::int64_t R_ = 0;
  int proj_k_ = 0;
  std::vector<std::int32_t>* proj_out_ = nullptr;
};

// Sort rows of width w and drop duplicates.
void sort_rows(std::vector<std::int32_t>& cells, std::size_t w) {
  if (w == 0) return;
  const std::size_t n = cells.size() / w;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto cmp = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(cells.begin() + a * w, cells.begin() + a * w + w, cells.begin() + b * w,
                                        cells.begin() + b * w + w);
  };
  std::sort(idx.begin(), idx.end(), cmp);
  std::vector<std::int32_t> out;
  out.reserve(cells.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = idx[k];
    if (!out.empty() && std::equal(out.end() - w, out.end(), cells.begin() + i * w)) continue;
    out.insert(out.end(), cells.begin() + i * w, cells.begin() + i * w + w);
  }
  cells = std::move(out);
}

}  // namespace

double estimated_model_count(int n, std::int64_t denominator) {
  const double W = std::ldexp(1.0, n);
  const double D = static_cast<double>(denominator);
  return std::exp(std::lgamma(D + W) - std::lgamma(D + 1) - std::lgamma(W));
}

bool marginal_determined(std::span<const Formula> formulas) {
  for (const auto& f : formulas)
    for (const Atom* a : formula_atoms(f))
      for (const auto& t : a->lhs.terms)
        if (!marginal_form(t)) return false;
  return true;
}

struct Model::Impl {
  Problem marg;                     // marginal mode only
  std::vector<std::vector<int>> comps;  // variable groups linked by some root
  std::vector<std::vector<int>> comp_roots;
  std::vector<bool> free_var;
  std::unique_ptr<Problem> world;  // built on demand
  std::mutex mu;
  std::map<std::vector<int>, MarginalTable> proj_cache;
  std::optional<MarginalTable> world_marginals;  // all distinct marginal vectors
  std::optional<bool> consistent;
};

namespace {

std::unique_ptr<Problem> build_world_problem(const std::vector<Formula>& phi, int n, std::int64_t D,
                                             const EngineOptions& opts) {
  if (!opts.allow_large) {
    if (n > opts.max_world_args)
      throw LimitError("world enumeration over " + std::to_string(n) + " arguments exceeds the limit of " +
                       std::to_string(opts.max_world_args));
    if (estimated_model_count(n, D) > opts.max_models)
      throw LimitError("estimated model count exceeds " + std::to_string(static_cast<long long>(opts.max_models)));
  }
  auto p = std::make_unique<Problem>();
  p->vars = 1 << n;
  p->simplex = true;
  p->D = D;
  std::vector<std::int32_t> full(D + 1);
  std::iota(full.begin(), full.end(), 0);
  p->dom.assign(p->vars, full);
  Compiler comp(n, D, false);
  for (const auto& f : phi) comp.add_root(f, *p);
  return p;
}

}  // namespace

Model::Model(std::vector<Formula> phi, int n, ValueSet pi, EngineOptions opts)
    : phi_(std::move(phi)), n_(n), pi_(std::move(pi)), opts_(opts), impl_(std::make_unique<Impl>()) {
  if (!pi_.reasonable()) throw PreconditionError("value set " + pi_.to_string() + " is not reasonable");
  den_ = pi_.denominator();
  if (den_ > (1 << 30)) throw PreconditionError("value set grid too fine");
  for (const auto& x : formula_numbers(phi_))
    if (!pi_.contains(x)) throw PreconditionError("constant " + to_string(x) + " is not in " + pi_.to_string());
  for (const auto& f : phi_)
    if (max_arg(f) >= n_) throw PreconditionError("formula mentions an argument outside the universe");
  switch (opts_.mode) {
    case EngineOptions::Mode::Auto: marginal_ = marginal_determined(phi_); break;
    case EngineOptions::Mode::Marginals:
      if (!marginal_determined(phi_)) throw PreconditionError("formulas are not determined by marginals");
      marginal_ = true;
      break;
    case EngineOptions::Mode::Worlds: marginal_ = false; break;
  }
  if (!marginal_) {
    impl_->world = build_world_problem(phi_, n_, den_, opts_);
    return;
  }
  Problem& p = impl_->marg;
  p.vars = n_;
  p.D = den_;
  std::vector<std::int32_t> full(den_ + 1);
  std::iota(full.begin(), full.end(), 0);
  p.dom.assign(n_, full);
  Compiler comp(n_, den_, true);
  for (const auto& f : phi_) comp.add_root(f, p);
  // single-variable roots become domain filters
  std::vector<int> kept;
  for (int r : p.roots) {
    const Node& nd = p.nodes[r];
    if (nd.op == Node::False) p.unsat = true;
    if (nd.op == Node::AtomRef && p.atoms[nd.a].coef.size() <= 1) {
      const LinAtom& la = p.atoms[nd.a];
      if (la.coef.empty()) {
        if (atom_tri(la, la.constant, la.constant) == F) p.unsat = true;
        continue;
      }
      auto [v, c] = la.coef[0];
      auto& d = p.dom[v];
      d.erase(std::remove_if(d.begin(), d.end(),
                             [&](std::int32_t k) {
                               std::int64_t L = la.constant + std::int64_t{c} * k;
                               return atom_tri(la, L, L) == F;
                             }),
              d.end());
      if (d.empty()) p.unsat = true;
      continue;
    }
    if (nd.op == Node::True) continue;
    kept.push_back(r);
  }
  p.roots = kept;
  // components by shared variables
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<std::vector<int>> root_vars;
  impl_->free_var.assign(n_, true);
  for (int r : p.roots) {
    std::set<int> vs;
    for (int a : node_atoms(p, r))
      for (auto [v, c] : p.atoms[a].coef) vs.insert(v);
    std::vector<int> v(vs.begin(), vs.end());
    for (int x : v) impl_->free_var[x] = false;
    for (std::size_t i = 1; i < v.size(); ++i) parent[find(v[i])] = find(v[0]);
    root_vars.push_back(std::move(v));
  }
  std::map<int, int> comp_of;
  for (int v = 0; v < n_; ++v) {
    if (impl_->free_var[v]) continue;
    int r = find(v);
    if (!comp_of.count(r)) {
      comp_of[r] = static_cast<int>(impl_->comps.size());
      impl_->comps.emplace_back();
      impl_->comp_roots.emplace_back();
    }
    impl_->comps[comp_of[r]].push_back(v);
  }
  for (std::size_t i = 0; i < p.roots.size(); ++i) {
    if (root_vars[i].empty()) {
      // constant root left after filtering: decide it now
      Problem q = extract(p, {p.roots[i]}, {});
      Searcher s(q, {});
      if (!s.exists()) p.unsat = true;
      continue;
    }
    impl_->comp_roots[comp_of[find(root_vars[i][0])]].push_back(p.roots[i]);
  }
}

Model::~Model() = default;
Model::Model(Model&&) noexcept = default;
Model& Model::operator=(Model&&) noexcept = default;

bool Model::consistent() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (impl_->consistent) return *impl_->consistent;
  bool ok;
  if (!marginal_) {
    Problem& w = *impl_->world;
    std::vector<int> ord(w.vars);
    std::iota(ord.begin(), ord.end(), 0);
    ok = Searcher(w, ord).exists();
  } else {
    ok = !impl_->marg.unsat;
    for (std::size_t c = 0; ok && c < impl_->comps.size(); ++c) {
      Problem q = extract(impl_->marg, impl_->comp_roots[c], impl_->comps[c]);
      std::vector<int> ord(q.vars);
      std::iota(ord.begin(), ord.end(), 0);
      ok = Searcher(q, ord).exists();
    }
  }
  impl_->consistent = ok;
  return ok;
}

std::optional<BeliefDistribution> Model::witness() const {
  if (!marginal_) {
    Problem& w = *impl_->world;
    std::vector<int> ord(w.vars);
    std::iota(ord.begin(), ord.end(), 0);
    Searcher s(w, ord);
    std::optional<BeliefDistribution> out;
    s.run([&](const std::vector<std::int32_t>& v) {
      out = BeliefDistribution(n_, v, static_cast<std::int32_t>(den_));
      return false;
    });
    return out;
  }
  const Problem& p = impl_->marg;
  if (p.unsat) return std::nullopt;
  std::vector<std::int32_t> m(n_);
  for (int v = 0; v < n_; ++v) m[v] = p.dom[v].front();
  for (std::size_t c = 0; c < impl_->comps.size(); ++c) {
    Problem q = extract(p, impl_->comp_roots[c], impl_->comps[c]);
    std::vector<int> ord(q.vars);
    std::iota(ord.begin(), ord.end(), 0);
    Searcher s(q, ord);
    bool found = false;
    s.run([&](const std::vector<std::int32_t>& v) {
      for (std::size_t i = 0; i < v.size(); ++i) m[impl_->comps[c][i]] = v[i];
      found = true;
      return false;
    });
    if (!found) return std::nullopt;
  }
  if (n_ > 24) throw LimitError("too many arguments to materialize a distribution");
  return BeliefDistribution::comonotone(m, static_cast<std::int32_t>(den_));
}

DistributionSet Model::distributions() const {
  std::unique_ptr<Problem> owned;
  const Problem* w = impl_->world.get();
  if (!w) {
    owned = build_world_problem(phi_, n_, den_, opts_);
    w = owned.get();
  }
  std::vector<int> ord(w->vars);
  std::iota(ord.begin(), ord.end(), 0);
  Searcher s(*w, ord);
  DistributionSet out;
  s.run([&](const std::vector<std::int32_t>& v) {
    out.emplace_back(n_, v, static_cast<std::int32_t>(den_));
    return true;
  });
  // DFS order over worlds in index order is already lexicographic
  return out;
}

MarginalTable Model::project(const std::vector<int>& args) const {
  for (int a : args)
    if (a < 0 || a >= n_) throw PreconditionError("projection argument out of range");
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (auto it = impl_->proj_cache.find(args); it != impl_->proj_cache.end()) return it->second;
  MarginalTable out;
  out.args = args;
  const std::size_t w = args.size();
  if (!marginal_) {
    if (!impl_->world_marginals) {
      Problem& wp = *impl_->world;
      std::vector<int> ord(wp.vars);
      std::iota(ord.begin(), ord.end(), 0);
      Searcher s(wp, ord);
      MarginalTable all;
      for (int i = 0; i < n_; ++i) all.args.push_back(i);
      std::vector<std::int64_t> m(n_);
      bool any = false;
      s.run([&](const std::vector<std::int32_t>& v) {
        kernels::marginals(v.data(), n_, m.data());
        for (auto x : m) all.cells.push_back(static_cast<std::int32_t>(x));
        any = true;
        if (all.cells.size() > (std::size_t{1} << 26)) sort_rows(all.cells, n_);
        return true;
      });
      sort_rows(all.cells, n_);
      all.has_empty_row = any;
      impl_->world_marginals = std::move(all);
    }
    const MarginalTable& all = *impl_->world_marginals;
    if (w == 0) {
      out.has_empty_row = all.has_empty_row;
    } else {
      for (std::size_t r = 0; r < all.rows(); ++r)
        for (int a : args) out.cells.push_back(all.row(r)[a]);
      sort_rows(out.cells, w);
    }
    impl_->proj_cache[args] = out;
    return out;
  }
  const Problem& p = impl_->marg;
  if (p.unsat) {
    impl_->proj_cache[args] = out;
    return out;
  }
  // per-component projections, then the product in the requested column order
  std::vector<std::vector<int>> part_cols;  // columns of `args` each part covers
  std::vector<std::vector<std::int32_t>> part_rows;
  std::vector<bool> covered(w, false);
  for (std::size_t c = 0; c < impl_->comps.size(); ++c) {
    const auto& vars = impl_->comps[c];
    std::vector<int> cols;
    std::vector<int> local_proj;
    for (std::size_t j = 0; j < w; ++j) {
      auto it = std::find(vars.begin(), vars.end(), args[j]);
      if (it == vars.end()) continue;
      int li = static_cast<int>(it - vars.begin());
      if (std::find(local_proj.begin(), local_proj.end(), li) == local_proj.end()) local_proj.push_back(li);
      cols.push_back(static_cast<int>(j));
    }
    Problem q = extract(p, impl_->comp_roots[c], vars);
    std::vector<int> ord = local_proj;
    for (int i = 0; i < q.vars; ++i)
      if (std::find(ord.begin(), ord.end(), i) == ord.end()) ord.push_back(i);
    Searcher s(q, ord);
    if (local_proj.empty()) {
      if (!s.exists()) {
        impl_->proj_cache[args] = out;
        return out;
      }
      continue;
    }
    std::vector<std::int32_t> rows;
    s.project(static_cast<int>(local_proj.size()), rows);
    if (rows.empty()) {
      impl_->proj_cache[args] = out;
      return out;
    }
    // expand to one cell per requested column (duplicates of an argument allowed)
    std::vector<std::int32_t> expanded;
    const std::size_t k = local_proj.size();
    for (std::size_t r = 0; r < rows.size() / k; ++r)
      for (int j : cols) {
        int li = static_cast<int>(std::find(vars.begin(), vars.end(), args[j]) - vars.begin());
        int pos = static_cast<int>(std::find(local_proj.begin(), local_proj.end(), li) - local_proj.begin());
        expanded.push_back(rows[r * k + pos]);
      }
    for (int j : cols) covered[j] = true;
    part_cols.push_back(cols);
    part_rows.push_back(std::move(expanded));
  }
  // free or filtered-only arguments range over their domain independently
  for (std::size_t j = 0; j < w; ++j) {
    if (covered[j]) continue;
    std::vector<int> cols;
    for (std::size_t jj = j; jj < w; ++jj)
      if (args[jj] == args[j]) {
        cols.push_back(static_cast<int>(jj));
        covered[jj] = true;
      }
    std::vector<std::int32_t> rows;
    for (auto k : p.dom[args[j]])
      for (std::size_t i = 0; i < cols.size(); ++i) rows.push_back(k);
    part_cols.push_back(cols);
    part_rows.push_back(std::move(rows));
  }
  if (w == 0) {
    out.has_empty_row = true;
    impl_->proj_cache[args] = out;
    return out;
  }
  std::vector<std::int32_t> row(w);
  std::function<void(std::size_t)> product = [&](std::size_t i) {
    if (i == part_cols.size()) {
      out.cells.insert(out.cells.end(), row.begin(), row.end());
      return;
    }
    const auto& cols = part_cols[i];
    const auto& rows = part_rows[i];
    for (std::size_t r = 0; r < rows.size() / cols.size(); ++r) {
      for (std::size_t k = 0; k < cols.size(); ++k) row[cols[k]] = rows[r * cols.size() + k];
      product(i + 1);
    }
  };
  product(0);
  sort_rows(out.cells, w);
  impl_->proj_cache[args] = out;
  return out;
}

std::vector<std::int32_t> Model::range(int arg) const {
  MarginalTable t = project({arg});
  return t.cells;
}

}  // namespace epigraph

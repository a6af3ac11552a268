#include "epigraph/graph.hpp"

#include <functional>
#include <map>

#include "epigraph/entailment.hpp"

namespace epigraph {

std::string label_string(LabelSet l) {
  std::string s;
  auto add = [&](const char* x) {
    if (!s.empty()) s += ",";
    s += x;
  };
  if (l & kPositive) add("+");
  if (l & kNegative) add("-");
  if (l & kStar) add("*");
  return s;
}

std::optional<int> EpistemicGraph::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

int EpistemicGraph::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw PreconditionError("unknown argument '" + std::string(name) + "'");
  return *i;
}

const Arc* EpistemicGraph::arc(int from, int to) const {
  for (const auto& a : arcs)
    if (a.from == from && a.to == to) return &a;
  return nullptr;
}

std::set<int> EpistemicGraph::parents(int b) const {
  std::set<int> out;
  for (const auto& a : arcs)
    if (a.to == b) out.insert(a.from);
  return out;
}

std::set<int> EpistemicGraph::parents(int b, LabelSet label) const {
  std::set<int> out;
  for (const auto& a : arcs)
    if (a.to == b && (a.labels & label)) out.insert(a.from);
  return out;
}

std::set<int> EpistemicGraph::children(int a) const {
  std::set<int> out;
  for (const auto& x : arcs)
    if (x.from == a) out.insert(x.to);
  return out;
}

std::set<int> EpistemicGraph::direct_rels(int a) const {
  auto s = parents(a);
  auto c = children(a);
  s.insert(c.begin(), c.end());
  return s;
}

std::set<std::pair<int, int>> EpistemicGraph::connected_pairs() const {
  const int n = arity();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : arcs) {
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
  }
  for (int s = 0, c = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v])
        if (comp[u] < 0) {
          comp[u] = c;
          stack.push_back(u);
        }
    }
    ++c;
  }
  std::set<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && comp[a] == comp[b]) out.insert({a, b});
  return out;
}

std::string EpistemicGraph::name_list(const std::set<int>& s) const {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ",";
    out += names[i];
    first = false;
  }
  return out + "}";
}

std::vector<GraphIssue> validate_graph(const EpistemicGraph& g) {
  std::vector<GraphIssue> out = g.load_issues;
  for (const auto& a : g.arcs) {
    std::string arc = g.names[a.from] + " -> " + g.names[a.to];
    if (!a.labels) out.push_back({GraphIssue::Severity::Error, "unlabelled-arc", "arc " + arc + " has no label"});
    if (a.from == a.to) out.push_back({GraphIssue::Severity::Warning, "self-loop", "arc " + arc + " is a self-loop"});
  }
  for (std::size_t i = 0; i < g.constraints.size(); ++i)
    if (formula_args(g.constraints[i]).empty())
      out.push_back({GraphIssue::Severity::Error, "empty-fargs",
                     "constraint " + std::to_string(i + 1) + " (" + to_string(g.constraints[i], g.names) +
                         ") mentions no argument"});
  return out;
}

bool graph_consistent(const EpistemicGraph& g, const ValueSet& pi) { return consistent(g.constraints, g.arity(), pi); }

}  // namespace epigraph

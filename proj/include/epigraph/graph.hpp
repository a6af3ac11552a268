#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epigraph/formula.hpp"
#include "epigraph/value_set.hpp"

namespace epigraph {

using LabelSet = std::uint8_t;
inline constexpr LabelSet kPositive = 1, kNegative = 2, kStar = 4;
std::string label_string(LabelSet l);  // "+,-" style, empty for none

struct Arc {
  int from, to;
  LabelSet labels = 0;
};

struct GraphIssue {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string code;  // unlabelled-arc, dangling-endpoint, empty-fargs, duplicate-argument, self-loop, ...
  std::string message;
};

struct EpistemicGraph {
  std::vector<std::string> names;
  std::vector<Arc> arcs;
  std::vector<Formula> constraints;
  std::optional<Term> pc;                // permitted-combination condition, CAF inputs only
  std::vector<GraphIssue> load_issues;   // problems found while reading the source

  int arity() const { return static_cast<int>(names.size()); }
  std::optional<int> index_of(std::string_view name) const;
  int require(std::string_view name) const;  // throws PreconditionError
  const Arc* arc(int from, int to) const;
  std::set<int> parents(int b) const;
  std::set<int> parents(int b, LabelSet label) const;
  std::set<int> children(int a) const;
  std::set<int> direct_rels(int a) const;  // parents plus children
  // ordered pairs (a,b), a != b, joined by an undirected path
  std::set<std::pair<int, int>> connected_pairs() const;
  std::string name_list(const std::set<int>& s) const;
};

std::vector<GraphIssue> validate_graph(const EpistemicGraph& g);
bool graph_consistent(const EpistemicGraph& g, const ValueSet& pi);

// Text format with arguments:, edges: and constraints: sections.
EpistemicGraph parse_eg(std::string_view text);
std::string write_eg(const EpistemicGraph& g);
EpistemicGraph parse_graph_json(std::string_view text);
std::string write_graph_json(const EpistemicGraph& g, int indent = 2);
// Dispatches on the extension (.json or anything else as text).
EpistemicGraph load_graph(const std::string& path);
std::string read_file(const std::string& path);

// Drops a trailing '#' comment; '#t' and '#f' are constants, not comments.
std::string strip_comment(std::string_view line);

}  // namespace epigraph

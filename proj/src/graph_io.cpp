#include <algorithm>
#include <fstream>
#include <sstream>

#include "epigraph/graph.hpp"
#include "epigraph/parser.hpp"
#include "json.hpp"

namespace epigraph {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

LabelSet parse_labels(std::string_view text, std::size_t line) {
  LabelSet l = 0;
  std::string cur;
  auto flush = [&] {
    std::string t = trim(cur);
    cur.clear();
    if (t.empty()) return;
    if (t == "+") l |= kPositive;
    else if (t == "-" || t == "−") l |= kNegative;
    else if (t == "*") l |= kStar;
    else throw ParseError("line " + std::to_string(line) + ": unknown label '" + t + "'", 0);
  };
  for (char c : text) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  return l;
}

struct RawArc {
  std::string from, to;
  LabelSet labels;
};

EpistemicGraph assemble(const std::vector<std::string>& args, const std::vector<RawArc>& arcs,
                        const std::vector<std::pair<std::string, std::size_t>>& constraints,
                        const std::optional<std::pair<std::string, std::size_t>>& pc) {
  EpistemicGraph g;
  for (const auto& a : args) {
    if (!valid_argument_name(a)) throw ParseError("invalid argument name '" + a + "'", 0);
    if (g.index_of(a)) {
      g.load_issues.push_back({GraphIssue::Severity::Error, "duplicate-argument", "argument " + a + " declared twice"});
      continue;
    }
    g.names.push_back(a);
  }
  for (const auto& r : arcs) {
    auto f = g.index_of(r.from), t = g.index_of(r.to);
    if (!f || !t) {
      g.load_issues.push_back({GraphIssue::Severity::Error, "dangling-endpoint",
                               "arc " + r.from + " -> " + r.to + " names an undeclared argument"});
      continue;
    }
    auto same = std::find_if(g.arcs.begin(), g.arcs.end(), [&](const Arc& a) { return a.from == *f && a.to == *t; });
    if (same != g.arcs.end()) same->labels |= r.labels;
    else g.arcs.push_back({*f, *t, r.labels});
  }
  for (const auto& [text, line] : constraints) {
    try {
      g.constraints.push_back(parse_formula(text, g.names));
    } catch (const ParseError& e) {
      throw ParseError("constraint on line " + std::to_string(line) + ": " + e.what(), 0);
    }
  }
  if (pc) {
    try {
      g.pc = parse_term(pc->first, g.names);
    } catch (const ParseError& e) {
      throw ParseError("pc on line " + std::to_string(pc->second) + ": " + e.what(), 0);
    }
  }
  return g;
}

}  // namespace

std::string strip_comment(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] != '#') continue;
    bool constant = i + 1 < line.size() && (line[i + 1] == 't' || line[i + 1] == 'f') &&
                    (i + 2 >= line.size() || !(std::isalnum(static_cast<unsigned char>(line[i + 2])) || line[i + 2] == '_'));
    if (!constant) return std::string(line.substr(0, i));
  }
  return std::string(line);
}

EpistemicGraph parse_eg(std::string_view text) {
  enum class Section { None, Arguments, Edges, Constraints } sec = Section::None;
  std::vector<std::string> args;
  std::vector<RawArc> arcs;
  std::vector<std::pair<std::string, std::size_t>> constraints;
  std::optional<std::pair<std::string, std::size_t>> pc;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto header = [&](const char* h) {
      std::string hs(h);
      return line.rfind(hs, 0) == 0;
    };
    if (header("arguments:")) {
      sec = Section::Arguments;
      line = trim(line.substr(10));
      if (line.empty()) continue;
    } else if (header("edges:")) {
      sec = Section::Edges;
      line = trim(line.substr(6));
      if (line.empty()) continue;
    } else if (header("constraints:")) {
      sec = Section::Constraints;
      line = trim(line.substr(12));
      if (line.empty()) continue;
    } else if (header("pc:")) {
      pc = std::make_pair(trim(line.substr(3)), lineno);
      continue;
    }
    switch (sec) {
      case Section::None: throw ParseError("line " + std::to_string(lineno) + ": content before any section", 0);
      case Section::Arguments: {
        std::string cur;
        for (char c : line + ",") {
          if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) args.push_back(cur);
            cur.clear();
          } else {
            cur += c;
          }
        }
        break;
      }
      case Section::Edges: {
        auto arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected SRC -> DST [labels]", 0);
        RawArc r;
        r.from = trim(line.substr(0, arrow));
        std::string rest = trim(line.substr(arrow + 2));
        auto lb = rest.find('[');
        r.labels = 0;
        if (lb != std::string::npos) {
          auto rb = rest.find(']', lb);
          if (rb == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": unterminated label list", 0);
          r.labels = parse_labels(rest.substr(lb + 1, rb - lb - 1), lineno);
          rest = trim(rest.substr(0, lb));
        }
        r.to = rest;
        if (r.from.empty() || r.to.empty()) throw ParseError("line " + std::to_string(lineno) + ": missing arc endpoint", 0);
        arcs.push_back(std::move(r));
        break;
      }
      case Section::Constraints: constraints.emplace_back(line, lineno); break;
    }
  }
  return assemble(args, arcs, constraints, pc);
}

std::string write_eg(const EpistemicGraph& g) {
  std::string out = "arguments:\n";
  for (const auto& n : g.names) out += "  " + n + "\n";
  out += "edges:\n";
  for (const auto& a : g.arcs) out += "  " + g.names[a.from] + " -> " + g.names[a.to] + " [" + label_string(a.labels) + "]\n";
  out += "constraints:\n";
  for (const auto& c : g.constraints) out += "  " + to_string(c, g.names) + "\n";
  if (g.pc) out += "pc: " + to_string(*g.pc, g.names) + "\n";
  return out;
}

EpistemicGraph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), 0);
  }
  try {
    std::vector<std::string> args = j.at("arguments").get<std::vector<std::string>>();
    std::vector<RawArc> arcs;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      RawArc r;
      r.from = e.at("from").get<std::string>();
      r.to = e.at("to").get<std::string>();
      r.labels = 0;
      for (const auto& l : e.value("labels", nlohmann::json::array())) r.labels |= parse_labels(l.get<std::string>(), 0);
      arcs.push_back(std::move(r));
    }
    std::vector<std::pair<std::string, std::size_t>> constraints;
    std::size_t k = 0;
    for (const auto& c : j.value("constraints", nlohmann::json::array())) constraints.emplace_back(c.get<std::string>(), ++k);
    std::optional<std::pair<std::string, std::size_t>> pc;
    if (j.contains("pc")) pc = std::make_pair(j["pc"].get<std::string>(), std::size_t{0});
    return assemble(args, arcs, constraints, pc);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what(), 0);
  }
}

std::string write_graph_json(const EpistemicGraph& g, int indent) {
  nlohmann::json j;
  j["arguments"] = g.names;
  j["edges"] = nlohmann::json::array();
  for (const auto& a : g.arcs) {
    nlohmann::json labels = nlohmann::json::array();
    if (a.labels & kPositive) labels.push_back("+");
    if (a.labels & kNegative) labels.push_back("-");
    if (a.labels & kStar) labels.push_back("*");
    j["edges"].push_back({{"from", g.names[a.from]}, {"to", g.names[a.to]}, {"labels", labels}});
  }
  j["constraints"] = nlohmann::json::array();
  for (const auto& c : g.constraints) j["constraints"].push_back(to_string(c, g.names));
  if (g.pc) j["pc"] = to_string(*g.pc, g.names);
  return j.dump(indent);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EpistemicGraph load_graph(const std::string& path) {
  std::string text = read_file(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return parse_graph_json(text);
  return parse_eg(text);
}

}  // namespace epigraph

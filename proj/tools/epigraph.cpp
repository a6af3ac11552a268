#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "epigraph/graph.hpp"
#include "epigraph/json_io.hpp"
#include "epigraph/queries.hpp"
#include "epigraph/service.hpp"
#include "epigraph/translations.hpp"

using namespace epigraph;

namespace {

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string marginals_text(const Json& m) {
  std::string s;
  for (const auto& [k, v] : m.items()) s += (s.empty() ? "" : " ") + k + "=" + v.get<std::string>();
  return s;
}

std::string distribution_text(const Json& d) {
  std::string s = marginals_text(d["marginals"]) + "  |";
  for (const auto& m : d["masses"]) {
    std::string w;
    for (const auto& a : m["world"]) w += (w.empty() ? "" : ",") + a.get<std::string>();
    s += " {" + w + "}:" + m["mass"].get<std::string>();
  }
  return s;
}

void print_patterns(std::ostream& out, const Json& ps) {
  for (const auto& p : ps)
    out << "  " << marginals_text(p["marginals"]) << "  [" << p["labeling"].get<std::string>() << "]  members "
        << p["members"].get<std::size_t>() << "\n";
}

void print_verdict(std::ostream& out, const Json& j) {
  out << (j["holds"].get<bool>() ? "holds" : "does not hold") << "\n";
  if (j.contains("set")) {
    std::string s;
    for (const auto& a : j["set"]) s += (s.empty() ? "" : ",") + a.get<std::string>();
    out << "set: {" << s << "}\n";
  }
  if (j.contains("z_index")) out << "Z candidate: " << j["z_index"].get<std::size_t>() << "\n";
  if (j.contains("witness")) out << "witness: " << j["witness"]["text"].get<std::string>() << "\n";
  if (j.contains("x")) out << "x: " << j["x"].get<std::string>() << "\n";
  if (j.contains("y")) out << "y: " << j["y"].get<std::string>() << "\n";
  if (j.contains("counterexample")) out << "counterexample: " << j["counterexample"]["text"].get<std::string>() << "\n";
  if (!j.value("exhaustive", true)) out << "search stopped at the size cap\n";
}

void print_moves(std::ostream& out, const Json& moves) {
  for (const auto& m : moves) {
    out << "  " << m["arg"].get<std::string>();
    if (m["feasible"].get<bool>())
      out << "  optimistic " << m["optimistic"].get<std::string>() << "  pessimistic " << m["pessimistic"].get<std::string>()
          << (m["goal_guaranteed"].get<bool>() ? "  goal guaranteed" : "");
    else
      out << "  infeasible";
    out << "\n";
    for (const auto& w : m["warnings"]) out << "    warning: " << w.get<std::string>() << "\n";
  }
}

void print_state(std::ostream& out, const Json& j) {
  const auto& goal = j["goal"];
  out << "goal: p(" << goal["arg"].get<std::string>() << ")" << goal["cmp"].get<std::string>() << goal["x"].get<std::string>() << "\n";
  out << "consistent: " << yes(j["consistent"].get<bool>()) << "\n";
  if (!j["consistent"].get<bool>()) {
    out << "minimal conflict:";
    for (const auto& b : j["conflict"])
      out << " p(" << b["arg"].get<std::string>() << ")" << b["cmp"].get<std::string>() << b["x"].get<std::string>();
    out << "\n";
    return;
  }
  out << "goal entailed: " << yes(j["goal_entailed"].get<bool>()) << ", possible: " << yes(j["goal_possible"].get<bool>()) << "\n";
  out << "ranges:\n";
  for (const auto& [k, v] : j["ranges"].items())
    out << "  " << k << " [" << v["min"].get<std::string>() << ", " << v["max"].get<std::string>() << "]\n";
}

void print_labelings(std::ostream& out, const char* what, const Json& ls) {
  out << what << ":";
  for (const auto& l : ls) out << " " << l.get<std::string>();
  out << "\n";
}

void render_text(std::ostream& out, const std::string& kind, const Json& j) {
  if (kind == "validate") {
    out << (j["valid"].get<bool>() ? "valid" : "invalid") << "\n";
    for (const auto& i : j["issues"])
      out << i["severity"].get<std::string>() << " " << i["code"].get<std::string>() << ": " << i["message"].get<std::string>() << "\n";
    if (j.contains("consistent")) out << "consistent: " << yes(j["consistent"].get<bool>()) << "\n";
  } else if (kind == "sat") {
    out << j["count"].get<std::size_t>() << " distributions\n";
    if (j.contains("patterns")) print_patterns(out, j["patterns"]);
    else
      for (const auto& d : j["distributions"]) out << "  " << distribution_text(d) << "\n";
  } else if (kind == "entail" || kind == "closure-check") {
    out << (j["holds"].get<bool>() ? "holds" : "does not hold") << "\n";
    if (j.contains("counterexample")) out << "counterexample: " << distribution_text(j["counterexample"]) << "\n";
  } else if (kind == "ddnf") {
    out << j["ddnf"].get<std::string>() << "\n";
  } else if (kind == "coverage" || kind == "effectiveness") {
    print_verdict(out, j);
  } else if (kind == "relation-type") {
    out << j["type"].get<std::string>() << "\n";
    for (const char* k : {"semi_effective", "attacking", "supporting", "dependent", "subtle", "strongly_attacking",
                          "strongly_supporting", "strongly_dependent", "strongly_subtle"})
      out << "  " << k << ": " << yes(j[k].get<bool>()) << "\n";
    if (j.contains("attack_counterexample"))
      out << "  attack counterexample: " << j["attack_counterexample"]["text"].get<std::string>() << "\n";
    if (j.contains("support_counterexample"))
      out << "  support counterexample: " << j["support_counterexample"]["text"].get<std::string>() << "\n";
  } else if (kind == "monotonicity") {
    out << j["type"].get<std::string>() << (j["vacuous"].get<bool>() ? " (vacuous)" : "") << "\n";
  } else if (kind == "coherence") {
    for (const char* k : {"bounded", "entry_bounded", "directly_connected", "indirectly_connected", "hidden_connected",
                          "locally_connected"})
      out << k << ": " << yes(j[k].get<bool>()) << "\n";
    for (const auto& n : j["notes"]) out << "note: " << n.get<std::string>() << "\n";
    if (!j["exhaustive"].get<bool>()) out << "some searches stopped at the size cap\n";
  } else if (kind == "label-check") {
    for (const auto& a : j["arcs"]) {
      out << a["from"].get<std::string>() << " -> " << a["to"].get<std::string>() << " [" << a["labels"].get<std::string>()
          << "]: " << (a["pass"].get<bool>() ? "ok" : "FAIL");
      for (const auto& f : a["found"]) {
        std::string s;
        for (const auto& x : f["F"]) s += (s.empty() ? "" : ",") + x.get<std::string>();
        out << "  " << f["label"].get<std::string>() << " via Z#" << f["z_index"].get<std::size_t>() << " F={" << s << "}";
      }
      if (a.contains("note")) out << "  (" << a["note"].get<std::string>() << ")";
      out << "\n";
    }
  } else if (kind == "semantics") {
    out << j["count"].get<std::size_t>() << " of " << j["candidates"].get<std::size_t>() << " distributions are "
        << j["direction"].get<std::string>() << " under " << j["order"].get<std::string>() << "\n";
    print_patterns(out, j["patterns"]);
  } else if (kind == "dialogue") {
    print_state(out, j);
    if (j.contains("moves")) {
      out << "moves:\n";
      print_moves(out, j["moves"]);
    }
  } else if (kind == "verify-correspondence") {
    out << (j["match"].get<bool>() ? "correspondence holds" : "correspondence FAILS") << "\n";
    for (const auto& [k, v] : j.items())
      if (v.is_array() && (v.empty() || v.front().is_string())) print_labelings(out, k.c_str(), v);
  } else {
    out << j.dump(2) << "\n";
  }
}

std::vector<std::string> nonempty(const std::vector<std::string>& v) {
  std::vector<std::string> out;
  for (const auto& s : v)
    if (!s.empty()) out.push_back(s);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"epigraph: exact reasoning over epistemic graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string pi, format = "text";
  int cap = -1;
  bool strict = false, allow_large = false;
  app.add_option("--pi", pi, "value set, e.g. 0,0.5,1 or 0,0.1,...,1");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", cap, "largest argument set searched by arbitrary analyses");
  app.add_flag("--strict", strict, "exit 1 when the answer is negative");
  app.add_flag("--allow-large", allow_large, "lift the enumeration size guards");

  std::string file;
  std::vector<std::string> assume, filters, set, zs, zcands, asserted, played;
  std::string query, formula, arg, from, to, mode, order, direction = "max", goal, host = "127.0.0.1";
  bool ternary = false, patterns = false, arbitrary = false, strong = false;
  int port = 8080;

  auto graph_cmd = [&](const char* name, const char* desc) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("file", file, "graph file (.eg or .json)")->required();
    return c;
  };
  graph_cmd("parse", "parse a graph and print it in canonical form");
  graph_cmd("validate", "report structural issues and consistency");
  auto* sat = graph_cmd("sat", "enumerate the satisfying distributions");
  sat->add_option("--assume", assume, "extra constraint");
  sat->add_flag("--ternary", ternary, "keep ternary distributions only");
  sat->add_option("--filter", filters, "minimal, maximal, neutral, ternary or non-neutral");
  sat->add_flag("--patterns", patterns, "group by marginal vector");
  auto* ent = graph_cmd("entail", "decide C plus assumptions entails the query");
  ent->add_option("--assume", assume, "extra premise");
  ent->add_option("--query", query, "formula to entail")->required();
  auto* dd = graph_cmd("ddnf", "distribution disjunctive normal form");
  dd->add_option("--formula", formula, "formula (default: the constraints)");
  auto* cl = graph_cmd("closure-check", "is the formula in the closure of the constraints");
  cl->add_option("--formula", formula)->required();
  auto* cov = graph_cmd("coverage", "coverage of an argument");
  cov->add_option("--arg", arg)->required();
  cov->add_option("--set", set, "covering set F, comma separated")->delimiter(',');
  cov->add_option("--mode", mode, "partial or full")->check(CLI::IsMember({"partial", "full"}));
  cov->add_flag("--arbitrary", arbitrary, "search for some covering set");
  auto relation = [&](const char* name, const char* desc) {
    auto* c = graph_cmd(name, desc);
    c->add_option("--from", from)->required();
    c->add_option("--to", to)->required();
    c->add_option("--set", set, "set F, comma separated")->delimiter(',');
    c->add_option("--z", zs, "formula of the subset Z (default: all constraints)");
    return c;
  };
  auto* eff = relation("effectiveness", "effectiveness (or semi-effectiveness with --z)");
  eff->add_flag("--strong", strong);
  relation("relation-type", "attacking / supporting / dependent / subtle / unspecified");
  relation("monotonicity", "positive / negative monotonicity");
  auto* coh = graph_cmd("coherence", "six-flag coherence report");
  coh->add_option("--z-candidate", zcands, "Z candidate as ';'-separated formulas");
  auto* lc = graph_cmd("label-check", "check arc labels against the constraints");
  lc->add_option("--mode", mode, "consistent, strong or monotonic")->check(CLI::IsMember({"consistent", "strong", "monotonic"}));
  lc->add_option("--z-candidate", zcands, "Z candidate as ';'-separated formulas");
  auto* sem = graph_cmd("semantics", "max/min distributions under an ordering");
  sem->add_option("--order", order, "A, R, U, I or B")->required();
  sem->add_option("--direction", direction)->check(CLI::IsMember({"max", "min"}));
  sem->add_option("--filter", filters);
  sem->add_flag("--ternary", ternary);
  sem->add_option("--assume", assume);
  auto* tadf = app.add_subcommand("translate-adf", "epistemic graph for an ADF");
  tadf->add_option("file", file, "ADF file")->required();
  auto* tcaf = graph_cmd("translate-caf", "epistemic graph for a constrained attack graph");
  auto* ver = app.add_subcommand("verify-correspondence", "compare reference labelings with the translation");
  ver->add_option("file", file, "ADF (.adf) or attack graph (.eg) file")->required();
  auto* dia = graph_cmd("dialogue", "session state and ranked moves");
  dia->add_option("--goal", goal, "goal such as p(A)>0.5")->required();
  dia->add_option("--assert", asserted, "user belief such as p(F)>0.5");
  dia->add_option("--played", played, "argument already presented");
  auto* srv = graph_cmd("serve", "JSON-over-HTTP service");
  srv->add_option("--host", host);
  srv->add_option("--port", port);
  (void)tcaf;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string kind = app.get_subcommands().front()->get_name();
  Json body = Json::object();
  if (!pi.empty()) body["pi"] = pi;
  if (cap >= 0) body["cap"] = cap;
  if (allow_large) body["allow_large"] = true;

  auto emit = [&](const Json& j) {
    if (format == "json") std::cout << j.dump(2) << "\n";
    else render_text(std::cout, kind, j);
    return strict && !query_positive(kind, j) ? 1 : 0;
  };

  try {
    if (kind == "translate-adf") {
      Json j = translate_adf_json(parse_adf(read_file(file)));
      if (format == "json") std::cout << j["graph"].dump(2) << "\n";
      else std::cout << j["text"].get<std::string>();
      return 0;
    }
    if (kind == "verify-correspondence") {
      bool adf = file.size() > 4 && file.substr(file.size() - 4) == ".adf";
      return emit(adf ? verify_adf(parse_adf(read_file(file))) : verify_caf(load_graph(file)));
    }
    EpistemicGraph g = load_graph(file);
    if (kind == "parse") {
      if (format == "json") std::cout << write_graph_json(g) << "\n";
      else std::cout << write_eg(g);
      return 0;
    }
    if (kind == "translate-caf") {
      Json j = translate_caf_json(g);
      if (format == "json") std::cout << j["graph"].dump(2) << "\n";
      else std::cout << j["text"].get<std::string>();
      return 0;
    }
    if (kind == "serve") {
      Service service(g, body);
      HttpServer http(service);
      int bound = http.bind(host, port);
      if (bound < 0) {
        std::cerr << "error: cannot bind " << host << ":" << port << "\n";
        return 2;
      }
      std::cout << "listening on " << host << ":" << bound << std::endl;
      http.run();
      return 0;
    }

    if (!assume.empty()) body["assume"] = assume;
    if (ternary) filters.push_back("ternary");
    if (!filters.empty()) body["filters"] = filters;
    if (patterns) body["patterns"] = true;
    if (!query.empty()) body["query"] = query;
    if (!formula.empty()) body["formula"] = formula;
    if (!arg.empty()) body["arg"] = arg;
    if (!from.empty()) body["from"] = from;
    if (!to.empty()) body["to"] = to;
    auto* set_opt = app.get_subcommands().front()->get_option_no_throw("--set");
    if (set_opt && set_opt->count()) body["set"] = nonempty(set);
    else if (kind == "effectiveness" || kind == "relation-type" || kind == "monotonicity") body["set"] = Json::array();
    if (!mode.empty()) body["mode"] = mode;
    if (arbitrary) body["arbitrary"] = true;
    if (strong) body["strength"] = "strong";
    if (!zs.empty()) body["Z"] = zs;
    if (!zcands.empty()) {
      Json z = Json::array();
      for (const auto& c : zcands) z.push_back(split(c, ';'));
      body["Z"] = z;
    }
    if (!order.empty()) {
      body["order"] = order;
      body["direction"] = direction;
    }
    if (kind == "dialogue") {
      body["goal"] = goal;
      body["asserted"] = asserted;
      body["played"] = played;
    }
    return emit(run_query(kind, body, g));
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#pragma once

#include <string>
#include <vector>

#include "epigraph/graph.hpp"
#include "epigraph/parser.hpp"
#include "epigraph/rational.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) { return std::string(EPIGRAPH_TEST_DATA) + "/" + name; }

inline std::string read_text(const std::string& name) { return epigraph::read_file(data_path(name)); }

inline epigraph::EpistemicGraph load(const std::string& name) { return epigraph::load_graph(data_path(name)); }

inline std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('A' + i)));
  return out;
}

inline epigraph::Formula f(const std::string& text, const std::vector<std::string>& names) {
  return epigraph::parse_formula(text, names);
}

inline std::vector<epigraph::Formula> fs(const std::vector<std::string>& texts, const std::vector<std::string>& names) {
  std::vector<epigraph::Formula> out;
  for (const auto& t : texts) out.push_back(f(t, names));
  return out;
}

inline epigraph::Rational q(const std::string& s) { return epigraph::parse_rational(s); }

inline std::vector<epigraph::Rational> qs(std::initializer_list<const char*> xs) {
  std::vector<epigraph::Rational> out;
  for (const char* x : xs) out.push_back(q(x));
  return out;
}

}  // namespace testutil

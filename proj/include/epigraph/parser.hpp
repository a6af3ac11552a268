#pragma once

#include <span>
#include <string>
#include <string_view>

#include "epigraph/formula.hpp"
#include "epigraph/term.hpp"

namespace epigraph {

// Argument names resolve against `names`; an unknown name is a ParseError.
// ASCII connectives plus the usual Unicode symbols are accepted.
Term parse_term(std::string_view text, std::span<const std::string> names);
Formula parse_formula(std::string_view text, std::span<const std::string> names);

bool valid_argument_name(std::string_view s);

}  // namespace epigraph

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdinfer/attrset.hpp"

namespace fdinfer {

struct RuleLine {
  std::optional<unsigned> label;
  Dependency fd;
  std::size_t line = 0;
};

/// A parsed rules file:
///
///   # comment
///   attributes: A B C D E F
///   1: A -> B C
///   B -> E
///
/// Rules are numbered in file order; an explicit label must equal that number.
struct RulesDocument {
  Universe universe;
  std::vector<RuleLine> rules;

  std::vector<Dependency> dependencies() const;
};

/// Throws ParseError (with line and column) on syntax errors, undeclared
/// attributes, duplicate rules and label/position mismatches.
RulesDocument parse_rules_file(std::string_view text);

/// "<attrs> -> <attrs>" with whitespace-separated names. Throws ParseError.
Dependency parse_fd_expr(std::string_view text);

/// Whitespace-separated names. Throws ParseError.
AttrSet parse_attr_list(std::string_view text);

/// Renders a rule the way the rules file spells it, e.g. "A D -> B C D".
std::string format_rule(const Dependency& fd);

}  // namespace fdinfer

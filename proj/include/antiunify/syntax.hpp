#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "antiunify/term.hpp"

namespace antiunify {

// Goal files
// ----------
//   document := { [label ':'] goal }
//   goal     := '.' | atom { ',' atom } '.'
//   atom     := name [ '(' term { ',' term } ')' ]
//   term     := VARIABLE | INTEGER | name [ '(' term { ',' term } ')' ]
//   name     := [a-z][A-Za-z0-9_]* | 'quoted' | operator-symbol (before '(' only)
//
// Variables match [A-Z_][A-Za-z0-9_]*, integers -?[0-9]+, and '%' starts a
// comment running to the end of the line. A lone '.' is the empty goal.

struct NamedGoal {
  std::string name;
  /// False when the name was assigned automatically (goal1, goal2, ...).
  bool labeled = false;
  Goal goal;
  std::size_t line = 0;
  std::size_t column = 0;

  friend bool operator==(const NamedGoal& a, const NamedGoal& b) {
    return a.name == b.name && a.labeled == b.labeled && a.goal == b.goal;
  }
};

struct GoalDocument {
  std::vector<NamedGoal> goals;

  friend bool operator==(const GoalDocument&, const GoalDocument&) = default;
};

struct ParseOptions {
  /// Reject a predicate name used with two arities (ArityConflict). By default
  /// p/1 and p/2 are distinct symbols.
  bool strict_arity = false;
};

/// Throws ParseError (with line and column) or ArityConflict.
GoalDocument parse_goals(std::string_view text, const ParseOptions& options = {});

/// Exactly one goal.
Goal parse_goal(std::string_view text);
Atom parse_atom(std::string_view text);
Term parse_term(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
/// Atoms joined by ", " and terminated by '.'.
std::string to_string(const Goal& g);
/// One goal per line, prefixed by its label when it had one.
std::string to_string(const GoalDocument& doc);

}  // namespace antiunify

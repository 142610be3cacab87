#pragma once

// JSON rendering of results. Field names are part of the published format
// (docs/result.schema.json); add fields, never rename them.

#include <optional>
#include <string_view>

#include "antiunify/goal_gen.hpp"
#include "antiunify/substitution.hpp"
#include "antiunify/subsumption.hpp"
#include "json.hpp"

namespace antiunify::cli {

using Json = nlohmann::ordered_json;

/// {"X": "f(Y)", ...}
Json substitution_json(const Substitution& s);

/// Result of a generalization command computed on inputs (g1, g2).
Json outcome_json(std::string_view command, Relation relation, const Goal& g1, const Goal& g2,
                  const GenOutcome& out);

/// Result of a subsumption check of g against g2.
Json check_json(std::string_view command, Relation relation, const Goal& g, const Goal& g2,
                const std::optional<Substitution>& witness);

}  // namespace antiunify::cli

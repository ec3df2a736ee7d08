#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "solenoid/interval_aut.hpp"
#include "solenoid/stage.hpp"

namespace solenoid {

struct CommandResult {
  int exit_code = 0;
  nlohmann::json document;
  /// Rendered output for --help and --format text; print the document otherwise.
  std::string text;
};

/// Runs one invocation. args excludes the program name. Never throws: failures
/// become {"error": {"code", "message", "position"?}} with a nonzero exit code.
CommandResult run_command(const std::vector<std::string>& args);

/// Human-oriented rendering of a document: one "path: value" line per leaf.
std::string render_text(const nlohmann::json& doc);

/// Caps read from SOLENOID_MAX_DEPTH and SOLENOID_INDEX_BOUND.
struct Limits {
  std::size_t max_depth = 6;
  std::int64_t index_bound = 48;
};
Limits limits_from_env();

nlohmann::json to_json(const IntervalAutToken& t);
IntervalAutToken token_from_json(const nlohmann::json& j);
/// {"mode": "long" | "tower:K", "p": [...], "levels": [{level, rot, trans, hat}, ...]}
nlohmann::json to_json(const HomeoRecipe& r);
HomeoRecipe recipe_from_json(const nlohmann::json& j);

}  // namespace solenoid
